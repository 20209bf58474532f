#include "mostar/kernels.hpp"

#if defined(MOSTAR_HAVE_NEON)

#include <arm_neon.h>

namespace mostar::kernels {

PairCounts pair_counts_neon(const std::int32_t* a, const std::int32_t* b, std::size_t len) {
    PairCounts pc;
    std::size_t i = 0;
    int32x4_t lt_acc = vdupq_n_s32(0);
    int32x4_t gt_acc = vdupq_n_s32(0);
    for (; i + 4 <= len; i += 4) {
        int32x4_t va = vld1q_s32(a + i);
        int32x4_t vb = vld1q_s32(b + i);
        // comparison masks are all-ones (-1); accumulate by subtraction
        lt_acc = vsubq_s32(lt_acc, vreinterpretq_s32_u32(vcltq_s32(va, vb)));
        gt_acc = vsubq_s32(gt_acc, vreinterpretq_s32_u32(vcgtq_s32(va, vb)));
    }
    pc.less += vaddvq_s32(lt_acc);
    pc.greater += vaddvq_s32(gt_acc);
    for (; i < len; ++i) {
        pc.less += a[i] < b[i];
        pc.greater += a[i] > b[i];
    }
    return pc;
}

PairCounts pair_counts_masked_neon(const std::int32_t* a, const std::int32_t* b,
                                   const std::uint8_t* mask, std::size_t len) {
    PairCounts pc;
    std::size_t i = 0;
    int32x4_t lt_acc = vdupq_n_s32(0);
    int32x4_t gt_acc = vdupq_n_s32(0);
    for (; i + 4 <= len; i += 4) {
        int32x4_t va = vld1q_s32(a + i);
        int32x4_t vb = vld1q_s32(b + i);
        std::uint32_t widened[4] = {mask[i] ? ~0u : 0u, mask[i + 1] ? ~0u : 0u,
                                    mask[i + 2] ? ~0u : 0u, mask[i + 3] ? ~0u : 0u};
        uint32x4_t m = vld1q_u32(widened);
        lt_acc = vsubq_s32(lt_acc, vreinterpretq_s32_u32(vandq_u32(vcltq_s32(va, vb), m)));
        gt_acc = vsubq_s32(gt_acc, vreinterpretq_s32_u32(vandq_u32(vcgtq_s32(va, vb), m)));
    }
    pc.less += vaddvq_s32(lt_acc);
    pc.greater += vaddvq_s32(gt_acc);
    for (; i < len; ++i) {
        if (!mask[i]) continue;
        pc.less += a[i] < b[i];
        pc.greater += a[i] > b[i];
    }
    return pc;
}

}  // namespace mostar::kernels

#endif  // MOSTAR_HAVE_NEON
