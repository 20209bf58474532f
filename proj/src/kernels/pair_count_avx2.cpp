#include "mostar/kernels.hpp"

#if defined(MOSTAR_HAVE_AVX2)

#include <immintrin.h>

namespace mostar::kernels {

PairCounts pair_counts_avx2(const std::int32_t* a, const std::int32_t* b, std::size_t len) {
    PairCounts pc;
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        int lt = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpgt_epi32(vb, va)));
        int gt = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpgt_epi32(va, vb)));
        pc.less += __builtin_popcount(static_cast<unsigned>(lt));
        pc.greater += __builtin_popcount(static_cast<unsigned>(gt));
    }
    for (; i < len; ++i) {
        pc.less += a[i] < b[i];
        pc.greater += a[i] > b[i];
    }
    return pc;
}

PairCounts pair_counts_masked_avx2(const std::int32_t* a, const std::int32_t* b,
                                   const std::uint8_t* mask, std::size_t len) {
    PairCounts pc;
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m128i m8 = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(mask + i));
        __m256i m32 = _mm256_cvtepu8_epi32(m8);
        __m256i keep = _mm256_cmpgt_epi32(m32, _mm256_setzero_si256());
        __m256i lt = _mm256_and_si256(_mm256_cmpgt_epi32(vb, va), keep);
        __m256i gt = _mm256_and_si256(_mm256_cmpgt_epi32(va, vb), keep);
        pc.less += __builtin_popcount(
            static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(lt))));
        pc.greater += __builtin_popcount(
            static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(gt))));
    }
    for (; i < len; ++i) {
        if (!mask[i]) continue;
        pc.less += a[i] < b[i];
        pc.greater += a[i] > b[i];
    }
    return pc;
}

}  // namespace mostar::kernels

#endif  // MOSTAR_HAVE_AVX2
