#include "mostar/kernels.hpp"

#include <atomic>

namespace mostar::kernels {

namespace {

struct Impl {
    PairCountFn plain;
    PairCountMaskedFn masked;
    const char* name;
};

constexpr Impl kScalar{pair_counts_scalar, pair_counts_masked_scalar, "scalar"};
#if defined(MOSTAR_HAVE_AVX2)
constexpr Impl kAvx2{pair_counts_avx2, pair_counts_masked_avx2, "avx2"};
#endif
#if defined(MOSTAR_HAVE_NEON)
constexpr Impl kNeon{pair_counts_neon, pair_counts_masked_neon, "neon"};
#endif

Impl detect() {
#if defined(MOSTAR_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2")) return kAvx2;
#endif
#if defined(MOSTAR_HAVE_NEON)
    return kNeon;
#endif
    return kScalar;
}

std::atomic<const Impl*> g_impl{nullptr};

const Impl& impl() {
    const Impl* p = g_impl.load(std::memory_order_acquire);
    if (!p) {
        static const Impl detected = detect();
        g_impl.store(&detected, std::memory_order_release);
        p = &detected;
    }
    return *p;
}

}  // namespace

PairCounts pair_counts(const std::int32_t* a, const std::int32_t* b, std::size_t len) {
    return impl().plain(a, b, len);
}

PairCounts pair_counts_masked(const std::int32_t* a, const std::int32_t* b,
                              const std::uint8_t* mask, std::size_t len) {
    return impl().masked(a, b, mask, len);
}

bool force_backend(Backend b) {
    switch (b) {
        case Backend::Auto: {
            static const Impl detected = detect();
            g_impl.store(&detected, std::memory_order_release);
            return true;
        }
        case Backend::Scalar:
            g_impl.store(&kScalar, std::memory_order_release);
            return true;
        case Backend::Avx2:
#if defined(MOSTAR_HAVE_AVX2)
            if (__builtin_cpu_supports("avx2")) {
                g_impl.store(&kAvx2, std::memory_order_release);
                return true;
            }
#endif
            return false;
        case Backend::Neon:
#if defined(MOSTAR_HAVE_NEON)
            g_impl.store(&kNeon, std::memory_order_release);
            return true;
#else
            return false;
#endif
    }
    return false;
}

const char* active_backend() { return impl().name; }

}  // namespace mostar::kernels
