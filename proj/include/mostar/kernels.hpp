#pragma once

#include <cstddef>
#include <cstdint>

namespace mostar::kernels {

// Counts of strictly-smaller / strictly-greater positions between two rows.
// Given distance rows a = d(u,*) and b = d(v,*), `less` is the number of
// vertices strictly closer to u and `greater` the number strictly closer
// to v; ties are len - less - greater.
struct PairCounts {
    std::int64_t less = 0;
    std::int64_t greater = 0;
};

using PairCountFn = PairCounts (*)(const std::int32_t*, const std::int32_t*, std::size_t);
using PairCountMaskedFn =
    PairCounts (*)(const std::int32_t*, const std::int32_t*, const std::uint8_t*, std::size_t);

// Scalar reference kernels. Always available; the ground truth the SIMD
// variants are tested against.
PairCounts pair_counts_scalar(const std::int32_t* a, const std::int32_t* b, std::size_t len);
PairCounts pair_counts_masked_scalar(const std::int32_t* a, const std::int32_t* b,
                                     const std::uint8_t* mask, std::size_t len);

#if defined(MOSTAR_HAVE_AVX2)
PairCounts pair_counts_avx2(const std::int32_t* a, const std::int32_t* b, std::size_t len);
PairCounts pair_counts_masked_avx2(const std::int32_t* a, const std::int32_t* b,
                                   const std::uint8_t* mask, std::size_t len);
#endif
#if defined(MOSTAR_HAVE_NEON)
PairCounts pair_counts_neon(const std::int32_t* a, const std::int32_t* b, std::size_t len);
PairCounts pair_counts_masked_neon(const std::int32_t* a, const std::int32_t* b,
                                   const std::uint8_t* mask, std::size_t len);
#endif

// Dispatched entry points; the backend is selected once at first use from
// CPU capabilities and can be overridden for testing.
PairCounts pair_counts(const std::int32_t* a, const std::int32_t* b, std::size_t len);
PairCounts pair_counts_masked(const std::int32_t* a, const std::int32_t* b,
                              const std::uint8_t* mask, std::size_t len);

enum class Backend { Auto, Scalar, Avx2, Neon };

// Forces a backend (Backend::Auto restores CPU detection). Returns false if
// the requested backend is not available on this build/CPU.
bool force_backend(Backend b);
const char* active_backend();

}  // namespace mostar::kernels
