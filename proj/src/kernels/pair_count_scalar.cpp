#include "mostar/kernels.hpp"

namespace mostar::kernels {

PairCounts pair_counts_scalar(const std::int32_t* a, const std::int32_t* b, std::size_t len) {
    PairCounts pc;
    for (std::size_t i = 0; i < len; ++i) {
        pc.less += a[i] < b[i];
        pc.greater += a[i] > b[i];
    }
    return pc;
}

PairCounts pair_counts_masked_scalar(const std::int32_t* a, const std::int32_t* b,
                                     const std::uint8_t* mask, std::size_t len) {
    PairCounts pc;
    for (std::size_t i = 0; i < len; ++i) {
        if (!mask[i]) continue;
        pc.less += a[i] < b[i];
        pc.greater += a[i] > b[i];
    }
    return pc;
}

}  // namespace mostar::kernels
