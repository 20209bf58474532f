#pragma once

#include <cstdint>
#include <vector>

#include "mostar/distance.hpp"

namespace mostar {

// Ordered closer-vertex counts N(u,v) = |{x : d(x,u) < d(x,v)}| for every
// ordered pair. This is the one O(n^3) object nearly every peripherality
// measure reads from; it is built with the SIMD row-comparison kernel.
struct NCounts {
    int n = 0;
    std::vector<std::int32_t> c;

    std::int32_t at(int u, int v) const { return c[static_cast<std::size_t>(u) * n + v]; }
};

NCounts build_ncounts(const DistanceMatrix& dm, int threads = 1);

// beats(x, v) := N(x,v) > N(v,x), stored as column bitsets so that
// eperi(e={u,v}) is a word-parallel AND + popcount.
struct BeatsBits {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> bits;  // column-major: column v holds bit x

    const std::uint64_t* col(int v) const {
        return bits.data() + static_cast<std::size_t>(v) * words;
    }
    bool beats(int x, int v) const { return (col(v)[x >> 6] >> (x & 63)) & 1; }
};

BeatsBits build_beats(const NCounts& nc);

}  // namespace mostar
