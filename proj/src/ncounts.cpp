#include "mostar/ncounts.hpp"

#include <algorithm>
#include <thread>

#include "mostar/kernels.hpp"

namespace mostar {

NCounts build_ncounts(const DistanceMatrix& dm, int threads) {
    NCounts nc;
    nc.n = dm.n;
    nc.c.assign(static_cast<std::size_t>(dm.n) * dm.n, 0);
    auto run = [&](int lo, int hi) {
        for (int u = lo; u < hi; ++u) {
            const std::int32_t* ru = dm.row(u);
            for (int v = u + 1; v < dm.n; ++v) {
                auto pc = kernels::pair_counts(ru, dm.row(v), dm.n);
                nc.c[static_cast<std::size_t>(u) * dm.n + v] = static_cast<std::int32_t>(pc.less);
                nc.c[static_cast<std::size_t>(v) * dm.n + u] =
                    static_cast<std::int32_t>(pc.greater);
            }
        }
    };
    if (threads <= 1 || dm.n < 128) {
        run(0, dm.n);
        return nc;
    }
    // balance: row u does n-u-1 pairs, so hand out interleaved stripes
    threads = std::min(threads, dm.n);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (int u = t; u < dm.n; u += threads) {
                const std::int32_t* ru = dm.row(u);
                for (int v = u + 1; v < dm.n; ++v) {
                    auto pc = kernels::pair_counts(ru, dm.row(v), dm.n);
                    nc.c[static_cast<std::size_t>(u) * dm.n + v] =
                        static_cast<std::int32_t>(pc.less);
                    nc.c[static_cast<std::size_t>(v) * dm.n + u] =
                        static_cast<std::int32_t>(pc.greater);
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    return nc;
}

BeatsBits build_beats(const NCounts& nc) {
    BeatsBits b;
    b.n = nc.n;
    b.words = (nc.n + 63) / 64;
    b.bits.assign(static_cast<std::size_t>(b.words) * nc.n, 0);
    for (int v = 0; v < nc.n; ++v) {
        std::uint64_t* col = b.bits.data() + static_cast<std::size_t>(v) * b.words;
        for (int x = 0; x < nc.n; ++x)
            if (x != v && nc.at(x, v) > nc.at(v, x)) col[x >> 6] |= 1ull << (x & 63);
    }
    return b;
}

}  // namespace mostar
