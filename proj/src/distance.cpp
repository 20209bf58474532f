#include "mostar/distance.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "mostar/kernels.hpp"

namespace mostar {

namespace {

void bfs_into(const Graph& g, int source, std::int32_t* dist, std::vector<int>& queue) {
    std::fill(dist, dist + g.n, kUnreachable);
    queue.clear();
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        std::int32_t du = dist[u];
        for (int v : g.adj[u]) {
            if (dist[v] == kUnreachable) {
                dist[v] = du + 1;
                queue.push_back(v);
            }
        }
    }
}

}  // namespace

std::vector<std::int32_t> bfs_distances(const Graph& g, int source) {
    if (source < 0 || source >= g.n) throw DomainError("bfs source out of range");
    std::vector<std::int32_t> dist(g.n);
    std::vector<int> queue;
    queue.reserve(g.n);
    bfs_into(g, source, dist.data(), queue);
    return dist;
}

bool DistanceMatrix::connected() const {
    if (n == 0) return true;
    const std::int32_t* r = row(0);
    for (int v = 0; v < n; ++v)
        if (r[v] == kUnreachable) return false;
    return true;
}

int DistanceMatrix::eccentricity(int v) const {
    const std::int32_t* r = row(v);
    std::int32_t best = 0;
    for (int x = 0; x < n; ++x) {
        if (r[x] == kUnreachable) throw DomainError("eccentricity requires a connected graph");
        best = std::max(best, r[x]);
    }
    return best;
}

DistanceMatrix all_pairs(const Graph& g, int threads) {
    DistanceMatrix dm;
    dm.n = g.n;
    dm.d.resize(static_cast<std::size_t>(g.n) * g.n);
    auto run = [&](int lo, int hi) {
        std::vector<int> queue;
        queue.reserve(g.n);
        for (int s = lo; s < hi; ++s)
            bfs_into(g, s, dm.d.data() + static_cast<std::size_t>(s) * g.n, queue);
    };
    if (threads <= 1 || g.n < 64) {
        run(0, g.n);
        return dm;
    }
    threads = std::min<int>(threads, g.n);
    std::vector<std::thread> pool;
    int chunk = (g.n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        int lo = t * chunk, hi = std::min(g.n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(run, lo, hi);
    }
    for (auto& th : pool) th.join();
    return dm;
}

std::int64_t n_closer(const DistanceMatrix& dm, int u, int v) {
    if (u == v) throw DomainError("n_closer requires u != v");
    return kernels::pair_counts(dm.row(u), dm.row(v), dm.n).less;
}

std::int32_t edge_vertex_distance(const DistanceMatrix& dm, int u, int v, int w) {
    return std::min(dm.at(u, w), dm.at(v, w));
}

}  // namespace mostar
