#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "mostar/graph.hpp"

namespace mostar {

// Sentinel for disconnected pairs. It compares as +infinity against every
// real hop distance, which is exactly the convention n_closer uses on
// disconnected graphs.
inline constexpr std::int32_t kUnreachable = std::numeric_limits<std::int32_t>::max();

std::vector<std::int32_t> bfs_distances(const Graph& g, int source);

// Full n x n hop-distance matrix (row-major, one BFS per source).
struct DistanceMatrix {
    int n = 0;
    std::vector<std::int32_t> d;

    const std::int32_t* row(int u) const { return d.data() + static_cast<std::size_t>(u) * n; }
    std::int32_t at(int u, int v) const { return d[static_cast<std::size_t>(u) * n + v]; }
    bool connected() const;
    int eccentricity(int v) const;  // throws DomainError when v's row has unreachable entries
};

DistanceMatrix all_pairs(const Graph& g, int threads = 1);

// |{x : d(x,u) < d(x,v)}|; includes u itself, excludes ties.
std::int64_t n_closer(const DistanceMatrix& dm, int u, int v);

// min(d(u,w), d(v,w)) for edge {u,v}.
std::int32_t edge_vertex_distance(const DistanceMatrix& dm, int u, int v, int w);

}  // namespace mostar
