#include "mostar/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "mostar/distance.hpp"

namespace mostar {

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list,
                  std::vector<std::string>* warnings) {
    if (n < 0) throw DomainError("vertex count must be non-negative");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    std::vector<std::pair<int, int>> es;
    es.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") out of range for n=" + std::to_string(n));
        if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        es.emplace_back(u, v);
    }
    std::sort(es.begin(), es.end());
    std::size_t before = es.size();
    es.erase(std::unique(es.begin(), es.end()), es.end());
    if (warnings && es.size() != before)
        warnings->push_back("collapsed " + std::to_string(before - es.size()) +
                            " duplicate edge(s)");
    g.edges = std::move(es);
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    auto row = bfs_distances(g, 0);
    for (int v = 0; v < g.n; ++v)
        if (row[v] == kUnreachable) return false;
    return true;
}

int diameter(const Graph& g) {
    if (g.n == 0) throw DomainError("diameter of the empty graph is undefined");
    int best = 0;
    for (int s = 0; s < g.n; ++s) {
        auto row = bfs_distances(g, s);
        for (int v = 0; v < g.n; ++v) {
            if (row[v] == kUnreachable) throw DomainError("diameter requires a connected graph");
            best = std::max(best, row[v]);
        }
    }
    return best;
}

std::vector<int> pendant_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

Graph read_graph_text(std::istream& in, std::vector<std::string>* warnings) {
    long long n, m;
    if (!(in >> n >> m)) throw DomainError("graph text: expected header \"n m\"");
    if (n < 0 || m < 0) throw DomainError("graph text: negative header values");
    std::vector<std::pair<int, int>> es;
    es.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v))
            throw DomainError("graph text: expected " + std::to_string(m) + " edges, got " +
                              std::to_string(i));
        es.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return build_graph(static_cast<int>(n), es, warnings);
}

void write_graph_text(std::ostream& out, const Graph& g) {
    out << g.n << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

}  // namespace mostar
