#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mostar {

// Raised when an input violates an operation's domain (bad parameters,
// disconnected graph where connectivity is required, ...). The CLI maps it
// to exit code 1 as opposed to usage errors (exit code 2).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simple undirected graph on dense vertex ids 0..n-1. Immutable after
// construction; adjacency lists are sorted and symmetric.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted

    int m() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
};

// Builds a graph from an edge list. Self-loops are rejected; duplicate edges
// collapse silently (a note goes to `warnings` when provided, since mechanism
// files can legitimately repeat reactant pairs).
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list,
                  std::vector<std::string>* warnings = nullptr);

bool is_connected(const Graph& g);
int diameter(const Graph& g);  // throws DomainError when disconnected
std::vector<int> pendant_vertices(const Graph& g);

// Text interchange format: first line "n m", then m lines "u v" (0-indexed,
// u<v not required, duplicates collapsed).
Graph read_graph_text(std::istream& in, std::vector<std::string>* warnings = nullptr);
void write_graph_text(std::ostream& out, const Graph& g);

}  // namespace mostar
