#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mostar/graph.hpp"
#include "mostar/numeric.hpp"

namespace mostar {

// Graph whose vertices carry positive integer multiplicities: weight w(v) is
// 1 + the number of implicit pendant leaves bundled at v. When `apex` is set
// (the J gadget's universal vertex), every bundled leaf is additionally
// adjacent to the apex, matching the literal construction where the
// universal vertex is joined to all existing vertices; the apex's own bundle
// stays pendant on the apex.
struct VertexWeightedGraph {
    Graph core;
    std::vector<BigInt> weight;
    int apex = -1;

    BigInt total_vertices() const;
};

// Weighted closer count: sum of w(z) over z closer to u than to v in the
// implicit expansion. With unit weights this is exactly n_closer. Bundles
// follow their anchor (apex-free) or min(anchor, apex) distances (apex set).
BigInt n_closer_weighted(const VertexWeightedGraph& wg, int u, int v);

// Degree of a core vertex in the implicit expansion.
BigInt weighted_degree(const VertexWeightedGraph& wg, int v);

// Materializes the expansion: each vertex z gains w(z)-1 pendant leaves
// (adjacent to the apex as well when it is set). Returns the graph plus the
// core-vertex positions (core vertex i keeps id i).
Graph expand_weighted(const VertexWeightedGraph& wg);

struct GadgetOutput {
    char kind = 'H';  // 'H', 'P' (pruned H), 'J', 'X'
    bool weighted = false;
    Graph graph;               // H / pruned H / X
    VertexWeightedGraph wgraph;  // J
    std::vector<int> core_map;   // original vertex id -> gadget id (-1 if pruned away)
    int c = -1;                  // universal vertex
    int p = -1;                  // X only: pendant attached to c
};

GadgetOutput build_H(const Graph& g);
GadgetOutput build_H_pruned(const Graph& g);
GadgetOutput build_J(const Graph& g, bool prune_small_components = false);
GadgetOutput build_X(const Graph& g);

void gadget_to_json(std::ostream& out, const GadgetOutput& gadget);

enum class CliqueConstraint {
    MoEq, MoNeq,
    IrrEq, IrrNeq,
    PeriEq, PeriNeq,
    EPeriEq, EPeriNeq,
    EccEq, EccNeq,
    EeccEq, EeccNeq,
};
const char* constraint_name(CliqueConstraint c);
std::optional<CliqueConstraint> constraint_from_name(const std::string& s);

// Plain k-clique by lexicographic brute force over k-subsets.
std::optional<std::vector<int>> find_clique(const Graph& g, int k);
bool clique_exists(const Graph& g, int k);

// First k-subset (lexicographic) forming a clique whose vertices/edges
// satisfy the constraint; measures are computed once for the whole graph.
// Subset count is capped at 10^7.
std::optional<std::vector<int>> constrained_clique(const Graph& g, int k, CliqueConstraint c);

// Weighted variant for J-type gadgets; edge constraints (Mo, irr) only, and
// k >= 4 so that implicit pendant bundles (degree <= 2) cannot participate.
std::optional<std::vector<int>> constrained_clique(const VertexWeightedGraph& wg, int k,
                                                   CliqueConstraint c);

// Polynomial-time deciders for the inequality eccentricity problems.
bool decide_ecc_neq(const Graph& g, int k);
bool decide_eecc_neq(const Graph& g, int k);

enum class ReductionKind {
    H_MoEq, H_IrrEq,
    Hp_PeriEq, Hp_EPeriEq,
    X_EccEq, X_EeccEq,
    J_MoNeq, J_IrrNeq,
};
const char* reduction_name(ReductionKind k);

// True iff CLIQUE(g,k) agrees with the constrained clique problem on the
// gadget (target size k, or k+1 for the J kinds).
bool validate_reduction(const Graph& g, int k, ReductionKind kind);

}  // namespace mostar
