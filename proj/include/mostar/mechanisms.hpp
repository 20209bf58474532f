#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mostar/graph.hpp"
#include "mostar/rank.hpp"

namespace mostar {

// A chemical mechanism: species names plus reactions as reactant/product
// multisets. Names are case-sensitive tokens; "M" is a valid reactant token
// but never becomes a graph vertex.
struct Mechanism {
    std::vector<std::string> species;  // sorted, every name used in any reaction
    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> reactions;
};

struct MechanismParseError : DomainError {
    int line;
    MechanismParseError(int line_, const std::string& msg)
        : DomainError("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Grammar per line: "R1 + R2 + ... -> P1 + P2 + ..." (product list may be
// empty); '#' starts a comment; blank lines are skipped.
Mechanism parse_mechanism(std::istream& in);

struct NamedGraph {
    Graph graph;
    std::vector<std::string> names;  // vertex id -> species name (sorted order)
};

// Vertices are the distinct non-M reactant species; each reaction contributes
// an edge between every unordered pair of its distinct non-M reactants.
NamedGraph reactant_graph(const Mechanism& mech);

// Built-in datasets: the SuperFast reactant graph (order 15, 20 edges) and
// the MOZART-4 reactant graph (order 81, 139 edges). Both are stored as the
// published reactant-pair edge lists; MOZART-4 in particular ships as edges
// rather than reactions because that is how the source data is given.
NamedGraph builtin_mechanism(const std::string& name);  // "superfast" | "mozart4"

RankTable mechanism_rank_table(const NamedGraph& ng, TableKind kind);

}  // namespace mostar
