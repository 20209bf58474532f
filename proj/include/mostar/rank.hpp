#pragma once

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mostar/graph.hpp"

namespace mostar {

// Competition ranking ("1224"): tied items share the smallest rank and the
// next distinct value's rank skips by the tie count. `ascending` picks the
// direction of the underlying value; the inverse of a measure is never
// materialized, ranking by peri ascending IS ranking by peri^-1 descending.
template <class T>
std::vector<int> competition_ranks(const std::vector<T>& values, bool ascending) {
    const int n = static_cast<int>(values.size());
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return ascending ? values[a] < values[b] : values[b] < values[a];
    });
    std::vector<int> ranks(n, 0);
    int rank = 0;
    for (int pos = 0; pos < n; ++pos) {
        int i = order[pos];
        if (pos == 0 || values[i] != values[order[pos - 1]]) rank = pos + 1;
        ranks[i] = rank;
    }
    return ranks;
}

enum class TableKind { Vertex, Edge };

struct RankTable {
    TableKind kind = TableKind::Vertex;
    std::vector<std::string> columns;     // measure ids in column order
    std::vector<std::string> row_labels;  // sorted species names or "A , B" edge labels
    std::vector<std::vector<int>> ranks;  // ranks[row][col]
};

// Ranks every vertex (peri, spr, deg, cc, bc, ec, ecc) or every edge
// (edeg, eecc, eperi, espr, Mo) of a connected graph. `labels` maps vertex id
// to display name; rows come out sorted by label, edges labelled
// "A , B" with endpoints in lexicographic order.
RankTable rank_table(const Graph& g, const std::vector<std::string>& labels, TableKind kind);

struct TableDiff {
    std::string row;
    std::string column;
    int computed = 0;
    int reference = 0;
};

// Entry-for-entry diff; throws DomainError when the row or column sets differ.
std::vector<TableDiff> compare_tables(const RankTable& computed, const RankTable& reference);

RankTable load_rank_table_csv(std::istream& in, TableKind kind);
void rank_table_to_csv(std::ostream& out, const RankTable& t);
void rank_table_to_json(std::ostream& out, const RankTable& t);

}  // namespace mostar
