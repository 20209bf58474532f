#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "mostar/measures.hpp"
#include "mostar/mechanisms.hpp"
#include "oracles.hpp"

using namespace mostar;

#ifndef MOSTAR_DATA_DIR
#define MOSTAR_DATA_DIR "data"
#endif

namespace {

RankTable load_reference(const std::string& dataset, TableKind kind) {
    std::string path = std::string(MOSTAR_DATA_DIR) + "/" + dataset + "_" +
                       (kind == TableKind::Vertex ? "vertex" : "edge") + "_ranks.csv";
    std::ifstream in(path);
    REQUIRE(in.good());
    return load_rank_table_csv(in, kind);
}

int rank_of(const RankTable& t, const std::string& label, const std::string& column) {
    for (std::size_t i = 0; i < t.row_labels.size(); ++i)
        if (t.row_labels[i] == label)
            for (std::size_t c = 0; c < t.columns.size(); ++c)
                if (t.columns[c] == column) return t.ranks[i][c];
    FAIL("row/column not found: ", label, "/", column);
    return -1;
}

}  // namespace

TEST_SUITE("mechanisms") {

TEST_CASE("parser: reactions, M handling, errors with line numbers") {
    std::stringstream ok("O3 + OH -> HO2 + O2\nCH4 + OH + M -> CH3O2 + H2O + M\n# comment\n");
    Mechanism mech = parse_mechanism(ok);
    CHECK(mech.reactions.size() == 2);
    CHECK(mech.reactions[0].first == std::vector<std::string>{"O3", "OH"});
    CHECK(mech.reactions[1].first == std::vector<std::string>{"CH4", "OH", "M"});

    std::stringstream bad("O3 + OH -> X\n-> X\n");
    try {
        parse_mechanism(bad);
        FAIL("expected parse error");
    } catch (const MechanismParseError& e) {
        CHECK(e.line == 2);
    }

    std::stringstream bad2("A + -> B\n");
    CHECK_THROWS_AS(parse_mechanism(bad2), MechanismParseError);
    std::stringstream bad3("A B -> C\n");
    CHECK_THROWS_AS(parse_mechanism(bad3), MechanismParseError);
}

TEST_CASE("reactant graph: pairwise rule, M excluded, self-reactions") {
    std::stringstream in("A + B + C -> D\nE + E -> F\nA + M -> G\n");
    NamedGraph ng = reactant_graph(parse_mechanism(in));
    CHECK(ng.names == std::vector<std::string>{"A", "B", "C", "E"});
    CHECK(ng.graph.m() == 3);  // triangle on {A,B,C}; E isolated; no M vertex
    CHECK(ng.graph.degree(3) == 0);
}

TEST_CASE("builtin superfast: order, size, diameter, degree, connectivity") {
    NamedGraph sf = builtin_mechanism("superfast");
    CHECK(sf.graph.n == 15);
    CHECK(sf.graph.m() == 20);
    CHECK(diameter(sf.graph) == 4);
    int maxdeg = 0, oh = -1;
    for (int v = 0; v < sf.graph.n; ++v) {
        maxdeg = std::max(maxdeg, sf.graph.degree(v));
        if (sf.names[v] == "OH") oh = v;
    }
    CHECK(maxdeg == 11);
    CHECK(sf.graph.degree(oh) == 11);
    CHECK(is_connected(sf.graph));
}

TEST_CASE("builtin mozart4: order, size, diameter, max degree") {
    NamedGraph mz = builtin_mechanism("mozart4");
    CHECK(mz.graph.n == 81);
    CHECK(mz.graph.m() == 139);
    CHECK(diameter(mz.graph) == 6);
    int maxdeg = 0;
    for (int v = 0; v < mz.graph.n; ++v) maxdeg = std::max(maxdeg, mz.graph.degree(v));
    CHECK(maxdeg == 54);
    CHECK_THROWS_AS(builtin_mechanism("geos-chem"), DomainError);
}

TEST_CASE("rank tables: spot values from the published grids") {
    NamedGraph sf = builtin_mechanism("superfast");
    RankTable v = mechanism_rank_table(sf, TableKind::Vertex);
    for (const auto& col : v.columns) CHECK(rank_of(v, "OH", col) == 1);
    CHECK(rank_of(v, "H2O", "peri") == 15);
    CHECK(rank_of(v, "H2O", "spr") == 15);
    CHECK(rank_of(v, "H2O", "deg") == 10);
    CHECK(rank_of(v, "H2O", "cc") == 15);
    CHECK(rank_of(v, "H2O", "bc") == 7);
    CHECK(rank_of(v, "H2O", "ec") == 15);
    CHECK(rank_of(v, "H2O", "ecc") == 13);

    RankTable e = mechanism_rank_table(sf, TableKind::Edge);
    CHECK(rank_of(e, "HO2 , O3", "Mo") == 1);

    NamedGraph mz = builtin_mechanism("mozart4");
    RankTable me = mechanism_rank_table(mz, TableKind::Edge);
    CHECK(rank_of(me, "CH3CO3 , CH3O2", "Mo") == 1);
}

TEST_CASE("golden tables: all four grids reproduce entry for entry") {
    for (const std::string dataset : {"superfast", "mozart4"}) {
        NamedGraph ng = builtin_mechanism(dataset);
        for (TableKind kind : {TableKind::Vertex, TableKind::Edge}) {
            RankTable computed = mechanism_rank_table(ng, kind);
            RankTable reference = load_reference(dataset, kind);
            auto diffs = compare_tables(computed, reference);
            CAPTURE(dataset);
            CHECK(diffs.empty());
        }
    }
}

TEST_CASE("compare_tables raises on shape mismatches") {
    NamedGraph sf = builtin_mechanism("superfast");
    RankTable v = mechanism_rank_table(sf, TableKind::Vertex);
    RankTable broken = v;
    broken.row_labels[0] = "NOT_A_SPECIES";
    CHECK_THROWS_AS(compare_tables(v, broken), DomainError);
    RankTable computed = v;
    computed.ranks[2][3] += 1;
    auto diffs = compare_tables(computed, v);
    CHECK(diffs.size() == 1);
}

TEST_CASE("hand-written SuperFast reaction file reproduces the builtin graph") {
    std::ifstream in(std::string(MOSTAR_DATA_DIR) + "/superfast_reactions.txt");
    REQUIRE(in.good());
    NamedGraph parsed = reactant_graph(parse_mechanism(in));
    NamedGraph builtin = builtin_mechanism("superfast");
    CHECK(parsed.names == builtin.names);
    CHECK(parsed.graph.edges == builtin.graph.edges);  // same sorted name order
}

TEST_CASE("competition ranking: the 1224 law and monotone invariance") {
    std::vector<int> values{7, 3, 3, 1};
    CHECK(competition_ranks(values, false) == std::vector<int>{1, 2, 2, 4});
    CHECK(competition_ranks(values, true) == std::vector<int>{4, 2, 2, 1});

    // sorted distinct values with multiplicities t_i give ranks 1, 1+t_1, ...
    std::vector<int> multi{5, 5, 5, 4, 4, 2, 2, 2, 2, 1};
    auto ranks = competition_ranks(multi, false);
    CHECK(ranks == std::vector<int>{1, 1, 1, 4, 4, 6, 6, 6, 6, 10});

    // ranking is invariant under strictly monotone transforms, including
    // around zero (the inverse of a measure is never materialized)
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::int64_t> xs(12);
        for (auto& x : xs) x = static_cast<std::int64_t>(rng() % 6);  // zeros included
        std::vector<std::int64_t> ys(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = 3 * xs[i] + 5;
        CHECK(competition_ranks(xs, true) == competition_ranks(ys, true));
        // ascending on x equals descending on -x
        std::vector<std::int64_t> neg(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) neg[i] = -xs[i];
        CHECK(competition_ranks(xs, true) == competition_ranks(neg, false));
    }
}

}  // TEST_SUITE
