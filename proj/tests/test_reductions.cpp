#include <doctest.h>

#include <random>

#include "mostar/families.hpp"
#include "mostar/measures.hpp"
#include "mostar/reductions.hpp"
#include "oracles.hpp"

using namespace mostar;

namespace {

Graph complete(int n) { return generate({FamilyTag::Complete, {n}, {}}); }

}  // namespace

TEST_SUITE("reductions") {

TEST_CASE("build_H: degree equalization and sizes") {
    // K_3 is regular, so G' = K_3 and |V(H)| = 3|V(G')|+1 = 10
    auto h = build_H(complete(3));
    CHECK(h.graph.n == 10);
    CHECK(h.c == 3);

    // P_3: ends get one pendant each, |V(G')| = 5, |V(H)| = 16
    auto hp3 = build_H(build_graph(3, {{0, 1}, {1, 2}}));
    CHECK(hp3.graph.n == 16);

    // core pairs are balanced: n_H(u,v) = n_H(v,u) for u,v in V(g)
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = oracles::random_graph(5, 0.5, rng);
        auto gadget = build_H(g);
        DistanceMatrix dm = all_pairs(gadget.graph);
        NCounts nc = build_ncounts(dm);
        for (int u = 0; u < g.n; ++u)
            for (int v = u + 1; v < g.n; ++v)
                CHECK(nc.at(gadget.core_map[u], gadget.core_map[v]) ==
                      nc.at(gadget.core_map[v], gadget.core_map[u]));
        // every edge at c beats every core edge on Mostar
        std::int64_t c_min = -1, core_max = 0;
        for (auto [u, v] : gadget.graph.edges) {
            std::int64_t mo = mostar_edge(nc, u, v);
            if (u == gadget.c || v == gadget.c)
                c_min = c_min < 0 ? mo : std::min(c_min, mo);
            else if (u < g.n && v < g.n)
                core_max = std::max(core_max, mo);
        }
        if (c_min >= 0) CHECK(c_min > core_max);
    }
}

TEST_CASE("build_H_pruned: small components dropped, peri profile") {
    // K_3 plus a disjoint K_2: the K_2 is dropped
    Graph g = build_graph(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
    auto gadget = build_H_pruned(g);
    CHECK(gadget.core_map[3] == -1);
    CHECK(gadget.core_map[4] == -1);
    CHECK(gadget.graph.n == 10);  // built on K_3 alone

    // K_2 alone: gadget collapses to the single vertex c
    auto empty = build_H_pruned(build_graph(2, {{0, 1}}));
    CHECK(empty.graph.n == 1);
    CHECK(empty.c == 0);

    // kept cores have peri 1 (beaten only by c); c has peri 0
    DistanceMatrix dm = all_pairs(gadget.graph);
    NCounts nc = build_ncounts(dm);
    for (int v = 0; v < 3; ++v) CHECK(peri_vertex(nc, gadget.core_map[v]) == 1);
    CHECK(peri_vertex(nc, gadget.c) == 0);
}

TEST_CASE("build_J: weights, sandwich, injectivity") {
    auto j = build_J(build_graph(2, {{0, 1}}));
    REQUIRE(j.weighted);
    CHECK(j.wgraph.weight[0] == BigInt(65));     // 4^3 + 1
    CHECK(j.wgraph.weight[1] == BigInt(257));    // 4^4 + 1
    CHECK(j.wgraph.weight[2] == BigInt(65537));  // 4^{4n} + 1 at c
    CHECK(j.wgraph.apex == j.c);
    CHECK(j.wgraph.total_vertices() == 65859);

    CHECK_THROWS_AS(build_J(build_graph(1, {})), DomainError);

    // strict sandwich 4^{n+j-1} < diff < 4^{n+j} for core pairs i < j, and
    // injectivity of (i,j) -> diff, over every labeled graph with n <= 4
    for (int n = 2; n <= 4; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        int P = static_cast<int>(pairs.size());
        for (std::uint32_t mask = 0; mask < (1u << P); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (int b = 0; b < P; ++b)
                if (mask >> b & 1) edges.push_back(pairs[b]);
            Graph g = build_graph(n, edges);
            auto gadget = build_J(g);
            std::set<BigInt> diffs;
            for (int i = 0; i < n; ++i)
                for (int jj = i + 1; jj < n; ++jj) {
                    BigInt d = n_closer_weighted(gadget.wgraph, jj, i) -
                               n_closer_weighted(gadget.wgraph, i, jj);
                    CAPTURE(n);
                    CAPTURE(mask);
                    // 1-based j = jj+1: 4^{n+j-1} < diff < 4^{n+j}
                    CHECK(d > BigInt(1) << (2 * (n + jj)));
                    CHECK(d < BigInt(1) << (2 * (n + jj + 1)));
                    CHECK(diffs.insert(d).second);  // injective over core pairs
                }
        }
    }
}

TEST_CASE("J(K_2): weighted counts equal the explicit 65859-vertex expansion") {
    auto j = build_J(build_graph(2, {{0, 1}}));
    Graph big = expand_weighted(j.wgraph);
    CHECK(big.n == 65859);
    // compare all core-pair counts via two BFS rows per pair
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) {
            if (u == v) continue;
            auto du = bfs_distances(big, u);
            auto dv = bfs_distances(big, v);
            std::int64_t count = 0;
            for (int x = 0; x < big.n; ++x) count += du[x] < dv[x];
            CHECK(n_closer_weighted(j.wgraph, u, v) == count);
        }
}

TEST_CASE("weighted degrees equal degrees in the explicit expansion") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 8; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        Graph g = oracles::random_graph(n, 0.5, rng);
        auto j = build_J(build_graph(n, g.edges));
        VertexWeightedGraph small = j.wgraph;  // shrink weights so expansion stays tiny
        for (auto& w : small.weight) w = 1 + static_cast<long long>(rng() % 6);
        Graph big = expand_weighted(small);
        for (int v = 0; v < small.core.n; ++v)
            CHECK(weighted_degree(small, v) == BigInt(big.degree(v)));
    }
}

TEST_CASE("pendant bundles cannot join cliques of size >= 4") {
    auto j = build_J(build_graph(3, {{0, 1}, {1, 2}}));
    // implicit bundle members have degree 2 (anchor + apex) < k-1 for k >= 4
    for (int v = 0; v < j.wgraph.core.n; ++v)
        if (j.wgraph.weight[v] > 1) {
            int pendant_degree = (j.wgraph.apex >= 0 && v != j.wgraph.apex) ? 2 : 1;
            CHECK(pendant_degree < 3);
        }
    auto h = build_H(build_graph(3, {{0, 1}, {1, 2}}));
    for (int v = 3; v < h.graph.n; ++v)
        if (v != h.c) CHECK(h.graph.degree(v) <= 2);
}

TEST_CASE("build_X on an edgeless graph: no constrained pair beyond c") {
    Graph edgeless = build_graph(3, {});
    auto x = build_X(edgeless);
    CHECK(!clique_exists(edgeless, 2));
    CHECK(!constrained_clique(x.graph, 2, CliqueConstraint::EccEq).has_value());
    CHECK(validate_reduction(edgeless, 2, ReductionKind::X_EccEq));
}

TEST_CASE("build_X: eccentricity profile") {
    auto x = build_X(complete(3));
    CHECK(x.graph.n == 5);
    DistanceMatrix dm = all_pairs(x.graph);
    CHECK(dm.eccentricity(x.c) == 1);
    for (int v = 0; v < x.graph.n; ++v)
        if (v != x.c) CHECK(dm.eccentricity(v) == 2);
    for (auto [u, v] : x.graph.edges) {
        int want = (u == x.c || v == x.c) ? 1 : 2;
        CHECK(eecc(dm, u, v) == want);
    }
}

TEST_CASE("constrained cliques: catalogued examples") {
    // K_5, k=4, Mo=: all edge Mostar values are 0
    CHECK(constrained_clique(complete(5), 4, CliqueConstraint::MoEq).has_value());

    // ecc != with k >= 3 is impossible
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = oracles::random_connected_graph(6, 0.4, rng);
        CHECK(!constrained_clique(g, 3, CliqueConstraint::EccNeq).has_value());
        CHECK(!decide_ecc_neq(g, 3));
        CHECK(decide_eecc_neq(g, 2) == (g.m() > 0));
    }

    Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(decide_ecc_neq(p4, 2));
    CHECK(constrained_clique(p4, 2, CliqueConstraint::EccNeq).has_value());

    Graph edgeless = build_graph(3, {});
    CHECK(!decide_eecc_neq(edgeless, 2));

    // the decider agrees with brute force for k = 2
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracles::random_connected_graph(5 + static_cast<int>(rng() % 3), 0.35, rng);
        CHECK(decide_ecc_neq(g, 2) ==
              constrained_clique(g, 2, CliqueConstraint::EccNeq).has_value());
        CHECK(decide_eecc_neq(g, 2) ==
              constrained_clique(g, 2, CliqueConstraint::EeccNeq).has_value());
    }
}

TEST_CASE("clique search determinism and cap") {
    Graph k6 = complete(6);
    auto w = find_clique(k6, 4);
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<int>{0, 1, 2, 3});  // lexicographically first
    CHECK(!find_clique(k6, 7).has_value());
}

TEST_CASE("validate_reduction: equality kinds on random graphs") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = oracles::random_graph(6, 0.5, rng);
        for (ReductionKind kind : {ReductionKind::H_MoEq, ReductionKind::H_IrrEq,
                                   ReductionKind::Hp_PeriEq, ReductionKind::Hp_EPeriEq,
                                   ReductionKind::X_EccEq, ReductionKind::X_EeccEq}) {
            CAPTURE(trial);
            CAPTURE(reduction_name(kind));
            CHECK(validate_reduction(g, 4, kind));
        }
    }
}

TEST_CASE("validate_reduction: J kinds on all tiny graphs plus K_4 + K_1") {
    for (int n = 2; n <= 3; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        int P = static_cast<int>(pairs.size());
        for (std::uint32_t mask = 0; mask < (1u << P); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (int b = 0; b < P; ++b)
                if (mask >> b & 1) edges.push_back(pairs[b]);
            Graph g = build_graph(n, edges);
            CHECK(validate_reduction(g, 3, ReductionKind::J_MoNeq));
            CHECK(validate_reduction(g, 3, ReductionKind::J_IrrNeq));
        }
    }

    // K_4 plus an isolated vertex: a (k+1)-clique with all-distinct Mostar
    Graph g = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto j = build_J(g);
    auto witness = constrained_clique(j.wgraph, 5, CliqueConstraint::MoNeq);
    CHECK(witness.has_value());
    CHECK(validate_reduction(g, 4, ReductionKind::J_MoNeq));
}

TEST_CASE("weighted clique search rejects unsupported uses") {
    auto j = build_J(build_graph(2, {{0, 1}}));
    CHECK_THROWS_AS(constrained_clique(j.wgraph, 3, CliqueConstraint::MoNeq), DomainError);
    CHECK_THROWS_AS(constrained_clique(j.wgraph, 4, CliqueConstraint::PeriEq), DomainError);
}

TEST_CASE("gadget JSON carries weights as decimal strings") {
    auto j = build_J(build_graph(2, {{0, 1}}));
    std::ostringstream out;
    gadget_to_json(out, j);
    CHECK(out.str().find("\"65537\"") != std::string::npos);
    CHECK(out.str().find("\"kind\": \"J\"") != std::string::npos);
}

}  // TEST_SUITE
