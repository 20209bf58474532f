#include "mostar/reductions.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "mostar/measures.hpp"

namespace mostar {

BigInt VertexWeightedGraph::total_vertices() const {
    BigInt total = 0;
    for (const auto& w : weight) total += w;
    return total;
}

namespace {

void check_weighted(const VertexWeightedGraph& wg) {
    if (static_cast<int>(wg.weight.size()) != wg.core.n)
        throw DomainError("weighted graph: weight per vertex required");
    for (const auto& w : wg.weight)
        if (w < 1) throw DomainError("weighted graph: weights must be >= 1");
}

}  // namespace

BigInt n_closer_weighted(const VertexWeightedGraph& wg, int u, int v) {
    if (u == v) throw DomainError("n_closer_weighted requires u != v");
    check_weighted(wg);
    auto du = bfs_distances(wg.core, u);
    auto dv = bfs_distances(wg.core, v);
    BigInt total = 0;
    for (int z = 0; z < wg.core.n; ++z) {
        if (du[z] < dv[z]) total += 1;  // the anchor itself
        // bundle members: anchor-following, or min(anchor, apex)+1 with an apex
        std::int64_t bu, bv;
        if (wg.apex >= 0 && z != wg.apex) {
            bu = 1ll + std::min<std::int64_t>(du[z], du[wg.apex]);
            bv = 1ll + std::min<std::int64_t>(dv[z], dv[wg.apex]);
        } else {
            bu = du[z] == kUnreachable ? kUnreachable : 1ll + du[z];
            bv = dv[z] == kUnreachable ? kUnreachable : 1ll + dv[z];
        }
        if (bu < bv) total += wg.weight[z] - 1;
    }
    return total;
}

BigInt weighted_degree(const VertexWeightedGraph& wg, int v) {
    check_weighted(wg);
    BigInt d = wg.core.degree(v);
    d += wg.weight[v] - 1;  // own bundle
    if (wg.apex == v)
        for (int z = 0; z < wg.core.n; ++z)
            if (z != v) d += wg.weight[z] - 1;  // every foreign bundle touches the apex
    return d;
}

Graph expand_weighted(const VertexWeightedGraph& wg) {
    check_weighted(wg);
    long long extra = 0;
    for (int z = 0; z < wg.core.n; ++z) {
        BigInt e = wg.weight[z] - 1;
        if (e > 100000000) throw DomainError("expansion too large to materialize");
        extra += static_cast<long long>(e);
    }
    long long total = wg.core.n + extra;
    if (total > 100000000) throw DomainError("expansion too large to materialize");
    std::vector<std::pair<int, int>> es = wg.core.edges;
    int next = wg.core.n;
    for (int z = 0; z < wg.core.n; ++z) {
        long long count = static_cast<long long>(wg.weight[z] - 1);
        for (long long i = 0; i < count; ++i) {
            es.emplace_back(z, next);
            if (wg.apex >= 0 && z != wg.apex) es.emplace_back(wg.apex, next);
            ++next;
        }
    }
    return build_graph(static_cast<int>(total), es);
}

namespace {

// g plus pendants until all original vertices reach the maximum degree (the
// minimal-pendant way to equalize), then a universal vertex c plus
// 2|V(G')| pendants on c.
GadgetOutput build_H_impl(const Graph& g, bool prune) {
    GadgetOutput out;
    out.kind = prune ? 'P' : 'H';
    out.core_map.assign(g.n, -1);

    // optionally drop connected components of order <= 2
    std::vector<int> keep;
    if (prune) {
        std::vector<int> comp(g.n, -1);
        int ncomp = 0;
        for (int s = 0; s < g.n; ++s) {
            if (comp[s] >= 0) continue;
            std::vector<int> stack{s};
            comp[s] = ncomp;
            std::vector<int> members{s};
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int v : g.adj[u])
                    if (comp[v] < 0) {
                        comp[v] = ncomp;
                        stack.push_back(v);
                        members.push_back(v);
                    }
            }
            if (members.size() >= 3)
                for (int v : members) keep.push_back(v);
            ++ncomp;
        }
        std::sort(keep.begin(), keep.end());
    } else {
        keep.resize(g.n);
        for (int v = 0; v < g.n; ++v) keep[v] = v;
    }

    if (keep.empty()) {
        // nothing survives pruning: the gadget is the single vertex c
        out.graph = build_graph(1, {});
        out.c = 0;
        return out;
    }

    std::vector<int> id(g.n, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        id[keep[i]] = static_cast<int>(i);
        out.core_map[keep[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> es;
    int maxdeg = 0;
    std::vector<int> deg(keep.size(), 0);
    for (auto [u, v] : g.edges) {
        if (id[u] < 0 || id[v] < 0) continue;
        es.emplace_back(id[u], id[v]);
        ++deg[id[u]];
        ++deg[id[v]];
    }
    for (int d : deg) maxdeg = std::max(maxdeg, d);
    int next = static_cast<int>(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (int d = deg[i]; d < maxdeg; ++d) es.emplace_back(static_cast<int>(i), next++);
    int gprime_order = next;
    int c = next++;
    for (int v = 0; v < gprime_order; ++v) es.emplace_back(c, v);
    for (int i = 0; i < 2 * gprime_order; ++i) es.emplace_back(c, next++);
    out.graph = build_graph(next, es);
    out.c = c;
    return out;
}

}  // namespace

GadgetOutput build_H(const Graph& g) { return build_H_impl(g, false); }
GadgetOutput build_H_pruned(const Graph& g) { return build_H_impl(g, true); }

GadgetOutput build_J(const Graph& g, bool prune_small_components) {
    if (g.n < 2) throw DomainError("J gadget requires a graph of order >= 2");
    GadgetOutput out;
    out.kind = 'J';
    out.weighted = true;
    out.core_map.assign(g.n, -1);

    std::vector<int> keep;
    if (prune_small_components) {
        std::vector<char> seen(g.n, 0);
        for (int s = 0; s < g.n; ++s) {
            if (seen[s]) continue;
            std::vector<int> stack{s}, members{s};
            seen[s] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int v : g.adj[u])
                    if (!seen[v]) {
                        seen[v] = 1;
                        stack.push_back(v);
                        members.push_back(v);
                    }
            }
            if (members.size() >= 3)
                for (int v : members) keep.push_back(v);
        }
        std::sort(keep.begin(), keep.end());
    } else {
        keep.resize(g.n);
        for (int v = 0; v < g.n; ++v) keep[v] = v;
    }

    long long n = static_cast<long long>(keep.size());
    std::vector<int> id(g.n, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        id[keep[i]] = static_cast<int>(i);
        out.core_map[keep[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges)
        if (id[u] >= 0 && id[v] >= 0) es.emplace_back(id[u], id[v]);
    int c = static_cast<int>(n);
    for (int v = 0; v < n; ++v) es.emplace_back(c, v);
    out.wgraph.core = build_graph(static_cast<int>(n + 1), es);
    out.wgraph.weight.assign(n + 1, 1);
    // 4^{n+i} pendants at v_i (1-based i), 4^{4n} at c
    for (long long i = 1; i <= n; ++i)
        out.wgraph.weight[i - 1] = (BigInt(1) << (2 * (n + i))) + 1;
    out.wgraph.weight[c] = (BigInt(1) << (8 * n)) + 1;
    out.wgraph.apex = c;
    out.c = c;
    return out;
}

GadgetOutput build_X(const Graph& g) {
    GadgetOutput out;
    out.kind = 'X';
    out.core_map.resize(g.n);
    for (int v = 0; v < g.n; ++v) out.core_map[v] = v;
    std::vector<std::pair<int, int>> es = g.edges;
    int c = g.n, p = g.n + 1;
    for (int v = 0; v < g.n; ++v) es.emplace_back(c, v);
    es.emplace_back(c, p);
    out.graph = build_graph(g.n + 2, es);
    out.c = c;
    out.p = p;
    return out;
}

void gadget_to_json(std::ostream& out, const GadgetOutput& gadget) {
    const Graph& g = gadget.weighted ? gadget.wgraph.core : gadget.graph;
    out << "{\n  \"kind\": \"" << (gadget.kind == 'P' ? std::string("Hp")
                                                       : std::string(1, gadget.kind))
        << "\",\n  \"n\": " << g.n << ",\n  \"m\": " << g.m() << ",\n  \"edges\": [";
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        out << (i ? ", " : "") << '[' << g.edges[i].first << ", " << g.edges[i].second << ']';
    out << "],\n  \"core_map\": {";
    bool first = true;
    for (std::size_t v = 0; v < gadget.core_map.size(); ++v) {
        if (gadget.core_map[v] < 0) continue;
        out << (first ? "" : ", ") << '"' << v << "\": " << gadget.core_map[v];
        first = false;
    }
    out << "},\n  \"c\": " << gadget.c;
    if (gadget.p >= 0) out << ",\n  \"p\": " << gadget.p;
    if (gadget.weighted) {
        out << ",\n  \"weights\": [";
        for (int v = 0; v < g.n; ++v)
            out << (v ? ", " : "") << '"' << gadget.wgraph.weight[v].str() << '"';
        out << ']';
    }
    out << "\n}\n";
}

const char* constraint_name(CliqueConstraint c) {
    switch (c) {
        case CliqueConstraint::MoEq: return "Mo=";
        case CliqueConstraint::MoNeq: return "Mo!=";
        case CliqueConstraint::IrrEq: return "irr=";
        case CliqueConstraint::IrrNeq: return "irr!=";
        case CliqueConstraint::PeriEq: return "peri=";
        case CliqueConstraint::PeriNeq: return "peri!=";
        case CliqueConstraint::EPeriEq: return "eperi=";
        case CliqueConstraint::EPeriNeq: return "eperi!=";
        case CliqueConstraint::EccEq: return "ecc=";
        case CliqueConstraint::EccNeq: return "ecc!=";
        case CliqueConstraint::EeccEq: return "eecc=";
        case CliqueConstraint::EeccNeq: return "eecc!=";
    }
    return "?";
}

std::optional<CliqueConstraint> constraint_from_name(const std::string& s) {
    static const std::map<std::string, CliqueConstraint> table = {
        {"mo-eq", CliqueConstraint::MoEq},       {"mo-neq", CliqueConstraint::MoNeq},
        {"irr-eq", CliqueConstraint::IrrEq},     {"irr-neq", CliqueConstraint::IrrNeq},
        {"peri-eq", CliqueConstraint::PeriEq},   {"peri-neq", CliqueConstraint::PeriNeq},
        {"eperi-eq", CliqueConstraint::EPeriEq}, {"eperi-neq", CliqueConstraint::EPeriNeq},
        {"ecc-eq", CliqueConstraint::EccEq},     {"ecc-neq", CliqueConstraint::EccNeq},
        {"eecc-eq", CliqueConstraint::EeccEq},   {"eecc-neq", CliqueConstraint::EeccNeq},
    };
    auto it = table.find(s);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

namespace {

// Lexicographic k-subset scan over `candidates` (ascending ids); calls
// accept(subset) for each clique and returns the first accepted subset.
// Candidates are pre-filtered to degree >= k-1, which no k-clique member can
// violate, so lexicographic-first semantics over all vertices is preserved.
template <class Accept>
std::optional<std::vector<int>> first_clique(const Graph& g, int k, const Accept& accept) {
    if (k <= 0 || k > g.n) return std::nullopt;
    std::vector<int> candidates;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) >= k - 1) candidates.push_back(v);
    const int c = static_cast<int>(candidates.size());
    if (c < k) return std::nullopt;

    double combos = 1;
    for (int i = 0; i < k; ++i) combos *= static_cast<double>(c - i) / (i + 1);
    if (combos > 1e7) throw DomainError("constrained clique: subset count exceeds 10^7 cap");

    std::vector<int> idx(k);
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        bool clique = true;
        for (int i = 0; i < k && clique; ++i) {
            subset[i] = candidates[idx[i]];
            for (int j = 0; j < i; ++j)
                if (!g.has_edge(subset[j], subset[i])) {
                    clique = false;
                    break;
                }
        }
        if (clique && accept(subset)) return subset;
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == c - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return std::nullopt;
}

template <class T>
bool all_equal(const std::vector<T>& xs) {
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] == xs[0])) return false;
    return true;
}

template <class T>
bool all_distinct(std::vector<T> xs) {
    std::sort(xs.begin(), xs.end());
    return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
}

}  // namespace

std::optional<std::vector<int>> find_clique(const Graph& g, int k) {
    return first_clique(g, k, [](const std::vector<int>&) { return true; });
}

bool clique_exists(const Graph& g, int k) { return find_clique(g, k).has_value(); }

std::optional<std::vector<int>> constrained_clique(const Graph& g, int k, CliqueConstraint c) {
    DistanceMatrix dm = all_pairs(g);
    NCounts nc = build_ncounts(dm);

    // per-vertex / per-edge values computed once for the whole graph
    std::vector<std::int64_t> vertex_value;
    std::map<std::pair<int, int>, std::int64_t> edge_value;
    bool per_vertex = false, want_equal = false;
    switch (c) {
        case CliqueConstraint::PeriEq:
        case CliqueConstraint::PeriNeq: {
            per_vertex = true;
            want_equal = c == CliqueConstraint::PeriEq;
            vertex_value.resize(g.n);
            for (int v = 0; v < g.n; ++v) vertex_value[v] = peri_vertex(nc, v);
            break;
        }
        case CliqueConstraint::EccEq:
        case CliqueConstraint::EccNeq: {
            per_vertex = true;
            want_equal = c == CliqueConstraint::EccEq;
            vertex_value.resize(g.n);
            for (int v = 0; v < g.n; ++v) vertex_value[v] = dm.eccentricity(v);
            break;
        }
        case CliqueConstraint::MoEq:
        case CliqueConstraint::MoNeq: {
            want_equal = c == CliqueConstraint::MoEq;
            for (auto [u, v] : g.edges) edge_value[{u, v}] = mostar_edge(nc, u, v);
            break;
        }
        case CliqueConstraint::IrrEq:
        case CliqueConstraint::IrrNeq: {
            want_equal = c == CliqueConstraint::IrrEq;
            for (auto [u, v] : g.edges) edge_value[{u, v}] = irregularity_edge(g, u, v);
            break;
        }
        case CliqueConstraint::EPeriEq:
        case CliqueConstraint::EPeriNeq: {
            want_equal = c == CliqueConstraint::EPeriEq;
            BeatsBits bb = build_beats(nc);
            for (auto [u, v] : g.edges) edge_value[{u, v}] = eperi_edge(bb, u, v);
            break;
        }
        case CliqueConstraint::EeccEq:
        case CliqueConstraint::EeccNeq: {
            want_equal = c == CliqueConstraint::EeccEq;
            for (auto [u, v] : g.edges) edge_value[{u, v}] = eecc(dm, u, v);
            break;
        }
    }

    return first_clique(g, k, [&](const std::vector<int>& subset) {
        std::vector<std::int64_t> values;
        if (per_vertex) {
            for (int v : subset) values.push_back(vertex_value[v]);
        } else {
            for (std::size_t i = 0; i < subset.size(); ++i)
                for (std::size_t j = i + 1; j < subset.size(); ++j) {
                    auto key = std::minmax(subset[i], subset[j]);
                    values.push_back(edge_value.at({key.first, key.second}));
                }
        }
        return want_equal ? all_equal(values) : all_distinct(values);
    });
}

std::optional<std::vector<int>> constrained_clique(const VertexWeightedGraph& wg, int k,
                                                   CliqueConstraint c) {
    if (k < 4)
        throw DomainError(
            "weighted constrained clique requires k >= 4 (pendant bundles are implicit)");
    bool want_equal;
    bool use_mo;
    switch (c) {
        case CliqueConstraint::MoEq: want_equal = true; use_mo = true; break;
        case CliqueConstraint::MoNeq: want_equal = false; use_mo = true; break;
        case CliqueConstraint::IrrEq: want_equal = true; use_mo = false; break;
        case CliqueConstraint::IrrNeq: want_equal = false; use_mo = false; break;
        default:
            throw DomainError("weighted constrained clique supports Mo/irr constraints only");
    }
    const Graph& g = wg.core;
    std::map<std::pair<int, int>, BigInt> edge_value;
    if (use_mo) {
        for (auto [u, v] : g.edges) {
            BigInt d = n_closer_weighted(wg, u, v) - n_closer_weighted(wg, v, u);
            edge_value[{u, v}] = d < 0 ? -d : d;
        }
    } else {
        std::vector<BigInt> wdeg(g.n);
        for (int v = 0; v < g.n; ++v) wdeg[v] = weighted_degree(wg, v);
        for (auto [u, v] : g.edges) {
            BigInt d = wdeg[u] - wdeg[v];
            edge_value[{u, v}] = d < 0 ? -d : d;
        }
    }
    return first_clique(g, k, [&](const std::vector<int>& subset) {
        std::vector<BigInt> values;
        for (std::size_t i = 0; i < subset.size(); ++i)
            for (std::size_t j = i + 1; j < subset.size(); ++j) {
                auto key = std::minmax(subset[i], subset[j]);
                values.push_back(edge_value.at({key.first, key.second}));
            }
        return want_equal ? all_equal(values) : all_distinct(values);
    });
}

bool decide_ecc_neq(const Graph& g, int k) {
    if (k >= 3) return false;  // adjacent vertices differ by at most 1 in eccentricity
    if (k <= 1) return g.n >= k;
    if (!is_connected(g)) throw DomainError("ecc decider requires a connected graph");
    DistanceMatrix dm = all_pairs(g);
    for (auto [u, v] : g.edges)
        if (dm.eccentricity(u) != dm.eccentricity(v)) return true;
    return false;
}

bool decide_eecc_neq(const Graph& g, int k) {
    if (k >= 3) return false;
    if (k <= 1) return g.n >= k;
    return g.m() > 0;
}

const char* reduction_name(ReductionKind k) {
    switch (k) {
        case ReductionKind::H_MoEq: return "H/Mo=";
        case ReductionKind::H_IrrEq: return "H/irr=";
        case ReductionKind::Hp_PeriEq: return "Hp/peri=";
        case ReductionKind::Hp_EPeriEq: return "Hp/eperi=";
        case ReductionKind::X_EccEq: return "X/ecc=";
        case ReductionKind::X_EeccEq: return "X/eecc=";
        case ReductionKind::J_MoNeq: return "J/Mo!=";
        case ReductionKind::J_IrrNeq: return "J/irr!=";
    }
    return "?";
}

bool validate_reduction(const Graph& g, int k, ReductionKind kind) {
    bool lhs = clique_exists(g, k);
    bool rhs;
    switch (kind) {
        case ReductionKind::H_MoEq:
            rhs = constrained_clique(build_H(g).graph, k, CliqueConstraint::MoEq).has_value();
            break;
        case ReductionKind::H_IrrEq:
            rhs = constrained_clique(build_H(g).graph, k, CliqueConstraint::IrrEq).has_value();
            break;
        case ReductionKind::Hp_PeriEq:
            rhs = constrained_clique(build_H_pruned(g).graph, k, CliqueConstraint::PeriEq)
                      .has_value();
            break;
        case ReductionKind::Hp_EPeriEq:
            rhs = constrained_clique(build_H_pruned(g).graph, k, CliqueConstraint::EPeriEq)
                      .has_value();
            break;
        case ReductionKind::X_EccEq:
            rhs = constrained_clique(build_X(g).graph, k, CliqueConstraint::EccEq).has_value();
            break;
        case ReductionKind::X_EeccEq:
            rhs = constrained_clique(build_X(g).graph, k, CliqueConstraint::EeccEq).has_value();
            break;
        case ReductionKind::J_MoNeq:
            rhs = constrained_clique(build_J(g).wgraph, k + 1, CliqueConstraint::MoNeq)
                      .has_value();
            break;
        case ReductionKind::J_IrrNeq:
            rhs = constrained_clique(build_J(g).wgraph, k + 1, CliqueConstraint::IrrNeq)
                      .has_value();
            break;
        default:
            throw DomainError("unknown reduction kind");
    }
    return lhs == rhs;
}

}  // namespace mostar
