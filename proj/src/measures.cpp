#include "mostar/measures.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <deque>
#include <ostream>

#include "mostar/kernels.hpp"

namespace mostar {

namespace {

void require_connected(const DistanceMatrix& dm, const char* what) {
    if (!dm.connected()) throw DomainError(std::string(what) + " requires a connected graph");
}

}  // namespace

std::string format_sig12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::int64_t mostar_edge(const NCounts& nc, int u, int v) {
    return std::llabs(static_cast<long long>(nc.at(u, v)) - nc.at(v, u));
}

std::int64_t mostar_graph(const Graph& g, const NCounts& nc) {
    std::int64_t total = 0;
    for (auto [u, v] : g.edges) total += mostar_edge(nc, u, v);
    return total;
}

Half mostar_vertex(const Graph& g, const NCounts& nc, int v) {
    std::int64_t twice = 0;
    for (int u : g.adj[v]) twice += mostar_edge(nc, u, v);
    return Half{twice};
}

std::int64_t terminal_mostar(const Graph& g, const DistanceMatrix& dm) {
    require_connected(dm, "terminal Mostar");
    std::vector<std::uint8_t> pendant(g.n, 0);
    for (int v = 0; v < g.n; ++v) pendant[v] = g.degree(v) == 1;
    std::int64_t total = 0;
    for (auto [u, v] : g.edges) {
        auto pc = kernels::pair_counts_masked(dm.row(u), dm.row(v), pendant.data(), g.n);
        total += std::llabs(pc.less - pc.greater);
    }
    return total;
}

std::int64_t total_mostar(const NCounts& nc) {
    std::int64_t total = 0;
    for (int u = 0; u < nc.n; ++u)
        for (int v = u + 1; v < nc.n; ++v)
            total += std::llabs(static_cast<long long>(nc.at(u, v)) - nc.at(v, u));
    return total;
}

Half total_mostar_vertex(const NCounts& nc, int v) {
    std::int64_t twice = 0;
    for (int u = 0; u < nc.n; ++u)
        if (u != v) twice += std::llabs(static_cast<long long>(nc.at(u, v)) - nc.at(v, u));
    return Half{twice};
}

std::int64_t irregularity_edge(const Graph& g, int u, int v) {
    return std::llabs(g.degree(u) - g.degree(v));
}

std::int64_t irregularity_graph(const Graph& g) {
    std::int64_t total = 0;
    for (auto [u, v] : g.edges) total += irregularity_edge(g, u, v);
    return total;
}

std::int64_t peri_vertex(const NCounts& nc, int v) {
    std::int64_t count = 0;
    for (int u = 0; u < nc.n; ++u)
        if (u != v && nc.at(u, v) > nc.at(v, u)) ++count;
    return count;
}

std::int64_t peri_graph(const NCounts& nc) {
    std::int64_t count = 0;
    for (int u = 0; u < nc.n; ++u)
        for (int v = u + 1; v < nc.n; ++v)
            if (nc.at(u, v) != nc.at(v, u)) ++count;
    return count;
}

std::int64_t spr_vertex(const NCounts& nc, int v) {
    std::int64_t total = 0;
    for (int u = 0; u < nc.n; ++u)
        if (u != v) total += nc.at(u, v);
    return total;
}

std::int64_t spr_graph(const NCounts& nc) {
    std::int64_t total = 0;
    for (int v = 0; v < nc.n; ++v) total += spr_vertex(nc, v);
    return total;
}

std::int64_t eperi_edge(const BeatsBits& b, int u, int v) {
    const std::uint64_t* cu = b.col(u);
    const std::uint64_t* cv = b.col(v);
    std::int64_t count = 0;
    for (int w = 0; w < b.words; ++w) count += std::popcount(cu[w] & cv[w]);
    // endpoints never beat themselves, so no correction for u or v is needed
    return count;
}

std::int64_t eperi_graph(const Graph& g, const BeatsBits& b) {
    std::int64_t total = 0;
    for (auto [u, v] : g.edges) total += eperi_edge(b, u, v);
    return total;
}

std::int64_t espr_edge(const NCounts& nc, int u, int v) {
    return (spr_vertex(nc, u) - nc.at(v, u)) + (spr_vertex(nc, v) - nc.at(u, v));
}

std::int64_t espr_graph(const Graph& g, const NCounts& nc) {
    std::vector<std::int64_t> spr(nc.n);
    for (int v = 0; v < nc.n; ++v) spr[v] = spr_vertex(nc, v);
    std::int64_t total = 0;
    for (auto [u, v] : g.edges) total += (spr[u] - nc.at(v, u)) + (spr[v] - nc.at(u, v));
    return total;
}

int edeg(const Graph& g, int u, int v) {
    const auto& a = g.adj[u];
    const auto& b = g.adj[v];
    std::size_t i = 0, j = 0;
    int count = 0;
    auto take = [&](int x) {
        if (x != u && x != v) ++count;
    };
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) take(a[i++]);
        else if (a[i] > b[j]) take(b[j++]);
        else {
            take(a[i]);
            ++i, ++j;
        }
    }
    while (i < a.size()) take(a[i++]);
    while (j < b.size()) take(b[j++]);
    return count;
}

std::int32_t eecc(const DistanceMatrix& dm, int u, int v) {
    require_connected(dm, "edge eccentricity");
    const std::int32_t* ru = dm.row(u);
    const std::int32_t* rv = dm.row(v);
    std::int32_t best = 0;
    for (int w = 0; w < dm.n; ++w) best = std::max(best, std::min(ru[w], rv[w]));
    return best;
}

std::vector<int> eccentricities(const DistanceMatrix& dm) {
    std::vector<int> out(dm.n);
    for (int v = 0; v < dm.n; ++v) out[v] = dm.eccentricity(v);
    return out;
}

std::vector<std::int64_t> distance_sums(const DistanceMatrix& dm) {
    require_connected(dm, "closeness");
    std::vector<std::int64_t> out(dm.n, 0);
    for (int v = 0; v < dm.n; ++v) {
        const std::int32_t* r = dm.row(v);
        std::int64_t s = 0;
        for (int x = 0; x < dm.n; ++x) s += r[x];
        out[v] = s;
    }
    return out;
}

std::vector<Rational> betweenness_exact(const Graph& g) {
    // Brandes with exact path counts and rational dependency accumulation;
    // ordered-pair totals halved at the end.
    std::vector<Rational> bc(g.n, Rational(0));
    std::vector<BigInt> sigma(g.n);
    std::vector<std::int32_t> dist(g.n);
    std::vector<std::vector<int>> preds(g.n);
    std::vector<int> order;
    order.reserve(g.n);
    std::vector<Rational> delta(g.n);
    for (int s = 0; s < g.n; ++s) {
        std::fill(sigma.begin(), sigma.end(), BigInt(0));
        std::fill(dist.begin(), dist.end(), kUnreachable);
        for (auto& p : preds) p.clear();
        order.clear();
        sigma[s] = 1;
        dist[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            order.push_back(u);
            for (int v : g.adj[u]) {
                if (dist[v] == kUnreachable) {
                    dist[v] = dist[u] + 1;
                    q.push_back(v);
                }
                if (dist[v] == dist[u] + 1) {
                    sigma[v] += sigma[u];
                    preds[v].push_back(u);
                }
            }
        }
        std::fill(delta.begin(), delta.end(), Rational(0));
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int w = *it;
            for (int u : preds[w])
                delta[u] += Rational(sigma[u], sigma[w]) * (Rational(1) + delta[w]);
            if (w != s) bc[w] += delta[w];
        }
    }
    for (auto& b : bc) b /= 2;
    return bc;
}

std::vector<double> eigenvector_centrality(const Graph& g, const EigenOptions& opt) {
    if (g.n == 0) return {};
    if (!is_connected(g)) throw DomainError("eigenvector centrality requires a connected graph");
    std::vector<double> x(g.n, 1.0 / std::sqrt(static_cast<double>(g.n)));
    std::vector<double> y(g.n);
    for (int it = 0; it < opt.max_iters; ++it) {
        for (int u = 0; u < g.n; ++u) {
            double acc = x[u];  // A+I keeps the iteration primitive on bipartite graphs
            for (int v : g.adj[u]) acc += x[v];
            y[u] = acc;
        }
        double norm = 0;
        for (double t : y) norm += t * t;
        norm = std::sqrt(norm);
        double maxdiff = 0;
        for (int u = 0; u < g.n; ++u) {
            y[u] /= norm;
            maxdiff = std::max(maxdiff, std::fabs(y[u] - x[u]));
        }
        x.swap(y);
        if (maxdiff < opt.tol) return x;
    }
    throw DomainError("eigenvector centrality did not converge within iteration cap");
}

double eigenvalue_estimate(const Graph& g, const std::vector<double>& x) {
    // Rayleigh quotient x^T A x / x^T x with respect to the adjacency matrix
    double num = 0, den = 0;
    for (int u = 0; u < g.n; ++u) {
        double acc = 0;
        for (int v : g.adj[u]) acc += x[v];
        num += x[u] * acc;
        den += x[u] * x[u];
    }
    return num / den;
}

MeasureReport measure_report(const Graph& g, int threads) {
    DistanceMatrix dm = all_pairs(g, threads);
    require_connected(dm, "measure report");
    NCounts nc = build_ncounts(dm, threads);
    BeatsBits bb = build_beats(nc);

    MeasureReport r;
    r.n = g.n;
    r.edges = g.edges;

    r.deg.resize(g.n);
    for (int v = 0; v < g.n; ++v) r.deg[v] = g.degree(v);
    r.ecc = eccentricities(dm);
    r.dist_sum = distance_sums(dm);
    r.bc = betweenness_exact(g);
    r.ec = eigenvector_centrality(g);
    r.mo_v.resize(g.n);
    r.mo_star_v.resize(g.n);
    r.peri_v.resize(g.n);
    r.spr_v.resize(g.n);
    for (int v = 0; v < g.n; ++v) {
        r.mo_v[v] = mostar_vertex(g, nc, v);
        r.mo_star_v[v] = total_mostar_vertex(nc, v);
        r.peri_v[v] = peri_vertex(nc, v);
        r.spr_v[v] = spr_vertex(nc, v);
    }

    r.mo_e.reserve(g.m());
    r.irr_e.reserve(g.m());
    r.edeg_e.reserve(g.m());
    r.eecc_e.reserve(g.m());
    r.eperi_e.reserve(g.m());
    r.espr_e.reserve(g.m());
    for (auto [u, v] : g.edges) {
        r.mo_e.push_back(mostar_edge(nc, u, v));
        r.irr_e.push_back(irregularity_edge(g, u, v));
        r.edeg_e.push_back(edeg(g, u, v));
        r.eecc_e.push_back(eecc(dm, u, v));
        r.eperi_e.push_back(eperi_edge(bb, u, v));
        r.espr_e.push_back(espr_edge(nc, u, v));
    }

    r.mo = mostar_graph(g, nc);
    r.mo_top = terminal_mostar(g, dm);
    r.mo_star = total_mostar(nc);
    r.irr = irregularity_graph(g);
    r.peri = peri_graph(nc);
    r.spr = spr_graph(nc);
    r.eperi = eperi_graph(g, bb);
    r.espr = espr_graph(g, nc);
    return r;
}

namespace {

std::string edge_key(int u, int v) { return std::to_string(u) + "-" + std::to_string(v); }

}  // namespace

void report_to_json(std::ostream& out, const MeasureReport& r) {
    // hand-rolled so Mo(v)/Mo*(v) stay exact decimals and key order is fixed
    out << "{\n  \"n\": " << r.n << ",\n  \"m\": " << r.edges.size() << ",\n";
    out << "  \"graph\": {\"Mo\": " << r.mo << ", \"Mo_top\": " << r.mo_top
        << ", \"Mo_star\": " << r.mo_star << ", \"irr\": " << r.irr << ", \"peri\": " << r.peri
        << ", \"spr\": " << r.spr << ", \"eperi\": " << r.eperi << ", \"espr\": " << r.espr
        << "},\n";
    out << "  \"vertices\": {";
    for (int v = 0; v < r.n; ++v) {
        out << (v ? ", " : "") << '"' << v << "\": {\"deg\": " << r.deg[v]
            << ", \"ecc\": " << r.ecc[v] << ", \"cc\": " << format_sig12(r.cc(v))
            << ", \"bc\": " << format_sig12(static_cast<double>(r.bc[v]))
            << ", \"ec\": " << format_sig12(r.ec[v]) << ", \"Mo_v\": " << r.mo_v[v].str()
            << ", \"Mo_star_v\": " << r.mo_star_v[v].str() << ", \"peri\": " << r.peri_v[v]
            << ", \"spr\": " << r.spr_v[v] << '}';
    }
    out << "},\n  \"edges\": {";
    for (std::size_t i = 0; i < r.edges.size(); ++i) {
        auto [u, v] = r.edges[i];
        out << (i ? ", " : "") << '"' << edge_key(u, v) << "\": {\"Mo\": " << r.mo_e[i]
            << ", \"irr\": " << r.irr_e[i] << ", \"edeg\": " << r.edeg_e[i]
            << ", \"eecc\": " << r.eecc_e[i] << ", \"eperi\": " << r.eperi_e[i]
            << ", \"espr\": " << r.espr_e[i] << '}';
    }
    out << "}\n}\n";
}

void report_to_csv(std::ostream& out, const MeasureReport& r) {
    out << "type,id,deg,ecc,cc,bc,ec,Mo_v,Mo_star_v,peri,spr\n";
    for (int v = 0; v < r.n; ++v) {
        out << "vertex," << v << ',' << r.deg[v] << ',' << r.ecc[v] << ','
            << format_sig12(r.cc(v)) << ',' << format_sig12(static_cast<double>(r.bc[v])) << ','
            << format_sig12(r.ec[v]) << ',' << r.mo_v[v].str() << ',' << r.mo_star_v[v].str()
            << ',' << r.peri_v[v] << ',' << r.spr_v[v] << '\n';
    }
    out << "type,u,v,Mo,irr,edeg,eecc,eperi,espr\n";
    for (std::size_t i = 0; i < r.edges.size(); ++i) {
        out << "edge," << r.edges[i].first << ',' << r.edges[i].second << ',' << r.mo_e[i] << ','
            << r.irr_e[i] << ',' << r.edeg_e[i] << ',' << r.eecc_e[i] << ',' << r.eperi_e[i]
            << ',' << r.espr_e[i] << '\n';
    }
    out << "type,Mo,Mo_top,Mo_star,irr,peri,spr,eperi,espr\n";
    out << "graph," << r.mo << ',' << r.mo_top << ',' << r.mo_star << ',' << r.irr << ','
        << r.peri << ',' << r.spr << ',' << r.eperi << ',' << r.espr << '\n';
}

}  // namespace mostar
