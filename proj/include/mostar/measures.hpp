#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mostar/graph.hpp"
#include "mostar/ncounts.hpp"
#include "mostar/numeric.hpp"

namespace mostar {

// --- Mostar family ---------------------------------------------------------

std::int64_t mostar_edge(const NCounts& nc, int u, int v);
std::int64_t mostar_graph(const Graph& g, const NCounts& nc);
Half mostar_vertex(const Graph& g, const NCounts& nc, int v);

// Sum over edges of |l(u,v) - l(v,u)| where l counts pendent vertices only.
std::int64_t terminal_mostar(const Graph& g, const DistanceMatrix& dm);

std::int64_t total_mostar(const NCounts& nc);
Half total_mostar_vertex(const NCounts& nc, int v);

// --- degree-based ----------------------------------------------------------

std::int64_t irregularity_edge(const Graph& g, int u, int v);
std::int64_t irregularity_graph(const Graph& g);

// --- peripherality counts --------------------------------------------------

std::int64_t peri_vertex(const NCounts& nc, int v);
std::int64_t peri_graph(const NCounts& nc);
std::int64_t spr_vertex(const NCounts& nc, int v);
std::int64_t spr_graph(const NCounts& nc);
std::int64_t eperi_edge(const BeatsBits& b, int u, int v);
std::int64_t eperi_graph(const Graph& g, const BeatsBits& b);
std::int64_t espr_edge(const NCounts& nc, int u, int v);
std::int64_t espr_graph(const Graph& g, const NCounts& nc);

// --- edge degree / eccentricity --------------------------------------------

int edeg(const Graph& g, int u, int v);
std::int32_t eecc(const DistanceMatrix& dm, int u, int v);

// --- classical centralities --------------------------------------------------

std::vector<int> eccentricities(const DistanceMatrix& dm);
std::vector<std::int64_t> distance_sums(const DistanceMatrix& dm);  // cc(v) = 1 / sum

// Exact betweenness over unordered pairs {u,w} with u,v,w distinct; several
// shortest paths accumulate as exact rationals so rank ties are exact.
std::vector<Rational> betweenness_exact(const Graph& g);

struct EigenOptions {
    double tol = 1e-12;
    int max_iters = 100000;
};
// Dominant adjacency eigenvector, non-negative, unit Euclidean norm.
// Power iteration on A+I (primitive for connected graphs) from the all-ones
// start; throws DomainError on disconnected input or non-convergence.
std::vector<double> eigenvector_centrality(const Graph& g, const EigenOptions& opt = {});
double eigenvalue_estimate(const Graph& g, const std::vector<double>& x);

// --- one-shot report ---------------------------------------------------------

struct MeasureReport {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    std::vector<int> deg, ecc;
    std::vector<std::int64_t> dist_sum;
    std::vector<Rational> bc;
    std::vector<double> ec;
    std::vector<Half> mo_v, mo_star_v;
    std::vector<std::int64_t> peri_v, spr_v;

    std::vector<std::int64_t> mo_e, irr_e;
    std::vector<int> edeg_e;
    std::vector<std::int32_t> eecc_e;
    std::vector<std::int64_t> eperi_e, espr_e;

    std::int64_t mo = 0, mo_top = 0, mo_star = 0, irr = 0;
    std::int64_t peri = 0, spr = 0, eperi = 0, espr = 0;

    double cc(int v) const {
        return dist_sum[v] > 0 ? 1.0 / static_cast<double>(dist_sum[v]) : 0.0;
    }
};

MeasureReport measure_report(const Graph& g, int threads = 1);

void report_to_json(std::ostream& out, const MeasureReport& r);
void report_to_csv(std::ostream& out, const MeasureReport& r);

}  // namespace mostar
