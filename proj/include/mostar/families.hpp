#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mostar/graph.hpp"
#include "mostar/numeric.hpp"

namespace mostar {

// Parametric graph families with exact theorem values attached.
//
// Vertex numbering conventions (fixed so per-vertex closed forms index
// deterministically):
//   Path / Cycle      path or cyclic order 0..n-1
//   Star              center 0, leaves 1..n-1
//   Spider family     center 0, legs laid out one after another, each leg
//                     numbered outward from the center
//   CompleteBipartite left part 0..m-1, right part m..m+n-1
//   FullMaryTree      breadth-first order, root 0
//   FactorialTree     breadth-first order, root 0
//   CliqueStar/CliqueSpider  spider skeleton first, then the m-cliques
//   Broom             center 0, star leaves 1..a, leg a+1..a+b outward
//   TwoStarBridge     centers 0 (degree m) and 1 (degree n)
//   OverlapStar       center 0, extra vertex 1, leaves 2..m
//   FiveLayer         layer i occupies [i*n, (i+1)*n)
enum class FamilyTag {
    Path,            // n
    Cycle,           // n >= 3
    Complete,        // n >= 1
    CompleteBipartite,  // m, n >= 1
    Star,            // n >= 2 (order n, i.e. K_{1,n-1})
    Spider,          // legs list, k >= 2 legs of given lengths
    BalancedSpider,  // a >= 2 legs, length b >= 1
    KThickSpider,    // a, b, k: S_{a,b} + same-leg edges at distance <= k
    FactorialTree,   // m >= 2
    FullMaryTree,    // m >= 2, d >= 1
    CliqueStar,      // m >= 2, n >= 2: star with leaves blown up to K_m
    CliqueSpider,    // a, b, m: S_{a,b} with leaves blown up to K_m, a > m+1
    UniversalJoin,   // parts (each must have Mostar index 0)
    FiveLayer,       // n >= 1: five layers of n, consecutive layers complete
    PeriMaxSpider,   // n >= 10: three-leg spider with peri = C(n,2)
    Broom,           // a >= 1 star leaves + leg of length b >= 1
    TwoStarBridge,   // m, n >= 1: star centers joined by an edge
    OverlapStar,     // m >= n >= 1: shared-leaf construction
};

struct FamilySpec {
    FamilyTag tag;
    std::vector<long long> params;
    std::vector<FamilySpec> parts;  // UniversalJoin only

    std::string name() const;
};

Graph generate(const FamilySpec& spec);

enum class Measure { Mo, MoTop, MoStar, Irr, Peri, Spr, EPeri, ESpr };

const char* measure_name(Measure m);
std::optional<Measure> measure_from_name(const std::string& s);

// Exact theorem value for (family, measure), or nullopt when no theorem
// covers the pair. Never guesses.
std::optional<Rational> closed_form(const FamilySpec& spec, Measure m);

// Per-vertex / per-edge closed forms (1-based i for paths, matching the
// source theorems; spider positions are distances from the center).
Rational path_spr_vertex(long long n, long long i);
long long path_peri_vertex(long long n, long long i);
long long spider_peri_vertex(long long a, long long b, long long j);
long long path_eperi_edge(long long n, long long i);      // i = min distance of endpoints to center(s)
long long spider_eperi_edge(long long a, long long x);    // endpoints at distance x+1, x+2
long long kmn_spr_left(long long m, long long n);
long long kmn_spr_right(long long m, long long n);
long long kmn_espr_edge(long long m, long long n);
Half star_mo_center(long long order);  // Mo(c) = Mo*(c) of K_{1,order-1}
Half star_mo_leaf(long long order);

// Position(s) i of the minimum-Mostar leg edge {v_i, v_{i+1}} in Broom(a, b),
// counting from the center v_0; requires b > a >= 1.
std::vector<long long> broom_min_mostar_edge(long long a, long long b);

// CLI helpers: kebab-case tag <-> FamilySpec.
std::optional<FamilySpec> parse_family(const std::string& tag,
                                       const std::vector<std::string>& params);
std::vector<std::string> family_tags();

}  // namespace mostar
