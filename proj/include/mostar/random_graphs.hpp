#pragma once

#include <cstdint>
#include <vector>

#include "mostar/graph.hpp"
#include "mostar/numeric.hpp"

namespace mostar {

// G(n,p): each of the C(n,2) edges present independently with probability p.
// Driven by mt19937_64; edge decisions use raw 64-bit draws against a fixed
// threshold so results are bit-identical across platforms.
Graph sample_gnp(int n, double p, std::uint64_t seed);

// Derived per-trial stream seed (one independent stream per trial index).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

// E|X - Y| for independent X, Y ~ Bin(m, 1/2): (m+1) C(2m, m+1) / 4^m.
Rational abs_diff_binomial_expectation(long long m);

BigInt binomial(long long n, long long k);

// Exact E[irr(G_{n,1/2})] by enumerating all 2^C(n,2) labeled graphs; n <= 5.
Rational exact_expected_irr(int n);

// Closed forms for E[irr(G_{n,1/2})]: the edge-conditioned form
// C(n,2)/2 * E|X'-Y'| with X',Y' ~ Bin(n-2, 1/2) (exact for every n), and
// the unconditioned approximation with Bin(n-1, 1/2) used in the source
// derivation. Both are reported so the small-n gap is visible.
Rational expected_irr_conditioned(long long n);
Rational expected_irr_binomial_approx(long long n);

struct RandomExperiment {
    int n = 0;
    double p = 0.5;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> irr_values;
    double mean = 0;
    double std_error = 0;
    double ratio = 0;  // mean / (n^{5/2} / (4 sqrt(pi)))
};

RandomExperiment monte_carlo_irr(int n, int trials, std::uint64_t seed);

std::uint64_t irr_of_degrees(const Graph& g);

}  // namespace mostar
