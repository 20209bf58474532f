#include "mostar/random_graphs.hpp"

#include <cmath>
#include <random>

namespace mostar {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// threshold so that draw < threshold has probability p at 2^-64 resolution
bool threshold_for(double p, std::uint64_t& out) {
    if (p <= 0) return false;       // never
    if (p >= 1) {
        out = 0;
        return true;                // always (caller treats out==0 with always flag)
    }
    long double scaled = static_cast<long double>(p) * 18446744073709551616.0L;
    out = static_cast<std::uint64_t>(scaled);
    return true;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    return splitmix64(splitmix64(seed) ^ (trial + 1));
}

Graph sample_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) throw DomainError("sample_gnp: n must be >= 0");
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("sample_gnp: p must be in [0,1]");
    std::mt19937_64 rng(splitmix64(seed));
    std::vector<std::pair<int, int>> edges;
    std::uint64_t threshold = 0;
    bool maybe = threshold_for(p, threshold);
    bool always = p >= 1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            std::uint64_t draw = rng();
            if (maybe && (always || draw < threshold)) edges.emplace_back(u, v);
        }
    return build_graph(n, edges);
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (long long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

Rational abs_diff_binomial_expectation(long long m) {
    if (m < 0) throw DomainError("binomial expectation: m must be >= 0");
    if (m == 0) return Rational(0);
    BigInt num = BigInt(m + 1) * binomial(2 * m, m + 1);
    BigInt den = BigInt(1) << (2 * m);
    return Rational(num, den);
}

Rational exact_expected_irr(int n) {
    if (n < 1 || n > 5) throw DomainError("exact_expected_irr enumerates n <= 5 only");
    int P = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    BigInt total = 0;
    for (std::uint32_t mask = 0; mask < (1u << P); ++mask) {
        int deg[5] = {0, 0, 0, 0, 0};
        for (int b = 0; b < P; ++b)
            if (mask >> b & 1) {
                ++deg[pairs[b].first];
                ++deg[pairs[b].second];
            }
        long long irr = 0;
        for (int b = 0; b < P; ++b)
            if (mask >> b & 1) irr += std::abs(deg[pairs[b].first] - deg[pairs[b].second]);
        total += irr;
    }
    return Rational(total, BigInt(1) << P);
}

Rational expected_irr_conditioned(long long n) {
    if (n < 2) return Rational(0);
    return Rational(binomial(n, 2)) / 2 * abs_diff_binomial_expectation(n - 2);
}

Rational expected_irr_binomial_approx(long long n) {
    if (n < 2) return Rational(0);
    return Rational(binomial(n, 2)) / 2 * abs_diff_binomial_expectation(n - 1);
}

std::uint64_t irr_of_degrees(const Graph& g) {
    std::uint64_t total = 0;
    for (auto [u, v] : g.edges)
        total += static_cast<std::uint64_t>(std::abs(g.degree(u) - g.degree(v)));
    return total;
}

RandomExperiment monte_carlo_irr(int n, int trials, std::uint64_t seed) {
    if (trials <= 0) throw DomainError("monte_carlo_irr: trials must be >= 1");
    RandomExperiment ex;
    ex.n = n;
    ex.trials = trials;
    ex.seed = seed;
    ex.irr_values.reserve(trials);
    // integer sums are exact, so aggregation is order-independent
    BigInt sum = 0, sumsq = 0;
    for (int t = 0; t < trials; ++t) {
        Graph g = sample_gnp(n, 0.5, trial_seed(seed, t));
        std::uint64_t irr = irr_of_degrees(g);
        ex.irr_values.push_back(irr);
        sum += irr;
        sumsq += BigInt(irr) * irr;
    }
    ex.mean = static_cast<double>(Rational(sum, trials));
    if (trials > 1) {
        Rational var = (Rational(sumsq) - Rational(sum * sum, trials)) / (trials - 1);
        ex.std_error = std::sqrt(static_cast<double>(var) / trials);
    }
    double target = std::pow(static_cast<double>(n), 2.5) / (4.0 * std::sqrt(M_PI));
    ex.ratio = ex.mean / target;
    return ex;
}

}  // namespace mostar
