#include "mostar/families.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mostar/measures.hpp"

namespace mostar {

namespace {

long long C2(long long x) { return x * (x - 1) / 2; }

void need(bool ok, const std::string& msg) {
    if (!ok) throw DomainError(msg);
}

Graph path_graph(long long n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return build_graph(static_cast<int>(n), es);
}

Graph spider_graph(const std::vector<long long>& legs) {
    int n = 1;
    for (long long l : legs) n += static_cast<int>(l);
    std::vector<std::pair<int, int>> es;
    int next = 1;
    for (long long l : legs) {
        int prev = 0;
        for (long long j = 0; j < l; ++j) {
            es.emplace_back(prev, next);
            prev = next++;
        }
    }
    return build_graph(n, es);
}

// vertices at factorial-tree depth i+1, i.e. m * prod_{j=1..i} (m-1-j)
std::vector<long long> factorial_tree_levels(long long m) {
    std::vector<long long> levels{1};
    long long width = m;
    for (long long depth = 1; depth <= m - 1; ++depth) {
        levels.push_back(width);
        width *= m - 1 - depth;  // children per vertex at this depth
    }
    return levels;
}

}  // namespace

std::string FamilySpec::name() const {
    std::ostringstream out;
    switch (tag) {
        case FamilyTag::Path: out << "path"; break;
        case FamilyTag::Cycle: out << "cycle"; break;
        case FamilyTag::Complete: out << "complete"; break;
        case FamilyTag::CompleteBipartite: out << "complete-bipartite"; break;
        case FamilyTag::Star: out << "star"; break;
        case FamilyTag::Spider: out << "spider"; break;
        case FamilyTag::BalancedSpider: out << "balanced-spider"; break;
        case FamilyTag::KThickSpider: out << "k-thick-spider"; break;
        case FamilyTag::FactorialTree: out << "factorial-tree"; break;
        case FamilyTag::FullMaryTree: out << "full-mary-tree"; break;
        case FamilyTag::CliqueStar: out << "clique-star"; break;
        case FamilyTag::CliqueSpider: out << "clique-spider"; break;
        case FamilyTag::UniversalJoin: out << "universal-join"; break;
        case FamilyTag::FiveLayer: out << "five-layer"; break;
        case FamilyTag::PeriMaxSpider: out << "peri-max-spider"; break;
        case FamilyTag::Broom: out << "broom"; break;
        case FamilyTag::TwoStarBridge: out << "two-star-bridge"; break;
        case FamilyTag::OverlapStar: out << "overlap-star"; break;
    }
    for (long long p : params) out << ' ' << p;
    for (const auto& part : parts) out << " [" << part.name() << ']';
    return out.str();
}

Graph generate(const FamilySpec& spec) {
    const auto& p = spec.params;
    switch (spec.tag) {
        case FamilyTag::Path: {
            need(p.size() == 1 && p[0] >= 1, "path: need n >= 1");
            return path_graph(p[0]);
        }
        case FamilyTag::Cycle: {
            need(p.size() == 1 && p[0] >= 3, "cycle: need n >= 3");
            int n = static_cast<int>(p[0]);
            std::vector<std::pair<int, int>> es;
            for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
            return build_graph(n, es);
        }
        case FamilyTag::Complete: {
            need(p.size() == 1 && p[0] >= 1, "complete: need n >= 1");
            int n = static_cast<int>(p[0]);
            std::vector<std::pair<int, int>> es;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
            return build_graph(n, es);
        }
        case FamilyTag::CompleteBipartite: {
            need(p.size() == 2 && p[0] >= 1 && p[1] >= 1, "complete-bipartite: need m, n >= 1");
            int m = static_cast<int>(p[0]), n = static_cast<int>(p[1]);
            std::vector<std::pair<int, int>> es;
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j) es.emplace_back(i, m + j);
            return build_graph(m + n, es);
        }
        case FamilyTag::Star: {
            need(p.size() == 1 && p[0] >= 2, "star: need order n >= 2");
            return spider_graph(std::vector<long long>(p[0] - 1, 1));
        }
        case FamilyTag::Spider: {
            need(p.size() >= 2, "spider: need at least 2 legs");
            for (long long l : p) need(l >= 1, "spider: leg lengths must be >= 1");
            return spider_graph(p);
        }
        case FamilyTag::BalancedSpider: {
            need(p.size() == 2 && p[0] >= 2 && p[1] >= 1, "balanced-spider: need a >= 2, b >= 1");
            return spider_graph(std::vector<long long>(p[0], p[1]));
        }
        case FamilyTag::KThickSpider: {
            need(p.size() == 3 && p[0] >= 2 && p[1] >= 1 && p[2] >= 1,
                 "k-thick-spider: need a >= 2, b >= 1, k >= 1");
            long long a = p[0], b = p[1], k = p[2];
            Graph base = spider_graph(std::vector<long long>(a, b));
            std::vector<std::pair<int, int>> es = base.edges;
            for (long long leg = 0; leg < a; ++leg) {
                int first = static_cast<int>(1 + leg * b);
                for (long long i = 0; i < b; ++i)
                    for (long long j = i + 2; j < b && j - i <= k; ++j)
                        es.emplace_back(first + static_cast<int>(i), first + static_cast<int>(j));
            }
            return build_graph(base.n, es);
        }
        case FamilyTag::FactorialTree: {
            need(p.size() == 1 && p[0] >= 2, "factorial-tree: need m >= 2");
            long long m = p[0];
            auto levels = factorial_tree_levels(m);
            long long total = 0;
            for (long long w : levels) total += w;
            std::vector<std::pair<int, int>> es;
            long long level_start = 0;
            for (std::size_t depth = 0; depth + 1 < levels.size(); ++depth) {
                long long kids = (depth == 0) ? m : m - 1 - static_cast<long long>(depth);
                long long child = level_start + levels[depth];
                for (long long v = 0; v < levels[depth]; ++v)
                    for (long long c = 0; c < kids; ++c)
                        es.emplace_back(static_cast<int>(level_start + v),
                                        static_cast<int>(child++));
                level_start += levels[depth];
            }
            return build_graph(static_cast<int>(total), es);
        }
        case FamilyTag::FullMaryTree: {
            need(p.size() == 2 && p[0] >= 2 && p[1] >= 1, "full-mary-tree: need m >= 2, d >= 1");
            long long m = p[0], d = p[1];
            long long total = 0, width = 1;
            for (long long i = 0; i <= d; ++i, width *= m) total += width;
            std::vector<std::pair<int, int>> es;
            for (long long v = 1; v < total; ++v)
                es.emplace_back(static_cast<int>((v - 1) / m), static_cast<int>(v));
            return build_graph(static_cast<int>(total), es);
        }
        case FamilyTag::CliqueStar: {
            need(p.size() == 2 && p[0] >= 2 && p[1] >= 2, "clique-star: need m >= 2, n >= 2");
            long long m = p[0], n = p[1];
            std::vector<std::pair<int, int>> es;
            for (long long grp = 0; grp < n; ++grp) {
                int base = static_cast<int>(1 + grp * m);
                for (long long i = 0; i < m; ++i) {
                    es.emplace_back(0, base + static_cast<int>(i));
                    for (long long j = i + 1; j < m; ++j)
                        es.emplace_back(base + static_cast<int>(i), base + static_cast<int>(j));
                }
            }
            return build_graph(static_cast<int>(1 + n * m), es);
        }
        case FamilyTag::CliqueSpider: {
            need(p.size() == 3 && p[2] >= 2 && p[0] > p[2] + 1 && p[1] >= 1,
                 "clique-spider: need m >= 2, a > m+1, b >= 1");
            long long a = p[0], b = p[1], m = p[2];
            // skeleton: legs shortened by one (the leaf is replaced by a clique)
            Graph base = spider_graph(std::vector<long long>(a, b - 1));
            std::vector<std::pair<int, int>> es = base.edges;
            int next = base.n;
            for (long long leg = 0; leg < a; ++leg) {
                int anchor = (b == 1) ? 0 : static_cast<int>(1 + leg * (b - 1) + (b - 2));
                int first = next;
                for (long long i = 0; i < m; ++i) {
                    es.emplace_back(anchor, first + static_cast<int>(i));
                    for (long long j = i + 1; j < m; ++j)
                        es.emplace_back(first + static_cast<int>(i), first + static_cast<int>(j));
                }
                next += static_cast<int>(m);
            }
            return build_graph(next, es);
        }
        case FamilyTag::UniversalJoin: {
            need(!spec.parts.empty(), "universal-join: need at least one part");
            std::vector<Graph> gs;
            for (const auto& part : spec.parts) {
                Graph g = generate(part);
                if (g.n > 0 && is_connected(g)) {
                    auto dm = all_pairs(g);
                    auto nc = build_ncounts(dm);
                    if (mostar_graph(g, nc) != 0)
                        throw DomainError("universal-join: part " + part.name() +
                                          " has nonzero Mostar index");
                } else if (g.m() > 0) {
                    // disconnected parts: every edge must still be balanced
                    auto dm = all_pairs(g);
                    auto nc = build_ncounts(dm);
                    if (mostar_graph(g, nc) != 0)
                        throw DomainError("universal-join: part " + part.name() +
                                          " has nonzero Mostar index");
                }
                gs.push_back(std::move(g));
            }
            int total = 1;
            for (const auto& g : gs) total += g.n;
            std::vector<std::pair<int, int>> es;
            int offset = 1;  // hub is vertex 0
            for (const auto& g : gs) {
                for (auto [u, v] : g.edges) es.emplace_back(offset + u, offset + v);
                for (int v = 0; v < g.n; ++v) es.emplace_back(0, offset + v);
                offset += g.n;
            }
            return build_graph(total, es);
        }
        case FamilyTag::FiveLayer: {
            need(p.size() == 1 && p[0] >= 1, "five-layer: need n >= 1");
            int n = static_cast<int>(p[0]);
            std::vector<std::pair<int, int>> es;
            for (int layer = 0; layer < 4; ++layer)
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        es.emplace_back(layer * n + i, (layer + 1) * n + j);
            return build_graph(5 * n, es);
        }
        case FamilyTag::PeriMaxSpider: {
            need(p.size() == 1 && p[0] >= 10, "peri-max-spider: defined for n >= 10");
            long long n = p[0];
            long long k = (n % 3 == 0) ? n / 3 - 1 : (n - n % 3) / 3;
            std::vector<long long> legs;
            if (n % 3 == 1) legs = {k - 1, k, k + 1};
            else if (n % 3 == 2) legs = {k - 1, k, k + 2};
            else legs = {k - 1, k + 1, k + 2};
            return spider_graph(legs);
        }
        case FamilyTag::Broom: {
            need(p.size() == 2 && p[0] >= 1 && p[1] >= 1, "broom: need a >= 1, b >= 1");
            std::vector<long long> legs(p[0], 1);
            legs.push_back(p[1]);
            // center 0, star leaves 1..a, then the long leg
            return spider_graph(legs);
        }
        case FamilyTag::TwoStarBridge: {
            need(p.size() == 2 && p[0] >= 1 && p[1] >= 1, "two-star-bridge: need m, n >= 1");
            int m = static_cast<int>(p[0]), n = static_cast<int>(p[1]);
            std::vector<std::pair<int, int>> es{{0, 1}};
            for (int i = 0; i < m - 1; ++i) es.emplace_back(0, 2 + i);
            for (int i = 0; i < n - 1; ++i) es.emplace_back(1, m + 1 + i);
            return build_graph(m + n, es);
        }
        case FamilyTag::OverlapStar: {
            need(p.size() == 2 && p[0] >= p[1] && p[1] >= 1 && p[0] >= 2,
                 "overlap-star: need m >= n >= 1, m >= 2");
            int m = static_cast<int>(p[0]), n = static_cast<int>(p[1]);
            std::vector<std::pair<int, int>> es{{0, 1}};
            for (int i = 0; i < m - 1; ++i) es.emplace_back(0, 2 + i);
            for (int i = 0; i < n - 1; ++i) es.emplace_back(1, 2 + i);
            return build_graph(m + 1, es);
        }
    }
    throw DomainError("unknown family tag");
}

const char* measure_name(Measure m) {
    switch (m) {
        case Measure::Mo: return "Mo";
        case Measure::MoTop: return "Mo_top";
        case Measure::MoStar: return "Mo_star";
        case Measure::Irr: return "irr";
        case Measure::Peri: return "peri";
        case Measure::Spr: return "spr";
        case Measure::EPeri: return "eperi";
        case Measure::ESpr: return "espr";
    }
    return "?";
}

std::optional<Measure> measure_from_name(const std::string& s) {
    static const std::map<std::string, Measure> table = {
        {"Mo", Measure::Mo},         {"mo", Measure::Mo},
        {"Mo_top", Measure::MoTop},  {"mo-top", Measure::MoTop},
        {"Mo_star", Measure::MoStar},{"mo-star", Measure::MoStar},
        {"irr", Measure::Irr},       {"peri", Measure::Peri},
        {"spr", Measure::Spr},       {"eperi", Measure::EPeri},
        {"espr", Measure::ESpr},
    };
    auto it = table.find(s);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

namespace {

std::optional<Rational> path_closed_form(long long n, Measure m) {
    switch (m) {
        case Measure::Mo:
            return Rational((n - 1) * (n - 1) / 2);
        case Measure::MoTop:
            return Rational(0);
        case Measure::MoStar:
            if (n <= 2) return Rational(0);
            if (n % 2 == 1)
                return closed_form({FamilyTag::BalancedSpider, {2, (n - 1) / 2}, {}},
                                   Measure::MoStar);
            return std::nullopt;
        case Measure::Irr:
            return Rational(n >= 3 ? 2 : 0);
        case Measure::Spr: {
            Rational base = Rational(n) * n * (n - 1) / 2;
            if (n % 2 == 0) return base - Rational(n / 2) * (n / 2 - 1);
            return base - Rational((n - 1) * (n - 1)) / 4;
        }
        case Measure::Peri:
            return Rational(n % 2 == 0 ? n * (n - 2) / 2 : (n - 1) * (n - 1) / 2);
        case Measure::EPeri:
            if (n <= 2) return Rational(0);
            return Rational(n % 2 == 0 ? (n - 2) * (n - 4) / 2 : (n - 3) * (n - 3) / 2);
        case Measure::ESpr:
            return std::nullopt;
    }
    return std::nullopt;
}

std::optional<Rational> spider_closed_form(long long a, long long b, Measure m) {
    long long n = a * b + 1;
    switch (m) {
        case Measure::Mo:
            return Rational(a * a * b * b - a * b * b);
        case Measure::Irr:
            return Rational(a * (a - 1));
        case Measure::MoTop:
            return Rational((a - 2) * (n - 1));
        case Measure::MoStar: {
            Rational v = Rational(n - 1) *
                         (3 * a * b * n - 5 * a * b * b - 3 * a * n + 3 * a * b + 2 * a +
                          2 * b * b - 9 * b + 6 * n - 5) /
                         6;
            return v;
        }
        case Measure::Spr: {
            Rational base = Rational(n) * n * (n - 1) / 2;
            if (b % 2 == 0) return base - Rational(a * b * b) * (2 * a * a - 5 * a + 4) / 4;
            return base - (Rational(a) * a * a * b * b / 2 - Rational(5) * a * a * b * b / 4 +
                           Rational(a) * a / 4 + Rational(a) * b * b - Rational(a) / 2);
        }
        case Measure::Peri:
            return Rational(C2(n) - b * C2(a));
        case Measure::EPeri:
            return Rational(n - 1 - a) + Rational(a * a) * (b - 1) * (b - 2) / 2;
        case Measure::ESpr:
            return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Rational> closed_form(const FamilySpec& spec, Measure m) {
    const auto& p = spec.params;
    switch (spec.tag) {
        case FamilyTag::Path:
            return path_closed_form(p[0], m);
        case FamilyTag::Cycle: {
            long long n = p[0];
            switch (m) {
                case Measure::Mo:
                case Measure::MoTop:
                case Measure::MoStar:
                case Measure::Irr:
                case Measure::Peri:
                case Measure::EPeri:
                    return Rational(0);
                case Measure::Spr: {
                    Rational base = Rational(n) * n * (n - 1) / 2;
                    if (n % 2 == 0) return base - Rational(n * (n - 2)) / 2;
                    return base - Rational(n * (n - 1)) / 2;
                }
                case Measure::ESpr:
                    return std::nullopt;
            }
            return std::nullopt;
        }
        case FamilyTag::Complete: {
            long long n = p[0];
            switch (m) {
                case Measure::Mo:
                case Measure::MoTop:
                case Measure::MoStar:
                case Measure::Irr:
                case Measure::Peri:
                case Measure::EPeri:
                    return Rational(0);
                case Measure::Spr:
                    return Rational(n * n - n);
                case Measure::ESpr:
                    return Rational(n * (n - 1) * (n - 2));
            }
            return std::nullopt;
        }
        case FamilyTag::CompleteBipartite: {
            long long lo = std::min(p[0], p[1]), hi = std::max(p[0], p[1]);
            switch (m) {
                case Measure::Mo:
                case Measure::Irr:
                case Measure::MoStar:
                    return Rational(lo * hi * (hi - lo));
                case Measure::MoTop:
                    if (lo >= 2) return Rational(0);
                    return closed_form({FamilyTag::Star, {hi + 1}, {}}, Measure::MoTop);
                case Measure::Peri:
                    return Rational(lo < hi ? lo * hi : 0);
                case Measure::EPeri:
                    return Rational(0);
                case Measure::Spr:
                    return Rational(lo * (lo * hi + lo - 1) + hi * (lo * hi + hi - 1));
                case Measure::ESpr:
                    return Rational(lo * hi) * (2 * lo * hi - 2);
            }
            return std::nullopt;
        }
        case FamilyTag::Star: {
            long long n = p[0];  // order
            switch (m) {
                case Measure::Mo:
                case Measure::Irr:
                case Measure::MoStar:
                    return Rational((n - 1) * (n - 2));
                case Measure::MoTop:
                    return Rational(n >= 3 ? (n - 1) * (n - 3) : 0);
                case Measure::Peri:
                    // the star formula needs at least 2 leaves; K_2 is a tie
                    return Rational(n >= 3 ? n - 1 : 0);
                case Measure::Spr:
                    return Rational(2 * (n - 1) * (n - 1));
                case Measure::EPeri:
                    return Rational(0);
                case Measure::ESpr:
                    return Rational(2 * (n - 1) * (n - 2));
            }
            return std::nullopt;
        }
        case FamilyTag::Spider: {
            if (m == Measure::MoTop) {
                long long k = static_cast<long long>(p.size());
                long long n = 1;
                for (long long l : p) n += l;
                return Rational((k - 2) * (n - 1));
            }
            return std::nullopt;
        }
        case FamilyTag::BalancedSpider:
            return spider_closed_form(p[0], p[1], m);
        case FamilyTag::FactorialTree: {
            long long mm = p[0];
            auto levels = factorial_tree_levels(mm);
            long long V = 0;
            for (long long w : levels) V += w;
            long long E = V - 1;
            if (m == Measure::Irr) return Rational(E);
            if (m == Measure::Mo) {
                // P(i) = prod_{j=1..i} (m-1-j)
                std::vector<long long> P{1};
                for (long long i = 1; i <= mm - 2; ++i) P.push_back(P.back() * (mm - 1 - i));
                long long tail = 0;
                for (long long k = 1; k <= mm - 1; ++k)
                    for (long long i = k - 1; i <= mm - 2; ++i) tail += P[i];
                return Rational(E) * V - Rational(2 * mm) * tail;
            }
            return std::nullopt;
        }
        case FamilyTag::FullMaryTree: {
            long long mm = p[0], d = p[1];
            if (d == 1) {
                if (m == Measure::Mo || m == Measure::Irr) return Rational(mm * (mm - 1));
                return std::nullopt;
            }
            BigInt V = 0, width = 1;
            for (long long i = 0; i <= d; ++i, width *= mm) V += width;
            // after the loop width = m^{d+1}
            if (m == Measure::Irr) return Rational(BigInt(mm) + width);
            if (m == Measure::Mo) {
                Rational Vr(V);
                Rational inv(1, mm - 1);
                return Vr * Vr - Vr - Rational(2 * d) * (Vr + inv) + 2 * inv * (Vr - 1);
            }
            return std::nullopt;
        }
        case FamilyTag::PeriMaxSpider:
            if (m == Measure::Peri) return Rational(C2(p[0]));
            return std::nullopt;
        case FamilyTag::Broom: {
            if (m == Measure::MoTop) {
                long long k = p[0] + 1, n = p[0] + p[1] + 1;
                return Rational((k - 2) * (n - 1));
            }
            return std::nullopt;
        }
        default:
            return std::nullopt;
    }
}

Rational path_spr_vertex(long long n, long long i) {
    Rational ii(i), nn(n);
    Rational quad = Rational(3, 2) * ii * ii - Rational(3, 2) * (1 + nn) * ii;
    if (n % 2 == 0) return quad + 1 + Rational(3) * nn * nn / 4;
    if (i % 2 == 0) return quad + 1 + (Rational(3) * nn * nn + 1) / 4;
    return quad + Rational(3, 4) + Rational(3) * nn * nn / 4;
}

long long path_peri_vertex(long long n, long long i) {
    if (n % 2 == 0) {
        long long c1 = n / 2, c2 = n / 2 + 1;
        long long d = std::min(std::llabs(i - c1), std::llabs(i - c2));
        return 2 * d;
    }
    long long c = (n + 1) / 2;
    long long d = std::llabs(i - c);
    return d == 0 ? 0 : 2 * d - 1;
}

long long spider_peri_vertex(long long a, long long /*b*/, long long j) {
    return j == 0 ? 0 : 1 + a * (j - 1);
}

long long path_eperi_edge(long long n, long long i) {
    if (n % 2 == 0) return 2 * i;
    return i == 0 ? 0 : 2 * i - 1;
}

long long spider_eperi_edge(long long a, long long x) { return 1 + a * x; }

long long kmn_spr_left(long long m, long long n) { return m * n + m - 1; }
long long kmn_spr_right(long long m, long long n) { return m * n + n - 1; }
long long kmn_espr_edge(long long m, long long n) { return 2 * m * n - 2; }

Half star_mo_center(long long order) { return Half{(order - 1) * (order - 2)}; }
Half star_mo_leaf(long long order) { return Half{order - 2}; }

std::vector<long long> broom_min_mostar_edge(long long a, long long b) {
    if (!(b > a && a >= 1)) throw DomainError("broom min-Mostar position requires b > a >= 1");
    long long n = a + b + 1;
    if (n % 2 == 0) return {(b - a - 1) / 2};
    return {(b - a) / 2 - 1, (b - a) / 2};
}

std::optional<FamilySpec> parse_family(const std::string& tag,
                                       const std::vector<std::string>& params) {
    static const std::map<std::string, FamilyTag> tags = {
        {"path", FamilyTag::Path},
        {"cycle", FamilyTag::Cycle},
        {"complete", FamilyTag::Complete},
        {"complete-bipartite", FamilyTag::CompleteBipartite},
        {"star", FamilyTag::Star},
        {"spider", FamilyTag::Spider},
        {"balanced-spider", FamilyTag::BalancedSpider},
        {"k-thick-spider", FamilyTag::KThickSpider},
        {"factorial-tree", FamilyTag::FactorialTree},
        {"full-mary-tree", FamilyTag::FullMaryTree},
        {"clique-star", FamilyTag::CliqueStar},
        {"clique-spider", FamilyTag::CliqueSpider},
        {"universal-join", FamilyTag::UniversalJoin},
        {"five-layer", FamilyTag::FiveLayer},
        {"peri-max-spider", FamilyTag::PeriMaxSpider},
        {"broom", FamilyTag::Broom},
        {"two-star-bridge", FamilyTag::TwoStarBridge},
        {"overlap-star", FamilyTag::OverlapStar},
    };
    auto it = tags.find(tag);
    if (it == tags.end()) return std::nullopt;
    FamilySpec spec{it->second, {}, {}};
    for (const auto& s : params) {
        if (spec.tag == FamilyTag::UniversalJoin) {
            // parts are colon-separated sub-specs, e.g. "complete:4"
            std::stringstream ss(s);
            std::string part_tag;
            if (!std::getline(ss, part_tag, ':')) return std::nullopt;
            std::vector<std::string> part_params;
            std::string tok;
            while (std::getline(ss, tok, ':')) part_params.push_back(tok);
            auto part = parse_family(part_tag, part_params);
            if (!part) return std::nullopt;
            spec.parts.push_back(*part);
        } else {
            try {
                spec.params.push_back(std::stoll(s));
            } catch (...) {
                return std::nullopt;
            }
        }
    }
    return spec;
}

std::vector<std::string> family_tags() {
    return {"path",           "cycle",          "complete",   "complete-bipartite",
            "star",           "spider",         "balanced-spider", "k-thick-spider",
            "factorial-tree", "full-mary-tree", "clique-star", "clique-spider",
            "universal-join", "five-layer",     "peri-max-spider", "broom",
            "two-star-bridge", "overlap-star"};
}

}  // namespace mostar
