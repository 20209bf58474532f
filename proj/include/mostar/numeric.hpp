#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace mostar {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact half-integral value stored as twice the value. Mo(v) and Mo*(v) are
// sums of halves; keeping the doubled integer avoids any float drift in the
// equality checks the reduction gadgets depend on.
struct Half {
    std::int64_t twice = 0;

    bool integral() const { return (twice & 1) == 0; }
    double value() const { return static_cast<double>(twice) / 2.0; }
    Rational rational() const { return Rational(twice, 2); }
    std::string str() const {
        std::string s = std::to_string(twice / 2);
        if (twice % 2 != 0) {
            if (twice < 0 && twice / 2 == 0) s = "-" + s;
            s += ".5";
        }
        return s;
    }
    friend bool operator==(const Half& a, const Half& b) { return a.twice == b.twice; }
    friend auto operator<=>(const Half& a, const Half& b) { return a.twice <=> b.twice; }
};

// 12 significant digits, the CLI float format.
std::string format_sig12(double x);

}  // namespace mostar
