#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace cofix {

/// Exact rational number. All finite-space metrics, contraction constants and
/// decay checks run on these so that inequalities are decided with zero
/// tolerance.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t slash = s.find('/');
    auto check_int = [&](std::size_t lo, std::size_t hi) {
        if (lo >= hi) throw std::invalid_argument("malformed rational literal: " + s);
        std::size_t i = lo;
        if (s[i] == '-' || s[i] == '+') ++i;
        if (i >= hi) throw std::invalid_argument("malformed rational literal: " + s);
        for (; i < hi; ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("malformed rational literal: " + s);
    };
    if (slash == std::string::npos) {
        check_int(0, s.size());
        return Rat(BigInt(s));
    }
    check_int(0, slash);
    check_int(slash + 1, s.size());
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rat(num, den);
}

/// Canonical form: reduced, "p" when the denominator is 1, else "p/q".
inline std::string rat_str(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

/// r^n by exact integer exponentiation, n >= 0.
inline Rat rat_pow(const Rat& r, unsigned n) {
    return Rat(pow(numerator(r), n), pow(denominator(r), n));
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

/// a <= b allowing b to be bumped up by `ulps` representable steps.
inline bool leq_ulps(double a, double b, int ulps) {
    for (int i = 0; i < ulps; ++i) b = std::nextafter(b, std::numeric_limits<double>::infinity());
    return a <= b;
}

}  // namespace cofix
