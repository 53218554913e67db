#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace surcsp {

// Exact rational arithmetic for expectations and ratio bounds. All
// quantities here are tiny (numerators bounded by tuple counts times
// |B|^k_max), so int64 components never get close to overflow.
using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Fixed-point decimal rendering, round-half-away-from-zero.
inline std::string to_decimal(const Rational& r, int digits = 6) {
    std::int64_t scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    std::int64_t num = r.numerator() * scale;
    std::int64_t den = r.denominator();
    bool neg = num < 0;
    if (neg) num = -num;
    std::int64_t scaled = (num + den / 2) / den;
    std::string whole = std::to_string(scaled / scale);
    std::string frac = std::to_string(scaled % scale);
    frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
    return (neg ? "-" : "") + whole + "." + frac;
}

// floor(r) for use in cutoff formulas.
inline std::int64_t floor_rational(const Rational& r) {
    std::int64_t q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

}  // namespace surcsp
