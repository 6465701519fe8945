#pragma once

#include <gmpxx.h>

#include <string>

namespace malg {

// Exact arbitrary-precision rational, always canonical (lowest terms,
// positive denominator). mpq_class does not canonicalize two-argument
// construction, so raw pairs go through rat().
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

}  // namespace malg
