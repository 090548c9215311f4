#pragma once

// Exact rational arithmetic and generalized binomial coefficients.
//
// Rat is an arbitrary-precision fraction kept in canonical form (positive
// denominator, reduced) after every operation. All dimension formulas are
// evaluated in Rat end-to-end; the final integrality assertion is the only
// cast to an integer type.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace magicchart {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Generalized (falling-factorial) binomial coefficient:
//   rat_binom(x, k) = x (x-1) ... (x-k+1) / k!
// Total in x; rat_binom(x, 0) = 1.
inline Rat rat_binom(const Rat& x, unsigned k) {
    Rat r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= (x - int(k) + int(i)) / Rat(i);
    }
    return r;
}

// The paper writes binomials as C(k+c, k); binom_top(c, k) := rat_binom(k+c, k)
// keeps formula transcription 1:1.
inline Rat binom_top(const Rat& c, unsigned k) { return rat_binom(Rat(c) + int(k), k); }

// Ordinary integer binomial coefficient C(n, k) for n >= 0.
inline Int int_binom(const Int& n, unsigned k) {
    Int num = 1, den = 1;
    for (unsigned i = 1; i <= k; ++i) {
        num *= n - int(k) + int(i);
        den *= int(i);
    }
    return num / den;
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Checked cast; throws if r is not an integer (a non-integer dimension is a
// bug signal, not a rounding issue).
inline Int to_int(const Rat& r) {
    if (!is_integer(r)) {
        throw std::domain_error("expected integer, got " + r.str());
    }
    return numerator(r);
}

inline long long to_ll(const Rat& r) { return static_cast<long long>(to_int(r)); }

// Parse "p/q" or "p" into a Rat (used by the CLI for parameters like -2/3).
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

}  // namespace magicchart
