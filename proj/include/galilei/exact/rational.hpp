#pragma once

// Arbitrary-precision integers and rationals.
//
// mpq_class keeps values in lowest terms with a positive denominator after
// every arithmetic operation; the only place a non-canonical value can appear
// is direct construction from a numerator/denominator pair, which is why
// make_rational() is the sanctioned entry point for that.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace galilei {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

// Accepts "p" or "p/q" with optional sign on p.
inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
    if (r.get_den() == 0) throw std::domain_error("rational with zero denominator");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace galilei
