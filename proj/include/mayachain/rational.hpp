#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mayachain {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Builds a reduced rational with positive denominator.
inline Rational make_rational(Integer num, Integer den) {
    if (sgn(den) == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

/// Parses "p", "-p" or "p/q" (exact). Throws on malformed input.
inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace mayachain
