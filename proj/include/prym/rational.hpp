#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace prym {

using BigInt = boost::multiprecision::mpz_int;

// Exact rational scalar. Canonical form is maintained by GMP: the
// denominator is always positive and coprime to the numerator.
using Rational = boost::multiprecision::mpq_rational;

// Renders "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& x) { return x.str(); }

inline std::string to_string(const BigInt& x) { return x.str(); }

inline bool is_integer(const Rational& x) {
    return boost::multiprecision::denominator(x) == 1;
}

// 2^e for e of either sign.
inline Rational pow2(long e) {
    BigInt p = 1;
    p <<= static_cast<unsigned>(e < 0 ? -e : e);
    return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

}  // namespace prym
