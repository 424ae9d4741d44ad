#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <random>
#include <string>

namespace mould {

// Exact arbitrary-precision arithmetic, GMP-backed.  mpq_class keeps the
// gcd-reduced, positive-denominator canonical form this library relies on.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1)
{
	Rational r(num, den);
	r.canonicalize();
	return r;
}

Rational factorial(int n);
Rational parse_rational(const std::string &text);
std::string to_string(const Rational &q);

using Rng = std::mt19937_64;

// Uniform rational with numerator in [-bound, bound] and denominator in [1, bound].
Rational random_rational(Rng &rng, long bound);

} // namespace mould
