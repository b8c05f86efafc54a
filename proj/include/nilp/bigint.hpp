#pragma once

#include <gmpxx.h>

namespace nilp {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient with the zero convention: C(a,k) = 0 whenever
/// k < 0, a < 0 or k > a.  This convention is what makes the LGV entries
/// vanish for unreachable endpoint pairs.
BigInt binomial(long a, long k);

BigInt factorial(long n);

/// log of a positive rational, computed from mantissa/exponent splits of
/// numerator and denominator so that values far outside double range stay
/// finite.
double log_rational(const Rational& q);

}  // namespace nilp
