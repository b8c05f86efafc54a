#pragma once

#include <map>
#include <string>

#include "nilp/bigint.hpp"
#include "nilp/sequences.hpp"

namespace nilp {

/// Probability that the outermost west/north path passes through (l, n),
/// exiting north.  Valid for 0 <= l <= a_n.
Rational H(const StartSequence& seq, long ell);

/// Same for the east/northeast family, via the reflection principle.
/// Valid for n-1 <= l <= a_n, with Htilde(seq, n-1) = 0 by convention.
Rational Htilde(const StartSequence& seq, long ell);

/// Right-boundary escape probability of the second path family at height
/// n+1-l.  Needs m = a_n - n >= 1; valid for 1 <= l <= n+1.
Rational Hhat(const StartSequence& seq, long ell);

/// Re-entry one-point function for a displaced starting point,
/// Hcheck(l) = 1 - Hhat(l+1).  Valid for 0 <= l <= n.
Rational Hcheck(const StartSequence& seq, long ell);

/// Escape-path counting factors.
BigInt Yfactor(long ell, long r);
BigInt Ytilde(const StartSequence& seq, long ell, long r);
BigInt Yhat(long p, long ell);

enum class TableKind { H, Htilde, Hhat, Hcheck };

struct OnePointTable {
    TableKind kind;
    StartSequence seq;
    std::map<long, Rational> values;
};

/// Full table over the natural exit-index range of the chosen kind.
OnePointTable make_table(TableKind kind, const StartSequence& seq);

/// CSV with columns ell, numerator, denominator, float.
std::string table_to_csv(const OnePointTable& table);

}  // namespace nilp
