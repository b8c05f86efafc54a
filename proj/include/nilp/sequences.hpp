#pragma once

#include <vector>

namespace nilp {

/// Starting positions (a_i) of the n+1 paths along the bottom boundary:
/// strictly increasing non-negative integers with a[0] = 0.
struct StartSequence {
    std::vector<long> a;

    explicit StartSequence(std::vector<long> values);

    int n() const { return static_cast<int>(a.size()) - 1; }
    long last() const { return a.back(); }
};

/// Reversed-gap sequence atilde[i] = a[n] - a[n-i].
struct TildeSequence {
    std::vector<long> atilde;
};

/// Sorted complement of {a_i} in {0,...,a_n}; empty when the a_i are contiguous.
struct ComplementarySequence {
    std::vector<long> b;

    long m() const { return static_cast<long>(b.size()); }
};

TildeSequence tilde_of(const StartSequence& seq);
ComplementarySequence complement_of(const StartSequence& seq);

/// Tilde sequences are themselves valid start sequences; round-trips are tested
/// through this converter.
StartSequence as_start_sequence(const TildeSequence& t);

}  // namespace nilp
