#include "nilp/sequences.hpp"

#include <stdexcept>
#include <utility>

namespace nilp {

StartSequence::StartSequence(std::vector<long> values) : a(std::move(values)) {
    if (a.empty())
        throw std::invalid_argument("start sequence must be non-empty");
    if (a.front() != 0)
        throw std::invalid_argument("start sequence must begin at 0");
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] <= a[i - 1])
            throw std::invalid_argument("start sequence must be strictly increasing");
}

TildeSequence tilde_of(const StartSequence& seq) {
    const int n = seq.n();
    std::vector<long> t(n + 1);
    for (int i = 0; i <= n; ++i)
        t[i] = seq.a[n] - seq.a[n - i];
    return TildeSequence{std::move(t)};
}

ComplementarySequence complement_of(const StartSequence& seq) {
    std::vector<long> b;
    b.reserve(seq.last() - seq.n());
    std::size_t next = 0;
    for (long v = 0; v <= seq.last(); ++v) {
        if (next < seq.a.size() && seq.a[next] == v)
            ++next;
        else
            b.push_back(v);
    }
    return ComplementarySequence{std::move(b)};
}

StartSequence as_start_sequence(const TildeSequence& t) {
    return StartSequence(t.atilde);
}

}  // namespace nilp
