#include "nilp/onepoint.hpp"

#include <sstream>
#include <stdexcept>

namespace nilp {

Rational H(const StartSequence& seq, long ell) {
    const int n = seq.n();
    if (ell < 0 || ell > seq.last())
        throw std::out_of_range("H: exit index out of [0, a_n]");
    // H = U'_{n,n} / U_{n,n} = n! sum_k C(a_k+n-l, n) / prod_{s!=k}(a_k-a_s)
    Rational sum(0);
    for (int k = 0; k <= n; ++k) {
        BigInt num = binomial(seq.a[k] + n - ell, n);
        if (num == 0)
            continue;
        BigInt den(1);
        for (int s = 0; s <= n; ++s)
            if (s != k)
                den *= seq.a[k] - seq.a[s];
        Rational term(num, den);
        term.canonicalize();
        sum += term;
    }
    sum *= factorial(n);
    sum.canonicalize();
    return sum;
}

Rational Htilde(const StartSequence& seq, long ell) {
    const int n = seq.n();
    if (ell < n - 1 || ell > seq.last())
        throw std::out_of_range("Htilde: exit index out of [n-1, a_n]");
    if (ell == n - 1)
        return Rational(0);
    return H(as_start_sequence(tilde_of(seq)), seq.last() - ell + n);
}

Rational Hhat(const StartSequence& seq, long ell) {
    const ComplementarySequence c = complement_of(seq);
    const long m = c.m();
    if (m < 1)
        throw std::invalid_argument("Hhat: empty second path family");
    const long n = seq.n();
    if (ell < 1 || ell > n + 1)
        throw std::out_of_range("Hhat: exit index out of [1, n+1]");
    Rational sum(0);
    for (long k = 0; k < m; ++k) {
        const long bk = c.b[k];
        BigInt num = binomial(n - ell + 1, n + m - bk);
        if (num == 0)
            continue;
        BigInt den = binomial(n + m, bk) * (n + m - bk);
        for (long s = 0; s < m; ++s)
            if (s != k)
                den *= bk - c.b[s];
        Rational term(num, den);
        term.canonicalize();
        sum += term;
    }
    for (long s = 0; s < m; ++s)
        sum *= n + m - c.b[s];
    sum.canonicalize();
    return sum;
}

Rational Hcheck(const StartSequence& seq, long ell) {
    const long n = seq.n();
    if (ell < 0 || ell > n)
        throw std::out_of_range("Hcheck: exit index out of [0, n]");
    return Rational(1) - Hhat(seq, ell + 1);
}

BigInt Yfactor(long ell, long r) { return binomial(ell + r - 1, ell); }

BigInt Ytilde(const StartSequence& seq, long ell, long r) {
    return binomial(seq.last() - ell - 1, r - 1);
}

BigInt Yhat(long p, long ell) { return binomial(ell - 1, p - 1); }

OnePointTable make_table(TableKind kind, const StartSequence& seq) {
    OnePointTable t{kind, seq, {}};
    const long n = seq.n();
    switch (kind) {
        case TableKind::H:
            for (long ell = 0; ell <= seq.last(); ++ell)
                t.values[ell] = H(seq, ell);
            break;
        case TableKind::Htilde:
            for (long ell = n - 1; ell <= seq.last(); ++ell)
                t.values[ell] = Htilde(seq, ell);
            break;
        case TableKind::Hhat:
            for (long ell = 1; ell <= n + 1; ++ell)
                t.values[ell] = Hhat(seq, ell);
            break;
        case TableKind::Hcheck:
            for (long ell = 0; ell <= n; ++ell)
                t.values[ell] = Hcheck(seq, ell);
            break;
    }
    return t;
}

std::string table_to_csv(const OnePointTable& table) {
    std::ostringstream out;
    out << "ell,numerator,denominator,float\n";
    out.precision(17);
    for (const auto& [ell, q] : table.values)
        out << ell << ',' << q.get_num() << ',' << q.get_den() << ',' << q.get_d() << '\n';
    return out.str();
}

}  // namespace nilp
