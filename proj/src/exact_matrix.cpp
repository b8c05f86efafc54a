#include "nilp/exact_matrix.hpp"

#include <stdexcept>

namespace nilp {

bool ExactMatrix::is_integer() const {
    for (const auto& q : data_)
        if (q.get_den() != 1)
            return false;
    return true;
}

ExactMatrix multiply(const ExactMatrix& lhs, const ExactMatrix& rhs) {
    if (lhs.dim() != rhs.dim())
        throw std::invalid_argument("dimension mismatch");
    const int n = lhs.dim();
    ExactMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (lhs.at(i, k) == 0)
                continue;
            for (int j = 0; j < n; ++j)
                out.at(i, j) += lhs.at(i, k) * rhs.at(k, j);
        }
    return out;
}

ExactMatrix lgv_A(const StartSequence& seq) {
    const int n = seq.n();
    ExactMatrix A(n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            A.at(i, j) = binomial(seq.a[i] + j, j);
    return A;
}

ExactMatrix lgv_Atilde(const StartSequence& seq) {
    const int n = seq.n();
    const TildeSequence t = tilde_of(seq);
    ExactMatrix A(n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            A.at(i, j) = binomial(t.atilde[i], j);
    return A;
}

ExactMatrix lgv_Ahat(const StartSequence& seq) {
    const ComplementarySequence c = complement_of(seq);
    const long m = c.m();
    const long n = seq.n();
    ExactMatrix A(static_cast<int>(m));
    for (long i = 1; i <= m; ++i)
        for (long j = 1; j <= m; ++j)
            A.at(static_cast<int>(i - 1), static_cast<int>(j - 1)) =
                binomial(n + 1, c.b[i - 1] - j + 1);
    return A;
}

namespace {

Rational det_bareiss(const ExactMatrix& M) {
    const int n = M.dim();
    std::vector<BigInt> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i) * n + j] = M.at(i, j).get_num();
    auto at = [&](int i, int j) -> BigInt& { return a[static_cast<std::size_t>(i) * n + j]; };

    int sign = 1;
    BigInt prev(1);
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (at(r, k) != 0) {
                    p = r;
                    break;
                }
            if (p < 0)
                return Rational(0);
            for (int c = 0; c < n; ++c)
                swap(at(k, c), at(p, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                BigInt t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                at(i, j) = t;
            }
        prev = at(k, k);
    }
    BigInt d = at(n - 1, n - 1);
    if (sign < 0)
        d = -d;
    return Rational(d);
}

Rational det_gauss(ExactMatrix M) {
    const int n = M.dim();
    Rational det(1);
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int r = k; r < n; ++r)
            if (M.at(r, k) != 0) {
                p = r;
                break;
            }
        if (p < 0)
            return Rational(0);
        if (p != k) {
            for (int c = k; c < n; ++c)
                swap(M.at(k, c), M.at(p, c));
            det = -det;
        }
        det *= M.at(k, k);
        for (int r = k + 1; r < n; ++r) {
            if (M.at(r, k) == 0)
                continue;
            Rational f = M.at(r, k) / M.at(k, k);
            for (int c = k; c < n; ++c) {
                M.at(r, c) -= f * M.at(k, c);
                M.at(r, c).canonicalize();
            }
        }
    }
    return det;
}

}  // namespace

Rational det_exact(const ExactMatrix& M) {
    if (M.dim() == 0)
        return Rational(1);
    if (M.is_integer())
        return det_bareiss(M);
    return det_gauss(M);
}

ExactMatrix lu_Linv(const StartSequence& seq) {
    const int n = seq.n();
    ExactMatrix L(n + 1);
    for (int i = 0; i <= n; ++i) {
        BigInt num(1);
        for (int s = 0; s < i; ++s)
            num *= seq.a[i] - seq.a[s];
        for (int j = 0; j <= i; ++j) {
            BigInt den(1);
            for (int s = 0; s <= i; ++s)
                if (s != j)
                    den *= seq.a[j] - seq.a[s];
            Rational q(num, den);
            q.canonicalize();
            L.at(i, j) = q;
        }
    }
    return L;
}

ExactMatrix lu_Linv_hat(const StartSequence& seq) {
    const ComplementarySequence c = complement_of(seq);
    const long m = c.m();
    if (m < 1)
        throw std::invalid_argument("lu_Linv_hat needs a non-empty complementary sequence");
    const long n = seq.n();
    ExactMatrix L(static_cast<int>(m));
    for (long i = 1; i <= m; ++i) {
        const long bi = c.b[i - 1];
        Rational lead(binomial(n + m, bi) * binomial(n + m - bi, m + 1 - i));
        BigInt num(1);
        for (long s = 1; s < i; ++s)
            num *= bi - c.b[s - 1];
        for (long j = 1; j <= i; ++j) {
            const long bj = c.b[j - 1];
            BigInt den(1);
            for (long s = 1; s <= i; ++s)
                if (s != j)
                    den *= bj - c.b[s - 1];
            den *= binomial(n + m, bj) * binomial(n + m - bj, m + 1 - i);
            Rational q(num, den);
            q.canonicalize();
            q *= lead;
            L.at(static_cast<int>(i - 1), static_cast<int>(j - 1)) = q;
        }
    }
    return L;
}

BigInt partition_product(const StartSequence& seq) {
    const int n = seq.n();
    BigInt num(1), den(1);
    for (int i = 0; i <= n; ++i)
        for (int s = 0; s < i; ++s) {
            num *= seq.a[i] - seq.a[s];
            den *= i - s;
        }
    BigInt z;
    mpz_divexact(z.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return z;
}

BigInt partition_bform(const StartSequence& seq) {
    const ComplementarySequence c = complement_of(seq);
    const long m = c.m();
    if (m == 0)
        return BigInt(1);
    const long n = seq.n();
    BigInt num(1), den(1);
    for (long i = n + 1; i <= n + m; ++i)
        num *= factorial(i);
    for (long i = 0; i < m; ++i)
        for (long j = i + 1; j < m; ++j)
            num *= c.b[j] - c.b[i];
    for (long bi : c.b)
        den *= factorial(bi) * factorial(n + m - bi);
    BigInt z;
    mpz_divexact(z.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return z;
}

}  // namespace nilp
