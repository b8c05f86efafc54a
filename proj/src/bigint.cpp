#include "nilp/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace nilp {

BigInt binomial(long a, long k) {
    if (k < 0 || a < 0 || k > a)
        return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(k));
    return r;
}

BigInt factorial(long n) {
    if (n < 0)
        throw std::invalid_argument("factorial of negative argument");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

namespace {
double log_bigint(const BigInt& z) {
    signed long exp;
    const double m = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log(m) + static_cast<double>(exp) * std::log(2.0);
}
}  // namespace

double log_rational(const Rational& q) {
    if (sgn(q) <= 0)
        throw std::domain_error("log of non-positive rational");
    return log_bigint(q.get_num()) - log_bigint(q.get_den());
}

}  // namespace nilp
