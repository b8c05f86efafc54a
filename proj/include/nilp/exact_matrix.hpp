#pragma once

#include <vector>

#include "nilp/bigint.hpp"
#include "nilp/sequences.hpp"

namespace nilp {

/// Dense square matrix of exact rationals.
class ExactMatrix {
  public:
    explicit ExactMatrix(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim) {}

    int dim() const { return dim_; }
    Rational& at(int i, int j) { return data_[static_cast<std::size_t>(i) * dim_ + j]; }
    const Rational& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * dim_ + j]; }

    bool is_integer() const;

  private:
    int dim_;
    std::vector<Rational> data_;
};

ExactMatrix multiply(const ExactMatrix& lhs, const ExactMatrix& rhs);

/// LGV matrix of the west/north path family: A[i][j] = C(a_i + j, j).
ExactMatrix lgv_A(const StartSequence& seq);

/// LGV matrix of the east/northeast family: C(atilde_i, j).
ExactMatrix lgv_Atilde(const StartSequence& seq);

/// LGV matrix of the north/northeast family: C(n+1, b_i - j + 1), indices 1..m.
/// m = 0 gives the empty matrix (determinant 1).
ExactMatrix lgv_Ahat(const StartSequence& seq);

/// Exact determinant.  Integer matrices go through fraction-free Bareiss
/// elimination; anything with a non-integer entry falls back to rational
/// Gaussian elimination.
Rational det_exact(const ExactMatrix& M);

/// The closed-form lower uni-triangular L^{-1} that upper-triangularizes lgv_A.
ExactMatrix lu_Linv(const StartSequence& seq);

/// Its analogue for lgv_Ahat (requires m >= 1).
ExactMatrix lu_Linv_hat(const StartSequence& seq);

/// Z_n as the Vandermonde ratio  prod_{i<j}(a_j - a_i) / prod_{i<j}(j - i).
BigInt partition_product(const StartSequence& seq);

/// Z_n expressed through the complementary sequence.
BigInt partition_bform(const StartSequence& seq);

}  // namespace nilp
