#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nilp/quadrature.hpp"
#include "nilp/sequences.hpp"

namespace nilp {

/// One building block of the resolvent integral: a linear stretch of alpha,
/// a jump (gap in the alpha range with no u-extent), or a curved stretch
/// carrying its own evaluator.
struct Element {
    enum class Kind { Linear, Gap, Curved };
    Kind kind;
    double u0, u1;  // parameter extent (u0 == u1 for a gap)
    double v0, v1;  // alpha extent
    double slope = 0.0;
    RealFn alpha;  // Curved only, defined on [u0, u1]
};

/// Scaling profile alpha(u) of the starting points, a_i ~ n alpha(i/n):
/// non-decreasing on [0,1] with alpha(0) = 0 and slope >= 1 where defined.
class BoundaryShape {
  public:
    struct Segment {
        double width;
        double slope;  // slope == 1 marks a frozen stretch
    };
    struct Jump {
        double delta;
    };
    using Piece = std::variant<Segment, Jump>;

    static BoundaryShape piecewise(const std::vector<Piece>& pieces);

    /// Analytic profile.  The derivatives at the endpoints and the local power
    /// exponents (alpha ~ C u^{e0} near 0, alpha(1) - alpha ~ C (1-u)^{e1}
    /// near 1) must be declared: they select the special-point formulas and
    /// the quadrature substitutions, and are not inferred numerically.
    static BoundaryShape analytic(RealFn alpha, double dalpha0, double dalpha1, double e0,
                                  double e1);

    double alpha(double u) const;  // right-continuous at jumps
    double alpha1() const { return alpha1_; }
    double dalpha0() const { return dalpha0_; }
    double dalpha1() const { return dalpha1_; }
    double exponent0() const { return e0_; }
    double exponent1() const { return e1_; }
    bool is_piecewise() const { return piecewise_; }

    const std::vector<Element>& elements() const { return elements_; }

    /// Maximal slope-1 intervals and jump intervals, as alpha-ranges.
    std::vector<std::pair<double, double>> frozen_intervals() const;
    std::vector<std::pair<double, double>> gap_intervals() const;

    /// a_i = floor(n alpha(i/n)); rejects n too small to keep the result
    /// strictly increasing.
    StartSequence realize(long n) const;

    /// mu_k = integral of alpha^k over [0,1]; exact piecewise integration for
    /// linear elements, quadrature for curved ones.
    double moment(int k) const;

  private:
    BoundaryShape() = default;

    bool piecewise_ = true;
    std::vector<Element> elements_;
    double alpha1_ = 0;
    double dalpha0_ = 0, dalpha1_ = 0;
    double e0_ = 1, e1_ = 1;
};

struct StartDensity {
    RealFn rho;                   // on [0, alpha(1)]
    std::vector<double> moments;  // mu_0 .. mu_K
};

StartDensity density_of(const BoundaryShape& shape, int kmax);

/// Plain-text shape spec, one directive per line:
///   piece width=W slope=S
///   piece width=W frozen
///   jump delta=D
///   curve quadratic p=P q=Q width=1
///   curve power a=A width=1
/// '#' starts a comment.  Widths must sum to 1 within 1e-12; a curve directive
/// must be the only piece.
BoundaryShape parse_shape_text(const std::string& text);
BoundaryShape load_shape_file(const std::string& path);

}  // namespace nilp
