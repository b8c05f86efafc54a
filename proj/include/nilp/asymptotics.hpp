#pragma once

#include <string>
#include <vector>

#include "nilp/resolvent.hpp"
#include "nilp/sequences.hpp"

namespace nilp {

enum class Family { I, II, Hat };

/// Saddle-point actions of the three one-point functions.
double S0(const BoundaryShape& shape, double t, double xi);
double S1(double xi, double z);
double S0_II(const BoundaryShape& shape, double t, double xi);
double S1_II(const BoundaryShape& shape, double xi, double z);

struct SaddleResult {
    double t;
    bool diverged;  // xi at or below X1: t* escapes to infinity
};

/// Solves d/dt S0(t, xi) = 0 on (alpha(1), inf) for family I, (-inf, 0) for
/// family II; refined to |dS0/dt| < 1e-12.
SaddleResult saddle_t(const BoundaryShape& shape, double xi, Family family = Family::I);

struct ExitSolution {
    double xi;
    double z;
};

ExitSolution exit_solution_I(const Resolvent& res, double t);
ExitSolution exit_solution_II(const Resolvent& res, double t);
ExitSolution exit_solution_hat(const Resolvent& res, double t);  // returns (xi_hat, w)

struct RateFunction {
    std::vector<std::pair<double, double>> samples;  // (xi, S0 at the saddle)
};

/// Parametric rate function of family I over xi in (X1, alpha(1)).
RateFunction rate_function(const BoundaryShape& shape, int grid_points = 200);

struct ConvergenceRow {
    Family family;
    long n;
    double xi;
    double exact_log_over_n;
    double predicted_S0;
    double deviation;
};

/// Compares (1/n) log of the exact one-point function with the predicted
/// action on a xi-grid, for each n in n_list.
std::vector<ConvergenceRow> convergence_study(const BoundaryShape& shape,
                                              const std::vector<long>& n_list, Family family,
                                              double xi_lo, double xi_hi, int xi_points);

std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

}  // namespace nilp
