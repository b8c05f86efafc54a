#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nilp/asymptotics.hpp"
#include "nilp/curve.hpp"

using namespace nilp;
using Seg = BoundaryShape::Segment;

namespace {

BoundaryShape pure(double p) { return BoundaryShape::piecewise({Seg{1.0, p}}); }

}  // namespace

TEST_CASE("saddle roundtrip, shape 3u") {
    BoundaryShape s = pure(3);
    Resolvent res(s);
    for (double xi : {2.2, 2.5, 2.8, 2.95}) {
        SaddleResult r = saddle_t(s, xi, Family::I);
        REQUIRE(!r.diverged);
        CHECK(r.t > s.alpha1());
        CHECK(exit_solution_I(res, r.t).xi == doctest::Approx(xi).epsilon(1e-9));
    }
    // xi at or below X1 = 2: the saddle runs off to infinity
    CHECK(saddle_t(s, 2.0, Family::I).diverged);
    CHECK(saddle_t(s, 1.5, Family::I).diverged);
    // xi -> alpha(1): t* -> alpha(1)+
    CHECK(saddle_t(s, 2.999, Family::I).t == doctest::Approx(3.0).epsilon(1e-2));
}

TEST_CASE("rate function matches the closed p=3 parametric form") {
    BoundaryShape s = pure(3);
    Resolvent res(s);
    for (double t : {3.5, 4.0, 6.0, 12.0}) {
        const double x = std::cbrt((t - 3) / t);
        const double xi = t - x / (1 - x);
        const double want = (t - 3) / 3 * std::log(t - 3) - t / 3 * std::log(t) +
                            std::log(1 / (1 - x)) / (1 - x) -
                            x / (1 - x) * std::log(x / (1 - x));
        SaddleResult r = saddle_t(s, xi, Family::I);
        CHECK(S0(s, r.t, xi) == doctest::Approx(want).epsilon(1e-9));
    }

    RateFunction rf = rate_function(s, 100);
    double at_edge = 1;
    for (const auto& [xi, s0] : rf.samples) {
        CHECK(s0 <= 1e-9);
        at_edge = std::min(at_edge, std::abs(xi - 2) + std::abs(s0));
        if (std::abs(xi - 2.5) < 0.02)
            CHECK(s0 < -0.1);
    }
    CHECK(at_edge < 1e-2);  // S0 -> 0 as xi -> X1
}

TEST_CASE("action gradient vanishes at the exit solution") {
    BoundaryShape s = pure(3);
    Resolvent res(s);
    for (double xi : {2.3, 2.6}) {
        const double t = saddle_t(s, xi, Family::I).t;
        const ExitSolution e = exit_solution_I(res, t);
        const double z = e.z;
        CHECK(z >= 0);
        auto f = [&](double q) { return S0(s, t, q) + S1(q, z); };
        const double h = 1e-6;
        CHECK(std::abs((f(xi + h) - f(xi - h)) / (2 * h)) < 1e-5);
    }
}

TEST_CASE("family II saddle, shape 3u") {
    BoundaryShape s = pure(3);
    Resolvent res(s);
    // the family-II intercept xi(t) = t + x/(x-1) sweeps (1, X1) as t runs
    // over (0-, -inf) for this shape
    for (double xi : {1.3, 1.7, 1.9}) {
        SaddleResult r = saddle_t(s, xi, Family::II);
        REQUIRE(!r.diverged);
        CHECK(r.t < 0);
        CHECK(exit_solution_II(res, r.t).xi == doctest::Approx(xi).epsilon(1e-9));
    }
    CHECK(saddle_t(s, 2.0, Family::II).diverged);
}

TEST_CASE("hat exit solution on an edge-frozen shape") {
    BoundaryShape s = BoundaryShape::piecewise({Seg{0.5, 2.0}, Seg{0.5, 1.0}});
    Resolvent res(s);
    // mu = alpha(1) - 1 = 1/2, rho = 1/2; hat domain (1+mu-rho, 1+mu) = (1, 3/2)
    const ExitSolution e = exit_solution_hat(res, 1.25);
    CHECK(std::isfinite(e.xi));
    CHECK(std::isfinite(e.z));
    CHECK(e.z >= 0);
}

TEST_CASE("convergence study, shape 3u") {
    BoundaryShape s = pure(3);
    auto rows = convergence_study(s, {10, 30}, Family::I, 2.2, 2.8, 7);
    REQUIRE(rows.size() == 14);
    double dev10 = 0, dev30 = 0;
    for (const auto& r : rows) {
        CHECK(r.exact_log_over_n <= 1e-12);
        CHECK(r.predicted_S0 <= 1e-12);
        (r.n == 10 ? dev10 : dev30) = std::max(r.n == 10 ? dev10 : dev30, r.deviation);
    }
    CHECK(dev30 < dev10);
    CHECK(dev30 < 0.2);

    // below the transition the exact value tends to 0 = predicted
    auto flat = convergence_study(s, {40}, Family::I, 1.0, 1.8, 5);
    for (const auto& r : flat) {
        CHECK(r.predicted_S0 == 0);
        CHECK(std::abs(r.exact_log_over_n) < 0.05);
    }

    std::string csv = convergence_csv(rows);
    CHECK(csv.rfind("family,n,xi,exact_log_over_n,predicted_S0,deviation", 0) == 0);
}
