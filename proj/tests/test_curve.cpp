#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "nilp/curve.hpp"

using namespace nilp;
using Seg = BoundaryShape::Segment;
using Jmp = BoundaryShape::Jump;

namespace {

BoundaryShape pure(double p) { return BoundaryShape::piecewise({Seg{1.0, p}}); }

BoundaryShape hexagon() {
    return BoundaryShape::piecewise({Seg{1.0 / 3, 1.0}, Jmp{1.0}, Seg{2.0 / 3, 1.0}});
}

BoundaryShape reentrance() {
    return BoundaryShape::piecewise({Seg{1.0 / 3, 2.0}, Seg{1.0 / 3, 1.0}, Seg{1.0 / 3, 2.0}});
}

BoundaryShape reentrance_gap() {
    return BoundaryShape::piecewise({Seg{0.5, 2.0}, Jmp{1.0}, Seg{0.5, 2.0}});
}

BoundaryShape symmetric5() {
    return BoundaryShape::piecewise(
        {Seg{0.2, 1.0}, Seg{0.2, 2.0}, Seg{0.2, 1.0}, Seg{0.2, 2.0}, Seg{0.2, 1.0}});
}

double max_residual(const std::vector<ArcticPortion>& ports,
                    double (*rel)(double, double)) {
    double worst = 0;
    for (const auto& p : ports)
        for (const auto& s : p.samples)
            worst = std::max(worst, std::abs(rel(s.X, s.Y)));
    return worst;
}

}  // namespace

TEST_CASE("resolvent closed values") {
    Resolvent r3(pure(3));
    // x(t) = ((t-3)/t)^{1/3}; x(6) = 2^{-1/3}
    CHECK(r3.x(6) == doctest::Approx(std::pow(2.0, -1.0 / 3)).epsilon(1e-12));
    CHECK(r3.x(1e8) == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(r3.x(-1e8) == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(r3.x(-3) == doctest::Approx(std::cbrt(2.0)).epsilon(1e-12));

    CHECK(!r3.defined(1.5));
    CHECK(r3.sign(4.0) == 1);

    // quadrature for alpha = u + u^2 against the partial-fraction form
    BoundaryShape quad =
        BoundaryShape::analytic([](double u) { return u + u * u; }, 1.0, 3.0, 1.0, 1.0);
    Resolvent rq(quad);
    const double t = 3.0, disc = std::sqrt(1 + 4 * t);
    const double up = (-1 + disc) / 2, um = (-1 - disc) / 2;
    const double integral =
        (std::log((1 - um) / (0 - um)) - std::log((up - 1) / (up - 0))) / disc;
    CHECK(rq.x(t) == doctest::Approx(std::exp(-integral)).epsilon(1e-11));
}

TEST_CASE("resolvent monotonicity") {
    Resolvent r(pure(2));
    double prev = 0;
    for (double t = 2.001; t < 50; t += 0.5) {
        const double v = r.x(t);
        CHECK(v > prev);
        CHECK(v < 1);
        prev = v;
    }
    prev = 1;
    for (double t = -0.001; t > -50; t -= 0.5) {
        const double v = r.x(t);
        CHECK(v > 1);
        CHECK(v > 0);
        (void)prev;
        prev = v;
    }
}

TEST_CASE("derivatives match finite differences") {
    std::mt19937_64 rng(41);
    for (const BoundaryShape& s : {pure(3), reentrance(), hexagon()}) {
        Resolvent r(s);
        auto fd_check = [&](double t) {
            const double h = 1e-5 * std::max(1.0, std::abs(t));
            if (!r.defined(t - h) || !r.defined(t + h))
                return;
            const double fd = (r.x(t + h) - r.x(t - h)) / (2 * h);
            CHECK(r.xprime(t) ==
                  doctest::Approx(fd).epsilon(1e-6 + 1e-9 / std::abs(fd)));
            const double fd2 = (r.xprime(t + h) - r.xprime(t - h)) / (2 * h);
            if (std::abs(fd2) > 1e-8)
                CHECK(r.xsecond(t) == doctest::Approx(fd2).epsilon(1e-5));
        };
        for (int k = 0; k < 100; ++k) {
            const double u = static_cast<double>(rng() % 1000000) / 1000000;
            fd_check(s.alpha1() + 0.2 + 10 * u);  // portion I range
            fd_check(-0.2 - 10 * u);              // portion II range
        }
    }
}

TEST_CASE("algebraic curve: shape 2u") {
    Resolvent r(pure(2));
    CHECK(max_residual(portions(r, 400), [](double X, double Y) {
              return (2 * X - Y) * (2 * X - Y) - 8 * (X - Y);
          }) < 1e-9);
}

TEST_CASE("algebraic curve: shape 3u quartic") {
    Resolvent r(pure(3));
    const auto ports = portions(r, 400);
    CHECK(ports.size() == 2);
    for (const auto& p : ports)
        CHECK(p.cusps.empty());
    CHECK(max_residual(ports, [](double X, double Y) {
              const double q = 3 * X * X - 3 * X * Y + Y * Y;
              return q * q - 2 * (3 * X - Y) * (9 * X * X - 15 * X * Y + 7 * Y * Y) +
                     81 * (X - Y) * (X - Y);
          }) < 1e-7);
}

TEST_CASE("algebraic curve: shape 3u/2") {
    Resolvent r(pure(1.5));
    CHECK(max_residual(portions(r, 400), [](double X, double Y) {
              const double q = 3 * X * X - 3 * X * Y + Y * Y;
              return 32 * q * q -
                     16 * (54 * X * X * X - 135 * X * X * Y + 99 * X * Y * Y -
                           19 * Y * Y * Y) +
                     162 * (5 * X - 8 * Y) * (X - Y) - 243 * (X - Y);
          }) < 1e-7);
}

TEST_CASE("hexagon arctic ellipse") {
    Resolvent r(hexagon());
    const auto ports = portions(r, 400);
    CHECK(ports.size() == 5);  // 2 generic + 2 edge freezes + 1 gap
    int proven_edges = 0, gaps = 0;
    for (const auto& p : ports) {
        if (p.kind == ArcticPortion::Kind::EdgeFreezeLeft ||
            p.kind == ArcticPortion::Kind::EdgeFreezeRight) {
            CHECK(!p.conjectured);
            ++proven_edges;
        }
        if (p.kind == ArcticPortion::Kind::Gap) {
            CHECK(p.conjectured);
            ++gaps;
        }
    }
    CHECK(proven_edges == 2);
    CHECK(gaps == 1);
    CHECK(max_residual(ports, [](double X, double Y) {
              const double a = 1.0 / 3, b = 1.0, c = 2.0 / 3;
              const double l = (c - b) * Y - (a + c) * X + a * (a + b + c);
              return l * l + 4 * b * c * Y * (Y - X);
          }) < 1e-8);
}

TEST_CASE("interior freezing boundary: reentrance") {
    Resolvent r(reentrance());
    const auto ports = portions(r, 300);
    REQUIRE(ports.size() == 3);
    const ArcticPortion* frozen = nullptr;
    for (const auto& p : ports)
        if (p.kind == ArcticPortion::Kind::FrozenR)
            frozen = &p;
    REQUIRE(frozen != nullptr);
    CHECK(frozen->conjectured);
    CHECK(frozen->t0 == doctest::Approx(2.0 / 3));
    CHECK(frozen->t1 == doctest::Approx(1.0));
    CHECK(frozen->cusps.size() == 1);

    // tangent slopes at the freezing-interval endpoints: 1 on the left,
    // divergent on the right
    CHECK(tangent_at(r, 2.0 / 3 + 1e-8).slope == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(std::abs(tangent_at(r, 1.0 - 1e-8).slope) > 1e3);
}

TEST_CASE("gap portion: reentrancegap") {
    Resolvent r(reentrance_gap());
    const auto ports = portions(r, 400);
    REQUIRE(ports.size() == 3);
    const ArcticPortion* gap = nullptr;
    for (const auto& p : ports)
        if (p.kind == ArcticPortion::Kind::Gap)
            gap = &p;
    REQUIRE(gap != nullptr);
    CHECK(gap->cusps.size() == 2);
    // tangency with the X-axis at X = 3/2 (the symmetric midpoint): x(3/2)=1
    CHECK(r.x(1.5) == doctest::Approx(1.0).epsilon(1e-10));
    const auto [X, Y] = curve_point(r, 1.5);
    CHECK(X == doctest::Approx(1.5).epsilon(1e-9));
    CHECK(Y == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("special points") {
    SpecialPoints p3 = special_points(pure(3));
    CHECK(p3.X1 == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(p3.Y1 == doctest::Approx(1.0));
    CHECK(p3.X0 == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(p3.Y0 == doctest::Approx(0.0));
    CHECK(p3.Xinf == doctest::Approx(0.0));
    CHECK(p3.Yinf == doctest::Approx(0.0));

    // alpha(u) = u^{1/3}/(1/3)
    BoundaryShape pw = parse_shape_text("curve power a=0.3333333333333333 width=1\n");
    SpecialPoints sp = special_points(pw);
    CHECK(sp.X1 == doctest::Approx(11.0 / 4).epsilon(1e-7));
    CHECK(sp.X0 == doctest::Approx(3.0).epsilon(1e-6));
    CHECK(sp.Y0 == doctest::Approx(3 * std::exp(-1.5)).epsilon(1e-6));
    CHECK(sp.slopeinf == doctest::Approx(1 - std::exp(-0.5)).epsilon(1e-6));

    // alpha(u) = u + u^2
    BoundaryShape quad =
        BoundaryShape::analytic([](double u) { return u + u * u; }, 1.0, 3.0, 1.0, 1.0);
    SpecialPoints sq = special_points(quad);
    CHECK(sq.Xinf == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(sq.Yinf == doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("tangent lines") {
    Resolvent r(pure(3));
    // x = 1/2 at t = 24/7: tangent slope -(1-x)/x = -1
    TangentLine tl = tangent_at(r, 24.0 / 7);
    CHECK(r.x(24.0 / 7) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(tl.slope == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(tl.t == doctest::Approx(24.0 / 7));

    // each tangent touches the sampled curve
    const auto ports = portions(r, 400);
    for (double t : {3.5, 5.0, 9.0}) {
        const double x = r.x(t);
        double best = 1e9;
        for (const auto& p : ports)
            for (const auto& s : p.samples)
                best = std::min(best, std::abs(x * s.Y + (1 - x) * (s.X - t)));
        CHECK(best < 1e-5);
    }
}

TEST_CASE("tangency identity at every sample") {
    for (const BoundaryShape& s :
         {pure(3), hexagon(), reentrance(), reentrance_gap(), symmetric5()}) {
        Resolvent r(s);
        double worst = 0;
        for (const auto& p : portions(r, 300))
            for (const auto& smp : p.samples)
                worst = std::max(worst,
                                 std::abs(smp.x * smp.Y + (1 - smp.x) * (smp.X - smp.t)));
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("legendre duality") {
    Resolvent r2(pure(2));
    Resolvent r3(pure(3));
    for (const auto& p : portions(r2, 200))
        if (p.kind == ArcticPortion::Kind::GenericI)
            CHECK(legendre_check(r2, p) < 1e-6);
    for (const auto& p : portions(r3, 200))
        if (p.kind == ArcticPortion::Kind::GenericII)
            CHECK(legendre_check(r3, p) < 1e-6);
}

TEST_CASE("moment recovery from the resolvent") {
    CHECK(moments_check(pure(1), 0) < 1e-8);
    CHECK(moments_check(pure(3), 1) < 1e-6);
    BoundaryShape quad =
        BoundaryShape::analytic([](double u) { return u + u * u; }, 1.0, 3.0, 1.0, 1.0);
    CHECK(moments_check(quad, 2) < 1e-5);
}

TEST_CASE("symmetric shape involution") {
    BoundaryShape s = symmetric5();
    Resolvent r(s);
    const double a1 = s.alpha1();
    for (double t = a1 + 0.05; t < a1 + 3; t += 0.11) {
        CHECK(r.x(a1 - t) * r.x(t) == doctest::Approx(1.0).epsilon(1e-10));
        const auto [X, Y] = curve_point(r, t);
        const auto [Xm, Ym] = curve_point(r, a1 - t);
        CHECK(Xm == doctest::Approx(a1 - X + Y).epsilon(1e-8));
        CHECK(Ym == doctest::Approx(Y).epsilon(1e-8));
    }
}

TEST_CASE("triangular coordinates") {
    ArcticPortion p;
    p.kind = ArcticPortion::Kind::GenericI;
    p.samples = {{0, 0, 0.0, 0.0, 0}, {0, 0, 2.0, 1.0, 0}};
    auto tri = to_triangular(p);
    CHECK(tri[0].first == doctest::Approx(0.0));
    CHECK(tri[0].second == doctest::Approx(0.0));
    CHECK(tri[1].first == doctest::Approx(1.5));
    CHECK(tri[1].second == doctest::Approx(std::sqrt(3.0) / 2));

    // palindromic shape: the rectified curve is symmetric about X = alpha(1)/2
    BoundaryShape s = symmetric5();
    Resolvent r(s);
    const double a1 = s.alpha1();
    for (double t = a1 + 0.1; t < a1 + 2; t += 0.23) {
        const auto [X, Y] = curve_point(r, t);
        const auto [Xm, Ym] = curve_point(r, a1 - t);
        const double Xd = X - Y / 2, Xdm = Xm - Ym / 2;
        CHECK(Xd + Xdm == doctest::Approx(a1).epsilon(1e-8));
    }
}

TEST_CASE("edge-freeze consistency") {
    BoundaryShape s = BoundaryShape::piecewise({Seg{0.5, 2.0}, Seg{0.5, 1.0}});
    CHECK(edge_freeze_consistency(s, 200) < 1e-10);
}

TEST_CASE("csv and svg export") {
    Resolvent r(pure(3));
    const auto ports = portions(r, 50);
    std::string csv = portions_to_csv(ports);
    CHECK(csv.rfind("kind,conjectured,t,x,X,Y,slope", 0) == 0);
    CHECK(csv.find("generic-I") != std::string::npos);
    CHECK(csv.find("generic-II") != std::string::npos);

    std::string svg = portions_to_svg(ports, 3.0, {tangent_at(r, 4.0)});
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(portions_to_svg(ports, 3.0, {}, true).rfind("<svg", 0) == 0);
}
