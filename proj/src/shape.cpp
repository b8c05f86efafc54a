#include "nilp/shape.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace nilp {

BoundaryShape BoundaryShape::piecewise(const std::vector<Piece>& pieces) {
    if (pieces.empty())
        throw std::invalid_argument("shape needs at least one piece");
    BoundaryShape s;
    s.piecewise_ = true;
    double u = 0, v = 0;
    double wsum = 0;
    for (const Piece& p : pieces) {
        if (const Segment* seg = std::get_if<Segment>(&p)) {
            if (seg->width <= 0)
                throw std::invalid_argument("segment width must be positive");
            if (seg->slope < 1)
                throw std::invalid_argument("segment slope must be >= 1");
            Element e;
            e.kind = Element::Kind::Linear;
            e.u0 = u;
            e.u1 = u + seg->width;
            e.v0 = v;
            e.v1 = v + seg->width * seg->slope;
            e.slope = seg->slope;
            s.elements_.push_back(e);
            u = e.u1;
            v = e.v1;
            wsum += seg->width;
        } else {
            const Jump& j = std::get<Jump>(p);
            if (j.delta <= 0)
                throw std::invalid_argument("jump height must be positive");
            Element e;
            e.kind = Element::Kind::Gap;
            e.u0 = e.u1 = u;
            e.v0 = v;
            e.v1 = v + j.delta;
            s.elements_.push_back(e);
            v = e.v1;
        }
    }
    if (std::abs(wsum - 1.0) > 1e-12)
        throw std::invalid_argument("segment widths must sum to 1");
    if (std::holds_alternative<Jump>(pieces.front()) || std::holds_alternative<Jump>(pieces.back()))
        throw std::invalid_argument("shape cannot start or end with a jump");
    s.alpha1_ = v;
    s.dalpha0_ = std::get<Segment>(pieces.front()).slope;
    s.dalpha1_ = std::get<Segment>(pieces.back()).slope;
    s.e0_ = s.e1_ = 1;
    return s;
}

BoundaryShape BoundaryShape::analytic(RealFn alpha, double dalpha0, double dalpha1, double e0,
                                      double e1) {
    BoundaryShape s;
    s.piecewise_ = false;
    Element e;
    e.kind = Element::Kind::Curved;
    e.u0 = 0;
    e.u1 = 1;
    e.v0 = alpha(0.0);
    e.v1 = alpha(1.0);
    e.alpha = alpha;
    if (std::abs(e.v0) > 1e-12)
        throw std::invalid_argument("alpha(0) must be 0");
    s.elements_.push_back(std::move(e));
    s.alpha1_ = s.elements_.back().v1;
    s.dalpha0_ = dalpha0;
    s.dalpha1_ = dalpha1;
    s.e0_ = e0;
    s.e1_ = e1;
    return s;
}

double BoundaryShape::alpha(double u) const {
    if (u < 0 || u > 1)
        throw std::out_of_range("alpha argument outside [0,1]");
    // scan from the right so that u at a jump location picks the post-jump
    // segment (right-continuity)
    for (auto it = elements_.rbegin(); it != elements_.rend(); ++it) {
        const Element& e = *it;
        if (e.kind == Element::Kind::Gap)
            continue;
        if (u >= e.u0) {
            if (e.kind == Element::Kind::Curved)
                return e.alpha(u);
            return e.v0 + e.slope * (std::min(u, e.u1) - e.u0);
        }
    }
    return 0.0;
}

std::vector<std::pair<double, double>> BoundaryShape::frozen_intervals() const {
    std::vector<std::pair<double, double>> out;
    for (const Element& e : elements_) {
        if (e.kind != Element::Kind::Linear || e.slope != 1.0)
            continue;
        if (!out.empty() && out.back().second == e.v0)
            out.back().second = e.v1;  // merge adjacent slope-1 stretches
        else
            out.emplace_back(e.v0, e.v1);
    }
    return out;
}

std::vector<std::pair<double, double>> BoundaryShape::gap_intervals() const {
    std::vector<std::pair<double, double>> out;
    for (const Element& e : elements_)
        if (e.kind == Element::Kind::Gap)
            out.emplace_back(e.v0, e.v1);
    return out;
}

StartSequence BoundaryShape::realize(long n) const {
    if (n < 1)
        throw std::invalid_argument("realize needs n >= 1");
    for (const Element& e : elements_)
        if (e.kind == Element::Kind::Gap && n < std::ceil(1.0 / (e.v1 - e.v0)))
            throw std::invalid_argument(
                "n below the jump-height guard (need n >= ceil(1/delta))");
    std::vector<long> a(n + 1);
    for (long i = 0; i <= n; ++i)
        a[i] = static_cast<long>(std::floor(n * alpha(static_cast<double>(i) / n) + 1e-9));
    for (long i = 0; i < n; ++i)
        if (a[i + 1] <= a[i])
            throw std::invalid_argument("n too small to realize this shape strictly");
    return StartSequence(std::move(a));
}

double BoundaryShape::moment(int k) const {
    double m = 0;
    for (const Element& e : elements_) {
        switch (e.kind) {
            case Element::Kind::Gap:
                break;
            case Element::Kind::Linear:
                // integral of a linear ramp's k-th power
                m += (e.u1 - e.u0) * (std::pow(e.v1, k + 1) - std::pow(e.v0, k + 1)) /
                     ((k + 1) * (e.v1 - e.v0));
                break;
            case Element::Kind::Curved:
                m += integrate([&](double u) { return std::pow(e.alpha(u), k); }, e.u0, e.u1);
                break;
        }
    }
    return m;
}

StartDensity density_of(const BoundaryShape& shape, int kmax) {
    StartDensity d;
    for (int k = 0; k <= kmax; ++k)
        d.moments.push_back(shape.moment(k));
    d.rho = [shape](double v) -> double {
        for (const Element& e : shape.elements()) {
            if (v < e.v0 || v > e.v1)
                continue;
            if (e.kind == Element::Kind::Gap)
                return 0.0;
            if (e.kind == Element::Kind::Linear)
                return 1.0 / e.slope;
            // invert alpha by bisection, then rho = 1/alpha'(u) by central
            // differences
            double lo = e.u0, hi = e.u1;
            for (int it = 0; it < 80; ++it) {
                double mid = 0.5 * (lo + hi);
                (e.alpha(mid) < v ? lo : hi) = mid;
            }
            double u = 0.5 * (lo + hi);
            double h = 1e-6;
            double ul = std::max(e.u0, u - h), ur = std::min(e.u1, u + h);
            double da = (e.alpha(ur) - e.alpha(ul)) / (ur - ul);
            return 1.0 / da;
        }
        return 0.0;
    };
    return d;
}

namespace {

double parse_kv(std::istringstream& in, const std::string& want) {
    std::string tok;
    if (!(in >> tok) || tok.rfind(want + "=", 0) != 0)
        throw std::invalid_argument("expected " + want + "=VALUE in shape spec");
    return std::stod(tok.substr(want.size() + 1));
}

}  // namespace

BoundaryShape parse_shape_text(const std::string& text) {
    std::vector<BoundaryShape::Piece> pieces;
    std::istringstream lines(text);
    std::string line;
    bool saw_curve = false;
    BoundaryShape curve_shape = BoundaryShape::piecewise({BoundaryShape::Segment{1.0, 1.0}});
    while (std::getline(lines, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream in(line);
        std::string head;
        if (!(in >> head))
            continue;
        if (head == "piece") {
            double w = parse_kv(in, "width");
            std::string rest;
            in >> rest;
            double slope = 1.0;
            if (rest != "frozen") {
                if (rest.rfind("slope=", 0) != 0)
                    throw std::invalid_argument("piece needs slope=S or frozen");
                slope = std::stod(rest.substr(6));
            }
            pieces.push_back(BoundaryShape::Segment{w, slope});
        } else if (head == "jump") {
            pieces.push_back(BoundaryShape::Jump{parse_kv(in, "delta")});
        } else if (head == "curve") {
            std::string kind;
            in >> kind;
            if (kind == "quadratic") {
                double p = parse_kv(in, "p"), q = parse_kv(in, "q");
                if (parse_kv(in, "width") != 1.0)
                    throw std::invalid_argument("curve pieces must have width=1");
                curve_shape = BoundaryShape::analytic(
                    [p, q](double u) { return p * u + q * u * u; }, p, p + 2 * q, 1.0, 1.0);
            } else if (kind == "power") {
                double a = parse_kv(in, "a");
                if (a <= 0 || a >= 1)
                    throw std::invalid_argument("power exponent must be in (0,1)");
                if (parse_kv(in, "width") != 1.0)
                    throw std::invalid_argument("curve pieces must have width=1");
                curve_shape = BoundaryShape::analytic(
                    [a](double u) { return std::pow(u, a) / a; },
                    std::numeric_limits<double>::infinity(), 1.0, a, 1.0);
            } else {
                throw std::invalid_argument("unknown curve kind: " + kind);
            }
            saw_curve = true;
        } else {
            throw std::invalid_argument("unknown shape directive: " + head);
        }
    }
    if (saw_curve) {
        if (!pieces.empty())
            throw std::invalid_argument("curve directive must be the only piece");
        return curve_shape;
    }
    return BoundaryShape::piecewise(pieces);
}

BoundaryShape load_shape_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open shape file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_shape_text(buf.str());
}

}  // namespace nilp
