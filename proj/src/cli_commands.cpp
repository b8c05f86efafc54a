#include "nilp/cli_commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "nilp/asymptotics.hpp"
#include "nilp/curve.hpp"
#include "nilp/exact_matrix.hpp"
#include "nilp/onepoint.hpp"
#include "nilp/sampler.hpp"
#include "nilp/shape.hpp"

namespace nilp {

namespace {

StartSequence resolve_sequence(const RunConfig& cfg) {
    if (!cfg.seq.empty())
        return StartSequence(cfg.seq);
    if (cfg.shape_path.empty() || cfg.n_list.empty())
        throw std::invalid_argument("need either --seq or --shape together with --n");
    return load_shape_file(cfg.shape_path).realize(cfg.n_list.front());
}

void write_output(const RunConfig& cfg, const std::string& name, const std::string& payload) {
    if (cfg.out_dir.empty()) {
        std::cout << payload;
        return;
    }
    std::filesystem::create_directories(cfg.out_dir);
    std::ofstream out(std::filesystem::path(cfg.out_dir) / name);
    out << payload;
}

}  // namespace

int cmd_partition(const RunConfig& cfg) {
    StartSequence seq = resolve_sequence(cfg);
    const Rational dA = det_exact(lgv_A(seq));
    const Rational dAt = det_exact(lgv_Atilde(seq));
    const Rational dAh = det_exact(lgv_Ahat(seq));
    const BigInt zp = partition_product(seq);
    const BigInt zb = partition_bform(seq);
    std::cout << "det(A)      = " << dA << '\n'
              << "det(Atilde) = " << dAt << '\n'
              << "det(Ahat)   = " << dAh << '\n'
              << "Delta ratio = " << zp << '\n'
              << "b-form      = " << zb << '\n';
    if (dA != Rational(zp) || dAt != dA || dAh != dA || zb != zp) {
        std::cerr << "partition routes disagree\n";
        return kInvariantViolation;
    }
    return kOk;
}

int cmd_onepoint(const RunConfig& cfg) {
    StartSequence seq = resolve_sequence(cfg);
    TableKind kind;
    if (cfg.kind == "H")
        kind = TableKind::H;
    else if (cfg.kind == "Htilde")
        kind = TableKind::Htilde;
    else if (cfg.kind == "Hhat")
        kind = TableKind::Hhat;
    else if (cfg.kind == "Hcheck")
        kind = TableKind::Hcheck;
    else
        throw std::invalid_argument("--kind must be H, Htilde, Hhat or Hcheck");
    write_output(cfg, "onepoint.csv", table_to_csv(make_table(kind, seq)));
    return kOk;
}

int cmd_arctic(const RunConfig& cfg) {
    if (cfg.shape_path.empty())
        throw std::invalid_argument("arctic needs --shape");
    BoundaryShape shape = load_shape_file(cfg.shape_path);
    Resolvent res(shape);
    const auto ports = portions(res, cfg.grid);
    write_output(cfg, "portions.csv", portions_to_csv(ports));
    const SpecialPoints sp = special_points(shape);
    std::cerr.precision(12);
    std::cerr << "portions: " << ports.size() << '\n'
              << "(X1,Y1) = (" << sp.X1 << ", " << sp.Y1 << ")\n"
              << "(X0,Y0) = (" << sp.X0 << ", " << sp.Y0 << ")  [" << sp.case0 << "]\n"
              << "(Xinf,Yinf) = (" << sp.Xinf << ", " << sp.Yinf << ")  [" << sp.caseinf
              << "]\n";
    for (const auto& p : ports)
        if (p.conjectured)
            std::cerr << "portion " << portion_kind_name(p.kind)
                      << " uses the conjectured interior continuation\n";
    if (cfg.svg) {
        std::vector<TangentLine> fans;
        for (int i = 1; i < 8; ++i)
            fans.push_back(tangent_at(res, shape.alpha1() + 0.3 * i));
        write_output(cfg, "portions.svg",
                     portions_to_svg(ports, shape.alpha1(), fans, cfg.triangular));
    }
    return kOk;
}

int cmd_converge(const RunConfig& cfg) {
    if (cfg.shape_path.empty() || cfg.n_list.empty())
        throw std::invalid_argument("converge needs --shape and --n");
    BoundaryShape shape = load_shape_file(cfg.shape_path);
    const SpecialPoints sp = special_points(shape);
    const double lo = sp.X1 + 0.1 * (shape.alpha1() - sp.X1);
    const double hi = shape.alpha1() - 0.1 * (shape.alpha1() - sp.X1);
    const auto rows = convergence_study(shape, cfg.n_list, Family::I, lo, hi, 13);
    write_output(cfg, "converge.csv", convergence_csv(rows));
    return kOk;
}

int cmd_sample(const RunConfig& cfg) {
    StartSequence seq = resolve_sequence(cfg);
    const auto samples = sample_ensemble(seq, cfg.samples, cfg.seed);
    write_output(cfg, "samples.txt", samples_to_text(samples));
    if (cfg.svg) {
        if (cfg.shape_path.empty())
            throw std::invalid_argument("sample --svg needs --shape for the predicted curve");
        Resolvent res(load_shape_file(cfg.shape_path));
        write_output(cfg, "overlay.svg", overlay_svg(seq, samples, portions(res, cfg.grid)));
    }
    return kOk;
}

int cmd_selftest(const RunConfig& cfg) {
    int failures = 0;
    auto check = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "ok   " : "FAIL ") << what << '\n';
        if (!ok)
            ++failures;
    };
    std::mt19937_64 rng(cfg.seed);
    for (int rep = 0; rep < 25; ++rep) {
        const int n = 1 + static_cast<int>(rng() % 6);
        std::vector<long> a{0};
        long v = 0;
        for (int i = 0; i < n; ++i)
            a.push_back(v += 1 + static_cast<long>(rng() % 3));
        StartSequence seq(a);
        const BigInt z = partition_product(seq);
        check(det_exact(lgv_A(seq)) == Rational(z) && partition_bform(seq) == z,
              "partition identity chain " + std::to_string(rep));
        bool sums = true;
        for (long ell = n; ell <= seq.last(); ++ell)
            sums = sums && (H(seq, ell) + Htilde(seq, ell - 1) == Rational(1));
        check(sums, "sum rule " + std::to_string(rep));
    }
    {
        BoundaryShape shape =
            BoundaryShape::piecewise({BoundaryShape::Segment{1.0, 3.0}});
        Resolvent res(shape);
        double worst = 0;
        for (const auto& p : portions(res, 50))
            for (const auto& s : p.samples)
                worst = std::max(worst, std::abs(s.x * s.Y + (1 - s.x) * (s.X - s.t)));
        check(worst < 1e-9, "tangency identity");
        const SpecialPoints sp = special_points(shape);
        check(std::abs(sp.X1 - 2) < 1e-9 && std::abs(sp.X0 - 3) < 1e-9, "special points 3u");
    }
    {
        StartSequence seq({0, 2, 4});
        check(uniformity_pvalue(seq, sample_ensemble(seq, 20000, cfg.seed)) > 0.01,
              "sampler uniformity (0,2,4)");
    }
    return failures == 0 ? kOk : kInvariantViolation;
}

}  // namespace nilp
