#include <CLI11.hpp>
#include <iostream>
#include <stdexcept>

#include "nilp/cli_commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact and asymptotic machinery for non-intersecting lattice paths"};
    app.require_subcommand(1);

    nilp::RunConfig cfg;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--shape", cfg.shape_path, "shape spec file");
        sub->add_option("--seq", cfg.seq, "explicit start sequence")->delimiter(',');
        sub->add_option("--n", cfg.n_list, "realization size(s)")->delimiter(',');
        sub->add_option("--grid", cfg.grid, "samples per curve portion");
        sub->add_option("--tol", cfg.tol, "numeric tolerance");
        sub->add_option("--seed", cfg.seed, "RNG seed");
        sub->add_option("--samples", cfg.samples, "ensemble size");
        sub->add_option("--kind", cfg.kind, "one-point kind: H, Htilde, Hhat, Hcheck");
        sub->add_option("--out", cfg.out_dir, "output directory (default: stdout)");
        sub->add_flag("--svg", cfg.svg, "also emit SVG figures");
        sub->add_flag("--triangular", cfg.triangular, "triangular-lattice frame");
    };

    int (*handler)(const nilp::RunConfig&) = nullptr;
    for (auto& [name, fn] : {std::pair<const char*, int (*)(const nilp::RunConfig&)>
                                 {"partition", nilp::cmd_partition},
                             {"onepoint", nilp::cmd_onepoint},
                             {"arctic", nilp::cmd_arctic},
                             {"converge", nilp::cmd_converge},
                             {"sample", nilp::cmd_sample},
                             {"selftest", nilp::cmd_selftest}}) {
        CLI::App* sub = app.add_subcommand(name);
        add_common(sub);
        auto fn_copy = fn;
        sub->callback([&handler, fn_copy] { handler = fn_copy; });
    }

    try {
        app.parse(argc, argv);
        return handler(cfg);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : nilp::kConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        const std::string msg = e.what();
        if (msg.find("guard") != std::string::npos)
            return nilp::kSizeGuard;
        return nilp::kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return nilp::kInvariantViolation;
    }
}
