#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nilp {

/// Exit codes shared by all subcommands.
enum ExitCode { kOk = 0, kConfigError = 2, kInvariantViolation = 3, kSizeGuard = 4 };

struct RunConfig {
    std::string shape_path;
    std::vector<long> seq;
    std::vector<long> n_list;
    std::string kind = "H";
    int grid = 400;
    double tol = 1e-9;
    std::uint64_t seed = 1;
    std::size_t samples = 1000;
    std::string out_dir;
    bool svg = false;
    bool triangular = false;
};

int cmd_partition(const RunConfig& cfg);
int cmd_onepoint(const RunConfig& cfg);
int cmd_arctic(const RunConfig& cfg);
int cmd_converge(const RunConfig& cfg);
int cmd_sample(const RunConfig& cfg);
int cmd_selftest(const RunConfig& cfg);

}  // namespace nilp
