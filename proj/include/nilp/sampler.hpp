#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nilp/curve.hpp"
#include "nilp/path_config.hpp"

namespace nilp {

struct ChainState {
    StartSequence seq;
    PathConfiguration config;
    std::vector<std::vector<char>> occupied;  // [x][y]
    std::vector<std::vector<std::pair<long, long>>> verts;  // per-path vertex cache
    std::vector<long> corner_offsets;         // cumulative corner-slot counts per path
    std::uint64_t proposals = 0;
    std::uint64_t accepted = 0;
    std::mt19937_64 rng;

    bool valid() const { return is_valid_configuration(seq, config); }
};

/// The lowest configuration: each path hugs the bottom boundary, stepping
/// north only when the path below blocks the way west.
ChainState init_minimal(const StartSequence& seq, std::uint64_t seed = 0);

/// One Metropolis proposal: uniform (path, position); swap a WN/NW corner if
/// the flipped vertex is unoccupied.  Returns whether the move was accepted.
bool flip_step(ChainState& state);

std::vector<PathConfiguration> sample_ensemble(const StartSequence& seq, std::size_t n_samples,
                                               std::uint64_t burn_in, std::uint64_t thin,
                                               std::uint64_t seed);

/// Defaults per the chain size: burn-in 20 n a_n, thinning n a_n.
std::vector<PathConfiguration> sample_ensemble(const StartSequence& seq, std::size_t n_samples,
                                               std::uint64_t seed);

/// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

/// p-value of a chi-square statistic with the given degrees of freedom.
double chi_square_pvalue(double stat, int dof);

/// Uniformity test of sampled configurations against the exhaustive state
/// list; returns the p-value.
double uniformity_pvalue(const StartSequence& seq, const std::vector<PathConfiguration>& samples);

/// Fraction of topmost-path vertices (rescaled by n) lying inside the
/// predicted region inflated by margin: below the upper envelope of the curve
/// portions, or left of the tangency abscissa where the curve meets Y = 1
/// (the frozen-west strip the topmost path traverses toward (0, 1)).
double overlay_inside_fraction(const StartSequence& seq,
                               const std::vector<PathConfiguration>& samples,
                               const std::vector<ArcticPortion>& portions, double margin);

std::string samples_to_text(const std::vector<PathConfiguration>& samples);
std::string overlay_svg(const StartSequence& seq, const std::vector<PathConfiguration>& samples,
                        const std::vector<ArcticPortion>& portions);

}  // namespace nilp
