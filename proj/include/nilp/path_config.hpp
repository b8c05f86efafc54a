#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nilp/sequences.hpp"

namespace nilp {

enum class Step : std::uint8_t { West = 0, North = 1 };

/// One NILP configuration in the west/north family: path i runs from
/// (a_i, 0) to (0, i), so its step word has a_i west and i north steps.
struct PathConfiguration {
    std::vector<std::vector<Step>> steps;

    /// Vertices visited by path i, starting point included.
    std::vector<std::pair<long, long>> vertices(const StartSequence& seq, int i) const;

    /// Compact run-length text, one path per line (e.g. "2W 1N 3W").
    std::string to_text() const;

    /// Canonical key for hashing/counting distinct configurations.
    std::string key() const;
};

bool is_valid_configuration(const StartSequence& seq, const PathConfiguration& cfg);

/// Size guard for the exhaustive enumerator: a_n <= 12 and n <= 5.
bool within_brute_force_guard(const StartSequence& seq);

std::vector<PathConfiguration> brute_force_enumerate(const StartSequence& seq);
long brute_force_count(const StartSequence& seq);

}  // namespace nilp
