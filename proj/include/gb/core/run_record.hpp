#pragma once

#include <cstdint>
#include <string>

namespace gb {

// Outcome of one seeded trial.
struct RunRecord {
    std::string algorithm;
    std::string instance;
    std::uint64_t seed = 0;
    double best_f = 0.0;
    std::uint64_t evals_at_best = 0;  // counter value when the best was found
    std::uint64_t total_evals = 0;
    double wall_seconds = 0.0;
};

}  // namespace gb
