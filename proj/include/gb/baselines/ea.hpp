#pragma once

#include "gb/baselines/ga.hpp"

namespace gb::baselines {

// Mutation-only evolutionary algorithm: population 100, every individual
// mutated by vertex insertion each generation, survivors 70% elitist / 30%
// random. Same stall budget as the GA family.
RunRecord ea_run(const Problem& problem, std::uint64_t seed);

}  // namespace gb::baselines
