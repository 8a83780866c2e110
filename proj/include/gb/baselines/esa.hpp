#pragma once

#include "gb/core/problem.hpp"
#include "gb/core/run_record.hpp"

namespace gb::baselines {

// Initial annealing temperature: -sup(delta f) / ln(p), where sup(delta f) is
// the objective gap between the worst and best member of the initial
// population and p the acceptance level (0.95 here).
double esa_initial_temperature(double sup_delta_f, double p = 0.95);

// Evolutionary simulated annealing: 100 independent Metropolis chains sharing
// one best-so-far record and one geometric temperature schedule (x0.95 per
// sweep). Successors come from vertex insertion; the run ends once the shared
// stall budget has expired and the temperature yields effectively zero
// acceptance.
RunRecord esa_run(const Problem& problem, std::uint64_t seed);

}  // namespace gb::baselines
