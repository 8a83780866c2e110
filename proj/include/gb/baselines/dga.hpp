#pragma once

#include "gb/baselines/ga.hpp"

namespace gb::baselines {

// Island-model GA: subpopulations evolve independently and, whenever one of
// them improves the global best, that individual replaces the worst member of
// every other subpopulation at the generation boundary.
struct DgaConfig {
    std::string id = "dga";
    int subpop_size = 12;
    std::vector<GaConfig> subpops;
    std::uint64_t max_evaluations = 0;
};

// Four conventional-parameter islands: pc/pm of 95/5, 90/10, 80/20 and 75/25
// percent, half-elitist survivors, OX (or SRX) with one shared mutation move.
DgaConfig dga1_config(const Problem& problem);

// Four islands with the golden-ball operator set: GA2 parameters and one
// distinct mutation move per island.
DgaConfig dga2_config(const Problem& problem);

RunRecord dga_run(const Problem& problem, const DgaConfig& config, std::uint64_t seed);

}  // namespace gb::baselines
