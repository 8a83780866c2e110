#include "gb/baselines/ea.hpp"

namespace gb::baselines {

RunRecord ea_run(const Problem& problem, std::uint64_t seed) {
    GaConfig c;
    c.id = "ea";
    c.population = 100;
    c.pc = 0.0;
    c.pm = 1.0;
    c.elitist_fraction = 0.7;
    c.mutation = problem.routed() ? ops::MoveKind::VertexInsertionInter
                                  : ops::MoveKind::VertexInsertionIntra;
    return ga_run(problem, c, seed);
}

}  // namespace gb::baselines
