#include "gb/baselines/esa.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "gb/baselines/ga.hpp"

namespace gb::baselines {

double esa_initial_temperature(double sup_delta_f, double p) {
    return -sup_delta_f / std::log(p);
}

RunRecord esa_run(const Problem& problem, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    RngStream rng = RngStream(seed).derive("esa");
    EvaluationCounter counter;

    constexpr int kChains = 100;
    constexpr double kCooling = 0.95;
    const ops::MoveKind move = problem.routed() ? ops::MoveKind::VertexInsertionInter
                                                : ops::MoveKind::VertexInsertionIntra;

    auto pop = detail::init_population(problem, kChains, rng, counter);
    const auto [lo, hi] = std::minmax_element(
        pop.members.begin(), pop.members.end(),
        [](const Individual& a, const Individual& b) { return a.quality.f < b.quality.f; });
    const double t0 = esa_initial_temperature(hi->quality.f - lo->quality.f);
    double t = t0;
    // Below this point exp(-dF/T) is numerically zero for any worsening move.
    const double t_floor = 1e-9 * (1.0 + t0);

    Individual best = pop.best;
    std::uint64_t evals_at_best = counter.count();

    const std::uint64_t budget = stall_budget(problem.size());
    std::uint64_t stall = 0;
    while (stall < budget || t > t_floor) {
        bool improved = false;
        for (Individual& chain : pop.members) {
            Genotype next = ops::apply_random_move(chain.genotype, move, rng, &problem);
            if (!problem.feasible(next)) continue;
            const Quality q = evaluate(problem, next, counter);
            const double delta = q.f - chain.quality.f;
            const bool accept =
                delta < 0.0 || (t > 0.0 && rng.uniform01() < std::exp(-delta / t));
            if (!accept) continue;
            chain.genotype = std::move(next);
            chain.quality = q;
            if (q.f < best.quality.f) {
                best = chain;
                evals_at_best = counter.count();
                improved = true;
            }
        }
        t *= kCooling;
        stall = improved ? 0 : stall + 1;
    }

    RunRecord record;
    record.algorithm = "esa";
    record.instance = problem.name();
    record.seed = seed;
    record.best_f = best.quality.f;
    record.evals_at_best = evals_at_best;
    record.total_evals = counter.count();
    record.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return record;
}

}  // namespace gb::baselines
