#include "gb/baselines/dga.hpp"

#include <algorithm>
#include <chrono>

#include "gb/core/errors.hpp"
#include "gb/goldenball/golden_ball.hpp"

namespace gb::baselines {

namespace {

DgaConfig dga_base(const Problem& problem, std::string id) {
    DgaConfig c;
    c.id = std::move(id);
    c.subpop_size = 12;
    c.subpops.assign(4, GaConfig{});
    for (GaConfig& sub : c.subpops) {
        sub.population = c.subpop_size;
        sub.crossover = problem.routed() ? ops::CrossoverKind::SRX : ops::CrossoverKind::OX;
        sub.mutation =
            problem.routed() ? ops::MoveKind::VertexInsertionInter : ops::MoveKind::TwoOpt;
    }
    return c;
}

}  // namespace

DgaConfig dga1_config(const Problem& problem) {
    DgaConfig c = dga_base(problem, "dga1");
    const double pcs[] = {0.95, 0.90, 0.80, 0.75};
    const double pms[] = {0.05, 0.10, 0.20, 0.25};
    for (int i = 0; i < 4; ++i) {
        c.subpops[i].pc = pcs[i];
        c.subpops[i].pm = pms[i];
        c.subpops[i].elitist_fraction = 0.5;
    }
    return c;
}

DgaConfig dga2_config(const Problem& problem) {
    DgaConfig c = dga_base(problem, "dga2");
    const auto moves = engine::default_move_pool(problem);
    for (int i = 0; i < 4; ++i) {
        c.subpops[i].pc = 0.0003;
        c.subpops[i].pm = 1.0;
        c.subpops[i].elitist_fraction = 1.0;
        c.subpops[i].crossover = problem.routed() ? ops::CrossoverKind::SRX : ops::CrossoverKind::HX;
        c.subpops[i].mutation = moves[i % moves.size()];
    }
    return c;
}

RunRecord dga_run(const Problem& problem, const DgaConfig& config, std::uint64_t seed) {
    if (config.subpops.empty()) throw ValidationError("dga needs at least one subpopulation");

    const auto start = std::chrono::steady_clock::now();
    RngStream rng = RngStream(seed).derive(config.id);
    EvaluationCounter counter;

    std::vector<detail::Population> pops;
    for (const GaConfig& sub : config.subpops) {
        pops.push_back(detail::init_population(problem, sub.population, rng, counter));
    }
    Individual global_best = pops[0].best;
    for (const auto& pop : pops) {
        if (pop.best.quality.f < global_best.quality.f) global_best = pop.best;
    }
    std::uint64_t evals_at_best = counter.count();

    const std::uint64_t budget = stall_budget(problem.size());
    std::uint64_t stall = 0;
    while (stall < budget) {
        bool improved = false;
        for (std::size_t s = 0; s < pops.size(); ++s) {
            detail::ga_generation(problem, config.subpops[s], pops[s], rng, counter);
            if (pops[s].best.quality.f < global_best.quality.f) {
                global_best = pops[s].best;
                improved = true;
                // Dynamic topology: the new best is broadcast to every other
                // island, replacing its worst individual.
                for (std::size_t o = 0; o < pops.size(); ++o) {
                    if (o == s) continue;
                    auto worst = std::max_element(pops[o].members.begin(), pops[o].members.end(),
                                                  [](const Individual& a, const Individual& b) {
                                                      return a.quality.f < b.quality.f;
                                                  });
                    *worst = global_best;
                    if (global_best.quality.f < pops[o].best.quality.f) {
                        pops[o].best = global_best;
                    }
                }
            }
        }
        if (improved) {
            stall = 0;
            evals_at_best = counter.count();
        } else {
            ++stall;
        }
        if (config.max_evaluations > 0 && counter.count() >= config.max_evaluations) break;
    }

    RunRecord record;
    record.algorithm = config.id;
    record.instance = problem.name();
    record.seed = seed;
    record.best_f = global_best.quality.f;
    record.evals_at_best = evals_at_best;
    record.total_evals = counter.count();
    record.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return record;
}

}  // namespace gb::baselines
