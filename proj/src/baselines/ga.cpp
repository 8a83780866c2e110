#include "gb/baselines/ga.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>

#include "gb/core/errors.hpp"

namespace gb::baselines {

GaConfig ga1_config(const Problem& problem) {
    GaConfig c;
    c.id = "ga1";
    c.pc = 0.95;
    c.pm = 0.05;
    c.elitist_fraction = 0.5;
    c.crossover = problem.routed() ? ops::CrossoverKind::SRX : ops::CrossoverKind::OX;
    c.mutation =
        problem.routed() ? ops::MoveKind::VertexInsertionInter : ops::MoveKind::TwoOpt;
    return c;
}

GaConfig ga2_config(const Problem& problem) {
    GaConfig c;
    c.id = "ga2";
    c.pc = 0.0003;
    c.pm = 1.0;
    c.elitist_fraction = 1.0;
    c.crossover = problem.routed() ? ops::CrossoverKind::SRX : ops::CrossoverKind::HX;
    c.mutation =
        problem.routed() ? ops::MoveKind::VertexInsertionInter : ops::MoveKind::TwoOpt;
    return c;
}

namespace detail {

Population init_population(const Problem& problem, int size, RngStream& rng,
                           EvaluationCounter& counter) {
    Population pop;
    pop.members.reserve(size);
    for (int i = 0; i < size; ++i) {
        Genotype g = problem.random_solution(rng);
        const Quality q = evaluate(problem, g, counter);
        pop.members.push_back(Individual{std::move(g), q});
    }
    pop.best = *std::min_element(
        pop.members.begin(), pop.members.end(),
        [](const Individual& a, const Individual& b) { return a.quality.f < b.quality.f; });
    return pop;
}

std::size_t binary_tournament(const std::vector<Individual>& pop, RngStream& rng) {
    const std::size_t a = rng.index(pop.size());
    const std::size_t b = rng.index(pop.size());
    return pop[a].quality.q >= pop[b].quality.q ? a : b;
}

Genotype mutate(const Problem& problem, const Genotype& g, ops::MoveKind kind, RngStream& rng) {
    // Routed moves can break feasibility; a few redraws, then give up.
    for (int attempt = 0; attempt < 20; ++attempt) {
        Genotype out = ops::apply_random_move(g, kind, rng, &problem);
        if (problem.feasible(out)) return out;
    }
    return g;
}

std::pair<Genotype, Genotype> ga_crossover(const Problem& problem, ops::CrossoverKind kind,
                                           const Genotype& a, const Genotype& b, RngStream& rng) {
    switch (kind) {
        case ops::CrossoverKind::OX: {
            const int n = a.size();
            int c1 = rng.uniform_int(0, n - 1);
            int c2 = rng.uniform_int(1, n);
            while (c2 <= c1) c2 = rng.uniform_int(1, n);
            return ops::ox_crossover(a, b, c1, c2);
        }
        case ops::CrossoverKind::HX:
            return ops::hx_crossover(a, b);
        case ops::CrossoverKind::SRX:
        case ops::CrossoverKind::LRX: {
            const auto mode =
                kind == ops::CrossoverKind::SRX ? ops::SrxMode::Short : ops::SrxMode::Long;
            auto check = [&problem](std::span<const int> prefix, int next) {
                return problem.can_extend_route(prefix, next);
            };
            if (problem.clustered()) {
                return ops::srx_crossover_clustered(
                    a, b, mode, [&problem](int node) { return problem.cluster_of(node); }, check);
            }
            return ops::srx_crossover(a, b, mode, check);
        }
    }
    return {a, b};
}

bool ga_generation(const Problem& problem, const GaConfig& config, Population& pop,
                   RngStream& rng, EvaluationCounter& counter) {
    const int n = config.population;
    std::vector<Individual> offspring;
    offspring.reserve(n + 1);

    while (static_cast<int>(offspring.size()) < n) {
        const Individual& p1 = pop.members[binary_tournament(pop.members, rng)];
        const Individual& p2 = pop.members[binary_tournament(pop.members, rng)];
        if (rng.bernoulli(config.pc)) {
            bool crossed = false;
            for (int attempt = 0; attempt < 10 && !crossed; ++attempt) {
                try {
                    auto [c1, c2] =
                        ga_crossover(problem, config.crossover, p1.genotype, p2.genotype, rng);
                    if (!problem.feasible(c1) || !problem.feasible(c2)) continue;
                    offspring.push_back(Individual{c1, evaluate(problem, c1, counter)});
                    offspring.push_back(Individual{c2, evaluate(problem, c2, counter)});
                    crossed = true;
                } catch (const InfeasibleOffspringError&) {
                    // redraw parents on the next attempt
                }
            }
            if (!crossed) {
                offspring.push_back(p1);
                offspring.push_back(p2);
            }
        } else {
            offspring.push_back(p1);
            offspring.push_back(p2);
        }
    }
    offspring.resize(n);

    for (Individual& child : offspring) {
        if (!rng.bernoulli(config.pm)) continue;
        Genotype mutant = mutate(problem, child.genotype, config.mutation, rng);
        if (mutant == child.genotype) continue;
        child.quality = evaluate(problem, mutant, counter);
        child.genotype = std::move(mutant);
    }

    // Survivors from parents + offspring: elitist head, uniform tail.
    std::vector<Individual> all = std::move(pop.members);
    all.insert(all.end(), std::make_move_iterator(offspring.begin()),
               std::make_move_iterator(offspring.end()));
    std::stable_sort(all.begin(), all.end(), [](const Individual& a, const Individual& b) {
        return a.quality.f < b.quality.f;
    });
    const int elites = std::min(n, static_cast<int>(std::lround(config.elitist_fraction * n)));
    std::vector<Individual> next(all.begin(), all.begin() + elites);
    std::vector<std::size_t> rest(all.size() - elites);
    std::iota(rest.begin(), rest.end(), elites);
    rng.shuffle(rest);
    for (int i = 0; static_cast<int>(next.size()) < n; ++i) {
        next.push_back(std::move(all[rest[i]]));
    }
    pop.members = std::move(next);

    const Individual& best_now = *std::min_element(
        pop.members.begin(), pop.members.end(),
        [](const Individual& a, const Individual& b) { return a.quality.f < b.quality.f; });
    if (best_now.quality.f < pop.best.quality.f) {
        pop.best = best_now;
        return true;
    }
    return false;
}

}  // namespace detail

RunRecord ga_run(const Problem& problem, const GaConfig& config, std::uint64_t seed) {
    if (config.population < 2) throw ValidationError("population must hold at least 2 individuals");
    if (config.pc < 0 || config.pc > 1 || config.pm < 0 || config.pm > 1) {
        throw ValidationError("pc and pm must lie in [0, 1]");
    }

    const auto start = std::chrono::steady_clock::now();
    RngStream rng = RngStream(seed).derive(config.id);
    EvaluationCounter counter;

    auto pop = detail::init_population(problem, config.population, rng, counter);
    std::uint64_t evals_at_best = counter.count();

    const std::uint64_t budget = stall_budget(problem.size());
    std::uint64_t stall = 0;
    while (stall < budget) {
        const bool improved = detail::ga_generation(problem, config, pop, rng, counter);
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
    record.best_f = pop.best.quality.f;
    record.evals_at_best = evals_at_best;
    record.total_evals = counter.count();
    record.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return record;
}

}  // namespace gb::baselines
