#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gb/core/problem.hpp"
#include "gb/core/run_record.hpp"
#include "gb/operators/crossover.hpp"
#include "gb/operators/moves.hpp"

namespace gb::baselines {

// Generational GA with binary-tournament parent selection and an
// elitist/random survivor split over parents + offspring. The run stops after
// n + n(n+1)/2 consecutive generations without improving the best solution.
struct GaConfig {
    std::string id = "ga";
    int population = 48;
    double pc = 0.95;  // crossover probability, per selected parent pair
    double pm = 0.05;  // mutation probability, per individual per generation
    double elitist_fraction = 0.5;  // survivors: this share elitist, rest uniform random
    ops::CrossoverKind crossover = ops::CrossoverKind::OX;
    ops::MoveKind mutation = ops::MoveKind::TwoOpt;
    std::uint64_t max_evaluations = 0;  // 0 = no cap
};

// Conventional parameters: pc 0.95 / pm 0.05, half-elitist survivors,
// OX + 2-opt on permutations, SRX + inter-route vertex insertion on routes.
GaConfig ga1_config(const Problem& problem);

// Parameters mirroring the golden-ball operator budget: pc 0.0003 / pm 1.0,
// fully elitist survivors, HX or SRX with the same mutation moves.
GaConfig ga2_config(const Problem& problem);

struct Individual {
    Genotype genotype;
    Quality quality;
};

RunRecord ga_run(const Problem& problem, const GaConfig& config, std::uint64_t seed);

// Shared pieces reused by the distributed GA.
namespace detail {

struct Population {
    std::vector<Individual> members;
    Individual best;
};

Population init_population(const Problem& problem, int size, RngStream& rng,
                           EvaluationCounter& counter);

// Index of the better of two uniformly drawn candidates.
std::size_t binary_tournament(const std::vector<Individual>& pop, RngStream& rng);

// One generation: selection, crossover, mutation, survivor selection.
// Returns true when the population's best improved.
bool ga_generation(const Problem& problem, const GaConfig& config, Population& pop,
                   RngStream& rng, EvaluationCounter& counter);

Genotype mutate(const Problem& problem, const Genotype& g, ops::MoveKind kind, RngStream& rng);

std::pair<Genotype, Genotype> ga_crossover(const Problem& problem, ops::CrossoverKind kind,
                                           const Genotype& a, const Genotype& b, RngStream& rng);

}  // namespace detail

}  // namespace gb::baselines
