#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gb/core/problem.hpp"
#include "gb/core/run_record.hpp"
#include "gb/operators/crossover.hpp"
#include "gb/operators/moves.hpp"

namespace gb::engine {

struct GbConfig {
    int teams = 4;             // TN
    int players_per_team = 12; // PT
    int custom_training_threshold = 6;    // stalled sessions before captain-assisted training
    int special_transfer_threshold = 12;  // stalled sessions before a forced team change
    // Empty pool / unset crossover pick the defaults for the problem family:
    // permutations train with {2-opt, 3-opt, swap, vertex insertion} and cross
    // with HX; routed problems train with {2-opt, vertex insertion intra+inter,
    // swap inter} and cross with SRX; clustered problems use the intra-route
    // pair {vertex insertion, swap} with cluster-level SRX.
    std::vector<ops::MoveKind> move_pool;
    std::optional<ops::CrossoverKind> custom_crossover;
    std::uint64_t max_evaluations = 0;  // 0 = no cap (safety valve for smoke runs)
};

std::vector<ops::MoveKind> default_move_pool(const Problem& problem);
ops::CrossoverKind default_crossover(const Problem& problem);

struct Player {
    Genotype genotype;
    Quality quality;
    int stagnation = 0;  // consecutive training sessions without net improvement
};

struct Team {
    std::vector<Player> players;  // kept sorted by quality descending
    ops::MoveKind coach = ops::MoveKind::TwoOpt;
    int points = 0;
    double strength = 0.0;  // TQ: mean player quality
    std::size_t captain = 0;

    void sort_players();
    void recompute_strength();
    void elect_captain(RngStream& rng);  // random among tied best
};

// End-of-season quantities compared by the stop rule.
struct SeasonSnapshot {
    double strength_sum = 0.0;  // sum of TQ over teams
    double captain_sum = 0.0;   // sum of captain qualities
    double best_f = 0.0;
};

struct League {
    std::vector<Team> teams;
    int season = 0;
    double best_f = 0.0;
    Genotype best_genotype;
    std::uint64_t evals_at_best = 0;

    SeasonSnapshot snapshot() const;
    std::size_t player_count() const;
};

// One match day pairing: (team a, team b) indices. A half-season is a single
// round robin; with an odd team count the circle method inserts a bye, so
// every team still plays TN-1 matches per half.
std::vector<std::vector<std::pair<int, int>>> round_robin_schedule(int teams);

League initialize_league(const Problem& problem, const GbConfig& config, RngStream& rng,
                         EvaluationCounter& counter);

// Hill-climbing with the coach's move: only strict quality improvements are
// accepted, and the session ends after the stall budget of consecutive
// failures. The player's stagnation counter increases when the session made
// no net progress and resets otherwise.
void training_session(Player& player, ops::MoveKind coach, const Problem& problem, RngStream& rng,
                      EvaluationCounter& counter, League& league);

// Captain-assisted crossover: the first child replaces the player whatever
// its quality, as long as it is feasible. The stagnation counter is not
// touched here.
void custom_training(Player& player, const Player& captain, ops::CrossoverKind crossover,
                     const Problem& problem, RngStream& rng, EvaluationCounter& counter,
                     League& league);

// PT positional duels between quality-sorted teams; strictly better quality
// scores a goal. Returns league points (3 win / 1 draw each / 0 loss).
std::pair<int, int> play_match(const Team& a, const Team& b);

// Standings order: points, then strength, then a seeded random tie-break.
std::vector<int> standings(const League& league, RngStream& rng);

// Half-season market: for r = 1..TN/2 the r-th placed team trades its r-th
// worst player for the r-th best player of the r-th team from the bottom.
// With an odd team count the middle team sits out.
void transfer_period(League& league, const std::vector<int>& order, RngStream& rng);

// Swaps a stalled player with a random player of a random other team and
// resets both stagnation counters.
void special_transfer(League& league, int team, std::size_t player, RngStream& rng);

// Every bottom-half team redraws its training move from the pool.
void fire_coaches(League& league, const std::vector<int>& order,
                  const std::vector<ops::MoveKind>& pool, RngStream& rng);

void run_season(League& league, const Problem& problem, const GbConfig& config, RngStream& rng,
                EvaluationCounter& counter);

// Stop once strength sum, captain sum and best value all failed to improve
// over the previous season.
bool check_termination(const SeasonSnapshot& previous, const SeasonSnapshot& current);

RunRecord gb_run(const Problem& problem, const GbConfig& config, std::uint64_t seed);

}  // namespace gb::engine
