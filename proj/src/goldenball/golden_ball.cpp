#include "gb/goldenball/golden_ball.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>

#include "gb/core/errors.hpp"

namespace gb::engine {

std::vector<ops::MoveKind> default_move_pool(const Problem& problem) {
    using ops::MoveKind;
    if (problem.clustered()) {
        return {MoveKind::VertexInsertionIntra, MoveKind::SwapIntra};
    }
    if (problem.routed()) {
        return {MoveKind::TwoOpt, MoveKind::VertexInsertionIntra, MoveKind::VertexInsertionInter,
                MoveKind::SwapInter};
    }
    return {MoveKind::TwoOpt, MoveKind::ThreeOpt, MoveKind::SwapIntra,
            MoveKind::VertexInsertionIntra};
}

ops::CrossoverKind default_crossover(const Problem& problem) {
    return problem.routed() ? ops::CrossoverKind::SRX : ops::CrossoverKind::HX;
}

void Team::sort_players() {
    std::stable_sort(players.begin(), players.end(),
                     [](const Player& a, const Player& b) { return a.quality.q > b.quality.q; });
}

void Team::recompute_strength() {
    double sum = 0.0;
    for (const Player& p : players) sum += p.quality.q;
    strength = sum / static_cast<double>(players.size());
}

void Team::elect_captain(RngStream& rng) {
    double best = -std::numeric_limits<double>::infinity();
    int tied = 0;
    for (const Player& p : players) {
        if (p.quality.q > best) {
            best = p.quality.q;
            tied = 1;
        } else if (p.quality.q == best) {
            ++tied;
        }
    }
    if (tied == 1) {
        for (std::size_t i = 0; i < players.size(); ++i) {
            if (players[i].quality.q == best) {
                captain = i;
                return;
            }
        }
    }
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < players.size(); ++i) {
        if (players[i].quality.q == best) candidates.push_back(i);
    }
    captain = candidates[rng.index(candidates.size())];
}

SeasonSnapshot League::snapshot() const {
    SeasonSnapshot s;
    for (const Team& t : teams) {
        s.strength_sum += t.strength;
        s.captain_sum += t.players[t.captain].quality.q;
    }
    s.best_f = best_f;
    return s;
}

std::size_t League::player_count() const {
    std::size_t n = 0;
    for (const Team& t : teams) n += t.players.size();
    return n;
}

std::vector<std::vector<std::pair<int, int>>> round_robin_schedule(int teams) {
    // Circle method; -1 is the bye slot when the team count is odd.
    std::vector<int> slots;
    for (int i = 0; i < teams; ++i) slots.push_back(i);
    if (teams % 2 == 1) slots.push_back(-1);
    const int m = static_cast<int>(slots.size());
    std::vector<std::vector<std::pair<int, int>>> rounds;
    for (int r = 0; r < m - 1; ++r) {
        std::vector<std::pair<int, int>> day;
        for (int i = 0; i < m / 2; ++i) {
            const int a = slots[i];
            const int b = slots[m - 1 - i];
            if (a != -1 && b != -1) day.emplace_back(a, b);
        }
        rounds.push_back(std::move(day));
        std::rotate(slots.begin() + 1, slots.end() - 1, slots.end());
    }
    return rounds;
}

namespace {

void track_best(League& league, const Problem& problem, const Genotype& g, const Quality& q,
                const EvaluationCounter& counter) {
    if (q.f >= league.best_f) return;
    if (!problem.feasible(g)) return;
    league.best_f = q.f;
    league.best_genotype = g;
    league.evals_at_best = counter.count();
}

ops::RouteExtendCheck extend_check(const Problem& problem) {
    return [&problem](std::span<const int> prefix, int next) {
        return problem.can_extend_route(prefix, next);
    };
}

std::pair<Genotype, Genotype> cross(const Problem& problem, ops::CrossoverKind kind,
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
            if (problem.clustered()) {
                return ops::srx_crossover_clustered(
                    a, b, mode, [&problem](int node) { return problem.cluster_of(node); },
                    extend_check(problem));
            }
            return ops::srx_crossover(a, b, mode, extend_check(problem));
        }
    }
    return {a, b};
}

void validate_pool(const Problem& problem, const std::vector<ops::MoveKind>& pool) {
    if (pool.empty()) throw ValidationError("empty move pool");
    if (!problem.routed()) {
        for (ops::MoveKind kind : pool) {
            if (kind == ops::MoveKind::VertexInsertionInter || kind == ops::MoveKind::SwapInter) {
                throw ValidationError("inter-route moves require a routed problem");
            }
        }
    }
}

}  // namespace

League initialize_league(const Problem& problem, const GbConfig& config, RngStream& rng,
                         EvaluationCounter& counter) {
    if (config.teams < 2) throw ValidationError("league needs at least two teams");
    if (config.players_per_team < 1) throw ValidationError("teams need at least one player");
    if (config.custom_training_threshold <= 0 || config.special_transfer_threshold <= 0) {
        throw ValidationError("stagnation thresholds must be positive");
    }

    const auto pool = config.move_pool.empty() ? default_move_pool(problem) : config.move_pool;
    validate_pool(problem, pool);

    const int total = config.teams * config.players_per_team;
    std::vector<Player> players;
    players.reserve(total);

    League league;
    league.best_f = std::numeric_limits<double>::infinity();
    for (int i = 0; i < total; ++i) {
        Genotype g = problem.random_solution(rng);
        const Quality q = evaluate(problem, g, counter);
        track_best(league, problem, g, q, counter);
        players.push_back(Player{std::move(g), q, 0});
    }

    // Deal the players out uniformly at random.
    std::vector<std::size_t> order(players.size());
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    league.teams.resize(config.teams);
    std::size_t next = 0;
    for (Team& team : league.teams) {
        for (int j = 0; j < config.players_per_team; ++j) {
            team.players.push_back(std::move(players[order[next++]]));
        }
        team.coach = pool[rng.index(pool.size())];
        team.points = 0;
        team.sort_players();
        team.recompute_strength();
        team.elect_captain(rng);
    }
    return league;
}

void training_session(Player& player, ops::MoveKind coach, const Problem& problem, RngStream& rng,
                      EvaluationCounter& counter, League& league) {
    const std::uint64_t budget = stall_budget(problem.size());
    std::uint64_t fails = 0;
    bool improved = false;
    while (fails < budget) {
        Genotype next = ops::apply_random_move(player.genotype, coach, rng, &problem);
        const Quality q = evaluate(problem, next, counter);
        track_best(league, problem, next, q, counter);
        if (q.better_than(player.quality) && problem.feasible(next)) {
            player.genotype = std::move(next);
            player.quality = q;
            fails = 0;
            improved = true;
        } else {
            ++fails;
        }
    }
    player.stagnation = improved ? 0 : player.stagnation + 1;
}

void custom_training(Player& player, const Player& captain, ops::CrossoverKind crossover,
                     const Problem& problem, RngStream& rng, EvaluationCounter& counter,
                     League& league) {
    try {
        auto children = cross(problem, crossover, player.genotype, captain.genotype, rng);
        Genotype child = std::move(children.first);
        const Quality q = evaluate(problem, child, counter);
        track_best(league, problem, child, q, counter);
        if (!problem.feasible(child)) return;
        // Replacement is unconditional: the jump matters, not the quality.
        player.genotype = std::move(child);
        player.quality = q;
    } catch (const InfeasibleOffspringError&) {
        // keep the player; a later session or transfer will move it along
    }
}

std::pair<int, int> play_match(const Team& a, const Team& b) {
    int goals_a = 0;
    int goals_b = 0;
    const std::size_t duels = std::min(a.players.size(), b.players.size());
    for (std::size_t i = 0; i < duels; ++i) {
        if (a.players[i].quality.q > b.players[i].quality.q) {
            ++goals_a;
        } else if (b.players[i].quality.q > a.players[i].quality.q) {
            ++goals_b;
        }
    }
    if (goals_a > goals_b) return {3, 0};
    if (goals_b > goals_a) return {0, 3};
    return {1, 1};
}

std::vector<int> standings(const League& league, RngStream& rng) {
    struct Row {
        int team;
        int points;
        double strength;
        std::uint64_t lot;
    };
    std::vector<Row> rows;
    for (int t = 0; t < static_cast<int>(league.teams.size()); ++t) {
        rows.push_back({t, league.teams[t].points, league.teams[t].strength, rng.next_u64()});
    }
    std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
        if (x.points != y.points) return x.points > y.points;
        if (x.strength != y.strength) return x.strength > y.strength;
        return x.lot < y.lot;
    });
    std::vector<int> order;
    for (const Row& r : rows) order.push_back(r.team);
    return order;
}

void transfer_period(League& league, const std::vector<int>& order, RngStream& rng) {
    const int tn = static_cast<int>(league.teams.size());
    const int pt = static_cast<int>(league.teams[0].players.size());
    for (Team& team : league.teams) team.sort_players();
    const int pairs = std::min(tn / 2, pt);  // both rank positions must exist
    for (int r = 1; r <= pairs; ++r) {
        Team& top = league.teams[order[r - 1]];
        Team& bottom = league.teams[order[tn - r]];
        std::swap(top.players[pt - r], bottom.players[r - 1]);
    }
    for (Team& team : league.teams) {
        team.sort_players();
        team.recompute_strength();
        team.elect_captain(rng);
    }
}

void special_transfer(League& league, int team, std::size_t player, RngStream& rng) {
    const int tn = static_cast<int>(league.teams.size());
    int other = static_cast<int>(rng.index(tn - 1));
    if (other >= team) ++other;
    Team& from = league.teams[team];
    Team& to = league.teams[other];
    const std::size_t target = rng.index(to.players.size());
    std::swap(from.players[player], to.players[target]);
    from.players[player].stagnation = 0;
    to.players[target].stagnation = 0;
    for (Team* t : {&from, &to}) {
        t->recompute_strength();
        t->elect_captain(rng);
    }
}

void fire_coaches(League& league, const std::vector<int>& order,
                  const std::vector<ops::MoveKind>& pool, RngStream& rng) {
    const int tn = static_cast<int>(league.teams.size());
    for (int rank = tn - tn / 2; rank < tn; ++rank) {
        league.teams[order[rank]].coach = pool[rng.index(pool.size())];
    }
}

namespace {

// Stagnation scan run after each match day's training blocks and again after
// the market closes; transfers reset the counters, so a stalled player moves
// exactly once.
void process_special_transfers(League& league, const GbConfig& config, RngStream& rng) {
    const int tn = static_cast<int>(league.teams.size());
    for (int t = 0; t < tn; ++t) {
        for (std::size_t j = 0; j < league.teams[t].players.size(); ++j) {
            if (league.teams[t].players[j].stagnation >= config.special_transfer_threshold) {
                special_transfer(league, t, j, rng);
            }
        }
    }
}

}  // namespace

void run_season(League& league, const Problem& problem, const GbConfig& config, RngStream& rng,
                EvaluationCounter& counter) {
    const auto pool = config.move_pool.empty() ? default_move_pool(problem) : config.move_pool;
    const auto crossover =
        config.custom_crossover ? *config.custom_crossover : default_crossover(problem);

    for (Team& team : league.teams) team.points = 0;
    const auto rounds = round_robin_schedule(static_cast<int>(league.teams.size()));

    for (int half = 0; half < 2; ++half) {
        for (const auto& day : rounds) {
            for (int t = 0; t < static_cast<int>(league.teams.size()); ++t) {
                Team& team = league.teams[t];
                for (Player& player : team.players) {
                    training_session(player, team.coach, problem, rng, counter, league);
                    team.elect_captain(rng);
                    if (player.stagnation >= config.custom_training_threshold) {
                        custom_training(player, team.players[team.captain], crossover, problem,
                                        rng, counter, league);
                        team.elect_captain(rng);
                    }
                }
                team.recompute_strength();
                // Stalled players change team as soon as their block ends.
                for (std::size_t j = 0; j < team.players.size(); ++j) {
                    if (team.players[j].stagnation >= config.special_transfer_threshold) {
                        special_transfer(league, t, j, rng);
                    }
                }
            }
            for (Team& team : league.teams) {
                team.sort_players();
                team.elect_captain(rng);
            }
            for (auto [a, b] : day) {
                auto [pa, pb] = play_match(league.teams[a], league.teams[b]);
                league.teams[a].points += pa;
                league.teams[b].points += pb;
            }
        }
        const auto order = standings(league, rng);
        transfer_period(league, order, rng);
        process_special_transfers(league, config, rng);
        fire_coaches(league, order, pool, rng);
    }
    league.season++;
}

bool check_termination(const SeasonSnapshot& previous, const SeasonSnapshot& current) {
    return current.strength_sum <= previous.strength_sum &&
           current.captain_sum <= previous.captain_sum && !(current.best_f < previous.best_f);
}

RunRecord gb_run(const Problem& problem, const GbConfig& config, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    RngStream rng = RngStream(seed).derive("golden-ball");
    EvaluationCounter counter;

    League league = initialize_league(problem, config, rng, counter);
    SeasonSnapshot previous = league.snapshot();
    for (;;) {
        run_season(league, problem, config, rng, counter);
        const SeasonSnapshot current = league.snapshot();
        if (check_termination(previous, current)) break;
        if (config.max_evaluations > 0 && counter.count() >= config.max_evaluations) break;
        previous = current;
    }

    RunRecord record;
    record.algorithm = "gb";
    record.instance = problem.name();
    record.seed = seed;
    record.best_f = league.best_f;
    record.evals_at_best = league.evals_at_best;
    record.total_evals = counter.count();
    record.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return record;
}

}  // namespace gb::engine
