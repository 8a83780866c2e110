#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "gb/core/problem.hpp"

namespace gb::richvrp {

inline constexpr double kForbiddenCost = 1e10;

// Asymmetric clustered VRP with simultaneous pickup and delivery, peak/valley
// leg costs and forbidden arcs.
//
// All vehicles leave the depot at 6:00. A leg's cost doubles as its duration
// in minutes; legs departing inside the peak window [8:00, 10:00) are priced
// from the peak matrix, all others from the valley matrix. A solution is
// feasible when every cluster is served by a single route, the onboard load
// (remaining deliveries plus collected pickups) never exceeds the capacity,
// no forbidden arc is used, and every route is back at the depot by 14:00
// (the workday check can be disabled).
class AcVrpInstance final : public Problem {
  public:
    AcVrpInstance(std::string name, std::vector<std::vector<double>> valley,
                  std::vector<std::vector<double>> peak, std::vector<double> deliveries,
                  std::vector<double> pickups, double capacity, std::vector<int> clusters,
                  std::set<std::pair<int, int>> forbidden, bool enforce_workday = true,
                  std::vector<int> orig_ids = {}, std::uint64_t generator_seed = 0);

    const std::string& name() const override { return name_; }
    int size() const override { return n_; }
    bool routed() const override { return true; }
    bool clustered() const override { return true; }

    double capacity() const { return capacity_; }
    double delivery(int c) const { return deliveries_[c]; }
    double pickup(int c) const { return pickups_[c]; }
    int cluster_of(int node) const override { return clusters_[node]; }
    int cluster_count() const { return cluster_count_; }
    const std::vector<std::vector<double>>& valley_matrix() const { return valley_; }
    const std::vector<std::vector<double>>& peak_matrix() const { return peak_; }
    const std::set<std::pair<int, int>>& forbidden_arcs() const { return forbidden_; }
    bool enforce_workday() const { return enforce_workday_; }
    const std::vector<int>& orig_ids() const { return orig_ids_; }
    std::uint64_t generator_seed() const { return generator_seed_; }
    const std::vector<double>& deliveries() const { return deliveries_; }
    const std::vector<double>& pickups() const { return pickups_; }
    const std::vector<int>& clusters() const { return clusters_; }

    double objective(const Genotype& g) const override;
    bool feasible(const Genotype& g) const override;
    void check_encoding(const Genotype& g) const override;
    Genotype random_solution(RngStream& rng) const override;
    bool can_extend_route(std::span<const int> prefix, int next) const override;

    // Clock-and-load simulation of one route. Returns the priced cost and
    // whether the route satisfies load, forbidden-arc and workday limits.
    std::pair<double, bool> simulate_route(std::span<const int> route) const;

    // Minutes after the 6:00 departure.
    static constexpr double kPeakStart = 120.0;  // 8:00
    static constexpr double kPeakEnd = 240.0;    // 10:00
    static constexpr double kWorkdayEnd = 480.0;  // 14:00

  private:
    double leg_cost(int i, int j, double depart) const {
        return (depart >= kPeakStart && depart < kPeakEnd) ? peak_[i][j] : valley_[i][j];
    }

    std::string name_;
    int n_;
    std::vector<std::vector<double>> valley_;
    std::vector<std::vector<double>> peak_;
    std::vector<double> deliveries_;
    std::vector<double> pickups_;
    double capacity_;
    std::vector<int> clusters_;  // cluster id per node, depot = 0
    int cluster_count_;
    std::set<std::pair<int, int>> forbidden_;
    bool enforce_workday_;
    std::vector<int> orig_ids_;  // generator provenance (position in the master coordinate set)
    std::uint64_t generator_seed_;
};

// One row of the benchmark catalogue: node count, which clusters (or which
// part of each cluster) participate, vehicle capacity and how many forbidden
// arcs each cluster receives.
struct AcVrpSpec {
    std::string name;
    int nodes = 50;
    int clusters = 5;
    double capacity = 240.0;
    int forbidden_per_cluster = 5;
};

// Catalogue lookup by instance name (Osaba_50_1_1 ... Osaba_100_3).
std::optional<AcVrpSpec> acvrp_spec_by_name(const std::string& name);
std::vector<AcVrpSpec> acvrp_catalogue();

// Builds an instance from a master coordinate set of exactly one depot plus
// 100 customers. Valley costs: Euclidean for i < j, and Euclidean scaled by
// 1.2 (j even) or 0.8 (j odd) for the return arc. Peak costs: valley * 1.3
// for i < j, valley * 1.2 / 1.4 for the return arc. Demands follow the
// original id modulo 4; forbidden arcs are drawn per cluster from `seed` and
// carry the sentinel cost in both matrices.
AcVrpInstance generate_acvrp(const std::vector<std::array<double, 2>>& coords,
                             const AcVrpSpec& spec, std::uint64_t seed,
                             bool enforce_workday = true);

}  // namespace gb::richvrp
