#pragma once

#include <vector>

#include "gb/core/problem.hpp"
#include "gb/problems/tsp.hpp"

namespace gb::richvrp {

enum class NodeType { Delivery, Pickup };

// Multiple asymmetric TSP with simultaneous pickup and delivery metadata:
// exactly k routes, each non-empty and visiting at most qmax customers.
// Node 0 is the depot; genotypes carry exactly k-1 separators.
class MaTspSpdInstance final : public Problem {
  public:
    MaTspSpdInstance(std::string name, std::vector<std::vector<double>> matrix, int vehicles,
                     int max_route_len, std::vector<NodeType> types);

    const std::string& name() const override { return name_; }
    int size() const override { return n_; }  // customer count
    bool routed() const override { return true; }

    int vehicles() const { return vehicles_; }
    int max_route_len() const { return max_route_len_; }
    NodeType node_type(int customer) const { return types_[customer]; }
    const std::vector<NodeType>& node_types() const { return types_; }
    double cost(int i, int j) const { return matrix_[i][j]; }
    const std::vector<std::vector<double>>& matrix() const { return matrix_; }

    double objective(const Genotype& g) const override;
    bool feasible(const Genotype& g) const override;
    void check_encoding(const Genotype& g) const override;
    Genotype random_solution(RngStream& rng) const override;
    bool can_extend_route(std::span<const int> prefix, int next) const override;

  private:
    std::string name_;
    int n_;
    std::vector<std::vector<double>> matrix_;
    int vehicles_;
    int max_route_len_;
    std::vector<NodeType> types_;  // index 0 unused (depot)
};

// Derives the rich instance from an asymmetric TSP: the source's first node
// becomes the depot, odd customers deliver and even ones pick up, the fleet
// is fixed at 4 vehicles and routes hold at most int(p/4)+1 customers, where
// p is the source's total node count. Costs are copied verbatim.
MaTspSpdInstance generate_matspspd(const problems::TspInstance& atsp);

}  // namespace gb::richvrp
