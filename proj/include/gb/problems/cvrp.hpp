#pragma once

#include <vector>

#include "gb/core/problem.hpp"

namespace gb::problems {

// Capacitated VRP. Node 0 is the depot; customers are 1..n. Solutions are
// routed genotypes (0 separates routes); every route's demand sum must stay
// within the vehicle capacity.
class CvrpInstance : public Problem {
  public:
    CvrpInstance() = default;
    CvrpInstance(std::string name, std::vector<std::vector<double>> matrix,
                 std::vector<double> demands, double capacity);

    const std::string& name() const override { return name_; }
    int size() const override { return n_; }
    bool routed() const override { return true; }

    double capacity() const { return capacity_; }
    double demand(int customer) const { return demands_[customer]; }
    double cost(int i, int j) const { return matrix_[i][j]; }
    const std::vector<std::vector<double>>& matrix() const { return matrix_; }
    const std::vector<double>& demands() const { return demands_; }

    double objective(const Genotype& g) const override;
    bool feasible(const Genotype& g) const override;
    void check_encoding(const Genotype& g) const override;
    Genotype random_solution(RngStream& rng) const override;
    bool can_extend_route(std::span<const int> prefix, int next) const override;

    double route_cost(std::span<const int> route) const;
    double route_demand(std::span<const int> route) const;

  protected:
    std::string name_;
    int n_ = 0;  // customer count (excluding depot)
    std::vector<std::vector<double>> matrix_;
    std::vector<double> demands_;  // index 0 = depot = 0
    double capacity_ = 0.0;
};

}  // namespace gb::problems
