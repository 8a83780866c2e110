#pragma once

#include <array>
#include <vector>

#include "gb/core/problem.hpp"

namespace gb::problems {

// Travelling salesman over a complete graph, symmetric or asymmetric.
// Tours are permutations of {0..n-1}; the objective closes the cycle.
class TspInstance final : public Problem {
  public:
    // Nearest-integer Euclidean distances (the TSPLIB EUC_2D convention).
    static TspInstance from_coords(std::string name, std::vector<std::array<double, 2>> coords);

    static TspInstance from_matrix(std::string name, std::vector<std::vector<double>> matrix,
                                   bool symmetric);

    const std::string& name() const override { return name_; }
    int size() const override { return n_; }
    bool symmetric() const { return symmetric_; }
    double cost(int i, int j) const { return matrix_[i][j]; }
    const std::vector<std::vector<double>>& matrix() const { return matrix_; }
    const std::vector<std::array<double, 2>>& coords() const { return coords_; }

    double objective(const Genotype& g) const override;
    void check_encoding(const Genotype& g) const override;
    Genotype random_solution(RngStream& rng) const override;

  private:
    std::string name_;
    int n_ = 0;
    bool symmetric_ = true;
    std::vector<std::vector<double>> matrix_;
    std::vector<std::array<double, 2>> coords_;  // kept when built from coords
};

// TSPLIB rounding: nearest-integer Euclidean distance.
double nint_distance(const std::array<double, 2>& a, const std::array<double, 2>& b);

}  // namespace gb::problems
