#pragma once

#include "gb/core/problem.hpp"

namespace gb::problems {

// N-queens as minimization of diagonal collisions. A solution assigns a row
// to each column as a permutation of {1..N}, so row and column attacks are
// impossible by construction; queens i and j (1-based columns) collide when
// |i - j| == |row_i - row_j|. The optimum is 0.
class NqpInstance final : public Problem {
  public:
    explicit NqpInstance(int n);

    const std::string& name() const override { return name_; }
    int size() const override { return n_; }

    double objective(const Genotype& g) const override;
    void check_encoding(const Genotype& g) const override;
    Genotype random_solution(RngStream& rng) const override;

  private:
    std::string name_;
    int n_;
};

}  // namespace gb::problems
