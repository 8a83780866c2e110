#pragma once

#include <vector>

#include "gb/core/problem.hpp"

namespace gb::problems {

// Bin packing over an item permutation: items are placed in order, a running
// size accumulator opens a new bin whenever the next item would overflow, and
// the objective is the number of bins used. Item ids are 1..n.
class BppInstance final : public Problem {
  public:
    BppInstance(std::string name, std::vector<double> sizes, double capacity);

    const std::string& name() const override { return name_; }
    int size() const override { return n_; }
    double capacity() const { return capacity_; }
    double item_size(int id) const { return sizes_[id]; }
    const std::vector<double>& item_sizes() const { return sizes_; }

    double objective(const Genotype& g) const override;
    void check_encoding(const Genotype& g) const override;
    Genotype random_solution(RngStream& rng) const override;

  private:
    std::string name_;
    int n_;
    std::vector<double> sizes_;  // index 0 unused
    double capacity_;
};

}  // namespace gb::problems
