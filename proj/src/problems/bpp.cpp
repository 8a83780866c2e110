#include "gb/problems/bpp.hpp"

#include <numeric>

#include "gb/core/errors.hpp"

namespace gb::problems {

BppInstance::BppInstance(std::string name, std::vector<double> sizes, double capacity)
    : name_(std::move(name)), capacity_(capacity) {
    n_ = static_cast<int>(sizes.size());
    sizes_.assign(1, 0.0);
    sizes_.insert(sizes_.end(), sizes.begin(), sizes.end());
    for (int i = 1; i <= n_; ++i) {
        if (sizes_[i] <= 0 || sizes_[i] > capacity_) {
            throw ValidationError(name_ + ": item size outside (0, q]");
        }
    }
}

double BppInstance::objective(const Genotype& g) const {
    int bins = 1;
    double sum = 0.0;
    for (int id : g.elems) {
        if (sum + sizes_[id] > capacity_) {
            ++bins;
            sum = sizes_[id];  // the overflowing item opens the new bin
        } else {
            sum += sizes_[id];
        }
    }
    return bins;
}

void BppInstance::check_encoding(const Genotype& g) const {
    if (g.uses_separators) throw MalformedGenotypeError(name_ + ": expected a pure permutation");
    if (g.size() != n_) throw MalformedGenotypeError(name_ + ": wrong length");
    std::vector<bool> seen(n_ + 1, false);
    for (int v : g.elems) {
        if (v < 1 || v > n_ || seen[v]) {
            throw MalformedGenotypeError(name_ + ": items must form a permutation of 1..n");
        }
        seen[v] = true;
    }
}

Genotype BppInstance::random_solution(RngStream& rng) const {
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 1);
    rng.shuffle(order);
    return Genotype::permutation(std::move(order));
}

}  // namespace gb::problems
