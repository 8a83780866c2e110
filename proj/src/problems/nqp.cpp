#include "gb/problems/nqp.hpp"

#include <cstdlib>
#include <numeric>

#include "gb/core/errors.hpp"

namespace gb::problems {

NqpInstance::NqpInstance(int n) : name_(std::to_string(n) + "-queens"), n_(n) {
    if (n < 1) throw ValidationError("board size must be positive");
}

double NqpInstance::objective(const Genotype& g) const {
    int collisions = 0;
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            if (j - i == std::abs(g.elems[i] - g.elems[j])) ++collisions;
        }
    }
    return collisions;
}

void NqpInstance::check_encoding(const Genotype& g) const {
    if (g.uses_separators) throw MalformedGenotypeError(name_ + ": expected a pure permutation");
    if (g.size() != n_) throw MalformedGenotypeError(name_ + ": wrong length");
    std::vector<bool> seen(n_ + 1, false);
    for (int v : g.elems) {
        if (v < 1 || v > n_ || seen[v]) {
            throw MalformedGenotypeError(name_ + ": rows must form a permutation of 1..N");
        }
        seen[v] = true;
    }
}

Genotype NqpInstance::random_solution(RngStream& rng) const {
    std::vector<int> rows(n_);
    std::iota(rows.begin(), rows.end(), 1);
    rng.shuffle(rows);
    return Genotype::permutation(std::move(rows));
}

}  // namespace gb::problems
