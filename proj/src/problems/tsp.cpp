#include "gb/problems/tsp.hpp"

#include <cmath>
#include <numeric>

#include "gb/core/errors.hpp"

namespace gb::problems {

double nint_distance(const std::array<double, 2>& a, const std::array<double, 2>& b) {
    const double dx = a[0] - b[0];
    const double dy = a[1] - b[1];
    return std::floor(std::sqrt(dx * dx + dy * dy) + 0.5);
}

TspInstance TspInstance::from_coords(std::string name,
                                     std::vector<std::array<double, 2>> coords) {
    TspInstance inst;
    inst.name_ = std::move(name);
    inst.n_ = static_cast<int>(coords.size());
    inst.symmetric_ = true;
    inst.matrix_.assign(inst.n_, std::vector<double>(inst.n_, 0.0));
    for (int i = 0; i < inst.n_; ++i) {
        for (int j = i + 1; j < inst.n_; ++j) {
            const double d = nint_distance(coords[i], coords[j]);
            inst.matrix_[i][j] = d;
            inst.matrix_[j][i] = d;
        }
    }
    inst.coords_ = std::move(coords);
    return inst;
}

TspInstance TspInstance::from_matrix(std::string name, std::vector<std::vector<double>> matrix,
                                     bool symmetric) {
    TspInstance inst;
    inst.name_ = std::move(name);
    inst.n_ = static_cast<int>(matrix.size());
    for (const auto& row : matrix) {
        if (static_cast<int>(row.size()) != inst.n_) {
            throw ValidationError("cost matrix is not square");
        }
    }
    inst.symmetric_ = symmetric;
    inst.matrix_ = std::move(matrix);
    return inst;
}

double TspInstance::objective(const Genotype& g) const {
    double total = 0.0;
    for (int i = 0; i < n_; ++i) {
        total += matrix_[g.elems[i]][g.elems[(i + 1) % n_]];
    }
    return total;
}

void TspInstance::check_encoding(const Genotype& g) const {
    if (g.uses_separators) throw MalformedGenotypeError(name_ + ": tour must be a pure permutation");
    if (g.size() != n_) throw MalformedGenotypeError(name_ + ": tour length != n");
    std::vector<bool> seen(n_, false);
    for (int v : g.elems) {
        if (v < 0 || v >= n_ || seen[v]) {
            throw MalformedGenotypeError(name_ + ": not a permutation of 0..n-1");
        }
        seen[v] = true;
    }
}

Genotype TspInstance::random_solution(RngStream& rng) const {
    std::vector<int> tour(n_);
    std::iota(tour.begin(), tour.end(), 0);
    rng.shuffle(tour);
    return Genotype::permutation(std::move(tour));
}

}  // namespace gb::problems
