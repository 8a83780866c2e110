#include "gb/problems/cvrp.hpp"

#include <numeric>

#include "gb/core/errors.hpp"

namespace gb::problems {

CvrpInstance::CvrpInstance(std::string name, std::vector<std::vector<double>> matrix,
                           std::vector<double> demands, double capacity)
    : name_(std::move(name)),
      n_(static_cast<int>(matrix.size()) - 1),
      matrix_(std::move(matrix)),
      demands_(std::move(demands)),
      capacity_(capacity) {
    if (n_ < 1) throw ValidationError(name_ + ": need a depot and at least one customer");
    if (static_cast<int>(demands_.size()) != n_ + 1) {
        throw ValidationError(name_ + ": demand vector must cover depot + customers");
    }
    for (int c = 1; c <= n_; ++c) {
        if (demands_[c] <= 0 || demands_[c] > capacity_) {
            throw ValidationError(name_ + ": customer demand outside (0, Q]");
        }
    }
}

double CvrpInstance::route_cost(std::span<const int> route) const {
    if (route.empty()) return 0.0;
    double total = matrix_[0][route.front()];
    for (std::size_t i = 0; i + 1 < route.size(); ++i) {
        total += matrix_[route[i]][route[i + 1]];
    }
    total += matrix_[route.back()][0];
    return total;
}

double CvrpInstance::route_demand(std::span<const int> route) const {
    double sum = 0.0;
    for (int c : route) sum += demands_[c];
    return sum;
}

double CvrpInstance::objective(const Genotype& g) const {
    double total = 0.0;
    for (auto [b, e] : route_spans(g)) {
        total += route_cost(std::span<const int>(g.elems.data() + b, g.elems.data() + e));
    }
    return total;
}

bool CvrpInstance::feasible(const Genotype& g) const {
    for (auto [b, e] : route_spans(g)) {
        if (route_demand(std::span<const int>(g.elems.data() + b, g.elems.data() + e)) >
            capacity_) {
            return false;
        }
    }
    return true;
}

void CvrpInstance::check_encoding(const Genotype& g) const {
    if (!g.uses_separators) throw MalformedGenotypeError(name_ + ": expected a routed genotype");
    std::vector<bool> seen(n_ + 1, false);
    int customers = 0;
    for (int v : g.elems) {
        if (v == 0) continue;
        if (v < 1 || v > n_ || seen[v]) {
            throw MalformedGenotypeError(name_ + ": customers must form a permutation of 1..n");
        }
        seen[v] = true;
        ++customers;
    }
    if (customers != n_) throw MalformedGenotypeError(name_ + ": missing customers");
}

Genotype CvrpInstance::random_solution(RngStream& rng) const {
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 1);
    rng.shuffle(order);
    // Next-fit split: feasible by construction.
    std::vector<std::vector<int>> routes;
    std::vector<int> open;
    double load = 0.0;
    for (int c : order) {
        if (!open.empty() && load + demands_[c] > capacity_) {
            routes.push_back(std::move(open));
            open.clear();
            load = 0.0;
        }
        open.push_back(c);
        load += demands_[c];
    }
    if (!open.empty()) routes.push_back(std::move(open));
    return from_routes(routes);
}

bool CvrpInstance::can_extend_route(std::span<const int> prefix, int next) const {
    return route_demand(prefix) + demands_[next] <= capacity_;
}

}  // namespace gb::problems
