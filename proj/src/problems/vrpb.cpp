#include "gb/problems/vrpb.hpp"

#include <numeric>

#include "gb/core/errors.hpp"

namespace gb::problems {

VrpbInstance::VrpbInstance(std::string name, std::vector<std::vector<double>> matrix,
                           std::vector<double> demands, double capacity,
                           std::vector<NodeClass> classes)
    : CvrpInstance(std::move(name), std::move(matrix), std::move(demands), capacity),
      classes_(std::move(classes)) {
    if (static_cast<int>(classes_.size()) != n_ + 1) {
        throw ValidationError(name_ + ": class vector must cover depot + customers");
    }
}

bool VrpbInstance::route_ok(std::span<const int> route) const {
    bool seen_backhaul = false;
    double deliveries = 0.0;
    double pickups = 0.0;
    for (int c : route) {
        if (classes_[c] == NodeClass::Linehaul) {
            if (seen_backhaul) return false;  // deliveries must precede pickups
            deliveries += demands_[c];
        } else {
            seen_backhaul = true;
            pickups += demands_[c];
        }
    }
    return deliveries <= capacity_ && pickups <= capacity_;
}

bool VrpbInstance::feasible(const Genotype& g) const {
    for (auto [b, e] : route_spans(g)) {
        if (!route_ok(std::span<const int>(g.elems.data() + b, g.elems.data() + e))) return false;
    }
    return true;
}

Genotype VrpbInstance::random_solution(RngStream& rng) const {
    std::vector<int> linehauls;
    std::vector<int> backhauls;
    for (int c = 1; c <= n_; ++c) {
        (classes_[c] == NodeClass::Linehaul ? linehauls : backhauls).push_back(c);
    }
    rng.shuffle(linehauls);
    rng.shuffle(backhauls);

    std::vector<std::vector<int>> routes;
    std::size_t li = 0;
    std::size_t bi = 0;
    while (li < linehauls.size() || bi < backhauls.size()) {
        std::vector<int> route;
        double load = 0.0;
        while (li < linehauls.size() && load + demands_[linehauls[li]] <= capacity_) {
            route.push_back(linehauls[li]);
            load += demands_[linehauls[li++]];
        }
        load = 0.0;
        while (bi < backhauls.size() && load + demands_[backhauls[bi]] <= capacity_) {
            route.push_back(backhauls[bi]);
            load += demands_[backhauls[bi++]];
        }
        if (route.empty()) throw GenerationError(name_ + ": could not place remaining customers");
        routes.push_back(std::move(route));
    }
    return from_routes(routes);
}

bool VrpbInstance::can_extend_route(std::span<const int> prefix, int next) const {
    bool seen_backhaul = false;
    double deliveries = 0.0;
    double pickups = 0.0;
    for (int c : prefix) {
        if (classes_[c] == NodeClass::Linehaul) {
            deliveries += demands_[c];
        } else {
            seen_backhaul = true;
            pickups += demands_[c];
        }
    }
    if (classes_[next] == NodeClass::Linehaul) {
        return !seen_backhaul && deliveries + demands_[next] <= capacity_;
    }
    return pickups + demands_[next] <= capacity_;
}

VrpbInstance derive_vrpb(const CvrpInstance& cvrp) {
    std::vector<NodeClass> classes(cvrp.size() + 1, NodeClass::Linehaul);
    for (int c = 1; c <= cvrp.size(); ++c) {
        classes[c] = (c % 2 == 1) ? NodeClass::Linehaul : NodeClass::Backhaul;
    }
    return VrpbInstance(cvrp.name() + "-vrpb", cvrp.matrix(), cvrp.demands(), cvrp.capacity(),
                        std::move(classes));
}

}  // namespace gb::problems
