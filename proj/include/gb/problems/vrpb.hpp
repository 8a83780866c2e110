#pragma once

#include "gb/problems/cvrp.hpp"

namespace gb::problems {

enum class NodeClass { Linehaul, Backhaul };

// VRP with backhauls: every route serves its linehaul (delivery) customers
// before its backhaul (pickup) customers, and the delivery and pickup loads
// each respect the vehicle capacity independently. A route made of backhauls
// only is allowed.
class VrpbInstance final : public CvrpInstance {
  public:
    VrpbInstance(std::string name, std::vector<std::vector<double>> matrix,
                 std::vector<double> demands, double capacity, std::vector<NodeClass> classes);

    NodeClass node_class(int customer) const { return classes_[customer]; }
    const std::vector<NodeClass>& classes() const { return classes_; }

    bool feasible(const Genotype& g) const override;
    Genotype random_solution(RngStream& rng) const override;
    bool can_extend_route(std::span<const int> prefix, int next) const override;

    bool route_ok(std::span<const int> route) const;

  private:
    std::vector<NodeClass> classes_;  // index 0 unused (depot)
};

// Derives a VRPB instance from a CVRP one by alternating customer classes:
// odd ids become linehaul, even ids backhaul.
VrpbInstance derive_vrpb(const CvrpInstance& cvrp);

}  // namespace gb::problems
