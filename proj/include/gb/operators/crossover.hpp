#pragma once

#include <functional>
#include <span>
#include <string_view>
#include <utility>

#include "gb/core/genotype.hpp"

namespace gb::ops {

enum class CrossoverKind { OX, HX, SRX, LRX };

std::string_view to_string(CrossoverKind kind);
CrossoverKind crossover_kind_from_string(std::string_view name);

// Order crossover. Child k keeps parent k's segment [cut1, cut2) in place;
// the remaining labels are filled cyclically starting after the segment, in
// the order they appear in the other parent read cyclically from cut2,
// skipping labels already present. Pure permutations only.
std::pair<Genotype, Genotype> ox_crossover(const Genotype& p1, const Genotype& p2, int cut1,
                                           int cut2);

// Half crossover. Child k copies parent k's first floor(n/2) labels, then
// appends the missing labels in the other parent's order. Pure permutations
// only.
std::pair<Genotype, Genotype> hx_crossover(const Genotype& p1, const Genotype& p2);

// May `next` extend the given route prefix? Supplied by the problem
// (capacity, per-phase loads, route-length caps, ...).
using RouteExtendCheck = std::function<bool(std::span<const int>, int)>;

enum class SrxMode { Short, Long };

// Short/long route crossover for routed genotypes. Child k keeps, verbatim
// and in original order, the floor(R/2) shortest (Short) or ceil(R/2) longest
// (Long) of parent k's R routes, shortest/longest by customer count with
// stable ties. The leftover customers are appended in the order they appear
// in the other parent, extending the open route while can_extend allows and
// opening a new route otherwise. Throws InfeasibleOffspringError when even a
// fresh route cannot accept a customer.
std::pair<Genotype, Genotype> srx_crossover(const Genotype& p1, const Genotype& p2, SrxMode mode,
                                            const RouteExtendCheck& can_extend);

// Cluster-level SRX: kept routes are copied verbatim, leftover customers are
// grouped by cluster and whole clusters are appended in the order their first
// customer appears in the other parent, preserving that parent's intra-cluster
// visit order. Keeps each cluster inside a single route by construction.
std::pair<Genotype, Genotype> srx_crossover_clustered(
    const Genotype& p1, const Genotype& p2, SrxMode mode,
    const std::function<int(int)>& cluster_of, const RouteExtendCheck& can_extend);

}  // namespace gb::ops
