#include "gb/operators/crossover.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "gb/core/errors.hpp"

namespace gb::ops {

std::string_view to_string(CrossoverKind kind) {
    switch (kind) {
        case CrossoverKind::OX: return "OX";
        case CrossoverKind::HX: return "HX";
        case CrossoverKind::SRX: return "SRX";
        case CrossoverKind::LRX: return "LRX";
    }
    return "?";
}

CrossoverKind crossover_kind_from_string(std::string_view name) {
    if (name == "OX") return CrossoverKind::OX;
    if (name == "HX") return CrossoverKind::HX;
    if (name == "SRX" || name == "HRX") return CrossoverKind::SRX;
    if (name == "LRX") return CrossoverKind::LRX;
    throw ValidationError("unknown crossover kind: " + std::string(name));
}

namespace {

void check_pure_pair(const Genotype& p1, const Genotype& p2) {
    if (p1.uses_separators || p2.uses_separators) {
        throw InvalidMoveError("crossover requires pure permutations");
    }
    if (p1.size() != p2.size()) throw InvalidMoveError("parents differ in length");
}

Genotype ox_child(const Genotype& keep, const Genotype& fill, int cut1, int cut2) {
    const int n = keep.size();
    std::vector<int> child(n, -1);
    std::unordered_set<int> used;
    for (int i = cut1; i < cut2; ++i) {
        child[i] = keep.elems[i];
        used.insert(keep.elems[i]);
    }
    int write = cut2 % n;
    int read = cut2 % n;
    while (static_cast<int>(used.size()) < n) {
        const int label = fill.elems[read];
        read = (read + 1) % n;
        if (used.contains(label)) continue;
        child[write] = label;
        used.insert(label);
        write = (write + 1) % n;
    }
    return Genotype::permutation(std::move(child));
}

}  // namespace

std::pair<Genotype, Genotype> ox_crossover(const Genotype& p1, const Genotype& p2, int cut1,
                                           int cut2) {
    check_pure_pair(p1, p2);
    if (!(0 <= cut1 && cut1 < cut2 && cut2 <= p1.size())) {
        throw InvalidMoveError("OX cut points out of order");
    }
    return {ox_child(p1, p2, cut1, cut2), ox_child(p2, p1, cut1, cut2)};
}

namespace {

Genotype hx_child(const Genotype& keep, const Genotype& fill) {
    const int n = keep.size();
    const int mid = n / 2;
    std::vector<int> child(keep.elems.begin(), keep.elems.begin() + mid);
    std::unordered_set<int> used(child.begin(), child.end());
    for (int label : fill.elems) {
        if (!used.contains(label)) child.push_back(label);
    }
    return Genotype::permutation(std::move(child));
}

}  // namespace

std::pair<Genotype, Genotype> hx_crossover(const Genotype& p1, const Genotype& p2) {
    check_pure_pair(p1, p2);
    return {hx_child(p1, p2), hx_child(p2, p1)};
}

namespace {

// Indices of the routes to keep, in their original order.
std::vector<std::size_t> kept_route_indices(const std::vector<std::vector<int>>& routes,
                                            SrxMode mode) {
    const std::size_t r = routes.size();
    const std::size_t keep = mode == SrxMode::Short ? r / 2 : (r + 1) / 2;
    std::vector<std::size_t> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return mode == SrxMode::Short ? routes[a].size() < routes[b].size()
                                      : routes[a].size() > routes[b].size();
    });
    order.resize(keep);
    std::sort(order.begin(), order.end());
    return order;
}

// Appends customers (or customer groups) to the child's tail routes under the
// extension rule, opening a new route whenever the open one cannot take the
// next group as a whole.
void append_groups(std::vector<std::vector<int>>& child,
                   const std::vector<std::vector<int>>& groups,
                   const RouteExtendCheck& can_extend) {
    std::vector<int> open;
    auto fits = [&](const std::vector<int>& base, const std::vector<int>& group) {
        std::vector<int> probe = base;
        for (int c : group) {
            if (!can_extend(probe, c)) return false;
            probe.push_back(c);
        }
        return true;
    };
    for (const auto& group : groups) {
        if (!open.empty() && fits(open, group)) {
            open.insert(open.end(), group.begin(), group.end());
            continue;
        }
        if (!open.empty()) {
            child.push_back(std::move(open));
            open.clear();
        }
        if (!fits(open, group)) {
            throw InfeasibleOffspringError("customer group does not fit an empty route");
        }
        open.insert(open.end(), group.begin(), group.end());
    }
    if (!open.empty()) child.push_back(std::move(open));
}

Genotype srx_child(const Genotype& keep_parent, const Genotype& other, SrxMode mode,
                   const std::function<int(int)>& cluster_of, const RouteExtendCheck& can_extend) {
    const auto routes = routes_of(keep_parent);
    const auto kept = kept_route_indices(routes, mode);

    std::vector<std::vector<int>> child;
    std::unordered_set<int> placed;
    for (std::size_t idx : kept) {
        child.push_back(routes[idx]);
        placed.insert(routes[idx].begin(), routes[idx].end());
    }

    // Leftovers in the other parent's visiting order; with a cluster map the
    // unit is the whole cluster, keyed by its first leftover appearance.
    std::vector<std::vector<int>> groups;
    if (!cluster_of) {
        for (int label : other.elems) {
            if (label == 0 || placed.contains(label)) continue;
            groups.push_back({label});
        }
    } else {
        std::unordered_set<int> seen_clusters;
        for (int label : other.elems) {
            if (label == 0 || placed.contains(label)) continue;
            const int cluster = cluster_of(label);
            if (!seen_clusters.insert(cluster).second) continue;
            std::vector<int> group;
            for (int member : other.elems) {
                if (member != 0 && !placed.contains(member) && cluster_of(member) == cluster) {
                    group.push_back(member);
                }
            }
            groups.push_back(std::move(group));
        }
    }

    append_groups(child, groups, can_extend);
    return from_routes(child);
}

std::pair<Genotype, Genotype> srx_impl(const Genotype& p1, const Genotype& p2, SrxMode mode,
                                       const std::function<int(int)>& cluster_of,
                                       const RouteExtendCheck& can_extend) {
    if (!p1.uses_separators || !p2.uses_separators) {
        throw InvalidMoveError("SRX requires routed genotypes");
    }
    return {srx_child(p1, p2, mode, cluster_of, can_extend),
            srx_child(p2, p1, mode, cluster_of, can_extend)};
}

}  // namespace

std::pair<Genotype, Genotype> srx_crossover(const Genotype& p1, const Genotype& p2, SrxMode mode,
                                            const RouteExtendCheck& can_extend) {
    return srx_impl(p1, p2, mode, nullptr, can_extend);
}

std::pair<Genotype, Genotype> srx_crossover_clustered(
    const Genotype& p1, const Genotype& p2, SrxMode mode,
    const std::function<int(int)>& cluster_of, const RouteExtendCheck& can_extend) {
    return srx_impl(p1, p2, mode, cluster_of, can_extend);
}

}  // namespace gb::ops
