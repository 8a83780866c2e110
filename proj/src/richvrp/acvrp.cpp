#include "gb/richvrp/acvrp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gb/core/errors.hpp"

namespace gb::richvrp {

AcVrpInstance::AcVrpInstance(std::string name, std::vector<std::vector<double>> valley,
                             std::vector<std::vector<double>> peak, std::vector<double> deliveries,
                             std::vector<double> pickups, double capacity,
                             std::vector<int> clusters, std::set<std::pair<int, int>> forbidden,
                             bool enforce_workday, std::vector<int> orig_ids,
                             std::uint64_t generator_seed)
    : name_(std::move(name)),
      n_(static_cast<int>(valley.size()) - 1),
      valley_(std::move(valley)),
      peak_(std::move(peak)),
      deliveries_(std::move(deliveries)),
      pickups_(std::move(pickups)),
      capacity_(capacity),
      clusters_(std::move(clusters)),
      forbidden_(std::move(forbidden)),
      enforce_workday_(enforce_workday),
      orig_ids_(std::move(orig_ids)),
      generator_seed_(generator_seed) {
    if (n_ < 1) throw ValidationError(name_ + ": need a depot and at least one customer");
    if (peak_.size() != valley_.size()) throw ValidationError(name_ + ": matrix shapes differ");
    if (static_cast<int>(clusters_.size()) != n_ + 1 || clusters_[0] != 0) {
        throw ValidationError(name_ + ": cluster vector must map depot to cluster 0");
    }
    cluster_count_ = *std::max_element(clusters_.begin(), clusters_.end());
    std::vector<int> sizes(cluster_count_ + 1, 0);
    for (int c = 0; c <= n_; ++c) {
        if (clusters_[c] < 0 || clusters_[c] > cluster_count_ || (c > 0 && clusters_[c] == 0)) {
            throw ValidationError(name_ + ": customers must belong to clusters 1..k");
        }
        sizes[clusters_[c]]++;
    }
    for (int k = 1; k <= cluster_count_; ++k) {
        if (sizes[k] == 0) throw ValidationError(name_ + ": empty cluster " + std::to_string(k));
    }
    for (auto [i, j] : forbidden_) {
        if (valley_[i][j] < kForbiddenCost || peak_[i][j] < kForbiddenCost) {
            throw ValidationError(name_ + ": forbidden arc without sentinel cost");
        }
    }
}

std::pair<double, bool> AcVrpInstance::simulate_route(std::span<const int> route) const {
    if (route.empty()) return {0.0, true};
    bool ok = true;
    double load = 0.0;
    for (int c : route) load += deliveries_[c];
    if (load > capacity_) ok = false;

    double t = 0.0;
    double total = 0.0;
    int prev = 0;
    for (int c : route) {
        const double cost = leg_cost(prev, c, t);
        total += cost;
        t += cost;
        load += pickups_[c] - deliveries_[c];
        if (load > capacity_) ok = false;
        prev = c;
    }
    const double back = leg_cost(prev, 0, t);
    total += back;
    t += back;
    if (enforce_workday_ && t > kWorkdayEnd) ok = false;
    if (total >= kForbiddenCost) ok = false;
    return {total, ok};
}

double AcVrpInstance::objective(const Genotype& g) const {
    double total = 0.0;
    for (auto [b, e] : route_spans(g)) {
        total += simulate_route(std::span<const int>(g.elems.data() + b, g.elems.data() + e)).first;
    }
    return total;
}

bool AcVrpInstance::feasible(const Genotype& g) const {
    auto spans = route_spans(g);
    // Every cluster inside exactly one route.
    std::vector<int> owner(cluster_count_ + 1, -1);
    for (std::size_t r = 0; r < spans.size(); ++r) {
        for (int i = spans[r].first; i < spans[r].second; ++i) {
            const int k = clusters_[g.elems[i]];
            if (owner[k] == -1) {
                owner[k] = static_cast<int>(r);
            } else if (owner[k] != static_cast<int>(r)) {
                return false;
            }
        }
    }
    for (auto [b, e] : spans) {
        if (!simulate_route(std::span<const int>(g.elems.data() + b, g.elems.data() + e)).second) {
            return false;
        }
    }
    return true;
}

void AcVrpInstance::check_encoding(const Genotype& g) const {
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

Genotype AcVrpInstance::random_solution(RngStream& rng) const {
    std::vector<std::vector<int>> members(cluster_count_ + 1);
    for (int c = 1; c <= n_; ++c) members[clusters_[c]].push_back(c);

    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<int> cluster_order(cluster_count_);
        std::iota(cluster_order.begin(), cluster_order.end(), 1);
        rng.shuffle(cluster_order);

        std::vector<std::vector<int>> routes;
        std::vector<int> open;
        bool failed = false;
        for (int k : cluster_order) {
            std::vector<int> group = members[k];
            rng.shuffle(group);
            std::vector<int> extended = open;
            extended.insert(extended.end(), group.begin(), group.end());
            if (!open.empty() && simulate_route(extended).second) {
                open = std::move(extended);
                continue;
            }
            if (!open.empty()) routes.push_back(std::move(open));
            if (!simulate_route(group).second) {
                failed = true;
                break;
            }
            open = std::move(group);
        }
        if (failed) continue;
        if (!open.empty()) routes.push_back(std::move(open));
        return from_routes(routes);
    }
    throw GenerationError(name_ + ": no feasible random solution found (cluster too large?)");
}

bool AcVrpInstance::can_extend_route(std::span<const int> prefix, int next) const {
    std::vector<int> probe(prefix.begin(), prefix.end());
    probe.push_back(next);
    return simulate_route(probe).second;
}

std::vector<AcVrpSpec> acvrp_catalogue() {
    return {
        {"Osaba_50_1_1", 50, 5, 240, 5},   {"Osaba_50_1_2", 50, 5, 160, 10},
        {"Osaba_50_1_3", 50, 10, 240, 5},  {"Osaba_50_1_4", 50, 10, 160, 10},
        {"Osaba_50_2_1", 50, 5, 240, 5},   {"Osaba_50_2_2", 50, 5, 160, 10},
        {"Osaba_50_2_3", 50, 10, 240, 5},  {"Osaba_50_2_4", 50, 10, 160, 10},
        {"Osaba_80_1", 80, 8, 240, 5},     {"Osaba_80_2", 80, 8, 160, 10},
        {"Osaba_80_3", 80, 10, 240, 5},    {"Osaba_80_4", 80, 10, 160, 10},
        {"Osaba_100_1", 100, 10, 140, 5},  {"Osaba_100_2", 100, 10, 260, 10},
        {"Osaba_100_3", 100, 10, 320, 10},
    };
}

std::optional<AcVrpSpec> acvrp_spec_by_name(const std::string& name) {
    for (const auto& spec : acvrp_catalogue()) {
        if (spec.name == name) return spec;
    }
    return std::nullopt;
}

namespace {

// Which of the master set's 100 customers participate, given the catalogue
// naming scheme. Cluster g holds original ids 10(g-1)+1 .. 10g.
std::vector<int> selected_original_ids(const AcVrpSpec& spec) {
    auto cluster_ids = [](int g, int first, int count) {
        std::vector<int> ids;
        for (int i = 0; i < count; ++i) ids.push_back(10 * (g - 1) + first + i);
        return ids;
    };
    std::vector<int> out;
    auto take = [&](std::initializer_list<int> groups, int first, int count) {
        for (int g : groups) {
            auto ids = cluster_ids(g, first, count);
            out.insert(out.end(), ids.begin(), ids.end());
        }
    };
    const std::string& n = spec.name;
    if (n == "Osaba_50_1_1" || n == "Osaba_50_1_2") take({1, 3, 5, 7, 9}, 1, 10);
    else if (n == "Osaba_50_2_1" || n == "Osaba_50_2_2") take({2, 4, 6, 8, 10}, 1, 10);
    else if (n == "Osaba_50_1_3" || n == "Osaba_50_1_4")
        take({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, 1, 5);
    else if (n == "Osaba_50_2_3" || n == "Osaba_50_2_4")
        take({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, 6, 5);
    else if (n == "Osaba_80_1" || n == "Osaba_80_2") take({1, 2, 3, 4, 5, 6, 7, 8}, 1, 10);
    else if (n == "Osaba_80_3" || n == "Osaba_80_4") take({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, 1, 8);
    else take({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, 1, 10);
    return out;
}

std::pair<double, double> demands_for(int orig_id) {
    switch (orig_id % 4) {
        case 1: return {10.0, 5.0};
        case 2: return {10.0, 0.0};
        case 3: return {5.0, 3.0};
        default: return {5.0, 0.0};
    }
}

}  // namespace

AcVrpInstance generate_acvrp(const std::vector<std::array<double, 2>>& coords,
                             const AcVrpSpec& spec, std::uint64_t seed, bool enforce_workday) {
    if (coords.size() != 101) {
        throw GenerationError("master coordinate set must hold the depot plus 100 customers");
    }
    auto euclid = [&](int i, int j) {
        const double dx = coords[i][0] - coords[j][0];
        const double dy = coords[i][1] - coords[j][1];
        return std::sqrt(dx * dx + dy * dy);
    };

    // Master valley/peak matrices over the full node universe.
    const int m = 100;
    std::vector<std::vector<double>> valley(m + 1, std::vector<double>(m + 1, 0.0));
    std::vector<std::vector<double>> peak(m + 1, std::vector<double>(m + 1, 0.0));
    for (int i = 0; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
            const double d = euclid(i, j);
            valley[i][j] = d;
            valley[j][i] = d * (j % 2 == 0 ? 1.2 : 0.8);
            peak[i][j] = valley[i][j] * 1.3;
            peak[j][i] = valley[j][i] * (j % 2 == 0 ? 1.2 : 1.4);
        }
    }

    const std::vector<int> ids = selected_original_ids(spec);
    if (static_cast<int>(ids.size()) != spec.nodes) {
        throw GenerationError(spec.name + ": selection does not match the declared node count");
    }

    const int n = spec.nodes;
    std::vector<int> node_ids(n + 1, 0);  // instance index -> original id
    for (int i = 0; i < n; ++i) node_ids[i + 1] = ids[i];

    std::vector<std::vector<double>> v(n + 1, std::vector<double>(n + 1, 0.0));
    std::vector<std::vector<double>> p(n + 1, std::vector<double>(n + 1, 0.0));
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            v[i][j] = valley[node_ids[i]][node_ids[j]];
            p[i][j] = peak[node_ids[i]][node_ids[j]];
        }
    }

    std::vector<double> deliveries(n + 1, 0.0);
    std::vector<double> pickups(n + 1, 0.0);
    std::vector<int> clusters(n + 1, 0);
    const int per_cluster = n / spec.clusters;
    for (int i = 1; i <= n; ++i) {
        auto [d, pk] = demands_for(node_ids[i]);
        deliveries[i] = d;
        pickups[i] = pk;
        clusters[i] = (i - 1) / per_cluster + 1;
    }

    // Forbidden arcs: uniform ordered intra-cluster pairs, drawn per cluster.
    RngStream rng = RngStream(seed).derive("forbidden-arcs");
    std::set<std::pair<int, int>> forbidden;
    for (int k = 1; k <= spec.clusters; ++k) {
        std::vector<int> members;
        for (int i = 1; i <= n; ++i) {
            if (clusters[i] == k) members.push_back(i);
        }
        int drawn = 0;
        while (drawn < spec.forbidden_per_cluster) {
            const int a = members[rng.index(members.size())];
            int b = members[rng.index(members.size())];
            if (a == b || forbidden.contains({a, b})) continue;
            forbidden.insert({a, b});
            v[a][b] = kForbiddenCost;
            p[a][b] = kForbiddenCost;
            ++drawn;
        }
    }

    return AcVrpInstance(spec.name, std::move(v), std::move(p), std::move(deliveries),
                         std::move(pickups), spec.capacity, std::move(clusters),
                         std::move(forbidden), enforce_workday, std::move(node_ids), seed);
}

}  // namespace gb::richvrp
