#include "gb/richvrp/matspspd.hpp"

#include <numeric>

#include "gb/core/errors.hpp"

namespace gb::richvrp {

MaTspSpdInstance::MaTspSpdInstance(std::string name, std::vector<std::vector<double>> matrix,
                                   int vehicles, int max_route_len, std::vector<NodeType> types)
    : name_(std::move(name)),
      n_(static_cast<int>(matrix.size()) - 1),
      matrix_(std::move(matrix)),
      vehicles_(vehicles),
      max_route_len_(max_route_len),
      types_(std::move(types)) {
    if (vehicles_ < 1) throw ValidationError(name_ + ": need at least one vehicle");
    if (static_cast<long long>(vehicles_) * max_route_len_ < n_) {
        throw ValidationError(name_ + ": fleet cannot cover all customers");
    }
    if (n_ < vehicles_) throw ValidationError(name_ + ": fewer customers than mandatory routes");
    if (static_cast<int>(types_.size()) != n_ + 1) {
        throw ValidationError(name_ + ": type vector must cover depot + customers");
    }
}

double MaTspSpdInstance::objective(const Genotype& g) const {
    double total = 0.0;
    for (auto [b, e] : route_spans(g)) {
        total += matrix_[0][g.elems[b]];
        for (int i = b; i + 1 < e; ++i) total += matrix_[g.elems[i]][g.elems[i + 1]];
        total += matrix_[g.elems[e - 1]][0];
    }
    return total;
}

bool MaTspSpdInstance::feasible(const Genotype& g) const {
    auto spans = route_spans(g);
    if (static_cast<int>(spans.size()) != vehicles_) return false;  // an empty route collapses here
    for (auto [b, e] : spans) {
        if (e - b > max_route_len_) return false;
    }
    return true;
}

void MaTspSpdInstance::check_encoding(const Genotype& g) const {
    if (!g.uses_separators) throw MalformedGenotypeError(name_ + ": expected a routed genotype");
    if (g.separator_count() != vehicles_ - 1) {
        throw MalformedGenotypeError(name_ + ": expected exactly k-1 separators");
    }
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

Genotype MaTspSpdInstance::random_solution(RngStream& rng) const {
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 1);
    rng.shuffle(order);
    // Random route sizes in [1, qmax] summing to n: start from a balanced
    // split and jitter while the bounds allow.
    std::vector<int> sizes(vehicles_, n_ / vehicles_);
    for (int i = 0; i < n_ % vehicles_; ++i) sizes[i]++;
    for (int shake = 0; shake < 4 * vehicles_; ++shake) {
        const std::size_t a = rng.index(sizes.size());
        const std::size_t b = rng.index(sizes.size());
        if (a == b) continue;
        if (sizes[a] + 1 <= max_route_len_ && sizes[b] - 1 >= 1) {
            sizes[a]++;
            sizes[b]--;
        }
    }
    std::vector<std::vector<int>> routes;
    auto it = order.begin();
    for (int s : sizes) {
        routes.emplace_back(it, it + s);
        it += s;
    }
    return from_routes(routes);
}

bool MaTspSpdInstance::can_extend_route(std::span<const int> prefix, int next) const {
    (void)next;
    return static_cast<int>(prefix.size()) < max_route_len_;
}

MaTspSpdInstance generate_matspspd(const problems::TspInstance& atsp) {
    const int p = atsp.size();
    if (p < 5) throw GenerationError("matspspd derivation needs at least 5 nodes");
    const int customers = p - 1;
    std::vector<NodeType> types(customers + 1, NodeType::Delivery);
    for (int i = 1; i <= customers; ++i) {
        types[i] = (i % 2 == 1) ? NodeType::Delivery : NodeType::Pickup;
    }
    const int qmax = p / 4 + 1;
    return MaTspSpdInstance("matspspd-" + atsp.name(), atsp.matrix(), 4, qmax, std::move(types));
}

}  // namespace gb::richvrp
