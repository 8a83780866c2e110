#include "gb/operators/moves.hpp"

#include <algorithm>
#include <cassert>

#include "gb/core/errors.hpp"
#include "gb/core/problem.hpp"

namespace gb::ops {

std::string_view to_string(MoveKind kind) {
    switch (kind) {
        case MoveKind::TwoOpt: return "2-opt";
        case MoveKind::ThreeOpt: return "3-opt";
        case MoveKind::VertexInsertionIntra: return "vertex-insertion";
        case MoveKind::VertexInsertionInter: return "vertex-insertion-inter";
        case MoveKind::SwapIntra: return "swap";
        case MoveKind::SwapInter: return "swap-inter";
    }
    return "?";
}

MoveKind move_kind_from_string(std::string_view name) {
    if (name == "2-opt") return MoveKind::TwoOpt;
    if (name == "3-opt") return MoveKind::ThreeOpt;
    if (name == "vertex-insertion") return MoveKind::VertexInsertionIntra;
    if (name == "vertex-insertion-inter") return MoveKind::VertexInsertionInter;
    if (name == "swap") return MoveKind::SwapIntra;
    if (name == "swap-inter") return MoveKind::SwapInter;
    throw ValidationError("unknown move kind: " + std::string(name));
}

namespace {

void check_position(const Genotype& g, int pos) {
    if (pos < 0 || pos >= g.size()) throw InvalidMoveError("position out of range");
}

}  // namespace

Genotype two_opt(const Genotype& g, int i, int j) {
    check_position(g, i);
    check_position(g, j);
    if (i > j) throw InvalidMoveError("2-opt requires i <= j");
    for (int p = i; p <= j; ++p) {
        if (g.is_separator(p)) throw InvalidMoveError("2-opt segment spans a route separator");
    }
    Genotype out = g;
    std::reverse(out.elems.begin() + i, out.elems.begin() + j + 1);
    return out;
}

Genotype three_opt(const Genotype& g, std::array<int, 3> cuts, int variant) {
    auto [c1, c2, c3] = cuts;
    if (!(c1 < c2 && c2 < c3)) throw InvalidMoveError("3-opt cuts must be strictly increasing");
    check_position(g, c1);
    check_position(g, c3);
    if (variant < 1 || variant > kThreeOptVariants) throw InvalidMoveError("3-opt variant out of range");
    for (int p = c1 + 1; p <= c3; ++p) {
        if (g.is_separator(p)) throw InvalidMoveError("3-opt cuts span a route separator");
    }

    std::vector<int> b(g.elems.begin() + c1 + 1, g.elems.begin() + c2 + 1);
    std::vector<int> c(g.elems.begin() + c2 + 1, g.elems.begin() + c3 + 1);
    auto rev = [](std::vector<int> v) {
        std::reverse(v.begin(), v.end());
        return v;
    };

    std::vector<int> first, second;
    switch (variant) {
        case 1: first = rev(b); second = c; break;
        case 2: first = b; second = rev(c); break;
        case 3: first = rev(b); second = rev(c); break;
        case 4: first = c; second = b; break;
        case 5: first = c; second = rev(b); break;
        case 6: first = rev(c); second = b; break;
        case 7: first = rev(c); second = rev(b); break;
        default: break;
    }

    Genotype out = g;
    std::copy(first.begin(), first.end(), out.elems.begin() + c1 + 1);
    std::copy(second.begin(), second.end(), out.elems.begin() + c1 + 1 + first.size());
    if (out.elems == g.elems) throw InvalidMoveError("3-opt reconnection reproduces the input");
    return out;
}

Genotype vertex_insertion(const Genotype& g, int from, int to) {
    check_position(g, from);
    if (g.is_separator(from)) throw InvalidMoveError("vertex insertion cannot move a separator");
    if (to < 0 || to >= g.size()) throw InvalidMoveError("insertion point out of range");
    Genotype out = g;
    const int label = out.elems[from];
    out.elems.erase(out.elems.begin() + from);
    out.elems.insert(out.elems.begin() + to, label);
    return out;
}

Genotype swap_nodes(const Genotype& g, int a, int b) {
    check_position(g, a);
    check_position(g, b);
    if (g.is_separator(a) || g.is_separator(b)) {
        throw InvalidMoveError("swap cannot address a separator");
    }
    Genotype out = g;
    std::swap(out.elems[a], out.elems[b]);
    return out;
}

namespace {

// Spans with at least `min_len` customers.
std::vector<std::pair<int, int>> spans_with_min(const Genotype& g, int min_len) {
    auto spans = route_spans(g);
    std::erase_if(spans, [&](auto s) { return s.second - s.first < min_len; });
    return spans;
}

Genotype random_two_opt(const Genotype& g, RngStream& rng) {
    auto spans = spans_with_min(g, 2);
    if (spans.empty()) return g;
    auto [b, e] = spans[rng.index(spans.size())];
    int i = rng.uniform_int(b, e - 1);
    int j = rng.uniform_int(b, e - 1);
    if (i > j) std::swap(i, j);
    return two_opt(g, i, j);
}

Genotype random_three_opt(const Genotype& g, RngStream& rng) {
    auto spans = spans_with_min(g, 3);
    if (spans.empty()) return g;
    auto [b, e] = spans[rng.index(spans.size())];
    // Choose cuts with both middle segments non-empty: c1 in [b-1, e-3] (the
    // preceding separator is a legal first cut), c2 in (c1, e-2], c3 in
    // (c2, e-1].
    int c1 = rng.uniform_int(std::max(b - 1, 0), e - 3);
    int c2 = rng.uniform_int(c1 + 1, e - 2);
    int c3 = rng.uniform_int(c2 + 1, e - 1);
    int variant = rng.uniform_int(1, kThreeOptVariants);
    // Variants 1-3 degenerate to the identity when the reversed segment has
    // one element; the segment swap never does.
    const bool b_single = (c2 - c1) == 1;
    const bool c_single = (c3 - c2) == 1;
    if ((variant == 1 && b_single) || (variant == 2 && c_single) ||
        (variant == 3 && b_single && c_single)) {
        variant = 4;
    }
    return three_opt(g, {c1, c2, c3}, variant);
}

Genotype random_vertex_insertion(const Genotype& g, RngStream& rng, bool inter) {
    auto spans = route_spans(g);
    if (spans.empty()) return g;
    if (!inter) {
        const std::size_t r = rng.index(spans.size());
        auto [b, e] = spans[r];
        const int from = rng.uniform_int(b, e - 1);
        // After removal the route occupies [b, e-1); inserting anywhere in
        // [b, e-1] keeps the customer inside its route.
        const int to = rng.uniform_int(b, e - 1);
        return vertex_insertion(g, from, to);
    }
    if (spans.size() < 2) return g;
    const std::size_t ra = rng.index(spans.size());
    std::size_t rb = rng.index(spans.size() - 1);
    if (rb >= ra) ++rb;
    auto [ab, ae] = spans[ra];
    auto [bb, be] = spans[rb];
    const int from = rng.uniform_int(ab, ae - 1);
    // Insertion points inside route rb, in post-removal coordinates.
    int lo = bb, hi = be;
    if (ae <= bb) {
        --lo;
        --hi;
    }
    const int to = rng.uniform_int(lo, hi);
    return vertex_insertion(g, from, to);
}

Genotype random_swap(const Genotype& g, RngStream& rng, bool inter) {
    auto spans = route_spans(g);
    if (spans.empty()) return g;
    if (!inter) {
        auto candidates = spans_with_min(g, 2);
        if (candidates.empty()) return g;
        auto [b, e] = candidates[rng.index(candidates.size())];
        const int a = rng.uniform_int(b, e - 1);
        int bpos = rng.uniform_int(b, e - 2);
        if (bpos >= a) ++bpos;
        return swap_nodes(g, a, bpos);
    }
    if (spans.size() < 2) return g;
    const std::size_t ra = rng.index(spans.size());
    std::size_t rb = rng.index(spans.size() - 1);
    if (rb >= ra) ++rb;
    const int a = rng.uniform_int(spans[ra].first, spans[ra].second - 1);
    const int b = rng.uniform_int(spans[rb].first, spans[rb].second - 1);
    return swap_nodes(g, a, b);
}

// Inter-route moves for clustered problems: relocating or exchanging single
// customers across routes would split a cluster, so the unit of movement is
// the whole cluster.
Genotype random_cluster_relocation(const Genotype& g, RngStream& rng, const Problem& problem) {
    auto routes = routes_of(g);
    if (routes.size() < 2) return g;
    const std::size_t ra = rng.index(routes.size());
    std::size_t rb = rng.index(routes.size() - 1);
    if (rb >= ra) ++rb;

    // Clusters present in route ra, in first-appearance order.
    std::vector<int> clusters;
    for (int node : routes[ra]) {
        const int c = problem.cluster_of(node);
        if (std::find(clusters.begin(), clusters.end(), c) == clusters.end()) clusters.push_back(c);
    }
    const int chosen = clusters[rng.index(clusters.size())];

    std::vector<int> moved;
    std::vector<int> rest;
    for (int node : routes[ra]) {
        (problem.cluster_of(node) == chosen ? moved : rest).push_back(node);
    }
    const int slot = rng.uniform_int(0, static_cast<int>(routes[rb].size()));
    routes[rb].insert(routes[rb].begin() + slot, moved.begin(), moved.end());
    routes[ra] = std::move(rest);
    std::erase_if(routes, [](const auto& r) { return r.empty(); });
    return from_routes(routes);
}

Genotype random_cluster_swap(const Genotype& g, RngStream& rng, const Problem& problem) {
    auto routes = routes_of(g);
    if (routes.size() < 2) return g;
    const std::size_t ra = rng.index(routes.size());
    std::size_t rb = rng.index(routes.size() - 1);
    if (rb >= ra) ++rb;

    auto pick_cluster = [&](const std::vector<int>& route) {
        std::vector<int> clusters;
        for (int node : route) {
            const int c = problem.cluster_of(node);
            if (std::find(clusters.begin(), clusters.end(), c) == clusters.end())
                clusters.push_back(c);
        }
        return clusters[rng.index(clusters.size())];
    };
    const int ca = pick_cluster(routes[ra]);
    const int cb = pick_cluster(routes[rb]);

    auto split = [&](const std::vector<int>& route, int cluster) {
        std::pair<std::vector<int>, std::vector<int>> out;  // (cluster nodes, rest)
        for (int node : route) {
            (problem.cluster_of(node) == cluster ? out.first : out.second).push_back(node);
        }
        return out;
    };
    auto [ma, resta] = split(routes[ra], ca);
    auto [mb, restb] = split(routes[rb], cb);
    resta.insert(resta.end(), mb.begin(), mb.end());
    restb.insert(restb.end(), ma.begin(), ma.end());
    routes[ra] = std::move(resta);
    routes[rb] = std::move(restb);
    std::erase_if(routes, [](const auto& r) { return r.empty(); });
    return from_routes(routes);
}

}  // namespace

Genotype apply_random_move(const Genotype& g, MoveKind kind, RngStream& rng,
                           const Problem* context) {
    const bool clustered = context != nullptr && context->clustered();
    switch (kind) {
        case MoveKind::TwoOpt: return random_two_opt(g, rng);
        case MoveKind::ThreeOpt: return random_three_opt(g, rng);
        case MoveKind::VertexInsertionIntra: return random_vertex_insertion(g, rng, false);
        case MoveKind::VertexInsertionInter:
            if (!g.uses_separators) throw InvalidMoveError("inter-route move on a pure permutation");
            if (clustered) return random_cluster_relocation(g, rng, *context);
            return random_vertex_insertion(g, rng, true);
        case MoveKind::SwapIntra: return random_swap(g, rng, false);
        case MoveKind::SwapInter:
            if (!g.uses_separators) throw InvalidMoveError("inter-route move on a pure permutation");
            if (clustered) return random_cluster_swap(g, rng, *context);
            return random_swap(g, rng, true);
    }
    return g;
}

}  // namespace gb::ops
