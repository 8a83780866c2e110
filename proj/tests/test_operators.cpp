#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "gb/core/errors.hpp"
#include "gb/core/rng.hpp"
#include "gb/operators/crossover.hpp"
#include "gb/operators/moves.hpp"

using namespace gb;
using namespace gb::ops;

namespace {

std::multiset<int> labels_of(const Genotype& g) {
    std::multiset<int> out;
    for (int v : g.elems) {
        if (!g.uses_separators || v != 0) out.insert(v);
    }
    return out;
}

Genotype random_permutation(int n, RngStream& rng) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    rng.shuffle(v);
    return Genotype::permutation(std::move(v));
}

Genotype random_routed(int n, RngStream& rng) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    rng.shuffle(v);
    std::vector<std::vector<int>> routes;
    std::size_t i = 0;
    while (i < v.size()) {
        const std::size_t len = 1 + rng.index(3);
        routes.emplace_back(v.begin() + i, v.begin() + std::min(v.size(), i + len));
        i += len;
    }
    return from_routes(routes);
}

}  // namespace

TEST_CASE("2-opt reverses a segment inside one route") {
    CHECK(two_opt(Genotype::permutation({1, 2, 3, 4, 5, 6}), 2, 4).elems ==
          std::vector<int>{1, 2, 5, 4, 3, 6});
    // length-1 reversal is the identity
    CHECK(two_opt(Genotype::permutation({1, 2, 3}), 1, 1).elems == std::vector<int>{1, 2, 3});
    CHECK(two_opt(Genotype::routed({1, 2, 0, 3, 4, 5}), 3, 5).elems ==
          std::vector<int>{1, 2, 0, 5, 4, 3});
    CHECK_THROWS_AS(two_opt(Genotype::routed({1, 2, 0, 3, 4, 5}), 1, 3), InvalidMoveError);
    CHECK_THROWS_AS(two_opt(Genotype::permutation({1, 2, 3}), 2, 1), InvalidMoveError);
}

TEST_CASE("2-opt neighborhood of a pure permutation has n(n-1)/2 members") {
    RngStream rng(11);
    for (int n = 3; n <= 8; ++n) {
        const Genotype g = random_permutation(n, rng);
        // independent brute-force neighbor generator
        std::vector<std::vector<int>> expected;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                std::vector<int> v = g.elems;
                for (int a = i, b = j; a < b; ++a, --b) std::swap(v[a], v[b]);
                expected.push_back(std::move(v));
            }
        }
        CHECK(expected.size() == static_cast<std::size_t>(n * (n - 1) / 2));
        std::size_t k = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                CHECK(two_opt(g, i, j).elems == expected[k]);
                ++k;
            }
        }
    }
}

TEST_CASE("3-opt reconnections preserve elements and reject the identity") {
    const Genotype g = Genotype::permutation({1, 2, 3, 4, 5, 6});
    // segment swap: cuts after positions 1, 3, 5: B=(3,4), C=(5,6) -> A C B
    CHECK(three_opt(g, {1, 3, 5}, 4).elems == std::vector<int>{1, 2, 5, 6, 3, 4});

    // reversing a single element reproduces the input and must be rejected
    CHECK_THROWS_AS(three_opt(Genotype::permutation({1, 2, 3, 4}), {0, 1, 3}, 1),
                    InvalidMoveError);
    CHECK_THROWS_AS(three_opt(g, {1, 3, 5}, 0), InvalidMoveError);
    CHECK_THROWS_AS(three_opt(g, {1, 3, 5}, 8), InvalidMoveError);
    CHECK_THROWS_AS(three_opt(g, {3, 1, 5}, 4), InvalidMoveError);
    CHECK_THROWS_AS(three_opt(Genotype::routed({1, 2, 0, 3, 4, 5}), {0, 2, 4}, 4),
                    InvalidMoveError);

    // exhaustive scan at n = 6: every reconnection visits all labels once
    int neighbors = 0;
    for (int c1 = 0; c1 < 6; ++c1) {
        for (int c2 = c1 + 1; c2 < 6; ++c2) {
            for (int c3 = c2 + 1; c3 < 6; ++c3) {
                for (int variant = 1; variant <= kThreeOptVariants; ++variant) {
                    try {
                        const Genotype out = three_opt(g, {c1, c2, c3}, variant);
                        CHECK(labels_of(out) == labels_of(g));
                        ++neighbors;
                    } catch (const InvalidMoveError&) {
                        // degenerate reversal of a single element
                    }
                }
            }
        }
    }
    CHECK(neighbors > 0);
}

TEST_CASE("vertex insertion relocates one element") {
    CHECK(vertex_insertion(Genotype::permutation({1, 2, 3, 4}), 0, 2).elems ==
          std::vector<int>{2, 3, 1, 4});
    CHECK(vertex_insertion(Genotype::permutation({1, 2, 3, 4}), 2, 2).elems ==
          std::vector<int>{1, 2, 3, 4});
    // inter-route relocation: move customer 2 to the tail of route 2
    CHECK(vertex_insertion(Genotype::routed({1, 2, 0, 3, 4}), 1, 4).elems ==
          std::vector<int>{1, 0, 3, 4, 2});
    CHECK_THROWS_AS(vertex_insertion(Genotype::routed({1, 2, 0, 3, 4}), 2, 0), InvalidMoveError);
}

TEST_CASE("swap exchanges two customers") {
    CHECK(swap_nodes(Genotype::permutation({1, 2, 3, 4}), 0, 3).elems ==
          std::vector<int>{4, 2, 3, 1});
    CHECK(swap_nodes(Genotype::permutation({1, 2, 3, 4}), 2, 2).elems ==
          std::vector<int>{1, 2, 3, 4});
    CHECK(swap_nodes(Genotype::routed({1, 2, 0, 3, 4}), 1, 3).elems ==
          std::vector<int>{1, 3, 0, 2, 4});
    CHECK_THROWS_AS(swap_nodes(Genotype::routed({1, 2, 0, 3, 4}), 2, 3), InvalidMoveError);
}

TEST_CASE("OX reproduces the 8-node worked example") {
    const Genotype p1 = Genotype::permutation({1, 2, 3, 4, 5, 6, 7, 8});
    const Genotype p2 = Genotype::permutation({2, 4, 6, 8, 7, 5, 3, 1});
    const auto [h1, h2] = ox_crossover(p1, p2, 2, 5);
    CHECK(h1.elems == std::vector<int>{8, 7, 3, 4, 5, 1, 2, 6});
    CHECK(h2.elems == std::vector<int>{4, 5, 6, 8, 7, 1, 2, 3});
}

TEST_CASE("OX edge cases") {
    const Genotype p = Genotype::permutation({1, 2, 3, 4, 5});
    const auto [c1, c2] = ox_crossover(p, p, 1, 3);
    CHECK(c1.elems == p.elems);
    CHECK(c2.elems == p.elems);

    // hand-applied fill rule on a 3-node pair
    const auto [h1, h2] =
        ox_crossover(Genotype::permutation({1, 2, 3}), Genotype::permutation({3, 2, 1}), 1, 2);
    CHECK(h1.elems == std::vector<int>{3, 2, 1});
    CHECK(h2.elems == std::vector<int>{1, 2, 3});

    CHECK_THROWS_AS(ox_crossover(Genotype::permutation({1, 2, 3}),
                                 Genotype::permutation({1, 2, 3, 4}), 0, 2),
                    InvalidMoveError);
    CHECK_THROWS_AS(ox_crossover(Genotype::routed({1, 0, 2}), Genotype::routed({2, 0, 1}), 0, 2),
                    InvalidMoveError);
    CHECK_THROWS_AS(ox_crossover(p, p, 3, 3), InvalidMoveError);
}

TEST_CASE("HX reproduces the 8-node worked example") {
    const Genotype p = Genotype::permutation({1, 2, 3, 4, 5, 6, 7, 8});
    const Genotype m = Genotype::permutation({2, 4, 6, 8, 7, 5, 3, 1});
    const auto [h1, h2] = hx_crossover(p, m);
    CHECK(h1.elems == std::vector<int>{1, 2, 3, 4, 6, 8, 7, 5});
    CHECK(h2.elems == std::vector<int>{2, 4, 6, 8, 1, 3, 5, 7});
}

TEST_CASE("HX midpoint for odd length is floor(n/2)") {
    const auto [h1, h2] = hx_crossover(Genotype::permutation({1, 2, 3, 4, 5}),
                                       Genotype::permutation({5, 4, 3, 2, 1}));
    CHECK(h1.elems == std::vector<int>{1, 2, 5, 4, 3});
    CHECK(h2.elems == std::vector<int>{5, 4, 1, 2, 3});
}

TEST_CASE("OX and HX on identical parents are identities") {
    RngStream rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = rng.uniform_int(2, 12);
        const Genotype p = random_permutation(n, rng);
        const auto hx = hx_crossover(p, p);
        CHECK(hx.first.elems == p.elems);
        CHECK(hx.second.elems == p.elems);
        int c1 = rng.uniform_int(0, n - 1);
        int c2 = rng.uniform_int(c1 + 1, n);
        const auto ox = ox_crossover(p, p, c1, c2);
        CHECK(ox.first.elems == p.elems);
        CHECK(ox.second.elems == p.elems);
    }
}

TEST_CASE("SRX reproduces the 17-node worked example") {
    // 16 customers, 4 routes per parent; unit demands with capacity 4
    const Genotype p = Genotype::routed(
        {1, 2, 3, 4, 0, 9, 10, 11, 12, 0, 13, 14, 15, 16, 0, 5, 6, 7, 8});
    const Genotype m = Genotype::routed(
        {1, 12, 6, 3, 0, 2, 4, 7, 11, 0, 5, 14, 16, 9, 0, 8, 13, 10, 15});
    auto unit_cap4 = [](std::span<const int> prefix, int) { return prefix.size() < 4; };
    const auto [h1, h2] = srx_crossover(p, m, SrxMode::Short, unit_cap4);
    CHECK(h1.elems == std::vector<int>{1, 2, 3, 4, 0, 9, 10, 11, 12, 0, 6, 7, 5, 14, 0, 16, 8,
                                       13, 15});
    CHECK(h2.elems == std::vector<int>{1, 12, 6, 3, 0, 2, 4, 7, 11, 0, 9, 10, 13, 14, 0, 15, 16,
                                       5, 8});
}

TEST_CASE("SRX with identical parents and exact-fit capacity is the identity") {
    const Genotype p = Genotype::routed({1, 2, 0, 3, 4, 0, 5, 6, 0, 7, 8});
    auto unit_cap2 = [](std::span<const int> prefix, int) { return prefix.size() < 2; };
    const auto [h1, h2] = srx_crossover(p, p, SrxMode::Short, unit_cap2);
    CHECK(h1.elems == p.elems);
    CHECK(h2.elems == p.elems);
}

TEST_CASE("SRX keeps the shortest route of a 2-route parent verbatim") {
    const Genotype p = Genotype::routed({1, 2, 3, 0, 4});
    const Genotype m = Genotype::routed({4, 3, 0, 2, 1});
    auto ample = [](std::span<const int>, int) { return true; };
    const auto [h1, h2] = srx_crossover(p, m, SrxMode::Short, ample);
    // p's shortest route is (4); leftovers 3, 2, 1 in m's order fill one route
    CHECK(h1.elems == std::vector<int>{4, 0, 3, 2, 1});
    // m's shortest route is (2,1) (stable tie with (4,3)? no: both length 2 -> first kept)
    CHECK(labels_of(h2) == labels_of(m));
}

TEST_CASE("LRX keeps the long half") {
    const Genotype p = Genotype::routed({1, 2, 3, 0, 4});
    const Genotype m = Genotype::routed({4, 0, 1, 0, 2, 0, 3});
    auto ample = [](std::span<const int>, int) { return true; };
    const auto [h1, h2] = srx_crossover(p, m, SrxMode::Long, ample);
    // ceil(2/2) = 1 route kept for p: the longer (1,2,3)
    CHECK(h1.elems == std::vector<int>{1, 2, 3, 0, 4});
    CHECK(labels_of(h2) == labels_of(m));
}

TEST_CASE("SRX raises when a customer fits no route at all") {
    const Genotype p = Genotype::routed({1, 0, 2});
    const Genotype m = Genotype::routed({2, 0, 1});
    auto reject_all = [](std::span<const int>, int) { return false; };
    CHECK_THROWS_AS(srx_crossover(p, m, SrxMode::Short, reject_all), InfeasibleOffspringError);
    CHECK_THROWS_AS(srx_crossover(Genotype::permutation({1, 2}), Genotype::permutation({2, 1}),
                                  SrxMode::Short, reject_all),
                    InvalidMoveError);
}

TEST_CASE("cluster-level SRX keeps clusters in one route") {
    // clusters: {1,2} -> 1, {3,4} -> 2, {5,6} -> 3, {7,8} -> 4
    auto cluster_of = [](int node) { return (node - 1) / 2 + 1; };
    const Genotype p = Genotype::routed({1, 2, 3, 4, 0, 5, 6, 7, 8});
    const Genotype m = Genotype::routed({7, 8, 5, 6, 0, 3, 4, 1, 2});
    auto cap4 = [](std::span<const int> prefix, int) { return prefix.size() < 4; };
    const auto [h1, h2] = srx_crossover_clustered(p, m, SrxMode::Short, cluster_of, cap4);
    CHECK(labels_of(h1) == labels_of(p));
    for (const Genotype* child : {&h1, &h2}) {
        std::map<int, std::set<int>> owner;
        const auto routes = routes_of(*child);
        for (std::size_t r = 0; r < routes.size(); ++r) {
            for (int node : routes[r]) owner[cluster_of(node)].insert(static_cast<int>(r));
        }
        for (const auto& [cluster, routes_used] : owner) CHECK(routes_used.size() == 1);
    }
}

TEST_CASE("label conservation and intra-route closure over random moves") {
    RngStream rng(5);
    const std::vector<MoveKind> pure_moves{MoveKind::TwoOpt, MoveKind::ThreeOpt,
                                           MoveKind::SwapIntra, MoveKind::VertexInsertionIntra};
    const std::vector<MoveKind> routed_moves{
        MoveKind::TwoOpt,    MoveKind::ThreeOpt,  MoveKind::VertexInsertionIntra,
        MoveKind::SwapIntra, MoveKind::SwapInter, MoveKind::VertexInsertionInter};

    for (int trial = 0; trial < 400; ++trial) {
        const Genotype g = random_permutation(rng.uniform_int(2, 10), rng);
        const MoveKind kind = pure_moves[rng.index(pure_moves.size())];
        const Genotype out = apply_random_move(g, kind, rng);
        CHECK(labels_of(out) == labels_of(g));
    }

    auto route_membership = [](const Genotype& g) {
        std::map<int, int> member;
        const auto routes = routes_of(g);
        for (std::size_t r = 0; r < routes.size(); ++r) {
            for (int node : routes[r]) member[node] = static_cast<int>(r);
        }
        return member;
    };

    for (int trial = 0; trial < 400; ++trial) {
        const Genotype g = random_routed(rng.uniform_int(3, 10), rng);
        const MoveKind kind = routed_moves[rng.index(routed_moves.size())];
        const Genotype out = apply_random_move(g, kind, rng);
        CHECK(labels_of(out) == labels_of(g));
        if (kind == MoveKind::TwoOpt || kind == MoveKind::ThreeOpt ||
            kind == MoveKind::SwapIntra || kind == MoveKind::VertexInsertionIntra) {
            CHECK(route_membership(out) == route_membership(g));
        }
    }
}

TEST_CASE("inter-route moves require routed genotypes") {
    RngStream rng(6);
    CHECK_THROWS_AS(
        apply_random_move(Genotype::permutation({1, 2, 3}), MoveKind::SwapInter, rng),
        InvalidMoveError);
    CHECK_THROWS_AS(
        apply_random_move(Genotype::permutation({1, 2, 3}), MoveKind::VertexInsertionInter, rng),
        InvalidMoveError);
}
