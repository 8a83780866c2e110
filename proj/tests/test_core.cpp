#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "gb/core/errors.hpp"
#include "gb/core/problem.hpp"
#include "gb/core/quality.hpp"
#include "gb/core/rng.hpp"
#include "gb/problems/bpp.hpp"
#include "gb/problems/nqp.hpp"
#include "gb/problems/tsp.hpp"

using namespace gb;

TEST_CASE("quality maps objective to 1/f under minimization") {
    const Quality q = Quality::of(4.0);
    CHECK(q.f == 4.0);
    CHECK(q.q == doctest::Approx(0.25));
    CHECK(Quality::of(2.0).better_than(q));
    CHECK_FALSE(q.better_than(q));

    // f = 0 is a legal optimum (collision-free boards); it dominates everything.
    const Quality zero = Quality::of(0.0);
    CHECK(std::isinf(zero.q));
    CHECK(zero.better_than(Quality::of(1e-12)));

    CHECK_THROWS_AS(Quality::of(-1.0), DegenerateObjectiveError);

    const Quality max = Quality::of(-3.0, false);
    CHECK(max.q == -3.0);
}

TEST_CASE("canonical quality order is a stable descending sort") {
    auto mk = [](std::initializer_list<double> qs) {
        std::vector<Quality> v;
        for (double q : qs) v.push_back(Quality{1.0 / q, q});
        return v;
    };
    const auto a = mk({3, 9, 9, 1});
    CHECK(canonical_quality_order(a) == std::vector<std::size_t>{1, 2, 0, 3});

    const auto single = mk({5});
    CHECK(canonical_quality_order(single) == std::vector<std::size_t>{0});

    // minimization f = 420, 430, 425 inverted by hand: 1/420 > 1/425 > 1/430
    std::vector<Quality> inv{Quality::of(420), Quality::of(430), Quality::of(425)};
    CHECK(canonical_quality_order(inv) == std::vector<std::size_t>{0, 2, 1});
}

TEST_CASE("argmin over f equals argmax over q for positive objectives") {
    RngStream rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.uniform_int(1, 12);
        std::vector<Quality> qs;
        std::size_t argmin = 0;
        for (int i = 0; i < n; ++i) {
            qs.push_back(Quality::of(0.1 + 100.0 * rng.uniform01()));
            if (qs[i].f < qs[argmin].f) argmin = i;
        }
        CHECK(canonical_quality_order(qs).front() == argmin);
    }
}

TEST_CASE("evaluate: unit-square tour, collision count, bin count") {
    EvaluationCounter counter;

    const auto square = problems::TspInstance::from_coords(
        "square", {{0, 0}, {0, 1}, {1, 1}, {1, 0}});
    const Quality tour = evaluate(square, Genotype::permutation({0, 1, 2, 3}), counter);
    CHECK(tour.f == doctest::Approx(4.0));

    const problems::NqpInstance board(8);
    const Quality queens =
        evaluate(board, Genotype::permutation({4, 3, 1, 6, 5, 8, 2, 7}), counter);
    CHECK(queens.f == 3.0);

    const problems::BppInstance bins("bpp9", {20, 20, 20, 30, 30, 30, 50, 50, 50}, 100);
    const Quality packing =
        evaluate(bins, Genotype::permutation({1, 4, 7, 2, 5, 8, 3, 6, 9}), counter);
    CHECK(packing.f == 3.0);

    CHECK(counter.count() == 3);
}

TEST_CASE("evaluate rejects malformed genotypes") {
    EvaluationCounter counter;
    const problems::NqpInstance board(4);
    CHECK_THROWS_AS(evaluate(board, Genotype::permutation({1, 1, 2, 3}), counter),
                    MalformedGenotypeError);
    CHECK_THROWS_AS(evaluate(board, Genotype::permutation({1, 2, 3}), counter),
                    MalformedGenotypeError);
    CHECK(counter.count() == 0);  // failed validations never count
}

TEST_CASE("counter counts exactly one increment per evaluate call") {
    EvaluationCounter counter;
    const problems::NqpInstance board(6);
    RngStream rng(7);
    for (int i = 1; i <= 250; ++i) {
        evaluate(board, board.random_solution(rng), counter);
        CHECK(counter.count() == static_cast<std::uint64_t>(i));
    }
}

TEST_CASE("rng streams are deterministic and label-independent") {
    RngStream a(42);
    RngStream b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

    RngStream parent(42);
    RngStream s1 = parent.derive("init");
    RngStream s2 = parent.derive("season");
    RngStream s1_again = parent.derive("init");
    bool all_equal = true;
    for (int i = 0; i < 50; ++i) {
        const auto x = s1.next_u64();
        if (x != s1_again.next_u64()) all_equal = false;
        if (x == s2.next_u64()) all_equal = false;  // streams must diverge
    }
    CHECK(all_equal);
}

TEST_CASE("bounded draws stay in range and shuffles permute") {
    RngStream rng(3);
    for (int i = 0; i < 1000; ++i) {
        const int v = rng.uniform_int(-3, 7);
        CHECK(v >= -3);
        CHECK(v <= 7);
    }
    std::vector<int> v{1, 2, 3, 4, 5, 6, 7};
    auto sorted = v;
    rng.shuffle(v);
    std::sort(v.begin(), v.end());
    CHECK(v == sorted);
}

TEST_CASE("route helpers parse separators and canonicalize empties") {
    const Genotype g = Genotype::routed({1, 2, 0, 0, 3, 0});
    const auto spans = route_spans(g);
    REQUIRE(spans.size() == 2);
    CHECK(spans[0] == std::pair<int, int>{0, 2});
    CHECK(spans[1] == std::pair<int, int>{4, 5});

    const Genotype canon = canonical_routed(g);
    CHECK(canon.elems == std::vector<int>{1, 2, 0, 3});

    CHECK(route_index_of(g, 0) == 0);
    CHECK(route_index_of(g, 4) == 1);
    CHECK(route_index_of(g, 2) == -1);

    // pure permutations: a single implicit route, 0 is an ordinary label
    const Genotype tour = Genotype::permutation({0, 2, 1});
    CHECK(route_spans(tour).size() == 1);
    CHECK(tour.separator_count() == 0);
}
