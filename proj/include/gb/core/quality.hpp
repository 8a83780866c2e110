#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gb {

// Objective value f together with the quality scalar q used wherever the
// search needs a "bigger is better" number (match duels, team strengths).
//
// Minimization maps q = 1/f. An objective of exactly 0 (e.g. a collision-free
// n-queens board) maps to q = +infinity, which preserves every ordering and
// keeps strength sums well-defined; f < 0 is rejected. Maximization uses
// q = f directly.
struct Quality {
    double f = 0.0;
    double q = 0.0;

    static Quality of(double f, bool minimize = true);

    bool better_than(const Quality& other) const { return q > other.q; }
};

// Indices sorted by q descending; ties keep their original relative order.
std::vector<std::size_t> canonical_quality_order(std::span<const Quality> qualities);

}  // namespace gb
