#include "gb/core/quality.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "gb/core/errors.hpp"

namespace gb {

Quality Quality::of(double f, bool minimize) {
    if (!minimize) return Quality{f, f};
    if (f < 0.0) throw DegenerateObjectiveError("objective " + std::to_string(f) + " < 0 under minimization");
    const double q = f > 0.0 ? 1.0 / f : std::numeric_limits<double>::infinity();
    return Quality{f, q};
}

std::vector<std::size_t> canonical_quality_order(std::span<const Quality> qualities) {
    std::vector<std::size_t> order(qualities.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return qualities[a].q > qualities[b].q;
    });
    return order;
}

}  // namespace gb
