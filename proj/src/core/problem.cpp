#include "gb/core/problem.hpp"

namespace gb {

Quality evaluate(const Problem& problem, const Genotype& g, EvaluationCounter& counter) {
    problem.check_encoding(g);
    const double f = problem.objective(g);
    counter.increment();
    return Quality::of(f, problem.minimize());
}

std::uint64_t stall_budget(int n) {
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    return un + un * (un + 1) / 2;
}

}  // namespace gb
