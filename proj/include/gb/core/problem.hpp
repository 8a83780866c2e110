#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>

#include "gb/core/genotype.hpp"
#include "gb/core/quality.hpp"
#include "gb/core/rng.hpp"

namespace gb {

// Monotone count of objective-function calls. One trial owns one counter;
// every evaluate() increments it exactly once.
class EvaluationCounter {
  public:
    std::uint64_t count() const { return count_; }
    void increment() { ++count_; }

  private:
    std::uint64_t count_ = 0;
};

// A combinatorial problem: encoding contract, objective, feasibility.
// Instances are immutable after construction; evaluation is pure, so one
// instance can serve any number of concurrent trials.
class Problem {
  public:
    virtual ~Problem() = default;

    virtual const std::string& name() const = 0;

    // Instance size n: customers, queens or items. Drives the stall budgets
    // n + n(n+1)/2 used by every engine.
    virtual int size() const = 0;

    virtual bool minimize() const { return true; }
    virtual bool routed() const { return false; }
    virtual bool clustered() const { return false; }

    virtual double objective(const Genotype& g) const = 0;

    // Constraint check beyond the encoding itself. Engines never accept
    // infeasible solutions.
    virtual bool feasible(const Genotype& g) const {
        (void)g;
        return true;
    }

    // Throws MalformedGenotypeError when g violates the encoding invariant.
    virtual void check_encoding(const Genotype& g) const = 0;

    // A random feasible solution. Throws GenerationError if the bounded
    // construction cannot produce one.
    virtual Genotype random_solution(RngStream& rng) const = 0;

    // Capacity rule used by route-rebuilding crossovers: may `next` be
    // appended to the route prefix without breaking the per-route limits?
    virtual bool can_extend_route(std::span<const int> prefix, int next) const {
        (void)prefix;
        (void)next;
        return true;
    }

    // Cluster id of a node (clustered problems only).
    virtual int cluster_of(int node) const {
        (void)node;
        return 0;
    }
};

// Validates the encoding, computes f, counts the call, returns (f, q).
Quality evaluate(const Problem& problem, const Genotype& g, EvaluationCounter& counter);

// Shared stall budget, n + n(n+1)/2: consecutive non-improving successors in
// a training session, or consecutive non-improving generations in the
// population engines.
std::uint64_t stall_budget(int n);

}  // namespace gb
