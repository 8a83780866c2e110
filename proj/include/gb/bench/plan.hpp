#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "gb/core/problem.hpp"
#include "gb/core/run_record.hpp"

namespace gb::bench {

// One engine configuration: a registry id plus optional overrides.
struct AlgorithmSpec {
    std::string id;  // gb | ga1 | ga2 | dga1 | dga2 | ea | esa
    // GB overrides (ignored by the other engines).
    int teams = 0;             // 0 = engine default
    int players_per_team = 0;  // 0 = engine default
    std::uint64_t max_evaluations = 0;
    std::string label;  // row label; defaults to id (or id-tnX-ptY for overrides)

    std::string display() const;
};

struct BenchPlan {
    std::vector<std::string> instances;  // refs for io::load_problem, or generator specs
    std::vector<AlgorithmSpec> algorithms;
    int runs = 10;
    std::uint64_t seed_base = 1;
    std::string output_dir = "bench-out";
    int parallelism = 1;  // serial default keeps logs bit-reproducible

    static BenchPlan from_json_text(const std::string& text);
    static BenchPlan from_file(const std::string& path);

    // Throws ValidationError on structural problems (empty lists, runs < 1).
    void validate() const;
};

using Runner = std::function<RunRecord(const Problem&, std::uint64_t seed)>;

// Builds the engine callable for a spec; the returned record's algorithm
// field is rewritten to the spec's display label.
Runner make_runner(const AlgorithmSpec& spec);

// Resolves one instance reference: plain refs go through io::load_problem,
// "acvrp:<name>:<coords.json>[:<seed>]" runs the benchmark generator.
std::shared_ptr<Problem> resolve_instance(const std::string& ref);

// Per-trial seed: a stable hash of (seed base, algorithm label, instance
// name, trial index).
std::uint64_t trial_seed(std::uint64_t seed_base, const std::string& algorithm,
                         const std::string& instance, int trial);

}  // namespace gb::bench
