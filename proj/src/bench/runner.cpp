#include "gb/bench/runner.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "gb/core/errors.hpp"
#include "gb/stats/stats.hpp"

namespace gb::bench {

std::string to_csv_row(const RunRecord& r) {
    std::ostringstream out;
    out << r.algorithm << ',' << r.instance << ',' << r.seed << ',' << std::setprecision(17)
        << r.best_f << ',' << r.evals_at_best << ',' << r.total_evals << ','
        << std::setprecision(6) << r.wall_seconds;
    return out.str();
}

RunRecord from_csv_row(const std::string& line) {
    std::istringstream in(line);
    std::string field;
    RunRecord r;
    auto next = [&]() {
        if (!std::getline(in, field, ',')) throw ParseError("short CSV row: " + line);
        return field;
    };
    r.algorithm = next();
    r.instance = next();
    r.seed = std::stoull(next());
    r.best_f = std::stod(next());
    r.evals_at_best = std::stoull(next());
    r.total_evals = std::stoull(next());
    r.wall_seconds = std::stod(next());
    return r;
}

std::vector<RunRecord> read_records_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw ParseError(path + ": empty file");
    if (line != kCsvHeader) throw ParseError(path + ": unexpected CSV header");
    std::vector<RunRecord> records;
    while (std::getline(in, line)) {
        if (!line.empty()) records.push_back(from_csv_row(line));
    }
    return records;
}

namespace {

struct Cell {
    int algorithm;
    int instance;
    int trial;
};

}  // namespace

PlanResult run_plan(const BenchPlan& plan, std::ostream& log) {
    plan.validate();

    // Resolve everything up front: a bad reference must abort before any run.
    std::vector<std::shared_ptr<Problem>> problems;
    for (const auto& ref : plan.instances) problems.push_back(resolve_instance(ref));
    std::vector<Runner> runners;
    for (const auto& alg : plan.algorithms) runners.push_back(make_runner(alg));

    std::filesystem::create_directories(plan.output_dir);
    const std::string csv_path = plan.output_dir + "/runs.csv";
    const bool fresh = !std::filesystem::exists(csv_path);
    std::ofstream csv(csv_path, std::ios::app);
    if (!csv) throw ValidationError("cannot write " + csv_path);
    if (fresh) csv << kCsvHeader << "\n" << std::flush;

    std::vector<Cell> cells;
    for (int a = 0; a < static_cast<int>(plan.algorithms.size()); ++a) {
        for (int i = 0; i < static_cast<int>(plan.instances.size()); ++i) {
            for (int t = 0; t < plan.runs; ++t) cells.push_back({a, i, t});
        }
    }

    PlanResult result;
    std::mutex sink;  // single writer for csv + records + errors
    std::atomic<std::size_t> cursor{0};

    auto worker = [&]() {
        for (;;) {
            const std::size_t k = cursor.fetch_add(1);
            if (k >= cells.size()) return;
            const Cell cell = cells[k];
            const auto& spec = plan.algorithms[cell.algorithm];
            const Problem& problem = *problems[cell.instance];
            const std::uint64_t seed =
                trial_seed(plan.seed_base, spec.display(), problem.name(), cell.trial);
            try {
                RunRecord record = runners[cell.algorithm](problem, seed);
                std::lock_guard lock(sink);
                csv << to_csv_row(record) << "\n" << std::flush;
                result.records.push_back(std::move(record));
            } catch (const Error& e) {
                std::lock_guard lock(sink);
                result.errors.push_back(spec.display() + "/" + problem.name() + ": " + e.what());
            }
        }
    };

    if (plan.parallelism <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < plan.parallelism; ++t) threads.emplace_back(worker);
        for (auto& th : threads) th.join();
    }

    // Summary table, one row per (algorithm, instance) cell.
    log << std::left << std::setw(16) << "algorithm" << std::setw(20) << "instance"
        << std::right << std::setw(12) << "mean" << std::setw(12) << "stddev" << std::setw(12)
        << "best" << std::setw(10) << "time[s]" << "\n";
    for (int a = 0; a < static_cast<int>(plan.algorithms.size()); ++a) {
        for (int i = 0; i < static_cast<int>(plan.instances.size()); ++i) {
            std::vector<double> best;
            double time_sum = 0.0;
            for (const auto& r : result.records) {
                if (r.algorithm == plan.algorithms[a].display() &&
                    r.instance == problems[i]->name()) {
                    best.push_back(r.best_f);
                    time_sum += r.wall_seconds;
                }
            }
            if (best.empty()) continue;
            const auto s = stats::describe(best);
            log << std::left << std::setw(16) << plan.algorithms[a].display() << std::setw(20)
                << problems[i]->name() << std::right << std::fixed << std::setprecision(1)
                << std::setw(12) << s.mean << std::setw(12) << s.stddev << std::setw(12) << s.min
                << std::setprecision(2) << std::setw(10) << time_sum / best.size() << "\n";
            log.unsetf(std::ios::fixed);
        }
    }
    for (const auto& e : result.errors) log << "error: " << e << "\n";
    return result;
}

}  // namespace gb::bench
