#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gb/bench/plan.hpp"
#include "gb/core/run_record.hpp"

namespace gb::bench {

inline constexpr const char* kCsvHeader =
    "algorithm,instance,seed,best_f,evals_at_best,total_evals,wall_seconds";

std::string to_csv_row(const RunRecord& record);
RunRecord from_csv_row(const std::string& line);

// Reads a result CSV (header required).
std::vector<RunRecord> read_records_csv(const std::string& path);

struct PlanResult {
    std::vector<RunRecord> records;
    std::vector<std::string> errors;  // per-trial engine failures, non-fatal
};

// Executes every (algorithm x instance x trial) cell. All instances are
// resolved before the first run. Rows are appended to <output_dir>/runs.csv
// and flushed as they complete, so a crash loses at most the in-flight trial;
// trials may run on `parallelism` threads with a single writer. The summary
// table (mean, stddev, best, mean seconds per cell) goes to `log`.
PlanResult run_plan(const BenchPlan& plan, std::ostream& log);

}  // namespace gb::bench
