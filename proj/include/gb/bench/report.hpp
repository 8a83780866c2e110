#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gb/core/run_record.hpp"
#include "gb/stats/stats.hpp"

namespace gb::bench {

struct CompareReport {
    std::vector<std::string> algorithms;
    std::vector<std::string> instances;  // shared by every algorithm
    // z mark rows: one line per (instance, algorithm != control)
    struct ZEntry {
        std::string instance;
        std::string algorithm;
        double z;
        char mark;
    };
    std::vector<ZEntry> z_entries;
    stats::RankTable rank_table;
    double friedman = 0.0;
    std::vector<stats::HolmRow> holm;

    std::string to_text(const std::string& control) const;
    std::string to_csv() const;
};

// Cross-algorithm comparison over the instances every algorithm covered:
// per-instance z marks against the control, Friedman average ranks with the
// X^2_r statistic, and the Holm step-down table.
CompareReport compare(const std::vector<RunRecord>& records, const std::string& control);

// Runs the team-distribution study: four engine versions sharing a 48-player
// population, split as 2x24, 4x12, 6x8 and 8x6, over the given instances.
// Reports mean objective and mean wall seconds per version and instance.
std::string teams_study(const std::vector<std::string>& instance_refs, int runs,
                        std::uint64_t seed_base, std::ostream& log);

}  // namespace gb::bench
