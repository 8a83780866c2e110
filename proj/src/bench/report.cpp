#include "gb/bench/report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "gb/bench/plan.hpp"
#include "gb/bench/runner.hpp"
#include "gb/core/errors.hpp"

namespace gb::bench {

CompareReport compare(const std::vector<RunRecord>& records, const std::string& control) {
    std::map<std::string, std::map<std::string, std::vector<double>>> by_alg_inst;
    for (const auto& r : records) by_alg_inst[r.algorithm][r.instance].push_back(r.best_f);

    if (!by_alg_inst.contains(control)) {
        throw ValidationError("control algorithm '" + control + "' absent from the result set");
    }
    if (by_alg_inst.size() < 2) throw ValidationError("need at least two algorithms to compare");

    CompareReport report;
    for (const auto& [alg, _] : by_alg_inst) report.algorithms.push_back(alg);

    // Instances covered by every algorithm.
    std::set<std::string> shared;
    bool first = true;
    for (const auto& [alg, insts] : by_alg_inst) {
        std::set<std::string> cover;
        for (const auto& [inst, _] : insts) cover.insert(inst);
        if (first) {
            shared = std::move(cover);
            first = false;
        } else {
            std::set<std::string> tmp;
            std::set_intersection(shared.begin(), shared.end(), cover.begin(), cover.end(),
                                  std::inserter(tmp, tmp.begin()));
            shared = std::move(tmp);
        }
    }
    if (shared.size() < 2) {
        throw ValidationError("algorithms share fewer than two instances");
    }
    report.instances.assign(shared.begin(), shared.end());

    // Per-instance z marks against the control.
    for (const auto& inst : report.instances) {
        const auto control_sample = stats::describe(by_alg_inst[control][inst]);
        for (const auto& alg : report.algorithms) {
            if (alg == control) continue;
            const auto other = stats::describe(by_alg_inst[alg][inst]);
            try {
                const auto z = stats::z_classify(control_sample, other);
                report.z_entries.push_back({inst, alg, z.z, z.mark});
            } catch (const DegenerateSampleError&) {
                report.z_entries.push_back({inst, alg, 0.0, '?'});
            }
        }
    }

    // Friedman over per-instance means, then Holm against the control.
    std::vector<std::vector<double>> means;
    for (const auto& inst : report.instances) {
        std::vector<double> row;
        for (const auto& alg : report.algorithms) {
            row.push_back(stats::describe(by_alg_inst[alg][inst]).mean);
        }
        means.push_back(std::move(row));
    }
    report.rank_table = stats::friedman_ranks(means);
    report.friedman =
        stats::friedman_statistic(report.rank_table.avg_rank, report.rank_table.instances);
    const int control_index = static_cast<int>(
        std::find(report.algorithms.begin(), report.algorithms.end(), control) -
        report.algorithms.begin());
    report.holm =
        stats::holm_posthoc(report.rank_table.avg_rank, report.rank_table.instances, control_index);
    return report;
}

std::string CompareReport::to_text(const std::string& control) const {
    std::ostringstream out;
    out << "z test vs " << control << " (+ control better, - control worse, * not significant)\n";
    for (const auto& e : z_entries) {
        out << "  " << std::left << std::setw(20) << e.instance << std::setw(16) << e.algorithm
            << std::right << std::showpos << std::fixed << std::setprecision(3) << std::setw(9)
            << e.z << std::noshowpos << "  " << e.mark << "\n";
        out.unsetf(std::ios::fixed);
    }
    out << "\nFriedman average ranks (lower is better), H=" << rank_table.instances << "\n";
    for (std::size_t a = 0; a < algorithms.size(); ++a) {
        out << "  " << std::left << std::setw(16) << algorithms[a] << std::fixed
            << std::setprecision(4) << rank_table.avg_rank[a] << "\n";
        out.unsetf(std::ios::fixed);
    }
    out << "  X^2_r = " << std::fixed << std::setprecision(2) << friedman << "\n";
    out.unsetf(std::ios::fixed);
    out << "\nHolm post-hoc vs " << control << "\n";
    for (const auto& row : holm) {
        if (algorithms[row.algorithm] == control) continue;
        out << "  " << std::left << std::setw(16) << algorithms[row.algorithm] << std::scientific
            << std::setprecision(5) << "p=" << row.p_unadjusted
            << "  adjusted=" << row.p_adjusted << "\n";
        out.unsetf(std::ios::scientific);
    }
    return out.str();
}

std::string CompareReport::to_csv() const {
    std::ostringstream out;
    out << "section,instance,algorithm,value,extra\n";
    for (const auto& e : z_entries) {
        out << "z," << e.instance << ',' << e.algorithm << ',' << std::setprecision(10) << e.z
            << ',' << e.mark << "\n";
    }
    for (std::size_t a = 0; a < algorithms.size(); ++a) {
        out << "rank,," << algorithms[a] << ',' << std::setprecision(10)
            << rank_table.avg_rank[a] << ",\n";
    }
    out << "friedman,,," << std::setprecision(10) << friedman << ",\n";
    for (const auto& row : holm) {
        out << "holm,," << algorithms[row.algorithm] << ',' << std::setprecision(10)
            << row.p_unadjusted << ',' << row.p_adjusted << "\n";
    }
    return out.str();
}

std::string teams_study(const std::vector<std::string>& instance_refs, int runs,
                        std::uint64_t seed_base, std::ostream& log) {
    const std::vector<std::pair<int, int>> versions{{2, 24}, {4, 12}, {6, 8}, {8, 6}};
    BenchPlan plan;
    plan.instances = instance_refs;
    plan.runs = runs;
    plan.seed_base = seed_base;
    plan.output_dir = "teams-study-out";
    for (auto [tn, pt] : versions) {
        AlgorithmSpec spec;
        spec.id = "gb";
        spec.teams = tn;
        spec.players_per_team = pt;
        plan.algorithms.push_back(spec);
    }
    const auto result = run_plan(plan, log);

    std::map<std::string, std::map<std::string, std::pair<std::vector<double>, double>>> cells;
    for (const auto& r : result.records) {
        auto& cell = cells[r.algorithm][r.instance];
        cell.first.push_back(r.best_f);
        cell.second += r.wall_seconds;
    }
    std::ostringstream out;
    out << "version,instance,mean,mean_time\n";
    for (auto [tn, pt] : versions) {
        AlgorithmSpec spec;
        spec.id = "gb";
        spec.teams = tn;
        spec.players_per_team = pt;
        for (const auto& [inst, cell] : cells[spec.display()]) {
            out << spec.display() << ',' << inst << ',' << std::setprecision(10)
                << stats::describe(cell.first).mean << ','
                << cell.second / cell.first.size() << "\n";
        }
    }
    return out.str();
}

}  // namespace gb::bench
