#include "gb/stats/stats.hpp"

#include <algorithm>
#include <cmath>

#include "gb/core/errors.hpp"

namespace gb::stats {

namespace {

// Linear interpolation quantile over a sorted vector.
double quantile(const std::vector<double>& sorted, double q) {
    const double pos = q * (static_cast<double>(sorted.size()) - 1.0);
    const std::size_t lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] * (1.0 - frac) + sorted[lo + 1] * frac;
}

}  // namespace

StatsSample describe(std::span<const double> values) {
    if (values.empty()) throw DegenerateSampleError("describe() needs at least one value");
    StatsSample s;
    s.n = static_cast<int>(values.size());
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / s.n;
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stddev = s.n > 1 ? std::sqrt(ss / (s.n - 1)) : 0.0;

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    s.min = sorted.front();
    s.median = quantile(sorted, 0.5);
    s.iqr = quantile(sorted, 0.75) - quantile(sorted, 0.25);
    s.raw = std::move(sorted);
    return s;
}

StatsSample make_sample(double mean, double stddev, int n) {
    StatsSample s;
    s.mean = mean;
    s.stddev = stddev;
    s.n = n;
    return s;
}

ZResult z_classify(const StatsSample& control, const StatsSample& other, Sense sense) {
    if (control.n < 2 || other.n < 2) {
        throw DegenerateSampleError("z test needs at least two runs per sample");
    }
    ZResult r;
    if (control.stddev == 0.0 && other.stddev == 0.0) {
        if (control.mean == other.mean) {
            r.z = 0.0;
            r.mark = '*';
            return r;
        }
        throw DegenerateSampleError("zero pooled variance with unequal means");
    }
    const double denom = std::sqrt(control.stddev * control.stddev / control.n +
                                   other.stddev * other.stddev / other.n);
    // Oriented so that a positive z means the control is better.
    const double diff = sense == Sense::Minimize ? other.mean - control.mean
                                                 : control.mean - other.mean;
    r.z = diff / denom;
    r.mark = r.z >= kZCritical95 ? '+' : (r.z <= -kZCritical95 ? '-' : '*');
    return r;
}

RankTable friedman_ranks(const std::vector<std::vector<double>>& means, Sense sense) {
    if (means.size() < 2) throw DegenerateSampleError("Friedman needs at least two instances");
    RankTable table;
    table.instances = static_cast<int>(means.size());
    table.algorithms = static_cast<int>(means[0].size());
    if (table.algorithms < 2) throw DegenerateSampleError("Friedman needs at least two algorithms");

    for (const auto& row : means) {
        if (static_cast<int>(row.size()) != table.algorithms) {
            throw DegenerateSampleError("ragged results matrix");
        }
        const int k = table.algorithms;
        std::vector<int> order(k);
        for (int i = 0; i < k; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return sense == Sense::Minimize ? row[a] < row[b] : row[a] > row[b];
        });
        std::vector<double> ranks(k, 0.0);
        int i = 0;
        while (i < k) {
            int j = i;
            while (j + 1 < k && row[order[j + 1]] == row[order[i]]) ++j;
            const double midrank = (i + j) / 2.0 + 1.0;  // average of positions i..j, 1-based
            for (int t = i; t <= j; ++t) ranks[order[t]] = midrank;
            i = j + 1;
        }
        table.ranks.push_back(std::move(ranks));
    }

    table.avg_rank.assign(table.algorithms, 0.0);
    for (const auto& row : table.ranks) {
        for (int a = 0; a < table.algorithms; ++a) table.avg_rank[a] += row[a];
    }
    for (double& r : table.avg_rank) r /= table.instances;
    return table;
}

double friedman_statistic(std::span<const double> avg_ranks, int instances) {
    const int k = static_cast<int>(avg_ranks.size());
    const double h = instances;
    double sum_sq = 0.0;
    for (double rc : avg_ranks) {
        const double rank_sum = h * rc;
        sum_sq += rank_sum * rank_sum;
    }
    return 12.0 / (h * k * (k + 1)) * sum_sq - 3.0 * h * (k + 1);
}

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

std::vector<HolmRow> holm_posthoc(std::span<const double> avg_ranks, int instances, int control) {
    const int k = static_cast<int>(avg_ranks.size());
    if (control < 0 || control >= k) throw ValidationError("control index out of range");
    const double se = std::sqrt(static_cast<double>(k) * (k + 1) / (6.0 * instances));

    std::vector<HolmRow> rows(k);
    for (int a = 0; a < k; ++a) {
        rows[a].algorithm = a;
        rows[a].z = (avg_ranks[a] - avg_ranks[control]) / se;
        rows[a].p_unadjusted = 2.0 * (1.0 - normal_cdf(std::abs(rows[a].z)));
    }

    // Step-down over the m = k-1 non-control hypotheses.
    std::vector<int> order;
    for (int a = 0; a < k; ++a) {
        if (a != control) order.push_back(a);
    }
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return rows[a].p_unadjusted < rows[b].p_unadjusted; });
    const int m = static_cast<int>(order.size());
    double running = 0.0;
    for (int i = 0; i < m; ++i) {
        const double scaled = rows[order[i]].p_unadjusted * (m - i);
        running = std::max(running, scaled);
        rows[order[i]].p_adjusted = std::min(1.0, running);
    }
    rows[control].p_unadjusted = 1.0;
    rows[control].p_adjusted = 1.0;
    return rows;
}

}  // namespace gb::stats
