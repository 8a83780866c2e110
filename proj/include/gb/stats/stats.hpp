#pragma once

#include <optional>
#include <span>
#include <vector>

namespace gb::stats {

enum class Sense { Minimize, Maximize };

struct StatsSample {
    double mean = 0.0;
    double stddev = 0.0;  // sample (n-1) standard deviation
    int n = 0;
    double min = 0.0;
    double median = 0.0;
    double iqr = 0.0;
    std::optional<std::vector<double>> raw;
};

// Mean, sample standard deviation, min, median and interquartile range
// (linearly interpolated quartiles).
StatsSample describe(std::span<const double> values);

StatsSample make_sample(double mean, double stddev, int n);

struct ZResult {
    double z = 0.0;
    char mark = '*';  // '+' control better, '-' control worse, '*' not significant
};

// Two-sample z statistic with the control (first) sample oriented so that a
// positive z means the control wins: under minimization
// z = (mean_other - mean_control) / sqrt(s_c^2/n_c + s_o^2/n_o).
// Marks use the 95% level: '+' for z >= 1.96, '-' for z <= -1.96, else '*'.
// Needs n >= 2 on both sides; two zero-variance samples with equal means give
// z = 0, otherwise they raise DegenerateSampleError.
ZResult z_classify(const StatsSample& control, const StatsSample& other,
                   Sense sense = Sense::Minimize);

inline constexpr double kZCritical95 = 1.96;

// 99% chi-square critical value for K-1 = 4 degrees of freedom, the decision
// threshold used with five algorithms.
inline constexpr double kChi2Critical99Df4 = 13.277;

struct RankTable {
    int instances = 0;   // H
    int algorithms = 0;  // K
    std::vector<std::vector<double>> ranks;  // per instance, midrank ties
    std::vector<double> avg_rank;            // Rc per algorithm
};

// Ranks each instance's per-algorithm means (1 = best) with midranks on ties.
RankTable friedman_ranks(const std::vector<std::vector<double>>& means,
                         Sense sense = Sense::Minimize);

// X^2_r = 12 / (H K (K+1)) * sum_j (H * Rc_j)^2 - 3 H (K+1).
double friedman_statistic(std::span<const double> avg_ranks, int instances);

struct HolmRow {
    int algorithm = 0;
    double z = 0.0;
    double p_unadjusted = 1.0;
    double p_adjusted = 1.0;
};

// Pairwise z against the control, z = (Rc_j - Rc_c) / sqrt(K(K+1)/(6H)),
// two-sided normal p-values and the Holm step-down adjustment (sorted
// ascending, scaled by m-i+1, monotone, capped at 1). Rows come back in the
// original algorithm order, control included with p = 1.
std::vector<HolmRow> holm_posthoc(std::span<const double> avg_ranks, int instances, int control);

// Standard normal CDF via std::erfc; absolute error well below 1e-7.
double normal_cdf(double x);

}  // namespace gb::stats
