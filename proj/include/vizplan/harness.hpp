#pragma once

#include "vizplan/config.hpp"
#include "vizplan/similarity.hpp"

namespace vizplan {

/// One trial: a (rate, seed) mask run through one (strategy, budget) flow.
struct TrialRow {
    std::string dataset;
    StrategyKind strategy;
    double rate = 0.0;
    BudgetSpec budget;
    std::uint64_t seed = 0;
    double jaccard = 0.0;
    double rbo = 0.0;
    CostLedger costs;
};

/// Mean and 95% confidence interval of one metric over all seeds of a
/// (strategy, rate, budget) combination.
struct AggregateRow {
    std::string dataset;
    StrategyKind strategy;
    double rate = 0.0;
    BudgetSpec budget;
    std::string metric;  // "jaccard" | "rbo"
    double mean = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::size_t trials = 0;
};

struct EvaluationReport {
    std::vector<TrialRow> trials;
    std::vector<AggregateRow> aggregates;
    std::size_t negative_mass_views = 0;  // across all rankings, for warnings
};

/// Runs the full seeded sweep: for every (rate, seed) an MCAR mask is drawn,
/// every (strategy, budget) flow runs against it, and the resulting top-k is
/// compared with the complete-data top-k by Jaccard and RBO. Deterministic
/// end-to-end for a fixed base seed; trial seeds are base_seed + index.
EvaluationReport run_experiment(const ExperimentConfig& config);

/// Same sweep over an already loaded dataset (config.dataset_path unused).
EvaluationReport run_experiment(const ExperimentConfig& config, DatasetPtr dataset);

/// Computes aggregate rows (exact means and normal-approximation 95% CI)
/// from trial rows, grouped by (strategy, rate, budget) in first-seen order.
std::vector<AggregateRow> aggregate_trials(const std::vector<TrialRow>& trials);

/// Writes trials.csv and aggregates.csv under out_dir (created if needed).
/// Output is byte-stable for identical reports.
void emit_report(const EvaluationReport& report, const std::string& out_dir);

}  // namespace vizplan
