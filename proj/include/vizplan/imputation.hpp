#pragma once

#include <cstdint>
#include <optional>

#include "vizplan/priority.hpp"

namespace vizplan {

/// Imputation budget: a fixed cell count, or a fraction of the mask size.
struct BudgetSpec {
    enum class Kind { AbsoluteCells, FractionOfMissing };
    Kind kind = Kind::FractionOfMissing;
    double value = 0.1;

    static BudgetSpec cells(double n) { return {Kind::AbsoluteCells, n}; }
    static BudgetSpec fraction(double f) { return {Kind::FractionOfMissing, f}; }

    std::string token() const;
};

BudgetSpec parse_budget(std::string_view token);

/// Cells actually selected, in imputation order, with the score each carried
/// at selection time.
struct ImputationPlan {
    StrategyKind strategy = StrategyKind::NoImputation;
    std::size_t budget = 0;
    std::vector<std::pair<CellAddress, double>> steps;
};

/// Operation counters for one end-to-end run. `wall_time_seconds` is the only
/// non-deterministic field and is kept out of serialized reports.
struct CostLedger {
    std::size_t cells_imputed = 0;
    std::size_t priority_evaluations = 0;
    std::size_t view_executions_temp = 0;
    std::size_t view_executions_final = 0;
    double wall_time_seconds = 0.0;
};

/// Resolves a budget against the current mask: absolute counts and rounded
/// fractions, both clamped to the mask size. Throws NegativeBudgetError.
std::size_t resolve_budget(const BudgetSpec& budget, const MaskedDataset& masked);

struct CellAwareResult {
    MaskedDataset imputed;
    ImputationPlan plan;
};

/// Iterative greedy selection: score every missing cell, impute the argmax
/// (ties broken uniformly at random from `rng`), then rescore on the updated
/// mask. Accepts cell-aware strategies and baselines; NoImputation returns
/// the input unchanged.
CellAwareResult run_cell_aware(const MaskedDataset& masked, const BudgetSpec& budget,
                               StrategyKind strategy, const PriorityContext& ctx,
                               Rng& rng, CostLedger& ledger);

struct RankingAwareResult {
    MaskedDataset imputed;
    ImputationPlan plan;
    RankedViewList temp_rank;
};

/// Selection from a temporary ranking: ranks all views over the incomplete
/// data (charged to the ledger's temp counter) and maps the ranking onto
/// columns (constant weights for Ranking, inverted-U for RankingW and
/// Hybrid). Ranking and RankingW score every missing cell once and impute
/// the g highest in one batch (ties seeded-random). Hybrid picks one cell at
/// a time, rescoring its contribution and fairness factors on the updated
/// mask; the temporary ranking and column scores stay fixed throughout.
RankingAwareResult run_ranking_aware(const MaskedDataset& masked,
                                     const BudgetSpec& budget, StrategyKind strategy,
                                     std::size_t k, const SubsetSpec& target,
                                     const SubsetSpec& reference, DistanceKind distance,
                                     Rng& rng, CostLedger& ledger,
                                     const WeightProfile* profile_override = nullptr);

}  // namespace vizplan
