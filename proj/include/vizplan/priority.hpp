#pragma once

#include <map>
#include <string>
#include <vector>

#include "vizplan/rng.hpp"
#include "vizplan/tabular.hpp"
#include "vizplan/views.hpp"

namespace vizplan {

/// Missing-cell selection strategies. Baselines: NoImputation, Random,
/// Fairness. Cell-aware: Cell and its fairness / used-view products.
/// Ranking-aware: Ranking (constant weights), RankingW (inverted-U weights).
/// Hybrid multiplies the weighted ranking score with contribution and
/// fairness.
enum class StrategyKind {
    NoImputation,
    Random,
    Fairness,
    Cell,
    CellF,
    CellV,
    CellFV,
    Ranking,
    RankingW,
    Hybrid,
};

StrategyKind parse_strategy(std::string_view token);
std::string_view strategy_token(StrategyKind strategy);

/// Strategies selected iteratively with rescoring after each imputation.
bool is_cell_aware(StrategyKind strategy);
/// Strategies selected in one batch from a temporary ranking.
bool is_ranking_aware(StrategyKind strategy);

/// Number of component scores one cell evaluation costs (cost-ledger unit).
std::size_t component_evaluations(StrategyKind strategy);

/// Per-rank weights applied to view ranking scores. Constant weights leave
/// every rank at 1; InvertedU rises linearly up to rank k and falls linearly
/// after it, emphasising views near the top-k boundary whose membership is
/// most likely to change.
struct WeightProfile {
    enum class Mode { Constant, InvertedU };

    Mode mode = Mode::Constant;
    std::size_t k = 10;
    std::size_t view_count = 0;
    double alpha_up = 0.0;
    double beta_up = 0.0;
    double alpha_down = 0.0;
    double beta_down = 0.0;
    /// When true, a view's ranking score is its raw utility instead of the
    /// linear rank complement.
    bool z_from_utility = false;

    static WeightProfile constant(std::size_t k, std::size_t view_count);
    /// Default coefficients: alpha_up = k, beta_up = 0, alpha_down = -1,
    /// beta_down = view_count + k. They are scaling factors; any alpha_up > 0
    /// and alpha_down < 0 pair is valid.
    static WeightProfile inverted_u(std::size_t k, std::size_t view_count);

    double weight_at(std::size_t rank) const;
};

/// Normalized per-column ranking scores derived from a temporary ranking.
using ColumnScores = std::map<std::string, double>;

/// Inputs a strategy may need beyond the mask itself.
struct PriorityContext {
    SubsetSpec target = SubsetSpec::whole_data();
    SubsetSpec reference = SubsetSpec::whole_data();
    const ColumnScores* column_scores = nullptr;  // ranking-aware strategies
    Rng* rng = nullptr;                           // Random strategy
};

/// Scores for every currently missing cell, in row-major cell order.
struct PriorityMap {
    StrategyKind strategy = StrategyKind::NoImputation;
    std::vector<std::pair<CellAddress, double>> scores;

    bool empty() const { return scores.empty(); }
};

// ---- component scores (each max-normalized into [0,1]) ----

/// Contribution N: how many views imputing the cell would affect, relative
/// to the best missing cell. A dimension cell counts the present measure
/// cells in its row; a measure cell counts the present dimension cells.
double contribution_score(CellAddress cell, const MaskedDataset& masked);

/// Fairness F: the cell's column missing ratio divided by the highest column
/// missing ratio. Recomputed on the current mask each call.
double fairness_score(CellAddress cell, const MaskedDataset& masked);

/// Used-view V: how often the cell's row participates in view execution
/// (membership count over target and reference subsets), normalized by the
/// highest row count. Rows whose predicate cell is masked take the maximal
/// known count so unknown-membership rows are never starved.
double used_view_score(CellAddress cell, const MaskedDataset& masked,
                       const SubsetSpec& target, const SubsetSpec& reference);

/// Per-column scores from a temporary ranking: each view gets ranking score
/// z_i = view_count + 1 - rank (or its utility when the profile says so),
/// multiplied by the profile weight, summed over the views mentioning the
/// column, and divided by the highest column total.
/// Throws IncompleteRankingError unless the ranking covers the whole view
/// space declared by the profile.
ColumnScores temp_rank_column_scores(const RankedViewList& ranking,
                                     const WeightProfile& profile);

/// Ranking score R: mean column score over the missing columns of the cell's
/// row; every missing cell of one row shares the value.
double ranking_score(CellAddress cell, const MaskedDataset& masked,
                     const ColumnScores& column_scores);

/// The strategy's priority for one missing cell. Combined strategies multiply
/// their component scores. Throws MissingContextError when a ranking-aware
/// strategy lacks column scores or Random lacks an RNG.
double priority(CellAddress cell, const MaskedDataset& masked,
                StrategyKind strategy, const PriorityContext& ctx);

/// Batch variant: scores all currently missing cells in row-major order,
/// computing shared normalizers once. Agrees with priority() cell-for-cell
/// (Random draws are consumed in row-major order).
PriorityMap score_missing_cells(const MaskedDataset& masked, StrategyKind strategy,
                                const PriorityContext& ctx);

}  // namespace vizplan
