#pragma once

#include <optional>

#include "vizplan/imputation.hpp"

namespace vizplan {

/// Which views are re-executed after imputation in the insight-first flow.
enum class RegenMode { NoOpt, TopK, KHighestImputed, TopKPlusKHighest };

RegenMode parse_regen_mode(std::string_view token);
std::string_view regen_mode_token(RegenMode mode);

/// One end-to-end run's output: the recommended top-k views, the temporary
/// ranking when the flow produced one, the full post-imputation ranking used
/// for diagnostics, the selection trace, and the operation counters.
struct Recommendation {
    RankedViewList final;                       // truncated to k
    std::optional<RankedViewList> temp_rank;    // insight-first flows only
    std::optional<RankedViewList> merged_rank;  // full ranking incl. stale scores
    ImputationPlan plan;
    CostLedger costs;
};

/// Impute-first flow: greedy cell-aware imputation, then one full view
/// ranking over the imputed data.
Recommendation run_impute_first(const MaskedDataset& masked, const BudgetSpec& budget,
                                StrategyKind strategy, std::size_t k,
                                const SubsetSpec& target, const SubsetSpec& reference,
                                DistanceKind distance, Rng& rng);

/// Views to re-execute after imputation. KHighestImputed selects the k specs
/// touched by the most imputed cells (a cell touches every view whose
/// dimension or measure is the cell's column), ties broken lexicographically.
/// Returned in lexicographic order.
std::vector<ViewSpec> select_regeneration_set(const RankedViewList& temp_rank,
                                              const ImputationPlan& plan, std::size_t k,
                                              RegenMode mode, const Schema& schema);

/// Insight-first flow: temporary ranking over the incomplete data, batch
/// ranking-aware imputation, then re-execution of the regeneration set only.
/// Views outside the set keep their temporary utilities in the merged
/// ranking. The recommendation is the top-k of the merged ranking, except
/// under TopKPlusKHighest where the top-k is drawn from the regenerated pool
/// (all candidates there carry fresh utilities).
Recommendation run_insight_first(const MaskedDataset& masked, const BudgetSpec& budget,
                                 StrategyKind strategy, std::size_t k,
                                 const SubsetSpec& target, const SubsetSpec& reference,
                                 DistanceKind distance, RegenMode mode, Rng& rng,
                                 const WeightProfile* profile_override = nullptr);

/// Dispatches on the strategy family. `profile_override`, when given, is
/// forwarded to the ranking-aware flow (impute-first flows ignore it).
Recommendation run_pipeline(const MaskedDataset& masked, const BudgetSpec& budget,
                            StrategyKind strategy, std::size_t k,
                            const SubsetSpec& target, const SubsetSpec& reference,
                            DistanceKind distance, RegenMode mode, Rng& rng,
                            const WeightProfile* profile_override = nullptr);

}  // namespace vizplan
