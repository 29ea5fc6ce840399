#include "vizplan/imputation.hpp"

#include <algorithm>
#include <cmath>

namespace vizplan {

std::string BudgetSpec::token() const {
    const char* kind_token = kind == Kind::AbsoluteCells ? "cells" : "fraction";
    char buf[64];
    if (kind == Kind::AbsoluteCells)
        std::snprintf(buf, sizeof buf, "%s:%.0f", kind_token, value);
    else
        std::snprintf(buf, sizeof buf, "%s:%g", kind_token, value);
    return buf;
}

BudgetSpec parse_budget(std::string_view token) {
    const auto colon = token.find(':');
    std::string_view kind = colon == std::string_view::npos ? "cells" : token.substr(0, colon);
    std::string_view value = colon == std::string_view::npos ? token : token.substr(colon + 1);
    double v = 0.0;
    try {
        v = std::stod(std::string(value));
    } catch (const std::exception&) {
        throw ConfigError("bad budget value: " + std::string(token));
    }
    if (kind == "cells") return BudgetSpec::cells(v);
    if (kind == "fraction") return BudgetSpec::fraction(v);
    throw ConfigError("unknown budget kind: " + std::string(kind));
}

std::size_t resolve_budget(const BudgetSpec& budget, const MaskedDataset& masked) {
    if (budget.value < 0.0) throw NegativeBudgetError();
    const std::size_t mask_size = masked.missing_count();
    if (budget.kind == BudgetSpec::Kind::AbsoluteCells)
        return std::min(static_cast<std::size_t>(std::llround(budget.value)), mask_size);
    const auto cells = static_cast<std::size_t>(std::llround(budget.value *
                                                static_cast<double>(mask_size)));
    return std::min(cells, mask_size);
}

CellAwareResult run_cell_aware(const MaskedDataset& masked, const BudgetSpec& budget,
                               StrategyKind strategy, const PriorityContext& ctx,
                               Rng& rng, CostLedger& ledger) {
    if (!is_cell_aware(strategy))
        throw ConfigError(std::string(strategy_token(strategy)) +
                          " is not a cell-aware strategy");

    CellAwareResult result{masked, {}};
    result.plan.strategy = strategy;
    if (strategy == StrategyKind::NoImputation) return result;

    std::size_t remaining = resolve_budget(budget, masked);
    result.plan.budget = remaining;
    while (remaining > 0 && result.imputed.missing_count() > 0) {
        const auto map = score_missing_cells(result.imputed, strategy, ctx);
        ledger.priority_evaluations += map.scores.size() * component_evaluations(strategy);

        double best = map.scores.front().second;
        for (const auto& [cell, score] : map.scores) best = std::max(best, score);
        // Ties are resolved uniformly at random among the maximal cells.
        std::vector<CellAddress> candidates;
        for (const auto& [cell, score] : map.scores)
            if (score == best) candidates.push_back(cell);
        const auto pick =
            candidates.size() == 1 ? candidates.front()
                                   : candidates[rng.next_below(candidates.size())];

        result.imputed.impute(pick);
        ++ledger.cells_imputed;
        result.plan.steps.emplace_back(pick, best);
        --remaining;
    }
    return result;
}

RankingAwareResult run_ranking_aware(const MaskedDataset& masked,
                                     const BudgetSpec& budget, StrategyKind strategy,
                                     std::size_t k, const SubsetSpec& target,
                                     const SubsetSpec& reference, DistanceKind distance,
                                     Rng& rng, CostLedger& ledger,
                                     const WeightProfile* profile_override) {
    if (!is_ranking_aware(strategy))
        throw ConfigError(std::string(strategy_token(strategy)) +
                          " is not a ranking-aware strategy");

    RankingAwareResult result{masked, {}, rank_views(masked, target, reference, distance)};
    ledger.view_executions_temp += 2 * result.temp_rank.size();

    const WeightProfile profile =
        profile_override ? *profile_override
        : strategy == StrategyKind::Ranking
            ? WeightProfile::constant(k, result.temp_rank.size())
            : WeightProfile::inverted_u(k, result.temp_rank.size());
    const ColumnScores column_scores = temp_rank_column_scores(result.temp_rank, profile);

    PriorityContext ctx;
    ctx.target = target;
    ctx.reference = reference;
    ctx.column_scores = &column_scores;

    if (strategy == StrategyKind::Hybrid) {
        // The contribution and fairness factors feed back into each other, so
        // the hybrid picks iteratively like the cell-aware loop; only the
        // temporary ranking (and the column scores built from it) stays fixed.
        std::size_t remaining = resolve_budget(budget, masked);
        result.plan.budget = remaining;
        while (remaining > 0 && result.imputed.missing_count() > 0) {
            const auto map = score_missing_cells(result.imputed, strategy, ctx);
            ledger.priority_evaluations +=
                map.scores.size() * component_evaluations(strategy);
            double best = map.scores.front().second;
            for (const auto& [cell, score] : map.scores) best = std::max(best, score);
            std::vector<CellAddress> ties;
            for (const auto& [cell, score] : map.scores)
                if (score == best) ties.push_back(cell);
            const auto pick =
                ties.size() == 1 ? ties.front() : ties[rng.next_below(ties.size())];
            result.imputed.impute(pick);
            ++ledger.cells_imputed;
            result.plan.steps.emplace_back(pick, best);
            --remaining;
        }
        return result;
    }

    // One scoring pass over the initial mask; no rescoring between picks.
    const auto map = score_missing_cells(masked, strategy, ctx);
    ledger.priority_evaluations += map.scores.size() * component_evaluations(strategy);

    struct Candidate {
        double score;
        std::uint64_t tie_key;
        CellAddress cell;
    };
    std::vector<Candidate> candidates;
    candidates.reserve(map.scores.size());
    for (const auto& [cell, score] : map.scores)
        candidates.push_back({score, rng.next_u64(), cell});
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                  if (a.score != b.score) return a.score > b.score;
                  if (a.tie_key != b.tie_key) return a.tie_key < b.tie_key;
                  return a.cell < b.cell;
              });

    const std::size_t take = resolve_budget(budget, masked);
    result.plan.strategy = strategy;
    result.plan.budget = take;
    for (std::size_t i = 0; i < take; ++i) {
        result.imputed.impute(candidates[i].cell);
        ++ledger.cells_imputed;
        result.plan.steps.emplace_back(candidates[i].cell, candidates[i].score);
    }
    return result;
}

}  // namespace vizplan
