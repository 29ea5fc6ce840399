#include "vizplan/priority.hpp"

#include <algorithm>
#include <set>

namespace vizplan {

StrategyKind parse_strategy(std::string_view token) {
    if (token == "none") return StrategyKind::NoImputation;
    if (token == "random") return StrategyKind::Random;
    if (token == "fairness") return StrategyKind::Fairness;
    if (token == "cell") return StrategyKind::Cell;
    if (token == "cell-f") return StrategyKind::CellF;
    if (token == "cell-v") return StrategyKind::CellV;
    if (token == "cell-fv") return StrategyKind::CellFV;
    if (token == "ranking") return StrategyKind::Ranking;
    if (token == "ranking-w") return StrategyKind::RankingW;
    if (token == "hybrid") return StrategyKind::Hybrid;
    throw ConfigError("unknown strategy token: " + std::string(token));
}

std::string_view strategy_token(StrategyKind strategy) {
    switch (strategy) {
        case StrategyKind::NoImputation: return "none";
        case StrategyKind::Random: return "random";
        case StrategyKind::Fairness: return "fairness";
        case StrategyKind::Cell: return "cell";
        case StrategyKind::CellF: return "cell-f";
        case StrategyKind::CellV: return "cell-v";
        case StrategyKind::CellFV: return "cell-fv";
        case StrategyKind::Ranking: return "ranking";
        case StrategyKind::RankingW: return "ranking-w";
        case StrategyKind::Hybrid: return "hybrid";
    }
    return "?";
}

bool is_cell_aware(StrategyKind strategy) {
    switch (strategy) {
        case StrategyKind::NoImputation:
        case StrategyKind::Random:
        case StrategyKind::Fairness:
        case StrategyKind::Cell:
        case StrategyKind::CellF:
        case StrategyKind::CellV:
        case StrategyKind::CellFV:
            return true;
        default:
            return false;
    }
}

bool is_ranking_aware(StrategyKind strategy) {
    return strategy == StrategyKind::Ranking || strategy == StrategyKind::RankingW ||
           strategy == StrategyKind::Hybrid;
}

std::size_t component_evaluations(StrategyKind strategy) {
    switch (strategy) {
        case StrategyKind::NoImputation: return 0;
        case StrategyKind::Random:
        case StrategyKind::Fairness:
        case StrategyKind::Cell:
        case StrategyKind::Ranking:
        case StrategyKind::RankingW:
            return 1;
        case StrategyKind::CellF:
        case StrategyKind::CellV:
            return 2;
        case StrategyKind::CellFV:
        case StrategyKind::Hybrid:
            return 3;
    }
    return 0;
}

WeightProfile WeightProfile::constant(std::size_t k, std::size_t view_count) {
    WeightProfile p;
    p.mode = Mode::Constant;
    p.k = k;
    p.view_count = view_count;
    return p;
}

WeightProfile WeightProfile::inverted_u(std::size_t k, std::size_t view_count) {
    WeightProfile p;
    p.mode = Mode::InvertedU;
    p.k = k;
    p.view_count = view_count;
    p.alpha_up = static_cast<double>(k);
    p.beta_up = 0.0;
    p.alpha_down = -1.0;
    p.beta_down = static_cast<double>(view_count + k);
    return p;
}

double WeightProfile::weight_at(std::size_t rank) const {
    if (mode == Mode::Constant) return 1.0;
    const auto r = static_cast<double>(rank);
    return rank <= k ? alpha_up * r + beta_up : alpha_down * r + beta_down;
}

namespace {

void require_missing(CellAddress cell, const MaskedDataset& masked) {
    if (!masked.ground_truth().contains(cell) || !masked.is_missing(cell))
        throw CellNotMissingError(cell.row, cell.column);
}

// Raw contribution of one missing cell: the number of views its imputation
// would touch, determined by the complete cells in its row.
double contribution_raw(const MaskedDataset& masked, CellAddress cell) {
    if (masked.schema().is_dimension_column(cell.column))
        return static_cast<double>(masked.present_measures_in_row(cell.row));
    return static_cast<double>(masked.present_dimensions_in_row(cell.row));
}

double max_contribution_raw(const MaskedDataset& masked,
                            const std::vector<CellAddress>& cells) {
    double best = 0.0;
    for (const auto& cell : cells) best = std::max(best, contribution_raw(masked, cell));
    return best;
}

double max_column_missing_ratio(const MaskedDataset& masked) {
    double best = 0.0;
    for (std::size_t c = 0; c < masked.schema().column_count(); ++c) {
        const double ratio = static_cast<double>(masked.missing_in_column(c)) /
                             static_cast<double>(masked.row_count());
        best = std::max(best, ratio);
    }
    return best;
}

double column_missing_ratio(const MaskedDataset& masked, std::size_t column) {
    return static_cast<double>(masked.missing_in_column(column)) /
           static_cast<double>(masked.row_count());
}

// Per-row subset membership counts. Rows with an unknown membership (masked
// predicate cell) are assigned the maximum count seen on fully known rows.
std::vector<double> row_usage_counts(const MaskedDataset& masked,
                                     const SubsetSpec& target,
                                     const SubsetSpec& reference) {
    const std::size_t rows = masked.row_count();
    std::vector<double> counts(rows, -1.0);  // -1 marks unknown
    double known_max = 0.0;
    for (std::size_t row = 0; row < rows; ++row) {
        const auto in_target = row_in_subset(masked, row, target);
        const auto in_reference = row_in_subset(masked, row, reference);
        if (!in_target || !in_reference) continue;
        counts[row] = (*in_target ? 1.0 : 0.0) + (*in_reference ? 1.0 : 0.0);
        known_max = std::max(known_max, counts[row]);
    }
    for (auto& c : counts)
        if (c < 0.0) c = known_max;
    return counts;
}

// Mean column score over the missing columns of each row that has any.
// Returned vector is indexed by row; rows without missing cells hold 0.
std::vector<double> row_ranking_scores(const MaskedDataset& masked,
                                       const ColumnScores& column_scores) {
    const auto& schema = masked.schema();
    std::vector<double> scores(masked.row_count(), 0.0);
    for (std::size_t row = 0; row < masked.row_count(); ++row) {
        double sum = 0.0;
        std::size_t missing = 0;
        for (std::size_t col = 0; col < schema.column_count(); ++col) {
            if (!masked.is_missing({row, col})) continue;
            const auto it = column_scores.find(schema.column_name(col));
            if (it == column_scores.end())
                throw IncompleteRankingError(column_scores.size(), schema.column_count());
            sum += it->second;
            ++missing;
        }
        if (missing > 0) scores[row] = sum / static_cast<double>(missing);
    }
    return scores;
}

}  // namespace

double contribution_score(CellAddress cell, const MaskedDataset& masked) {
    require_missing(cell, masked);
    const double max_raw = max_contribution_raw(masked, missing_cells(masked));
    if (max_raw <= 0.0) return 0.0;
    return contribution_raw(masked, cell) / max_raw;
}

double fairness_score(CellAddress cell, const MaskedDataset& masked) {
    require_missing(cell, masked);
    const double max_ratio = max_column_missing_ratio(masked);
    if (max_ratio <= 0.0) return 0.0;
    return column_missing_ratio(masked, cell.column) / max_ratio;
}

double used_view_score(CellAddress cell, const MaskedDataset& masked,
                       const SubsetSpec& target, const SubsetSpec& reference) {
    require_missing(cell, masked);
    const auto counts = row_usage_counts(masked, target, reference);
    const double max_count = *std::max_element(counts.begin(), counts.end());
    if (max_count <= 0.0) return 0.0;
    return counts[cell.row] / max_count;
}

ColumnScores temp_rank_column_scores(const RankedViewList& ranking,
                                     const WeightProfile& profile) {
    if (ranking.size() != profile.view_count)
        throw IncompleteRankingError(ranking.size(), profile.view_count);
    std::set<ViewSpec> distinct;
    for (const auto& entry : ranking.entries) distinct.insert(entry.spec);
    if (distinct.size() != ranking.size())
        throw IncompleteRankingError(distinct.size(), profile.view_count);

    const auto total_views = static_cast<double>(ranking.size());
    ColumnScores totals;
    for (std::size_t i = 0; i < ranking.entries.size(); ++i) {
        const std::size_t rank = i + 1;
        const auto& entry = ranking.entries[i];
        const double z = profile.z_from_utility
                             ? entry.utility
                             : total_views + 1.0 - static_cast<double>(rank);
        const double weighted = z * profile.weight_at(rank);
        totals[entry.spec.dimension] += weighted;
        totals[entry.spec.measure] += weighted;
    }
    double max_total = 0.0;
    for (const auto& [name, total] : totals) max_total = std::max(max_total, total);
    if (max_total > 0.0)
        for (auto& [name, total] : totals) total /= max_total;
    return totals;
}

double ranking_score(CellAddress cell, const MaskedDataset& masked,
                     const ColumnScores& column_scores) {
    require_missing(cell, masked);
    return row_ranking_scores(masked, column_scores)[cell.row];
}

namespace {

const ColumnScores& require_column_scores(const PriorityContext& ctx,
                                          StrategyKind strategy) {
    if (!ctx.column_scores)
        throw MissingContextError(std::string(strategy_token(strategy)) +
                                  " needs temp-rank column scores");
    return *ctx.column_scores;
}

Rng& require_rng(const PriorityContext& ctx) {
    if (!ctx.rng) throw MissingContextError("random strategy needs a seeded RNG");
    return *ctx.rng;
}

}  // namespace

double priority(CellAddress cell, const MaskedDataset& masked,
                StrategyKind strategy, const PriorityContext& ctx) {
    require_missing(cell, masked);
    switch (strategy) {
        case StrategyKind::NoImputation:
            return 0.0;
        case StrategyKind::Random:
            return require_rng(ctx).next_unit();
        case StrategyKind::Fairness:
            return fairness_score(cell, masked);
        case StrategyKind::Cell:
            return contribution_score(cell, masked);
        case StrategyKind::CellF:
            return contribution_score(cell, masked) * fairness_score(cell, masked);
        case StrategyKind::CellV:
            return contribution_score(cell, masked) *
                   used_view_score(cell, masked, ctx.target, ctx.reference);
        case StrategyKind::CellFV:
            return contribution_score(cell, masked) * fairness_score(cell, masked) *
                   used_view_score(cell, masked, ctx.target, ctx.reference);
        case StrategyKind::Ranking:
        case StrategyKind::RankingW:
            return ranking_score(cell, masked, require_column_scores(ctx, strategy));
        case StrategyKind::Hybrid:
            return ranking_score(cell, masked, require_column_scores(ctx, strategy)) *
                   contribution_score(cell, masked) * fairness_score(cell, masked);
    }
    return 0.0;
}

PriorityMap score_missing_cells(const MaskedDataset& masked, StrategyKind strategy,
                                const PriorityContext& ctx) {
    const auto cells = missing_cells(masked);
    PriorityMap map;
    map.strategy = strategy;
    map.scores.reserve(cells.size());
    if (cells.empty()) return map;

    // Shared normalizers, computed once per batch.
    const bool needs_contribution =
        strategy == StrategyKind::Cell || strategy == StrategyKind::CellF ||
        strategy == StrategyKind::CellV || strategy == StrategyKind::CellFV ||
        strategy == StrategyKind::Hybrid;
    const bool needs_fairness = strategy == StrategyKind::Fairness ||
                                strategy == StrategyKind::CellF ||
                                strategy == StrategyKind::CellFV ||
                                strategy == StrategyKind::Hybrid;
    const bool needs_usage =
        strategy == StrategyKind::CellV || strategy == StrategyKind::CellFV;
    const bool needs_ranking = is_ranking_aware(strategy);

    const double max_raw = needs_contribution ? max_contribution_raw(masked, cells) : 0.0;
    const double max_ratio = needs_fairness ? max_column_missing_ratio(masked) : 0.0;
    std::vector<double> usage;
    double max_usage = 0.0;
    if (needs_usage) {
        usage = row_usage_counts(masked, ctx.target, ctx.reference);
        max_usage = *std::max_element(usage.begin(), usage.end());
    }
    std::vector<double> row_rank;
    if (needs_ranking)
        row_rank = row_ranking_scores(masked, require_column_scores(ctx, strategy));

    // Combination order mirrors priority() so both paths agree bit-for-bit.
    auto n_of = [&](CellAddress cell) {
        return max_raw > 0.0 ? contribution_raw(masked, cell) / max_raw : 0.0;
    };
    auto f_of = [&](CellAddress cell) {
        return max_ratio > 0.0 ? column_missing_ratio(masked, cell.column) / max_ratio
                               : 0.0;
    };
    auto v_of = [&](CellAddress cell) {
        return max_usage > 0.0 ? usage[cell.row] / max_usage : 0.0;
    };
    for (const auto& cell : cells) {
        double score = 0.0;
        switch (strategy) {
            case StrategyKind::NoImputation: score = 0.0; break;
            case StrategyKind::Random: score = require_rng(ctx).next_unit(); break;
            case StrategyKind::Fairness: score = f_of(cell); break;
            case StrategyKind::Cell: score = n_of(cell); break;
            case StrategyKind::CellF: score = n_of(cell) * f_of(cell); break;
            case StrategyKind::CellV: score = n_of(cell) * v_of(cell); break;
            case StrategyKind::CellFV:
                score = n_of(cell) * f_of(cell) * v_of(cell);
                break;
            case StrategyKind::Ranking:
            case StrategyKind::RankingW:
                score = row_rank[cell.row];
                break;
            case StrategyKind::Hybrid:
                score = row_rank[cell.row] * n_of(cell) * f_of(cell);
                break;
        }
        map.scores.emplace_back(cell, score);
    }
    return map;
}

}  // namespace vizplan
