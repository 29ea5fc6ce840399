#include "vizplan/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

namespace vizplan {

RegenMode parse_regen_mode(std::string_view token) {
    if (token == "no-opt") return RegenMode::NoOpt;
    if (token == "top-k") return RegenMode::TopK;
    if (token == "k-highest") return RegenMode::KHighestImputed;
    if (token == "top-k-plus-k-highest") return RegenMode::TopKPlusKHighest;
    throw ConfigError("unknown regeneration mode token: " + std::string(token));
}

std::string_view regen_mode_token(RegenMode mode) {
    switch (mode) {
        case RegenMode::NoOpt: return "no-opt";
        case RegenMode::TopK: return "top-k";
        case RegenMode::KHighestImputed: return "k-highest";
        case RegenMode::TopKPlusKHighest: return "top-k-plus-k-highest";
    }
    return "?";
}

namespace {

class StopWatch {
public:
    explicit StopWatch(double& sink) : sink_(sink), start_(clock::now()) {}
    ~StopWatch() {
        sink_ = std::chrono::duration<double>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    double& sink_;
    clock::time_point start_;
};

RankedViewList sorted_ranking(std::vector<ScoredView> entries) {
    std::sort(entries.begin(), entries.end(), [](const ScoredView& a, const ScoredView& b) {
        if (a.utility != b.utility) return a.utility > b.utility;
        return a.spec < b.spec;
    });
    return {std::move(entries)};
}

}  // namespace

Recommendation run_impute_first(const MaskedDataset& masked, const BudgetSpec& budget,
                                StrategyKind strategy, std::size_t k,
                                const SubsetSpec& target, const SubsetSpec& reference,
                                DistanceKind distance, Rng& rng) {
    Recommendation rec;
    StopWatch watch(rec.costs.wall_time_seconds);

    PriorityContext ctx;
    ctx.target = target;
    ctx.reference = reference;
    ctx.rng = &rng;
    auto [imputed, plan] = run_cell_aware(masked, budget, strategy, ctx, rng, rec.costs);

    const auto ranking = rank_views(imputed, target, reference, distance);
    rec.costs.view_executions_final += 2 * ranking.size();
    rec.final = top_k(ranking, k);
    rec.merged_rank = ranking;
    rec.plan = std::move(plan);
    return rec;
}

std::vector<ViewSpec> select_regeneration_set(const RankedViewList& temp_rank,
                                              const ImputationPlan& plan, std::size_t k,
                                              RegenMode mode, const Schema& schema) {
    std::set<ViewSpec> chosen;
    const auto add_top_k = [&] {
        for (const auto& entry : top_k(temp_rank, k).entries) chosen.insert(entry.spec);
    };
    const auto add_k_highest_imputed = [&] {
        // Imputed-cell count per view: a plan cell counts for every view whose
        // dimension or measure equals the cell's column.
        std::vector<std::pair<ViewSpec, std::size_t>> counts;
        for (const auto& entry : temp_rank.entries) counts.push_back({entry.spec, 0});
        std::sort(counts.begin(), counts.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::map<std::string, std::size_t> imputed_per_column;
        for (const auto& [cell, score] : plan.steps)
            ++imputed_per_column[schema.column_name(cell.column)];
        for (auto& [spec, count] : counts) {
            const auto dim = imputed_per_column.find(spec.dimension);
            if (dim != imputed_per_column.end()) count += dim->second;
            const auto meas = imputed_per_column.find(spec.measure);
            if (meas != imputed_per_column.end()) count += meas->second;
        }
        std::stable_sort(counts.begin(), counts.end(),
                         [](const auto& a, const auto& b) { return a.second > b.second; });
        for (std::size_t i = 0; i < std::min(k, counts.size()); ++i)
            chosen.insert(counts[i].first);
    };

    switch (mode) {
        case RegenMode::NoOpt:
            for (const auto& entry : temp_rank.entries) chosen.insert(entry.spec);
            break;
        case RegenMode::TopK:
            add_top_k();
            break;
        case RegenMode::KHighestImputed:
            add_k_highest_imputed();
            break;
        case RegenMode::TopKPlusKHighest:
            add_top_k();
            add_k_highest_imputed();
            break;
    }
    return {chosen.begin(), chosen.end()};
}

Recommendation run_insight_first(const MaskedDataset& masked, const BudgetSpec& budget,
                                 StrategyKind strategy, std::size_t k,
                                 const SubsetSpec& target, const SubsetSpec& reference,
                                 DistanceKind distance, RegenMode mode, Rng& rng,
                                 const WeightProfile* profile_override) {
    Recommendation rec;
    StopWatch watch(rec.costs.wall_time_seconds);

    auto ranking_run = run_ranking_aware(masked, budget, strategy, k, target, reference,
                                         distance, rng, rec.costs, profile_override);
    const auto& temp_rank = ranking_run.temp_rank;
    const auto& imputed = ranking_run.imputed;

    const auto regen_specs =
        select_regeneration_set(temp_rank, ranking_run.plan, k, mode, masked.schema());
    std::map<ViewSpec, double> fresh;
    for (const auto& spec : regen_specs) {
        fresh[spec] = score_view(imputed, spec, target, reference, distance);
        rec.costs.view_executions_final += 2;
    }

    // Merged ranking: fresh utilities where regenerated, temporary elsewhere.
    std::vector<ScoredView> merged;
    merged.reserve(temp_rank.size());
    for (const auto& entry : temp_rank.entries) {
        const auto it = fresh.find(entry.spec);
        merged.push_back({entry.spec, it != fresh.end() ? it->second : entry.utility});
    }
    const auto merged_ranking = sorted_ranking(std::move(merged));

    if (mode == RegenMode::TopKPlusKHighest) {
        // Recommend from the regenerated pool only; everything in it carries a
        // post-imputation utility.
        std::vector<ScoredView> pool;
        pool.reserve(fresh.size());
        for (const auto& [spec, utility] : fresh) pool.push_back({spec, utility});
        rec.final = top_k(sorted_ranking(std::move(pool)), k);
    } else {
        rec.final = top_k(merged_ranking, k);
    }
    rec.temp_rank = temp_rank;
    rec.merged_rank = merged_ranking;
    rec.plan = std::move(ranking_run.plan);
    return rec;
}

Recommendation run_pipeline(const MaskedDataset& masked, const BudgetSpec& budget,
                            StrategyKind strategy, std::size_t k,
                            const SubsetSpec& target, const SubsetSpec& reference,
                            DistanceKind distance, RegenMode mode, Rng& rng,
                            const WeightProfile* profile_override) {
    if (is_ranking_aware(strategy))
        return run_insight_first(masked, budget, strategy, k, target, reference,
                                 distance, mode, rng, profile_override);
    return run_impute_first(masked, budget, strategy, k, target, reference, distance,
                            rng);
}

}  // namespace vizplan
