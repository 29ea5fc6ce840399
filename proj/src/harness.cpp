#include "vizplan/harness.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>

namespace vizplan {

namespace {

constexpr double kZ95 = 1.959963984540054;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace

EvaluationReport run_experiment(const ExperimentConfig& config, DatasetPtr dataset) {
    config.validate();
    EvaluationReport report;

    const MaskedDataset complete(dataset, {});
    const auto complete_ranking = rank_views(complete, config.target, config.reference,
                                             config.distance,
                                             &report.negative_mass_views);
    const auto complete_top_k = top_k(complete_ranking, config.k);
    const std::size_t view_count = complete_ranking.size();

    for (const double rate : config.rates) {
        for (std::size_t trial = 0; trial < config.seed_count; ++trial) {
            const std::uint64_t seed = config.base_seed + trial;
            const auto masked = inject_mcar(dataset, rate, seed);
            for (const auto strategy : config.strategies) {
                std::optional<WeightProfile> profile;
                if (config.has_weight_overrides() && is_ranking_aware(strategy))
                    profile = config.weight_profile(strategy, view_count);
                for (const auto& budget : config.budgets) {
                    // One derived stream per run, shared by every strategy so
                    // equal-seed runs of different strategies tie-break alike.
                    Rng rng(mix_seed(seed));
                    const auto rec =
                        run_pipeline(masked, budget, strategy, config.k, config.target,
                                     config.reference, config.distance, config.regen,
                                     rng, profile ? &*profile : nullptr);
                    TrialRow row;
                    row.dataset = config.dataset_name;
                    row.strategy = strategy;
                    row.rate = rate;
                    row.budget = budget;
                    row.seed = seed;
                    row.jaccard = jaccard(rec.final, complete_top_k);
                    row.rbo = rbo(rec.final, complete_top_k, config.rbo_p);
                    row.costs = rec.costs;
                    report.trials.push_back(std::move(row));
                }
            }
        }
    }
    report.aggregates = aggregate_trials(report.trials);
    return report;
}

EvaluationReport run_experiment(const ExperimentConfig& config) {
    if (config.dataset_path.empty()) throw ConfigError("no dataset path configured");
    auto dataset = std::make_shared<const Dataset>(
        load_dataset(config.dataset_path, config.schema));
    return run_experiment(config, std::move(dataset));
}

std::vector<AggregateRow> aggregate_trials(const std::vector<TrialRow>& trials) {
    struct Key {
        std::string dataset;
        StrategyKind strategy;
        double rate;
        std::string budget;
        bool operator<(const Key& other) const {
            return std::tie(dataset, strategy, rate, budget) <
                   std::tie(other.dataset, other.strategy, other.rate, other.budget);
        }
    };
    struct Bucket {
        std::vector<double> jaccard;
        std::vector<double> rbo;
        BudgetSpec budget;
    };

    // Buckets keep first-seen order so the report layout follows the config.
    std::vector<Key> order;
    std::map<Key, Bucket> buckets;
    for (const auto& row : trials) {
        const Key key{row.dataset, row.strategy, row.rate, row.budget.token()};
        auto [it, inserted] = buckets.try_emplace(key);
        if (inserted) {
            order.push_back(key);
            it->second.budget = row.budget;
        }
        it->second.jaccard.push_back(row.jaccard);
        it->second.rbo.push_back(row.rbo);
    }

    auto summarize = [](const std::vector<double>& values, AggregateRow row,
                        const char* metric) {
        const auto n = static_cast<double>(values.size());
        double mean = 0.0;
        for (const double v : values) mean += v;
        mean /= n;
        double half_width = 0.0;
        if (values.size() > 1) {
            double ss = 0.0;
            for (const double v : values) ss += (v - mean) * (v - mean);
            const double sd = std::sqrt(ss / (n - 1.0));
            half_width = kZ95 * sd / std::sqrt(n);
        }
        row.metric = metric;
        row.mean = mean;
        row.ci_low = mean - half_width;
        row.ci_high = mean + half_width;
        row.trials = values.size();
        return row;
    };

    std::vector<AggregateRow> aggregates;
    for (const auto& key : order) {
        const auto& bucket = buckets.at(key);
        AggregateRow base;
        base.dataset = key.dataset;
        base.strategy = key.strategy;
        base.rate = key.rate;
        base.budget = bucket.budget;
        aggregates.push_back(summarize(bucket.jaccard, base, "jaccard"));
        aggregates.push_back(summarize(bucket.rbo, base, "rbo"));
    }
    return aggregates;
}

void emit_report(const EvaluationReport& report, const std::string& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + out_dir);

    const auto trials_path = std::filesystem::path(out_dir) / "trials.csv";
    {
        std::ofstream out(trials_path);
        if (!out) throw IoError("cannot write " + trials_path.string());
        out << "dataset,strategy,rate,budget,seed,jaccard,rbo,cells_imputed,"
               "priority_evaluations,view_executions_temp,view_executions_final\n";
        for (const auto& row : report.trials) {
            out << row.dataset << ',' << strategy_token(row.strategy) << ','
                << format_double(row.rate) << ',' << row.budget.token() << ','
                << row.seed << ',' << format_double(row.jaccard) << ','
                << format_double(row.rbo) << ',' << row.costs.cells_imputed << ','
                << row.costs.priority_evaluations << ','
                << row.costs.view_executions_temp << ','
                << row.costs.view_executions_final << '\n';
        }
    }

    const auto aggregates_path = std::filesystem::path(out_dir) / "aggregates.csv";
    {
        std::ofstream out(aggregates_path);
        if (!out) throw IoError("cannot write " + aggregates_path.string());
        out << "dataset,strategy,rate,budget,metric,mean,ci_low,ci_high,trials\n";
        for (const auto& row : report.aggregates) {
            out << row.dataset << ',' << strategy_token(row.strategy) << ','
                << format_double(row.rate) << ',' << row.budget.token() << ','
                << row.metric << ',' << format_double(row.mean) << ','
                << format_double(row.ci_low) << ',' << format_double(row.ci_high) << ','
                << row.trials << '\n';
        }
    }
}

}  // namespace vizplan
