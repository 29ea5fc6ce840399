// Command-line front end: one-off rankings, imputation plans, full
// experiment sweeps, and the worked-examples golden replay.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "vizplan/config.hpp"
#include "vizplan/fixtures.hpp"
#include "vizplan/harness.hpp"

namespace {

using namespace vizplan;

struct CommonOpts {
    std::string config_path;
    std::string dataset_path;
    std::string schema_inline;
    std::string strategy = "cell-f";
    std::string budget = "fraction:0.1";
    std::size_t k = 10;
    double rate = 0.2;
    std::uint64_t seed = 42;
    std::size_t seeds = 0;  // 0 = keep config value
    std::string distance = "l2";
    double rbo_p = 0.9;
    std::string regen = "top-k-plus-k-highest";
    std::string out;
};

void add_common_flags(CLI::App& cmd, CommonOpts& opts) {
    cmd.add_option("--config", opts.config_path, "configuration file");
    cmd.add_option("--dataset", opts.dataset_path, "CSV file (overrides config)");
    cmd.add_option("--schema", opts.schema_inline,
                   "inline schema: dims:measures[:aggregates], comma-separated");
    cmd.add_option("--k", opts.k, "recommendation size");
    cmd.add_option("--rate", opts.rate, "missing-cell rate in (0,1)");
    cmd.add_option("--seed", opts.seed, "trial seed");
    cmd.add_option("--distance", opts.distance, "distance token: l1 | l2");
    cmd.add_option("--out", opts.out, "output file or directory");
}

Schema parse_inline_schema(const std::string& text) {
    const auto parts = [&] {
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const auto colon = text.find(':', start);
            fields.push_back(text.substr(start, colon - start));
            if (colon == std::string::npos) break;
            start = colon + 1;
        }
        return fields;
    }();
    if (parts.size() < 2 || parts.size() > 3)
        throw ConfigError("inline schema must be dims:measures[:aggregates]");
    Schema schema;
    schema.dimensions = split_list(parts[0]);
    schema.measures = split_list(parts[1]);
    if (parts.size() == 3) {
        schema.aggregates.clear();
        for (const auto& token : split_list(parts[2]))
            schema.aggregates.push_back(parse_aggregate(token));
    }
    schema.validate();
    return schema;
}

struct ResolvedInputs {
    DatasetPtr dataset;
    Schema schema;
    SubsetSpec target = SubsetSpec::whole_data();
    SubsetSpec reference = SubsetSpec::whole_data();
};

ResolvedInputs resolve_inputs(const CommonOpts& opts) {
    ResolvedInputs inputs;
    std::string path = opts.dataset_path;
    std::optional<ConfigFile> config;
    if (!opts.config_path.empty()) config = ConfigFile::parse_file(opts.config_path);

    if (!opts.schema_inline.empty()) {
        inputs.schema = parse_inline_schema(opts.schema_inline);
    } else if (config) {
        inputs.schema = schema_from_config(*config);
    } else {
        throw ConfigError("need --schema or --config to describe the dataset");
    }
    if (path.empty() && config) {
        std::filesystem::path p = config->get("dataset", "path");
        if (p.is_relative() && !config->base_dir().empty())
            p = std::filesystem::path(config->base_dir()) / p;
        path = p.string();
    }
    if (path.empty()) throw ConfigError("no dataset path given");
    if (config) {
        inputs.target = parse_subset(config->get_or("subsets", "target", "whole-data"));
        inputs.reference =
            parse_subset(config->get_or("subsets", "reference", "whole-data"));
    }
    inputs.dataset =
        std::make_shared<const Dataset>(load_dataset(path, inputs.schema));
    return inputs;
}

void warn_on_negative_measures(const Dataset& dataset) {
    for (std::size_t m = 0; m < dataset.schema().measures.size(); ++m)
        for (std::size_t row = 0; row < dataset.row_count(); ++row)
            if (dataset.measure_value(row, m) < 0.0) {
                std::cerr << "warning: measure column '"
                          << dataset.schema().measures[m]
                          << "' contains negative values; affected views score 0\n";
                return;
            }
}

std::ostream& open_sink(std::ofstream& file, const std::string& out) {
    if (out.empty()) return std::cout;
    file.open(out);
    if (!file) throw IoError("cannot write " + out);
    return file;
}

int cmd_rank(const CommonOpts& opts, const CLI::App& cmd) {
    const auto inputs = resolve_inputs(opts);
    warn_on_negative_measures(*inputs.dataset);
    if (inputs.target.is_whole_data() && inputs.reference.is_whole_data())
        std::cerr << "note: target and reference are both whole-data, so every "
                     "utility is 0; configure [subsets] to compare a subset\n";

    std::optional<MaskedDataset> data;
    if (cmd.count("--rate") || cmd.count("--seed"))
        data = inject_mcar(inputs.dataset, opts.rate, opts.seed);
    else
        data = MaskedDataset(inputs.dataset, {});

    const auto distance = parse_distance(opts.distance);
    std::size_t negative_mass = 0;
    const auto ranking =
        rank_views(*data, inputs.target, inputs.reference, distance, &negative_mass);
    if (negative_mass > 0)
        std::cerr << "warning: " << negative_mass
                  << " views scored 0 due to negative aggregate mass\n";

    std::ofstream file;
    auto& out = open_sink(file, opts.out);
    out << "rank,dimension,measure,aggregate,utility\n";
    const auto top = top_k(ranking, opts.k);
    for (std::size_t i = 0; i < top.entries.size(); ++i) {
        const auto& entry = top.entries[i];
        char utility[32];
        std::snprintf(utility, sizeof utility, "%.6f", entry.utility);
        out << i + 1 << ',' << entry.spec.dimension << ',' << entry.spec.measure << ','
            << aggregate_token(entry.spec.aggregate) << ',' << utility << '\n';
    }
    return 0;
}

int cmd_impute(const CommonOpts& opts) {
    const auto inputs = resolve_inputs(opts);
    const auto strategy = parse_strategy(opts.strategy);
    const auto budget = parse_budget(opts.budget);
    const auto distance = parse_distance(opts.distance);
    const auto masked = inject_mcar(inputs.dataset, opts.rate, opts.seed);

    Rng rng(mix_seed(opts.seed));
    CostLedger ledger;
    ImputationPlan plan;
    if (is_ranking_aware(strategy)) {
        plan = run_ranking_aware(masked, budget, strategy, opts.k, inputs.target,
                                 inputs.reference, distance, rng, ledger)
                   .plan;
    } else {
        PriorityContext ctx;
        ctx.target = inputs.target;
        ctx.reference = inputs.reference;
        ctx.rng = &rng;
        plan = run_cell_aware(masked, budget, strategy, ctx, rng, ledger).plan;
    }

    std::ofstream file;
    auto& out = open_sink(file, opts.out);
    out << "step,row,column,score\n";
    for (std::size_t i = 0; i < plan.steps.size(); ++i) {
        const auto& [cell, score] = plan.steps[i];
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", score);
        out << i + 1 << ',' << cell.row << ','
            << inputs.schema.column_name(cell.column) << ',' << buf << '\n';
    }
    std::cerr << plan.steps.size() << " of " << masked.missing_count()
              << " missing cells selected (" << strategy_token(strategy) << ", budget "
              << budget.token() << ", " << ledger.priority_evaluations
              << " priority evaluations)\n";
    return 0;
}

int cmd_experiment(const CommonOpts& opts, const CLI::App& cmd) {
    if (opts.config_path.empty())
        throw ConfigError("experiment needs --config");
    auto config = experiment_from_config(ConfigFile::parse_file(opts.config_path));
    if (cmd.count("--k")) config.k = opts.k;
    if (cmd.count("--rate")) config.rates = {opts.rate};
    if (cmd.count("--budget")) config.budgets = {parse_budget(opts.budget)};
    if (cmd.count("--strategy")) config.strategies = {parse_strategy(opts.strategy)};
    if (cmd.count("--seeds")) config.seed_count = opts.seeds;
    if (cmd.count("--seed")) config.base_seed = opts.seed;
    if (cmd.count("--distance")) config.distance = parse_distance(opts.distance);
    if (cmd.count("--rbo-p")) config.rbo_p = opts.rbo_p;
    if (cmd.count("--regen")) config.regen = parse_regen_mode(opts.regen);
    if (!opts.out.empty()) config.out_dir = opts.out;
    config.validate();

    auto dataset = std::make_shared<const Dataset>(
        load_dataset(config.dataset_path, config.schema));
    warn_on_negative_measures(*dataset);

    const auto report = run_experiment(config, dataset);
    emit_report(report, config.out_dir);
    if (report.negative_mass_views > 0)
        std::cerr << "warning: " << report.negative_mass_views
                  << " views scored 0 due to negative aggregate mass\n";

    std::cout << "wrote " << config.out_dir << "/trials.csv ("
              << report.trials.size() << " rows) and " << config.out_dir
              << "/aggregates.csv (" << report.aggregates.size() << " rows)\n";
    for (const auto& row : report.aggregates) {
        if (row.metric != "rbo") continue;
        char buf[128];
        std::snprintf(buf, sizeof buf, "  %-10s rate %-5g budget %-13s rbo %.4f ± %.4f",
                      std::string(strategy_token(row.strategy)).c_str(), row.rate,
                      row.budget.token().c_str(), row.mean, row.mean - row.ci_low);
        std::cout << buf << '\n';
    }
    return 0;
}

int cmd_worked_examples() {
    const auto checks = fixtures::run_worked_examples();
    bool all = true;
    for (const auto& check : checks) {
        std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << check.name << " -- "
                  << check.detail << '\n';
        all = all && check.pass;
    }
    std::cout << (all ? "all checks passed\n" : "some checks FAILED\n");
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Budgeted imputation planning for deviation-based view recommendation"};
    app.require_subcommand(1);

    CommonOpts rank_opts, impute_opts, exp_opts;

    auto* rank_cmd = app.add_subcommand(
        "rank", "rank aggregate views from a CSV (optionally masked first)");
    add_common_flags(*rank_cmd, rank_opts);

    auto* impute_cmd = app.add_subcommand(
        "impute", "emit the imputation plan for a masked dataset");
    add_common_flags(*impute_cmd, impute_opts);
    impute_cmd->add_option("--strategy", impute_opts.strategy,
                           "none|random|fairness|cell|cell-f|cell-v|cell-fv|"
                           "ranking|ranking-w|hybrid");
    impute_cmd->add_option("--budget", impute_opts.budget,
                           "cells:<n> or fraction:<f>");

    auto* exp_cmd = app.add_subcommand(
        "experiment", "run the seeded sweep described by a config file");
    add_common_flags(*exp_cmd, exp_opts);
    exp_cmd->add_option("--strategy", exp_opts.strategy, "restrict to one strategy");
    exp_cmd->add_option("--budget", exp_opts.budget, "restrict to one budget");
    exp_cmd->add_option("--seeds", exp_opts.seeds, "number of trials");
    exp_cmd->add_option("--rbo-p", exp_opts.rbo_p, "RBO persistence in (0,1)");
    exp_cmd->add_option("--regen", exp_opts.regen,
                        "no-opt|top-k|k-highest|top-k-plus-k-highest");

    auto* worked_cmd = app.add_subcommand(
        "worked-examples", "replay the golden demo-grid score checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (rank_cmd->parsed()) return cmd_rank(rank_opts, *rank_cmd);
        if (impute_cmd->parsed()) return cmd_impute(impute_opts);
        if (exp_cmd->parsed()) return cmd_experiment(exp_opts, *exp_cmd);
        if (worked_cmd->parsed()) return cmd_worked_examples();
    } catch (const ConfigError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
