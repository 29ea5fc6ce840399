#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "vizplan/similarity.hpp"
#include "vizplan/harness.hpp"

using namespace vizplan;

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

ExperimentConfig small_config() {
    ExperimentConfig config;
    config.dataset_name = "heart";
    config.schema = helpers::heart_schema();
    config.target = SubsetSpec::predicate("disease", "Yes");
    config.reference = SubsetSpec::whole_data();
    config.k = 5;
    config.rates = {0.2};
    config.budgets = {BudgetSpec::fraction(0.1)};
    config.strategies = {StrategyKind::NoImputation, StrategyKind::Random,
                         StrategyKind::Cell, StrategyKind::Ranking};
    config.seed_count = 4;
    config.base_seed = 7;
    return config;
}

}  // namespace

TEST_CASE("config files parse sections, lists and subsets") {
    const auto config = ConfigFile::parse_string(
        "# comment\n"
        "[dataset]\n"
        "path = data.csv\n"
        "dimensions = a, b\n"
        "measures = x\n"
        "aggregates = avg, sum\n"
        "[subsets]\n"
        "target = a=hot\n"
        "reference = whole-data\n"
        "[experiment]\n"
        "k = 3\n"
        "rates = 0.1, 0.3\n"
        "budgets = cells:2, fraction:0.5\n"
        "seeds = 2\n"
        "[strategies]\n"
        "list = none, cell-fv\n");
    const auto exp = experiment_from_config(config);
    CHECK(exp.schema.dimensions == std::vector<std::string>{"a", "b"});
    CHECK(exp.schema.aggregates.size() == 2);
    CHECK(exp.target == SubsetSpec::predicate("a", "hot"));
    CHECK(exp.reference.is_whole_data());
    CHECK(exp.k == 3);
    CHECK(exp.rates == std::vector<double>{0.1, 0.3});
    CHECK(exp.budgets.size() == 2);
    CHECK(exp.strategies ==
          std::vector<StrategyKind>{StrategyKind::NoImputation, StrategyKind::CellFV});
    // defaults fill the rest
    CHECK(exp.rbo_p == 0.9);
    CHECK(exp.regen == RegenMode::TopKPlusKHighest);
}

TEST_CASE("config validation rejects bad values") {
    auto config = small_config();
    SUBCASE("k") { config.k = 0; }
    SUBCASE("rates") { config.rates = {1.5}; }
    SUBCASE("seeds") { config.seed_count = 0; }
    SUBCASE("strategies") { config.strategies.clear(); }
    SUBCASE("rbo_p") { config.rbo_p = 1.0; }
    config.dataset_path = "unused.csv";
    CHECK_THROWS_AS(config.validate(), ConfigError);
}

TEST_CASE("strategy and distance tokens round-trip") {
    for (const auto s : {StrategyKind::NoImputation, StrategyKind::Random,
                         StrategyKind::Fairness, StrategyKind::Cell, StrategyKind::CellF,
                         StrategyKind::CellV, StrategyKind::CellFV,
                         StrategyKind::Ranking, StrategyKind::RankingW,
                         StrategyKind::Hybrid})
        CHECK(parse_strategy(strategy_token(s)) == s);
    CHECK_THROWS_AS(parse_strategy("greedy"), ConfigError);
    CHECK(parse_distance("l1") == DistanceKind::L1);
    CHECK_THROWS_AS(parse_distance("cosine"), ConfigError);
    CHECK_THROWS_AS(parse_subset("disease"), ConfigError);
}

TEST_CASE("run_experiment emits one row per trial and exact aggregates") {
    const auto config = small_config();
    const auto report = run_experiment(config, helpers::heart_sample(60));
    CHECK(report.trials.size() == 4 * 4);  // seeds x strategies
    // aggregates: one (strategy, rate, budget) bucket per strategy, 2 metrics
    CHECK(report.aggregates.size() == 4 * 2);
    for (const auto& agg : report.aggregates) {
        CHECK(agg.trials == 4);
        double mean = 0.0;
        std::size_t n = 0;
        for (const auto& row : report.trials) {
            if (row.strategy != agg.strategy) continue;
            mean += agg.metric == "jaccard" ? row.jaccard : row.rbo;
            ++n;
        }
        mean /= static_cast<double>(n);
        CHECK(agg.mean == doctest::Approx(mean).epsilon(1e-12));
        CHECK(agg.ci_low <= agg.mean);
        CHECK(agg.mean <= agg.ci_high);
    }
}

TEST_CASE("experiments are reproducible and order-independent") {
    const auto config = small_config();
    const auto dataset = helpers::heart_sample(60);
    const auto a = run_experiment(config, dataset);
    const auto b = run_experiment(config, dataset);
    REQUIRE(a.trials.size() == b.trials.size());
    for (std::size_t i = 0; i < a.trials.size(); ++i) {
        CHECK(a.trials[i].jaccard == b.trials[i].jaccard);
        CHECK(a.trials[i].rbo == b.trials[i].rbo);
    }

    // Reversing strategy order must not change any per-trial result.
    auto reversed = config;
    std::reverse(reversed.strategies.begin(), reversed.strategies.end());
    const auto c = run_experiment(reversed, dataset);
    for (const auto& row : a.trials) {
        bool found = false;
        for (const auto& other : c.trials) {
            if (other.strategy == row.strategy && other.seed == row.seed) {
                CHECK(other.jaccard == row.jaccard);
                CHECK(other.rbo == row.rbo);
                found = true;
            }
        }
        CHECK(found);
    }
}

TEST_CASE("full budget drives every strategy to perfect scores") {
    auto config = small_config();
    config.budgets = {BudgetSpec::fraction(1.0)};
    config.regen = RegenMode::NoOpt;
    config.strategies = {StrategyKind::Random, StrategyKind::Fairness,
                         StrategyKind::Cell, StrategyKind::CellF, StrategyKind::CellV,
                         StrategyKind::CellFV, StrategyKind::Ranking,
                         StrategyKind::RankingW, StrategyKind::Hybrid};
    config.seed_count = 2;
    const auto report = run_experiment(config, helpers::heart_sample(60));
    for (const auto& row : report.trials) {
        CHECK(row.jaccard == 1.0);
        CHECK(row.rbo == 1.0);
    }
}

TEST_CASE("emit_report writes byte-identical CSVs on rerun") {
    const auto config = small_config();
    const auto report = run_experiment(config, helpers::heart_sample(60));
    const auto dir = std::filesystem::temp_directory_path() / "vizplan_report_test";
    std::filesystem::remove_all(dir);

    emit_report(report, dir.string());
    const auto trials_first = slurp(dir / "trials.csv");
    const auto aggregates_first = slurp(dir / "aggregates.csv");
    CHECK(trials_first.find("dataset,strategy,rate,budget,seed,jaccard,rbo") == 0);
    CHECK(std::count(trials_first.begin(), trials_first.end(), '\n') ==
          static_cast<long>(report.trials.size()) + 1);

    emit_report(report, dir.string());
    CHECK(slurp(dir / "trials.csv") == trials_first);
    CHECK(slurp(dir / "aggregates.csv") == aggregates_first);

    SUBCASE("empty report still writes headers") {
        EvaluationReport empty;
        emit_report(empty, dir.string());
        CHECK(slurp(dir / "trials.csv").find("dataset,") == 0);
        CHECK(slurp(dir / "aggregates.csv").find("dataset,") == 0);
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("single degenerate trial: no imputation, budget zero") {
    auto config = small_config();
    config.seed_count = 1;
    config.budgets = {BudgetSpec::cells(0)};
    config.strategies = {StrategyKind::NoImputation};
    const auto dataset = helpers::heart_sample(60);
    const auto report = run_experiment(config, dataset);
    REQUIRE(report.trials.size() == 1);

    // equals the raw incomplete-data score
    const MaskedDataset complete(dataset, {});
    const auto sc = top_k(rank_views(complete, config.target, config.reference,
                                     config.distance),
                          config.k);
    const auto masked = inject_mcar(dataset, 0.2, config.base_seed);
    const auto sf = top_k(rank_views(masked, config.target, config.reference,
                                     config.distance),
                          config.k);
    CHECK(report.trials[0].jaccard == jaccard(sf, sc));
    CHECK(report.trials[0].rbo == rbo(sf, sc, config.rbo_p));
}

TEST_CASE("weight overrides flow from config into the ranking profile") {
    const auto config = ConfigFile::parse_string(
        "[dataset]\n"
        "path = x.csv\n"
        "dimensions = d\n"
        "measures = m\n"
        "[experiment]\n"
        "weights.alpha_up = 2.5\n"
        "weights.beta_up = 1\n"
        "weights.alpha_down = -0.5\n"
        "weights.beta_down = 40\n"
        "z_source = utility\n"
        "[strategies]\n"
        "list = ranking-w\n");
    const auto exp = experiment_from_config(config);
    CHECK(exp.has_weight_overrides());
    const auto profile = exp.weight_profile(StrategyKind::RankingW, 64);
    CHECK(profile.alpha_up == 2.5);
    CHECK(profile.beta_up == 1.0);
    CHECK(profile.alpha_down == -0.5);
    CHECK(profile.beta_down == 40.0);
    CHECK(profile.z_from_utility);
    CHECK(profile.weight_at(2) == doctest::Approx(6.0));   // 2.5*2 + 1
    CHECK(profile.weight_at(20) == doctest::Approx(30.0)); // -0.5*20 + 40

    // plain Ranking keeps constant weights but still honors the z switch
    const auto constant = exp.weight_profile(StrategyKind::Ranking, 64);
    CHECK(constant.weight_at(5) == 1.0);
    CHECK(constant.z_from_utility);

    SUBCASE("invalid slopes are rejected") {
        auto bad = exp;
        bad.weight_alpha_down = 1.0;
        CHECK_THROWS_AS(bad.validate(), ConfigError);
        auto bad_up = exp;
        bad_up.weight_alpha_up = 0.0;
        CHECK_THROWS_AS(bad_up.validate(), ConfigError);
    }
}

TEST_CASE("an experiment runs end-to-end with overridden weights") {
    auto config = small_config();
    config.strategies = {StrategyKind::RankingW};
    config.seed_count = 2;
    config.z_from_utility = true;
    config.weight_alpha_up = 5.0;
    const auto report = run_experiment(config, helpers::heart_sample(60));
    CHECK(report.trials.size() == 2);
    for (const auto& row : report.trials) {
        CHECK(row.rbo >= 0.0);
        CHECK(row.rbo <= 1.0);
    }
}

TEST_CASE("default config file loads and points at the bundled dataset") {
    const auto exp = experiment_from_config(
        ConfigFile::parse_file(helpers::config_path("heart_default.cfg")));
    CHECK(exp.k == 10);
    CHECK(exp.seed_count == 100);
    CHECK(exp.rates == std::vector<double>{0.2});
    CHECK(exp.schema.dimensions.size() == 8);
    CHECK(exp.schema.measures.size() == 6);
    CHECK(std::filesystem::exists(exp.dataset_path));
    CHECK(exp.target == SubsetSpec::predicate("disease", "Yes"));
}
