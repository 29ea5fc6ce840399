#include <doctest.h>

#include <set>

#include "helpers.hpp"

using namespace vizplan;
using vizplan::fixtures::demo_masked;
using vizplan::fixtures::demo_temp_rank;

TEST_CASE("contribution scores on the demo grid match the hand-worked tiers") {
    const auto masked = demo_masked();
    // row 1 has a single present measure; grid maximum raw contribution is 3
    CHECK(contribution_score({0, 0}, masked) == doctest::Approx(1.0 / 3.0));
    CHECK(contribution_score({6, 0}, masked) == 1.0);
    CHECK(contribution_score({6, 1}, masked) == 1.0);
    CHECK(contribution_score({9, 0}, masked) == 1.0);

    std::set<std::pair<std::size_t, std::size_t>> ones, two_thirds;
    for (const auto& cell : missing_cells(masked)) {
        const double n = contribution_score(cell, masked);
        if (n == 1.0) ones.insert({cell.row, cell.column});
        if (n == doctest::Approx(2.0 / 3.0)) two_thirds.insert({cell.row, cell.column});
    }
    CHECK(ones == std::set<std::pair<std::size_t, std::size_t>>{{6, 0}, {6, 1}, {9, 0}});
    CHECK(two_thirds ==
          std::set<std::pair<std::size_t, std::size_t>>{{2, 0}, {4, 3}, {4, 4}, {7, 4}});

    // a missing dimension cell whose row has no present measure scores zero
    CHECK(contribution_score({3, 1}, masked) == 0.0);
    CHECK_THROWS_AS(contribution_score({9, 4}, masked), CellNotMissingError);
}

TEST_CASE("fairness scores follow column missing ratios") {
    const auto masked = demo_masked();
    // ratios 0.6, 0.5, 0.3, 0.7, 0.6; oldpeak (column 4 in the grid) is maximal
    CHECK(fairness_score({0, 3}, masked) == 1.0);
    CHECK(fairness_score({1, 2}, masked) == doctest::Approx(3.0 / 7.0));
    CHECK(fairness_score({0, 0}, masked) == doctest::Approx(6.0 / 7.0));

    // fairness tracks the current mask: imputing oldpeak cells shifts the max
    auto evolving = masked;
    for (const auto& cell : missing_cells(masked))
        if (cell.column == 3) evolving.impute(cell);
    CHECK(fairness_score({0, 0}, evolving) == 1.0);
}

TEST_CASE("fairness is 1 everywhere when all columns are equally missing") {
    Schema schema;
    schema.dimensions = {"d"};
    schema.measures = {"m"};
    const auto data = std::make_shared<const Dataset>(
        load_dataset_from_string("d,m\na,1\nb,2\nc,3\n", schema));
    const MaskedDataset masked(data, {{0, 0}, {1, 1}});
    for (const auto& cell : missing_cells(masked))
        CHECK(fairness_score(cell, masked) == 1.0);
}

TEST_CASE("used-view scores by subset membership") {
    Schema schema;
    schema.dimensions = {"disease", "cp"};
    schema.measures = {"age"};
    const auto data = std::make_shared<const Dataset>(load_dataset_from_string(
        "disease,cp,age\n"
        "Yes,typical,60\n"
        "Yes,atypical,55\n"
        "No,typical,50\n"
        "No,asymptomatic,45\n",
        schema));

    SUBCASE("target subset of whole data: members 1.0, others 0.5") {
        const MaskedDataset masked(data, {{0, 2}, {2, 2}});
        const auto target = SubsetSpec::predicate("disease", "Yes");
        const auto reference = SubsetSpec::whole_data();
        CHECK(used_view_score({0, 2}, masked, target, reference) == 1.0);
        CHECK(used_view_score({2, 2}, masked, target, reference) == 0.5);
    }
    SUBCASE("two complementary subsets: every cell 1.0") {
        const MaskedDataset masked(data, {{0, 2}, {2, 2}});
        const auto target = SubsetSpec::predicate("disease", "Yes");
        const auto reference = SubsetSpec::predicate("disease", "No");
        for (const auto& cell : missing_cells(masked))
            CHECK(used_view_score(cell, masked, target, reference) == 1.0);
    }
    SUBCASE("rows outside both subsets score zero") {
        const MaskedDataset masked(data, {{1, 2}, {3, 2}});
        const auto target = SubsetSpec::predicate("cp", "typical");
        const auto reference = SubsetSpec::predicate("cp", "atypical");
        CHECK(used_view_score({1, 2}, masked, target, reference) == 1.0);
        CHECK(used_view_score({3, 2}, masked, target, reference) == 0.0);
    }
    SUBCASE("masked predicate cells take the known maximum") {
        const MaskedDataset masked(data, {{0, 0}, {0, 2}});
        const auto target = SubsetSpec::predicate("disease", "Yes");
        const auto reference = SubsetSpec::whole_data();
        // row 0's membership is unknown; rows 1 is a known target row
        CHECK(used_view_score({0, 0}, masked, target, reference) == 1.0);
    }
}

TEST_CASE("temp-rank column scores reproduce the demo totals") {
    const auto ranking = demo_temp_rank();
    const auto scores =
        temp_rank_column_scores(ranking, WeightProfile::constant(10, ranking.size()));
    CHECK(scores.at("sex") == doctest::Approx(7.0 / 14.0));
    CHECK(scores.at("cp") == 1.0);
    CHECK(scores.at("age") == doctest::Approx(4.0 / 14.0));
    CHECK(scores.at("oldpeak") == doctest::Approx(10.0 / 14.0));
    CHECK(scores.at("thalach") == doctest::Approx(7.0 / 14.0));
}

TEST_CASE("temp-rank column scores validate coverage") {
    const auto ranking = demo_temp_rank();
    CHECK_THROWS_AS(temp_rank_column_scores(ranking, WeightProfile::constant(10, 5)),
                    IncompleteRankingError);
    auto duplicated = ranking;
    duplicated.entries[1] = duplicated.entries[0];
    CHECK_THROWS_AS(
        temp_rank_column_scores(duplicated, WeightProfile::constant(10, 6)),
        IncompleteRankingError);
}

TEST_CASE("single-view ranking scores both its columns 1.0") {
    RankedViewList ranking;
    ranking.entries = {{{"d", "m", Aggregate::Avg}, 0.4}};
    const auto scores =
        temp_rank_column_scores(ranking, WeightProfile::constant(10, 1));
    CHECK(scores.at("d") == 1.0);
    CHECK(scores.at("m") == 1.0);
}

TEST_CASE("inverted-U weights follow the documented shape") {
    const auto profile = WeightProfile::inverted_u(10, 100);
    CHECK(profile.weight_at(1) == 10.0);
    CHECK(profile.weight_at(10) == 100.0);
    CHECK(profile.weight_at(11) == 99.0);
    CHECK(profile.weight_at(100) == 10.0);
    for (std::size_t r = 2; r <= 10; ++r)
        CHECK(profile.weight_at(r) >= profile.weight_at(r - 1));
    for (std::size_t r = 12; r <= 100; ++r)
        CHECK(profile.weight_at(r) <= profile.weight_at(r - 1));

    const auto constant = WeightProfile::constant(10, 100);
    for (std::size_t r = 1; r <= 100; ++r) CHECK(constant.weight_at(r) == 1.0);
}

TEST_CASE("ranking scores map columns onto cells") {
    const auto masked = demo_masked();
    const auto scores = temp_rank_column_scores(
        demo_temp_rank(), WeightProfile::constant(10, 6));

    CHECK(ranking_score({9, 0}, masked, scores) == doctest::Approx(0.5));
    CHECK(ranking_score({0, 0}, masked, scores) == doctest::Approx(0.678571428571));
    CHECK(ranking_score({6, 0}, masked, scores) == doctest::Approx(0.75));

    SUBCASE("all missing cells of one row share the score") {
        for (std::size_t col = 0; col < 5; ++col) {
            if (!masked.is_missing({0, col})) continue;
            CHECK(ranking_score({0, col}, masked, scores) ==
                  ranking_score({0, 0}, masked, scores));
        }
    }
}

TEST_CASE("priority dispatches per strategy") {
    const auto masked = demo_masked();
    const auto column_scores =
        temp_rank_column_scores(demo_temp_rank(), WeightProfile::constant(10, 6));
    PriorityContext ctx;
    ctx.column_scores = &column_scores;

    SUBCASE("hybrid multiplies ranking, contribution and fairness") {
        // C(7,1): R = 0.75, N = 1.0, F = 0.6/0.7
        const double got = priority({6, 0}, masked, StrategyKind::Hybrid, ctx);
        CHECK(got == doctest::Approx(0.75 * 1.0 * (0.6 / 0.7)));
    }
    SUBCASE("cell-f product on C(7,2)") {
        const double got = priority({6, 1}, masked, StrategyKind::CellF, ctx);
        CHECK(got == doctest::Approx(1.0 * (0.5 / 0.7)));
    }
    SUBCASE("a cell with unit component scores keeps the product") {
        // C(5,4): N = 2/3, F(oldpeak) = 1.0 -> product = N
        const double got = priority({4, 3}, masked, StrategyKind::CellF, ctx);
        CHECK(got == contribution_score({4, 3}, masked));
    }
    SUBCASE("no-imputation scores zero") {
        CHECK(priority({6, 0}, masked, StrategyKind::NoImputation, ctx) == 0.0);
    }
    SUBCASE("random is deterministic under a fixed seed") {
        Rng a(7), b(7);
        PriorityContext ctx_a, ctx_b;
        ctx_a.rng = &a;
        ctx_b.rng = &b;
        for (const auto& cell : missing_cells(masked))
            CHECK(priority(cell, masked, StrategyKind::Random, ctx_a) ==
                  priority(cell, masked, StrategyKind::Random, ctx_b));
    }
    SUBCASE("ranking strategies demand column scores") {
        PriorityContext bare;
        CHECK_THROWS_AS(priority({6, 0}, masked, StrategyKind::Ranking, bare),
                        MissingContextError);
        CHECK_THROWS_AS(priority({6, 0}, masked, StrategyKind::Random, bare),
                        MissingContextError);
    }
}

TEST_CASE("batch scoring agrees with per-cell scoring bit for bit") {
    const auto masked = demo_masked();
    const auto column_scores =
        temp_rank_column_scores(demo_temp_rank(), WeightProfile::inverted_u(2, 6));
    PriorityContext ctx;
    ctx.target = SubsetSpec::predicate("sex", "male");
    ctx.reference = SubsetSpec::whole_data();
    ctx.column_scores = &column_scores;

    for (const auto strategy :
         {StrategyKind::Fairness, StrategyKind::Cell, StrategyKind::CellF,
          StrategyKind::CellV, StrategyKind::CellFV, StrategyKind::Ranking,
          StrategyKind::RankingW, StrategyKind::Hybrid}) {
        const auto map = score_missing_cells(masked, strategy, ctx);
        REQUIRE(map.scores.size() == masked.missing_count());
        for (const auto& [cell, score] : map.scores)
            CHECK(score == priority(cell, masked, strategy, ctx));
    }
}

TEST_CASE("component scores stay in [0,1] and attain 1 somewhere") {
    const auto data = helpers::heart_sample(50);
    Rng seeds(31);
    for (int trial = 0; trial < 10; ++trial) {
        const auto masked = inject_mcar(data, 0.25, seeds.next_u64());
        double best_n = 0.0, best_f = 0.0, best_v = 0.0;
        const auto target = SubsetSpec::predicate("disease", "Yes");
        const auto reference = SubsetSpec::whole_data();
        for (const auto& cell : missing_cells(masked)) {
            const double n = contribution_score(cell, masked);
            const double f = fairness_score(cell, masked);
            const double v = used_view_score(cell, masked, target, reference);
            CHECK(n >= 0.0);
            CHECK(n <= 1.0);
            CHECK(f >= 0.0);
            CHECK(f <= 1.0);
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
            best_n = std::max(best_n, n);
            best_f = std::max(best_f, f);
            best_v = std::max(best_v, v);
        }
        CHECK(best_n == 1.0);
        CHECK(best_f == 1.0);
        // V attains 1 whenever some missing cell sits in a maximal-usage row
        CHECK(best_v == 1.0);
    }
}

TEST_CASE("demo grid ranking totals are reproduced by the rank complement") {
    // z = |V| + 1 - rank over the fixed six-view ranking gives the exact
    // column totals 7, 14, 4, 10, 7 before normalization.
    const auto ranking = demo_temp_rank();
    std::map<std::string, double> totals;
    for (std::size_t i = 0; i < ranking.entries.size(); ++i) {
        const double z = static_cast<double>(ranking.size()) + 1.0 -
                         static_cast<double>(i + 1);
        totals[ranking.entries[i].spec.dimension] += z;
        totals[ranking.entries[i].spec.measure] += z;
    }
    CHECK(totals.at("sex") == 7.0);
    CHECK(totals.at("cp") == 14.0);
    CHECK(totals.at("age") == 4.0);
    CHECK(totals.at("oldpeak") == 10.0);
    CHECK(totals.at("thalach") == 7.0);
}

TEST_CASE("utility-sourced ranking scores are available behind the profile switch") {
    auto profile = WeightProfile::constant(10, 6);
    profile.z_from_utility = true;
    const auto scores = temp_rank_column_scores(demo_temp_rank(), profile);
    // cp appears in the three highest-utility views; still the maximum column
    CHECK(scores.at("cp") == 1.0);
    for (const auto& [name, score] : scores) {
        CHECK(score >= 0.0);
        CHECK(score <= 1.0);
    }
}
