#include "vizplan/fixtures.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "vizplan/imputation.hpp"

namespace vizplan::fixtures {

Schema demo_schema() {
    Schema schema;
    schema.dimensions = {"sex", "cp"};
    schema.measures = {"age", "oldpeak", "thalach"};
    schema.aggregates = {Aggregate::Avg};
    return schema;
}

DatasetPtr demo_ground_truth() {
    std::vector<std::vector<std::string>> dims = {
        // sex
        {"male", "female", "male", "male", "female", "male", "female", "female",
         "male", "male"},
        // cp
        {"asymptomatic", "atypical", "typical", "nonanginal", "asymptomatic",
         "typical", "nonanginal", "nonanginal", "atypical", "typical"},
    };
    std::vector<std::vector<double>> measures = {
        // age
        {56, 60, 61, 47, 44, 58, 63, 52, 41, 49},
        // oldpeak
        {1.1, 2.4, 0.9, 1.8, 3.2, 0.6, 1.4, 0.8, 2.0, 2.1},
        // thalach
        {142, 172, 140, 153, 119, 166, 152, 131, 158, 168},
    };
    return std::make_shared<const Dataset>(demo_schema(), std::move(dims),
                                           std::move(measures));
}

MaskedDataset demo_masked() {
    // Missing cells per column: sex 6, cp 5, age 3, oldpeak 7, thalach 6.
    const std::vector<CellAddress> mask = {
        {0, 0}, {0, 1}, {0, 3}, {0, 4},          // row 1: only age present
        {1, 0}, {1, 1}, {1, 2}, {1, 3},          // row 2: only thalach present
        {2, 0}, {2, 3},                          // row 3
        {3, 1}, {3, 2}, {3, 3}, {3, 4},          // row 4: only sex present
        {4, 3}, {4, 4},                          // row 5
        {5, 1}, {5, 3}, {5, 4},                  // row 6
        {6, 0}, {6, 1},                          // row 7: all measures present
        {7, 4},                                  // row 8
        {8, 0}, {8, 2}, {8, 3}, {8, 4},          // row 9: only cp present
        {9, 0},                                  // row 10: only sex missing
    };
    return MaskedDataset(demo_ground_truth(), mask);
}

RankedViewList demo_temp_rank() {
    // Descending utilities are placeholders; only the order matters for the
    // rank-complement scores.
    RankedViewList ranking;
    ranking.entries = {
        {{"cp", "oldpeak", Aggregate::Avg}, 0.62},
        {{"cp", "thalach", Aggregate::Avg}, 0.55},
        {{"sex", "oldpeak", Aggregate::Avg}, 0.49},
        {{"cp", "age", Aggregate::Avg}, 0.38},
        {{"sex", "thalach", Aggregate::Avg}, 0.25},
        {{"sex", "age", Aggregate::Avg}, 0.11},
    };
    return ranking;
}

namespace {

std::string cell_name(CellAddress cell) {
    std::ostringstream out;
    out << "C(" << cell.row + 1 << "," << cell.column + 1 << ")";
    return out.str();
}

struct Checker {
    std::vector<Check> checks;

    void near(const std::string& name, double got, double want, double tol) {
        std::ostringstream detail;
        detail << "got " << got << ", want " << want << " (tol " << tol << ")";
        checks.push_back({name, std::abs(got - want) <= tol, detail.str()});
    }
    void exact(const std::string& name, double got, double want) {
        std::ostringstream detail;
        detail << "got " << got << ", want " << want << " exactly";
        checks.push_back({name, got == want, detail.str()});
    }
    void yes(const std::string& name, bool ok, const std::string& detail) {
        checks.push_back({name, ok, detail});
    }
};

}  // namespace

std::vector<Check> run_worked_examples() {
    Checker out;
    const auto masked = demo_masked();
    const auto cells = missing_cells(masked);

    out.yes("mask holds 27 cells", cells.size() == 27,
            "got " + std::to_string(cells.size()));

    // Contribution tiers.
    out.near("contribution of C(1,1)", contribution_score({0, 0}, masked), 0.33, 0.005);
    out.exact("contribution of C(7,1)", contribution_score({6, 0}, masked), 1.0);
    out.exact("contribution of C(7,2)", contribution_score({6, 1}, masked), 1.0);
    out.exact("contribution of C(10,1)", contribution_score({9, 0}, masked), 1.0);
    {
        std::set<std::pair<std::size_t, std::size_t>> top_tier, mid_tier;
        for (const auto& cell : cells) {
            const double n = contribution_score(cell, masked);
            if (n == 1.0) top_tier.insert({cell.row, cell.column});
            if (std::abs(n - 2.0 / 3.0) < 1e-12) mid_tier.insert({cell.row, cell.column});
        }
        const std::set<std::pair<std::size_t, std::size_t>> want_top = {
            {6, 0}, {6, 1}, {9, 0}};
        const std::set<std::pair<std::size_t, std::size_t>> want_mid = {
            {2, 0}, {4, 3}, {4, 4}, {7, 4}};
        out.yes("top contribution tier is exactly {C(7,1), C(7,2), C(10,1)}",
                top_tier == want_top, std::to_string(top_tier.size()) + " cells at 1.0");
        out.yes("0.66 contribution tier is exactly {C(3,1), C(5,4), C(5,5), C(8,5)}",
                mid_tier == want_mid, std::to_string(mid_tier.size()) + " cells at 2/3");
    }

    // Column missing ratios and fairness.
    {
        const double want_ratio[] = {0.6, 0.5, 0.3, 0.7, 0.6};
        bool all = true;
        std::ostringstream detail;
        for (std::size_t c = 0; c < 5; ++c) {
            const double ratio = static_cast<double>(masked.missing_in_column(c)) /
                                 static_cast<double>(masked.row_count());
            detail << ratio << ' ';
            all = all && std::abs(ratio - want_ratio[c]) < 1e-12;
        }
        out.yes("column missing ratios are (0.6, 0.5, 0.3, 0.7, 0.6)", all, detail.str());
    }
    out.exact("fairness of any oldpeak cell", fairness_score({0, 3}, masked), 1.0);
    out.near("fairness of an age cell", fairness_score({1, 2}, masked), 3.0 / 7.0, 1e-12);

    // Ranking-to-column mapping on the fixed temporary ranking.
    const auto ranking = demo_temp_rank();
    const auto profile = WeightProfile::constant(10, ranking.size());
    const auto column_scores = temp_rank_column_scores(ranking, profile);
    out.near("column score sex (7/14)", column_scores.at("sex"), 0.5, 1e-12);
    out.near("column score cp (14/14)", column_scores.at("cp"), 1.0, 1e-12);
    out.near("column score age (4/14)", column_scores.at("age"), 4.0 / 14.0, 1e-12);
    out.near("column score oldpeak (10/14)", column_scores.at("oldpeak"), 10.0 / 14.0,
             1e-12);
    out.near("column score thalach (7/14)", column_scores.at("thalach"), 0.5, 1e-12);

    // Ranking scores per cell.
    out.near("ranking score of C(10,1)", ranking_score({9, 0}, masked, column_scores),
             0.5, 1e-12);
    out.near("ranking score of row-1 cells",
             ranking_score({0, 0}, masked, column_scores), 0.6785, 0.001);
    out.near("ranking score of C(7,1)", ranking_score({6, 0}, masked, column_scores),
             0.75, 1e-12);
    out.near("ranking score of C(7,2)", ranking_score({6, 1}, masked, column_scores),
             0.75, 1e-12);
    {
        CellAddress best{0, 0};
        double best_score = -1.0;
        std::size_t at_max = 0;
        for (const auto& cell : cells) {
            const double r = ranking_score(cell, masked, column_scores);
            if (r > best_score) {
                best_score = r;
                best = cell;
                at_max = 1;
            } else if (r == best_score) {
                ++at_max;
            }
        }
        out.yes("ranking maximum 0.75 is attained exactly by C(7,1) and C(7,2)",
                best_score == 0.75 && at_max == 2 && best.row == 6,
                "max " + std::to_string(best_score) + " at " + cell_name(best) +
                    ", count " + std::to_string(at_max));
    }

    // Budget arithmetic on this mask.
    out.yes("10% budget on 27 missing cells resolves to 3",
            resolve_budget(BudgetSpec::fraction(0.1), masked) == 3,
            std::to_string(resolve_budget(BudgetSpec::fraction(0.1), masked)));

    return out.checks;
}

}  // namespace vizplan::fixtures
