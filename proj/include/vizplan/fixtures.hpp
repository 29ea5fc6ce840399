#pragma once

#include "vizplan/priority.hpp"

namespace vizplan::fixtures {

/// Small heart-style table used by the worked-examples command and the
/// golden tests: 2 grouping columns (sex, cp), 3 numeric columns
/// (age, oldpeak, thalach), 10 rows, and a fixed 27-cell missing pattern
/// chosen so every hand-checkable score tier is populated.
Schema demo_schema();
DatasetPtr demo_ground_truth();
MaskedDataset demo_masked();

/// Fixed six-view temporary ranking over the demo schema, used to exercise
/// the ranking-to-column score mapping with hand-checkable totals.
RankedViewList demo_temp_rank();

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Replays every hand-computed score on the demo grid and reports each
/// comparison. All checks passing is a release gate.
std::vector<Check> run_worked_examples();

}  // namespace vizplan::fixtures
