#pragma once

#include <string>

#include "vizplan/config.hpp"
#include "vizplan/fixtures.hpp"

namespace helpers {

inline std::string data_path(const char* name) {
    return std::string(VIZPLAN_DATA_DIR "/") + name;
}

inline std::string config_path(const char* name) {
    return std::string(VIZPLAN_CONFIG_DIR "/") + name;
}

inline vizplan::Schema heart_schema() {
    vizplan::Schema schema;
    schema.dimensions = {"sex", "cp", "fbs", "restecg", "exang", "slope", "thal",
                         "disease"};
    schema.measures = {"age", "trestbps", "chol", "thalach", "oldpeak", "ca"};
    return schema;
}

inline vizplan::DatasetPtr heart_dataset() {
    return std::make_shared<const vizplan::Dataset>(
        vizplan::load_dataset(data_path("heart_synth.csv"), heart_schema()));
}

inline vizplan::Schema airbnb_schema() {
    vizplan::Schema schema;
    schema.dimensions = {"neighbourhood_group", "neighbourhood", "room_type",
                         "instant_bookable"};
    schema.measures = {"price", "minimum_nights", "number_of_reviews",
                       "availability_365"};
    return schema;
}

inline vizplan::DatasetPtr airbnb_dataset() {
    return std::make_shared<const vizplan::Dataset>(
        vizplan::load_dataset(data_path("airbnb_synth.csv"), airbnb_schema()));
}

/// First `rows` rows of the heart table (for fast full-recovery sweeps).
vizplan::DatasetPtr heart_sample(std::size_t rows);

/// Random small instance for oracle cross-checks: <= 12 rows, `columns`
/// columns (3 or 4) split randomly between dimensions and measures,
/// non-negative measures, plus a mask of at most `max_missing` cells.
struct RandomInstance {
    vizplan::DatasetPtr dataset;
    std::vector<vizplan::CellAddress> mask;
    vizplan::SubsetSpec target;
    vizplan::SubsetSpec reference;
};
RandomInstance random_instance(vizplan::Rng& rng, std::size_t max_missing = 5,
                               std::size_t columns = 3);

}  // namespace helpers
