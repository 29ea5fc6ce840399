#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vizplan/imputation.hpp"
#include "vizplan/pipeline.hpp"

namespace vizplan {

/// Parsed INI-style configuration: [section] headers, key = value lines,
/// '#' comments. Keys are unique within a section.
class ConfigFile {
public:
    static ConfigFile parse_file(const std::string& path);
    static ConfigFile parse_string(const std::string& text);

    bool has(const std::string& section, const std::string& key) const;
    std::string get(const std::string& section, const std::string& key) const;
    std::string get_or(const std::string& section, const std::string& key,
                       const std::string& fallback) const;
    /// Directory of the file this config was parsed from ("" for strings);
    /// relative dataset paths resolve against it.
    const std::string& base_dir() const { return base_dir_; }

private:
    std::map<std::string, std::map<std::string, std::string>> sections_;
    std::string base_dir_;
};

/// "whole-data", or "column=value".
SubsetSpec parse_subset(std::string_view token);
std::string subset_token(const SubsetSpec& subset);

/// Comma-separated list, items trimmed, empties dropped.
std::vector<std::string> split_list(std::string_view text);

/// Full experiment description; field defaults match the evaluation protocol
/// (k = 10, 20% missing, budget 10% of missing, 100 seeds, RBO p = 0.9).
struct ExperimentConfig {
    std::string dataset_path;
    std::string dataset_name;
    Schema schema;
    SubsetSpec target = SubsetSpec::whole_data();
    SubsetSpec reference = SubsetSpec::whole_data();
    std::size_t k = 10;
    std::vector<double> rates{0.2};
    std::vector<BudgetSpec> budgets{BudgetSpec::fraction(0.1)};
    std::vector<StrategyKind> strategies;
    RegenMode regen = RegenMode::TopKPlusKHighest;
    DistanceKind distance = DistanceKind::L2;
    double rbo_p = 0.9;
    std::size_t seed_count = 100;
    std::uint64_t base_seed = 42;
    std::string out_dir = "results";
    /// Optional inverted-U coefficient overrides for the weighted ranking
    /// strategies (defaults follow the profile factories) and the ranking
    /// score source switch.
    std::optional<double> weight_alpha_up;
    std::optional<double> weight_beta_up;
    std::optional<double> weight_alpha_down;
    std::optional<double> weight_beta_down;
    bool z_from_utility = false;

    /// Per-run weight profile honoring the overrides; `view_count` is the
    /// size of the enumerated view space.
    WeightProfile weight_profile(StrategyKind strategy, std::size_t view_count) const;
    bool has_weight_overrides() const;

    void validate() const;
};

/// Reads [dataset] dimensions/measures/aggregates into a Schema.
Schema schema_from_config(const ConfigFile& config);

/// Assembles an ExperimentConfig from [dataset], [subsets], [experiment]
/// and [strategies] sections. Missing keys fall back to defaults.
ExperimentConfig experiment_from_config(const ConfigFile& config);

}  // namespace vizplan
