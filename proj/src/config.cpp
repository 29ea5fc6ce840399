#include "vizplan/config.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace vizplan {

namespace {

std::string trim(std::string_view s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return std::string(s.substr(begin, end - begin + 1));
}

}  // namespace

ConfigFile ConfigFile::parse_string(const std::string& text) {
    ConfigFile config;
    std::istringstream in(text);
    std::string line;
    std::string section;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        if (body.front() == '[') {
            if (body.back() != ']')
                throw ConfigError("line " + std::to_string(line_number) +
                                  ": unterminated section header");
            section = trim(body.substr(1, body.size() - 2));
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_number) +
                              ": expected key = value");
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (key.empty())
            throw ConfigError("line " + std::to_string(line_number) + ": empty key");
        config.sections_[section][key] = value;
    }
    return config;
}

ConfigFile ConfigFile::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    ConfigFile config = parse_string(buffer.str());
    config.base_dir_ = std::filesystem::path(path).parent_path().string();
    return config;
}

bool ConfigFile::has(const std::string& section, const std::string& key) const {
    const auto s = sections_.find(section);
    return s != sections_.end() && s->second.count(key) > 0;
}

std::string ConfigFile::get(const std::string& section, const std::string& key) const {
    const auto s = sections_.find(section);
    if (s != sections_.end()) {
        const auto k = s->second.find(key);
        if (k != s->second.end()) return k->second;
    }
    throw ConfigError("missing config key [" + section + "] " + key);
}

std::string ConfigFile::get_or(const std::string& section, const std::string& key,
                               const std::string& fallback) const {
    return has(section, key) ? get(section, key) : fallback;
}

SubsetSpec parse_subset(std::string_view token) {
    const std::string t = trim(token);
    if (t == "whole-data" || t == "whole" || t == "*") return SubsetSpec::whole_data();
    const auto eq = t.find('=');
    if (eq == std::string::npos)
        throw ConfigError("subset must be 'whole-data' or 'column=value': " + t);
    const std::string column = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (column.empty() || value.empty())
        throw ConfigError("subset predicate needs both column and value: " + t);
    return SubsetSpec::predicate(column, value);
}

std::string subset_token(const SubsetSpec& subset) {
    if (subset.is_whole_data()) return "whole-data";
    return subset.column + "=" + subset.value;
}

std::vector<std::string> split_list(std::string_view text) {
    std::vector<std::string> items;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto end = comma == std::string_view::npos ? text.size() : comma;
        const std::string item = trim(text.substr(start, end - start));
        if (!item.empty()) items.push_back(item);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return items;
}

WeightProfile ExperimentConfig::weight_profile(StrategyKind strategy,
                                               std::size_t view_count) const {
    auto profile = strategy == StrategyKind::Ranking
                       ? WeightProfile::constant(k, view_count)
                       : WeightProfile::inverted_u(k, view_count);
    if (weight_alpha_up) profile.alpha_up = *weight_alpha_up;
    if (weight_beta_up) profile.beta_up = *weight_beta_up;
    if (weight_alpha_down) profile.alpha_down = *weight_alpha_down;
    if (weight_beta_down) profile.beta_down = *weight_beta_down;
    profile.z_from_utility = z_from_utility;
    return profile;
}

bool ExperimentConfig::has_weight_overrides() const {
    return weight_alpha_up || weight_beta_up || weight_alpha_down ||
           weight_beta_down || z_from_utility;
}

void ExperimentConfig::validate() const {
    schema.validate();
    if (k < 1) throw ConfigError("k must be >= 1");
    if (weight_alpha_up && *weight_alpha_up <= 0.0)
        throw ConfigError("weights.alpha_up must be > 0");
    if (weight_alpha_down && *weight_alpha_down >= 0.0)
        throw ConfigError("weights.alpha_down must be < 0");
    if (seed_count < 1) throw ConfigError("seed count must be >= 1");
    if (!(rbo_p > 0.0 && rbo_p < 1.0)) throw ConfigError("rbo_p must lie in (0,1)");
    if (rates.empty()) throw ConfigError("no missing rates configured");
    for (const double r : rates)
        if (!(r > 0.0 && r < 1.0)) throw ConfigError("missing rates must lie in (0,1)");
    if (budgets.empty()) throw ConfigError("no budgets configured");
    if (strategies.empty()) throw ConfigError("no strategies configured");
}

Schema schema_from_config(const ConfigFile& config) {
    Schema schema;
    schema.dimensions = split_list(config.get("dataset", "dimensions"));
    schema.measures = split_list(config.get("dataset", "measures"));
    if (config.has("dataset", "aggregates")) {
        schema.aggregates.clear();
        for (const auto& token : split_list(config.get("dataset", "aggregates")))
            schema.aggregates.push_back(parse_aggregate(token));
    }
    schema.validate();
    return schema;
}

namespace {

double parse_double(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad numeric value for " + what + ": " + text);
    }
}

std::uint64_t parse_uint(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const auto v = std::stoull(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad integer value for " + what + ": " + text);
    }
}

}  // namespace

ExperimentConfig experiment_from_config(const ConfigFile& config) {
    ExperimentConfig exp;
    exp.schema = schema_from_config(config);

    std::filesystem::path path = config.get("dataset", "path");
    if (path.is_relative() && !config.base_dir().empty())
        path = std::filesystem::path(config.base_dir()) / path;
    exp.dataset_path = path.string();
    exp.dataset_name = config.get_or("dataset", "name", path.stem().string());

    exp.target = parse_subset(config.get_or("subsets", "target", "whole-data"));
    exp.reference = parse_subset(config.get_or("subsets", "reference", "whole-data"));

    exp.k = parse_uint(config.get_or("experiment", "k", "10"), "k");
    exp.rates.clear();
    for (const auto& token : split_list(config.get_or("experiment", "rates", "0.2")))
        exp.rates.push_back(parse_double(token, "rates"));

    exp.budgets.clear();
    if (config.has("experiment", "budgets")) {
        for (const auto& token : split_list(config.get("experiment", "budgets")))
            exp.budgets.push_back(parse_budget(token));
    } else if (config.has("experiment", "budget.kind")) {
        const auto kind = config.get("experiment", "budget.kind");
        const auto value = parse_double(config.get("experiment", "budget.value"),
                                        "budget.value");
        exp.budgets.push_back(kind == "cells" ? BudgetSpec::cells(value)
                              : kind == "fraction"
                                  ? BudgetSpec::fraction(value)
                                  : throw ConfigError("unknown budget.kind: " + kind));
    } else {
        exp.budgets.push_back(BudgetSpec::fraction(0.1));
    }

    exp.regen = parse_regen_mode(
        config.get_or("experiment", "regen", "top-k-plus-k-highest"));
    if (config.has("experiment", "weights.alpha_up"))
        exp.weight_alpha_up = parse_double(config.get("experiment", "weights.alpha_up"),
                                           "weights.alpha_up");
    if (config.has("experiment", "weights.beta_up"))
        exp.weight_beta_up = parse_double(config.get("experiment", "weights.beta_up"),
                                          "weights.beta_up");
    if (config.has("experiment", "weights.alpha_down"))
        exp.weight_alpha_down = parse_double(
            config.get("experiment", "weights.alpha_down"), "weights.alpha_down");
    if (config.has("experiment", "weights.beta_down"))
        exp.weight_beta_down = parse_double(
            config.get("experiment", "weights.beta_down"), "weights.beta_down");
    const auto z_source = config.get_or("experiment", "z_source", "rank");
    if (z_source == "utility")
        exp.z_from_utility = true;
    else if (z_source != "rank")
        throw ConfigError("z_source must be rank or utility, got " + z_source);
    exp.distance = parse_distance(config.get_or("experiment", "distance", "l2"));
    exp.rbo_p = parse_double(config.get_or("experiment", "rbo_p", "0.9"), "rbo_p");
    exp.seed_count = parse_uint(config.get_or("experiment", "seeds", "100"), "seeds");
    exp.base_seed = parse_uint(config.get_or("experiment", "base_seed", "42"),
                               "base_seed");
    exp.out_dir = config.get_or("experiment", "out", "results");

    for (const auto& token : split_list(config.get_or(
             "strategies", "list",
             "none, random, fairness, cell, cell-f, ranking, ranking-w, hybrid")))
        exp.strategies.push_back(parse_strategy(token));

    exp.validate();
    return exp;
}

}  // namespace vizplan
