#include "vizplan/views.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace vizplan {

std::string ViewSpec::label() const {
    std::string s;
    s += dimension;
    s += ',';
    s += aggregate_token(aggregate);
    s += '(';
    s += measure;
    s += ')';
    return s;
}

DistanceKind parse_distance(std::string_view token) {
    if (token == "l1") return DistanceKind::L1;
    if (token == "l2") return DistanceKind::L2;
    throw ConfigError("unknown distance token: " + std::string(token));
}

std::string_view distance_token(DistanceKind kind) {
    return kind == DistanceKind::L1 ? "l1" : "l2";
}

std::vector<ViewSpec> enumerate_views(const Schema& schema) {
    std::vector<ViewSpec> specs;
    specs.reserve(schema.dimensions.size() * schema.measures.size() *
                  schema.aggregates.size());
    for (const auto& dim : schema.dimensions)
        for (const auto& meas : schema.measures)
            for (const auto agg : schema.aggregates)
                specs.push_back({dim, meas, agg});
    std::sort(specs.begin(), specs.end());
    return specs;
}

namespace {

struct GroupAccumulator {
    double sum = 0.0;
    double min = std::numeric_limits<double>::infinity();
    double max = -std::numeric_limits<double>::infinity();
    std::size_t count = 0;

    void add(double v) {
        sum += v;
        min = std::min(min, v);
        max = std::max(max, v);
        ++count;
    }
    double result(Aggregate agg) const {
        switch (agg) {
            case Aggregate::Avg: return sum / static_cast<double>(count);
            case Aggregate::Sum: return sum;
            case Aggregate::Min: return min;
            case Aggregate::Max: return max;
            case Aggregate::Count: return static_cast<double>(count);
        }
        return 0.0;
    }
};

}  // namespace

GroupDistribution execute_view(const MaskedDataset& data, const ViewSpec& spec,
                               const SubsetSpec& subset) {
    const auto& schema = data.schema();
    const auto dim = schema.dimension_index(spec.dimension);
    if (!dim) throw ConfigError("view dimension not in schema: " + spec.dimension);
    const auto meas_col = schema.column_index(spec.measure);
    if (!meas_col || schema.is_dimension_column(*meas_col))
        throw ConfigError("view measure not in schema: " + spec.measure);
    const std::size_t meas = *meas_col - schema.dimensions.size();

    // std::map keeps group keys in lexicographic order.
    std::map<std::string, GroupAccumulator> groups;
    for (std::size_t row = 0; row < data.row_count(); ++row) {
        const auto member = row_in_subset(data, row, subset);
        if (!member || !*member) continue;  // masked predicate cells drop out
        const auto key = data.dimension_at(row, *dim);
        if (!key) continue;
        const auto value = data.measure_at(row, meas);
        if (!value) continue;
        groups[std::string(*key)].add(*value);
    }

    GroupDistribution dist;
    double total = 0.0;
    for (const auto& [key, acc] : groups) {
        const double g = acc.result(spec.aggregate);
        if (g < 0.0) throw NegativeMassError(spec.label());
        dist.entries.emplace_back(key, g);
        total += g;
    }
    if (total <= 0.0) return {};  // all-zero aggregates carry no signal
    for (auto& [key, mass] : dist.entries) mass /= total;
    return dist;
}

double deviation_utility(const GroupDistribution& target,
                         const GroupDistribution& reference, DistanceKind distance) {
    if (target.empty() && reference.empty()) return 0.0;

    // Merge the two key-sorted entry lists; absent keys contribute mass 0.
    double acc = 0.0;
    std::size_t i = 0, j = 0;
    auto consume = [&](double a, double b) {
        const double d = a - b;
        acc += distance == DistanceKind::L2 ? d * d : std::abs(d);
    };
    while (i < target.entries.size() || j < reference.entries.size()) {
        if (j >= reference.entries.size() ||
            (i < target.entries.size() && target.entries[i].first < reference.entries[j].first)) {
            consume(target.entries[i].second, 0.0);
            ++i;
        } else if (i >= target.entries.size() ||
                   reference.entries[j].first < target.entries[i].first) {
            consume(0.0, reference.entries[j].second);
            ++j;
        } else {
            consume(target.entries[i].second, reference.entries[j].second);
            ++i;
            ++j;
        }
    }
    return distance == DistanceKind::L2 ? std::sqrt(acc) : acc;
}

double score_view(const MaskedDataset& data, const ViewSpec& spec,
                  const SubsetSpec& target, const SubsetSpec& reference,
                  DistanceKind distance, bool* negative_mass) {
    if (negative_mass) *negative_mass = false;
    try {
        const auto target_dist = execute_view(data, spec, target);
        const auto reference_dist = execute_view(data, spec, reference);
        return deviation_utility(target_dist, reference_dist, distance);
    } catch (const NegativeMassError&) {
        if (negative_mass) *negative_mass = true;
        return 0.0;
    }
}

RankedViewList rank_views(const MaskedDataset& data, const SubsetSpec& target,
                          const SubsetSpec& reference, DistanceKind distance,
                          std::size_t* negative_mass_views) {
    if (negative_mass_views) *negative_mass_views = 0;
    RankedViewList ranking;
    for (const auto& spec : enumerate_views(data.schema())) {
        bool negative = false;
        const double utility = score_view(data, spec, target, reference, distance, &negative);
        if (negative && negative_mass_views) ++*negative_mass_views;
        ranking.entries.push_back({spec, utility});
    }
    // Specs enter in lexicographic order, so a stable sort keeps ties in it.
    std::stable_sort(ranking.entries.begin(), ranking.entries.end(),
                     [](const ScoredView& a, const ScoredView& b) {
                         return a.utility > b.utility;
                     });
    return ranking;
}

RankedViewList top_k(const RankedViewList& ranking, std::size_t k) {
    if (k < 1) throw ConfigError("k must be >= 1");
    RankedViewList out;
    const std::size_t take = std::min(k, ranking.entries.size());
    out.entries.assign(ranking.entries.begin(), ranking.entries.begin() + take);
    return out;
}

}  // namespace vizplan
