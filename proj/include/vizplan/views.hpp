#pragma once

#include <string>
#include <vector>

#include "vizplan/tabular.hpp"

namespace vizplan {

/// One aggregate group-by view: <dimension, measure, aggregate>.
struct ViewSpec {
    std::string dimension;
    std::string measure;
    Aggregate aggregate = Aggregate::Avg;

    std::string label() const;

    friend bool operator==(const ViewSpec&, const ViewSpec&) = default;
    friend bool operator<(const ViewSpec& a, const ViewSpec& b) {
        if (a.dimension != b.dimension) return a.dimension < b.dimension;
        if (a.measure != b.measure) return a.measure < b.measure;
        return aggregate_token(a.aggregate) < aggregate_token(b.aggregate);
    }
};

/// Normalized per-group masses, ordered lexicographically by group key.
/// Empty when no group survives aggregation.
struct GroupDistribution {
    std::vector<std::pair<std::string, double>> entries;

    bool empty() const { return entries.empty(); }
};

struct ScoredView {
    ViewSpec spec;
    double utility = 0.0;
};

/// Views sorted by descending utility; rank(V) is the 1-based position.
struct RankedViewList {
    std::vector<ScoredView> entries;

    std::size_t size() const { return entries.size(); }
    bool empty() const { return entries.empty(); }
};

enum class DistanceKind { L1, L2 };

DistanceKind parse_distance(std::string_view token);
std::string_view distance_token(DistanceKind kind);

/// All |dimensions| x |measures| x |aggregates| specs in deterministic
/// (dimension, measure, aggregate) lexicographic order.
std::vector<ViewSpec> enumerate_views(const Schema& schema);

/// Runs SELECT dimension, F(measure) ... WHERE subset GROUP BY dimension over
/// the masked table, ignoring masked cells: rows with a masked predicate or
/// grouping cell are excluded, aggregates run over present measure values
/// only, and groups with no present measure value are dropped. The surviving
/// group values are normalized to probability masses.
/// Throws NegativeMassError if any group aggregate is negative. Returns an
/// empty distribution when nothing survives (callers decide how to handle).
GroupDistribution execute_view(const MaskedDataset& data, const ViewSpec& spec,
                               const SubsetSpec& subset);

/// Distance between two distributions over the union of their group keys;
/// absent keys take mass zero. Zero when both are empty.
double deviation_utility(const GroupDistribution& target,
                         const GroupDistribution& reference, DistanceKind distance);

/// Utility of one view: distance between its target-subset and
/// reference-subset distributions. Negative-mass views score zero
/// (reported through `negative_mass` when provided).
double score_view(const MaskedDataset& data, const ViewSpec& spec,
                  const SubsetSpec& target, const SubsetSpec& reference,
                  DistanceKind distance, bool* negative_mass = nullptr);

/// Scores every enumerated view and sorts by descending utility, ties broken
/// by spec lexicographic order. `negative_mass_views`, when non-null, receives
/// the number of views that scored zero due to negative aggregate mass.
RankedViewList rank_views(const MaskedDataset& data, const SubsetSpec& target,
                          const SubsetSpec& reference, DistanceKind distance,
                          std::size_t* negative_mass_views = nullptr);

/// First min(k, size) entries, order preserved. k must be >= 1.
RankedViewList top_k(const RankedViewList& ranking, std::size_t k);

}  // namespace vizplan
