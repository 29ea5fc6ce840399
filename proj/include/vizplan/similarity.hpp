#pragma once

#include "vizplan/views.hpp"

namespace vizplan {

/// Set similarity of the two view lists: |intersection| / |union|.
/// Order-insensitive; 1.0 when both lists are empty.
double jaccard(const RankedViewList& a, const RankedViewList& b);

/// Extrapolated rank-biased overlap with persistence p in (0,1), evaluated
/// at depth min(|a|, |b|). Order-sensitive: 1.0 for identical lists, 0.0 for
/// disjoint ones. Lists must not repeat a spec internally.
double rbo(const RankedViewList& a, const RankedViewList& b, double p);

}  // namespace vizplan
