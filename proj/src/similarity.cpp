#include "vizplan/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace vizplan {

namespace {

std::vector<ViewSpec> specs_of(const RankedViewList& list) {
    std::vector<ViewSpec> specs;
    specs.reserve(list.size());
    for (const auto& entry : list.entries) specs.push_back(entry.spec);
    return specs;
}

void require_distinct(const std::vector<ViewSpec>& specs, const char* which) {
    std::set<ViewSpec> seen(specs.begin(), specs.end());
    if (seen.size() != specs.size())
        throw Error(std::string("ranked list ") + which + " repeats a view spec");
}

}  // namespace

double jaccard(const RankedViewList& a, const RankedViewList& b) {
    std::set<ViewSpec> sa, sb;
    for (const auto& e : a.entries) sa.insert(e.spec);
    for (const auto& e : b.entries) sb.insert(e.spec);
    if (sa.empty() && sb.empty()) return 1.0;

    std::size_t common = 0;
    for (const auto& s : sa) common += sb.count(s);
    const std::size_t unioned = sa.size() + sb.size() - common;
    return static_cast<double>(common) / static_cast<double>(unioned);
}

double rbo(const RankedViewList& a, const RankedViewList& b, double p) {
    if (!(p > 0.0 && p < 1.0)) throw PersistenceOutOfRangeError(p);
    const auto sa = specs_of(a);
    const auto sb = specs_of(b);
    require_distinct(sa, "a");
    require_distinct(sb, "b");

    const std::size_t depth = std::min(sa.size(), sb.size());
    if (depth == 0) return (sa.empty() && sb.empty()) ? 1.0 : 0.0;
    // Identical lists score exactly 1 by construction; return it without
    // accumulating rounding error so full-recovery comparisons stay exact.
    if (sa == sb) return 1.0;

    // Incremental overlap X_d via one shared lookup set: an element seen in
    // both lists has been erased exactly once when its partner arrives.
    std::set<ViewSpec> pending;
    std::size_t overlap = 0;
    double weight = (1.0 - p);  // (1-p)/p * p^d at d = 1
    double score = 0.0;
    for (std::size_t d = 0; d < depth; ++d) {
        if (sa[d] == sb[d]) {
            ++overlap;
        } else {
            if (pending.erase(sa[d]) == 1) ++overlap;
            else pending.insert(sa[d]);
            if (pending.erase(sb[d]) == 1) ++overlap;
            else pending.insert(sb[d]);
        }
        score += weight * static_cast<double>(overlap) / static_cast<double>(d + 1);
        weight *= p;
    }
    // Extrapolate the final agreement X_d/d over the unseen tail.
    score += std::pow(p, static_cast<double>(depth)) *
             static_cast<double>(overlap) / static_cast<double>(depth);
    return score;
}

}  // namespace vizplan
