#pragma once

#include "splitgen/scheme.hpp"

#include <map>
#include <vector>

namespace splitgen {

/// One correction-term content {n_j}: grade j -> multiplicity (nonzero only).
using ConditionMultiset = std::map<int, int>;

/// The condition set X_m of the scheme, cumulative through order m.
/// Sorted by (weighted total, multiset).
std::vector<ConditionMultiset> condition_multisets(const Scheme& scheme, int m);

/// Index sequences (i_1,...,i_n) of the minimal independent determining
/// equations g(i_1,...,i_n) = 0: the Lyndon-content sequences of every
/// multiset in X_m. Sorted by (total grade, length, lexicographic).
std::vector<std::vector<int>> determining_indices(const Scheme& scheme, int m);

inline int weighted_total(const ConditionMultiset& c) {
    int t = 0;
    for (const auto& [grade, mult] : c) t += grade * mult;
    return t;
}

}  // namespace splitgen
