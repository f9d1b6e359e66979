#pragma once

#include <vector>

#include "mhc/graph.hpp"
#include "mhc/solution.hpp"

namespace mhc {

/// Hard cap for the subset-enumeration oracles below.
inline constexpr int kDefaultOracleLimit = 20;

/// Exhaustive minimum hub cover. Enumerates subsets in increasing
/// cardinality and returns the lexicographically smallest minimum cover
/// with status Optimal. Refuses graphs above the limit.
HubCoverSolution brute_force_mhc(const Graph& g, int limit = kDefaultOracleLimit);

/// Every minimum hub cover, sorted lexicographically.
std::vector<std::vector<int>> brute_force_all_mhc(const Graph& g,
                                                  int limit = kDefaultOracleLimit);

/// Exhaustive minimum vertex cover with the same tie-break.
std::vector<int> brute_force_mvc(const Graph& g, int limit = kDefaultOracleLimit);

}  // namespace mhc
