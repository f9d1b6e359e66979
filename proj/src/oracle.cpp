#include "mhc/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "mhc/cover.hpp"

namespace mhc {

namespace {

void check_limit(const Graph& g, int limit) {
  if (limit > 25) throw std::invalid_argument("oracle limit capped at 25 vertices");
  if (g.num_vertices() > limit) {
    throw std::invalid_argument("graph exceeds oracle limit of " +
                                std::to_string(limit) + " vertices");
  }
}

// One bitmask per edge listing the vertices that cover it, deduplicated.
std::vector<std::uint32_t> hub_coverage_masks(const Graph& g) {
  std::vector<std::uint32_t> masks;
  masks.reserve(g.num_edges());
  for (const auto& [s, d] : g.edges()) {
    std::uint32_t m = (1u << s) | (1u << d);
    for (int c : g.neighbors(s)) {
      if (c != d && g.has_edge(c, d)) m |= 1u << c;
    }
    masks.push_back(m);
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return masks;
}

std::vector<std::uint32_t> vc_coverage_masks(const Graph& g) {
  std::vector<std::uint32_t> masks;
  masks.reserve(g.num_edges());
  for (const auto& [s, d] : g.edges()) masks.push_back((1u << s) | (1u << d));
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return masks;
}

bool covers(std::uint32_t subset, const std::vector<std::uint32_t>& masks) {
  for (std::uint32_t m : masks) {
    if ((subset & m) == 0) return false;
  }
  return true;
}

std::vector<int> mask_to_vertices(std::uint32_t mask, int n) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (mask & (1u << v)) out.push_back(v);
  }
  return out;
}

// Visits k-subsets of {0..n-1} in lexicographic order until f returns true.
template <typename F>
bool for_each_combination(int n, int k, F&& f) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint32_t mask = 0;
    for (int i : idx) mask |= 1u << i;
    if (f(mask)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Smallest-cardinality covering subsets; all of them if collect_all.
std::vector<std::uint32_t> minimum_covers(int n, const std::vector<std::uint32_t>& masks,
                                          bool collect_all) {
  std::vector<std::uint32_t> found;
  for (int k = 0; k <= n; ++k) {
    for_each_combination(n, k, [&](std::uint32_t subset) {
      if (covers(subset, masks)) {
        found.push_back(subset);
        return !collect_all;
      }
      return false;
    });
    if (!found.empty()) return found;
  }
  return found;  // n==0 with no masks: empty cover at k==0 already returned
}

}  // namespace

HubCoverSolution brute_force_mhc(const Graph& g, int limit) {
  check_limit(g, limit);
  auto covers = minimum_covers(g.num_vertices(), hub_coverage_masks(g), false);
  HubCoverSolution sol;
  sol.cover = mask_to_vertices(covers.front(), g.num_vertices());
  sol.objective = static_cast<int>(sol.cover.size());
  sol.status = SolveStatus::Optimal;
  sol.lower_bound = sol.objective;
  return sol;
}

std::vector<std::vector<int>> brute_force_all_mhc(const Graph& g, int limit) {
  check_limit(g, limit);
  auto masks = minimum_covers(g.num_vertices(), hub_coverage_masks(g), true);
  std::vector<std::vector<int>> out;
  out.reserve(masks.size());
  for (std::uint32_t m : masks) out.push_back(mask_to_vertices(m, g.num_vertices()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> brute_force_mvc(const Graph& g, int limit) {
  check_limit(g, limit);
  auto covers = minimum_covers(g.num_vertices(), vc_coverage_masks(g), false);
  return mask_to_vertices(covers.front(), g.num_vertices());
}

}  // namespace mhc
