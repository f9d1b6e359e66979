#pragma once

#include <map>
#include <string>
#include <vector>

#include "mhc/graph.hpp"

namespace mhc {

/// Structural: injective vertex map only. Label: additionally an injective,
/// consistent label-to-label map. Match: mapped vertices must carry equal
/// labels. (Full mode needs edge labels and is out of scope.)
enum class MatchMode { Structural, Label, Match };

std::string to_string(MatchMode m);
MatchMode match_mode_from_string(const std::string& s);

/// Partial injective map from query vertices to data vertices, plus the
/// label bijection accumulated in Label mode.
struct Substitution {
  std::vector<int> vertex_map;   // query vertex -> data vertex, -1 unbound
  std::map<int, int> label_map;  // query label -> data label (Label mode)
  std::map<int, int> label_rev;  // data label -> query label

  explicit Substitution(int query_size = 0) : vertex_map(query_size, -1) {}
  bool bound(int qv) const { return vertex_map[qv] >= 0; }
};

enum class PlanMark { Top, Dot, Star };

std::string to_string(PlanMark m);

/// Ordered graphlet sequence restricted to a hub cover. Dot entries are
/// already bound when reached (their vertex neighbors an earlier hub);
/// Star entries share a neighbor with an earlier hub's neighborhood.
/// Disconnected covers yield one Top entry per plan component.
struct QueryPlan {
  struct Entry {
    int vertex;
    PlanMark mark;
  };
  std::vector<Entry> entries;
  std::vector<int> cover;
};

/// Graphlet lookup by hub vertex id.
class HashIndex {
 public:
  explicit HashIndex(const Graph& d);
  const Graphlet& get(int v) const { return graphlets_.at(v); }
  const std::vector<Graphlet>& all() const { return graphlets_; }

 private:
  std::vector<Graphlet> graphlets_;
};

/// Inverted neighbor index: lookup(required, k) returns the hubs whose
/// neighborhood contains every vertex in `required` and has size >= k.
class SetIndex {
 public:
  explicit SetIndex(const Graph& d);
  std::vector<int> lookup(const std::vector<int>& required, int min_neighbors) const;

 private:
  const Graph* d_;
};

struct Indices {
  HashIndex hash;
  SetIndex set;
};

Indices build_indices(const Graph& d);

/// Counts of data graphlets at least as large as r, used to order plans.
/// node(): |N_y| >= |N_r| and |B_y| >= |B_r|, plus hub label equality in
/// Match mode. structural(): the same size thresholds without the label
/// rule. neighbor(): |N_y| >= |N_r| only.
class SelectivityProvider {
 public:
  SelectivityProvider(const Graph& d, MatchMode mode);
  int node(const Graphlet& r) const;
  int structural(const Graphlet& r) const;
  int neighbor(const Graphlet& r) const;

 private:
  MatchMode mode_;
  std::vector<int> degrees_;      // per data vertex
  std::vector<int> cross_counts_;
  std::vector<std::string> labels_;
};

int selectivity_node(const Graphlet& r, const Graph& d,
                     MatchMode mode = MatchMode::Structural);
int selectivity_structural(const Graphlet& r, const Graph& d);
int selectivity_neighbor(const Graphlet& r, const Graph& d);

/// Orders the cover's graphlets into a query plan: seed with the most
/// node-selective graphlet, then repeatedly append immediate-neighbor
/// candidates (Dot, ranked by node then structural selectivity) and only
/// when none qualify 2-hop candidates (Star, ranked by neighbor then
/// structural selectivity). Ties break on vertex id. Starts a fresh Top
/// entry whenever the remaining cover is unreachable.
QueryPlan order_graphlets(const Graph& q, const std::vector<int>& cover,
                          const SelectivityProvider& stats, MatchMode mode);

/// All extensions of theta that map r_q's hub onto r_d's hub and r_q's
/// neighbors injectively into r_d's neighbors so that every hub and cross
/// edge of r_q lands on an edge of the data graph, honoring mode label
/// rules and bindings already present in theta.
std::vector<Substitution> graphlet_matches(const Graphlet& r_q, const Graphlet& r_d,
                                           const Substitution& theta, MatchMode mode,
                                           const Graph& q, const Graph& d);

/// Depth-first search over the plan: Top entries scan by size thresholds,
/// Dot entries fetch their single bound graphlet from the hash index, Star
/// entries query the set index with their mapped neighbors. Returns the
/// complete duplicate-free set of matches as total vertex maps, sorted.
std::vector<std::vector<int>> find_solutions(const QueryPlan& plan, const Graph& q,
                                             const Graph& d, const Indices& indices,
                                             MatchMode mode);

/// Exhaustive matching oracle: every injective vertex map preserving edges
/// and mode label rules. Refuses queries over 8 or data over 14 vertices.
std::vector<std::vector<int>> brute_force_matches(const Graph& q, const Graph& d,
                                                  MatchMode mode);

/// Plan selection across all minimum hub covers: enumerate them at oracle
/// scale, score each ordered plan by the product of per-step selectivity
/// estimates, keep the cheapest. Falls back to the exact solver's single
/// cover for larger queries.
QueryPlan choose_plan(const Graph& q, const Graph& d, MatchMode mode,
                      int oracle_limit = 20);

}  // namespace mhc
