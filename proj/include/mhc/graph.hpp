#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mhc {

using Edge = std::pair<int, int>;  // canonical: first < second

/// Undirected simple graph over dense vertex ids 0..n-1.
///
/// Edges are stored canonically (i < j, sorted lexicographically) and the
/// per-vertex adjacency lists are kept sorted; both views describe the same
/// edge set. Vertices may carry an optional label (interned string) and an
/// optional symbolic name used by the text format.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);
  Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(int a, int b) const;
  bool has_vertex(int v) const { return v >= 0 && v < n_; }

  bool labeled() const { return !label_of_.empty(); }
  /// Interned label id of v, or -1 when the graph is unlabeled.
  int label_id(int v) const { return labeled() ? label_of_[v] : -1; }
  const std::string& label_text(int label_id) const { return label_pool_[label_id]; }
  int num_label_ids() const { return static_cast<int>(label_pool_.size()); }

  bool has_names() const { return !names_.empty(); }
  std::string vertex_name(int v) const;
  void set_vertex_names(std::vector<std::string> names);

  void check_vertex(int v) const;  // throws std::invalid_argument on bad id

 private:
  void build_adjacency();

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> label_of_;            // per vertex, empty if unlabeled
  std::vector<std::string> label_pool_;  // interned label strings
  std::vector<std::string> names_;       // optional symbolic names
};

/// Hub record of a vertex: its neighbor set and the edges among the
/// neighbors (cross edges). The unit of representation used by the matcher.
struct Graphlet {
  int v = -1;
  std::vector<int> neighbors;      // sorted, v excluded
  std::vector<Edge> cross_edges;   // canonical order, endpoints in neighbors
  std::string label;               // label text of v, empty if unlabeled

  int neighbor_count() const { return static_cast<int>(neighbors.size()); }
  int cross_edge_count() const { return static_cast<int>(cross_edges.size()); }
};

/// Builds the graphlet of v from g.
Graphlet make_graphlet(const Graph& g, int v);

/// All graphlets of g, indexed by vertex id.
std::vector<Graphlet> make_graphlets(const Graph& g);

}  // namespace mhc
