#include "mhc/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace mhc {

namespace {

std::vector<Edge> canonicalize_edges(int n, std::vector<Edge> edges) {
  for (auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (a == b) {
      throw std::invalid_argument("self-loops are not allowed");
    }
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("duplicate edge");
  }
  return edges;
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  edges_ = canonicalize_edges(n, std::move(edges));
  build_adjacency();
}

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels)
    : Graph(n, std::move(edges)) {
  if (static_cast<int>(labels.size()) != n) {
    throw std::invalid_argument("labels must cover every vertex");
  }
  label_of_.resize(n);
  std::unordered_map<std::string, int> intern;
  for (int v = 0; v < n; ++v) {
    auto [it, inserted] = intern.emplace(labels[v], static_cast<int>(label_pool_.size()));
    if (inserted) label_pool_.push_back(labels[v]);
    label_of_[v] = it->second;
  }
}

void Graph::build_adjacency() {
  adj_.assign(n_, {});
  for (const auto& [a, b] : edges_) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

bool Graph::has_edge(int a, int b) const {
  if (!has_vertex(a) || !has_vertex(b) || a == b) return false;
  const auto& nb = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
  const int other = adj_[a].size() <= adj_[b].size() ? b : a;
  return std::binary_search(nb.begin(), nb.end(), other);
}

std::string Graph::vertex_name(int v) const {
  check_vertex(v);
  if (!names_.empty()) return names_[v];
  return std::to_string(v);
}

void Graph::set_vertex_names(std::vector<std::string> names) {
  if (static_cast<int>(names.size()) != n_) {
    throw std::invalid_argument("names must cover every vertex");
  }
  names_ = std::move(names);
}

void Graph::check_vertex(int v) const {
  if (!has_vertex(v)) {
    throw std::invalid_argument("unknown vertex id " + std::to_string(v));
  }
}

Graphlet make_graphlet(const Graph& g, int v) {
  g.check_vertex(v);
  Graphlet r;
  r.v = v;
  r.neighbors = g.neighbors(v);
  if (g.labeled()) r.label = g.label_text(g.label_id(v));
  const auto& nb = r.neighbors;
  for (size_t i = 0; i < nb.size(); ++i) {
    for (size_t j = i + 1; j < nb.size(); ++j) {
      if (g.has_edge(nb[i], nb[j])) r.cross_edges.emplace_back(nb[i], nb[j]);
    }
  }
  return r;
}

std::vector<Graphlet> make_graphlets(const Graph& g) {
  std::vector<Graphlet> out;
  out.reserve(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) out.push_back(make_graphlet(g, v));
  return out;
}

}  // namespace mhc
