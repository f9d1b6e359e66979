#include "mhc/matcher.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mhc/cover.hpp"
#include "mhc/ip_model.hpp"
#include "mhc/oracle.hpp"
#include "mhc/solvers.hpp"

namespace mhc {

std::string to_string(MatchMode m) {
  switch (m) {
    case MatchMode::Structural: return "structural";
    case MatchMode::Label: return "label";
    case MatchMode::Match: return "match";
  }
  return "?";
}

MatchMode match_mode_from_string(const std::string& s) {
  if (s == "structural") return MatchMode::Structural;
  if (s == "label") return MatchMode::Label;
  if (s == "match") return MatchMode::Match;
  throw std::invalid_argument("unknown match mode: " + s);
}

std::string to_string(PlanMark m) {
  switch (m) {
    case PlanMark::Top: return "top";
    case PlanMark::Dot: return "dot";
    case PlanMark::Star: return "star";
  }
  return "?";
}

HashIndex::HashIndex(const Graph& d) : graphlets_(make_graphlets(d)) {}

SetIndex::SetIndex(const Graph& d) : d_(&d) {}

std::vector<int> SetIndex::lookup(const std::vector<int>& required,
                                  int min_neighbors) const {
  std::vector<int> out;
  if (required.empty()) {
    for (int v = 0; v < d_->num_vertices(); ++v) {
      if (d_->degree(v) >= min_neighbors) out.push_back(v);
    }
    return out;
  }
  // The posting list of w (hubs whose neighborhood contains w) is exactly
  // the adjacency of w; intersect the sorted lists.
  out = d_->neighbors(required[0]);
  for (size_t i = 1; i < required.size() && !out.empty(); ++i) {
    const auto& post = d_->neighbors(required[i]);
    std::vector<int> next;
    std::set_intersection(out.begin(), out.end(), post.begin(), post.end(),
                          std::back_inserter(next));
    out = std::move(next);
  }
  std::erase_if(out, [&](int v) { return d_->degree(v) < min_neighbors; });
  return out;
}

Indices build_indices(const Graph& d) { return Indices{HashIndex(d), SetIndex(d)}; }

SelectivityProvider::SelectivityProvider(const Graph& d, MatchMode mode) : mode_(mode) {
  const int n = d.num_vertices();
  degrees_.resize(n);
  cross_counts_.resize(n);
  labels_.resize(n);
  for (int v = 0; v < n; ++v) {
    const Graphlet g = make_graphlet(d, v);
    degrees_[v] = g.neighbor_count();
    cross_counts_[v] = g.cross_edge_count();
    labels_[v] = g.label;
  }
}

int SelectivityProvider::node(const Graphlet& r) const {
  int count = 0;
  for (size_t v = 0; v < degrees_.size(); ++v) {
    if (degrees_[v] >= r.neighbor_count() && cross_counts_[v] >= r.cross_edge_count() &&
        (mode_ != MatchMode::Match || labels_[v] == r.label)) {
      ++count;
    }
  }
  return count;
}

int SelectivityProvider::structural(const Graphlet& r) const {
  int count = 0;
  for (size_t v = 0; v < degrees_.size(); ++v) {
    if (degrees_[v] >= r.neighbor_count() && cross_counts_[v] >= r.cross_edge_count()) {
      ++count;
    }
  }
  return count;
}

int SelectivityProvider::neighbor(const Graphlet& r) const {
  int count = 0;
  for (int deg : degrees_) {
    if (deg >= r.neighbor_count()) ++count;
  }
  return count;
}

int selectivity_node(const Graphlet& r, const Graph& d, MatchMode mode) {
  return SelectivityProvider(d, mode).node(r);
}

int selectivity_structural(const Graphlet& r, const Graph& d) {
  return SelectivityProvider(d, MatchMode::Structural).structural(r);
}

int selectivity_neighbor(const Graphlet& r, const Graph& d) {
  return SelectivityProvider(d, MatchMode::Structural).neighbor(r);
}

QueryPlan order_graphlets(const Graph& q, const std::vector<int>& cover,
                          const SelectivityProvider& stats, MatchMode) {
  if (!is_hub_cover(q, cover)) {
    throw std::invalid_argument("order_graphlets: not a hub cover of the query");
  }
  QueryPlan plan;
  plan.cover = cover;
  std::sort(plan.cover.begin(), plan.cover.end());

  std::vector<Graphlet> gl;
  gl.reserve(plan.cover.size());
  for (int v : plan.cover) gl.push_back(make_graphlet(q, v));

  std::vector<char> placed(plan.cover.size(), 0);
  std::vector<char> hub_placed(q.num_vertices(), 0);
  size_t left = plan.cover.size();

  auto neighbor_of_placed_hub = [&](int v) {
    for (int u : q.neighbors(v)) {
      if (hub_placed[u]) return true;
    }
    return false;
  };
  auto shares_neighbor_with_placed = [&](int v) {
    for (size_t i = 0; i < plan.cover.size(); ++i) {
      if (!placed[i]) continue;
      const auto& a = q.neighbors(v);
      const auto& b = q.neighbors(plan.cover[i]);
      auto it = a.begin();
      auto jt = b.begin();
      while (it != a.end() && jt != b.end()) {
        if (*it < *jt) ++it;
        else if (*jt < *it) ++jt;
        else return true;
      }
    }
    return false;
  };
  auto place = [&](size_t idx, PlanMark mark) {
    plan.entries.push_back({plan.cover[idx], mark});
    placed[idx] = 1;
    hub_placed[plan.cover[idx]] = 1;
    --left;
  };
  auto pick_best = [&](auto qualifies, auto primary) -> int {
    int best = -1;
    int best_primary = 0, best_secondary = 0;
    for (size_t i = 0; i < plan.cover.size(); ++i) {
      if (placed[i] || !qualifies(plan.cover[i])) continue;
      const int p = primary(gl[i]);
      const int s = stats.structural(gl[i]);
      if (best < 0 || p < best_primary ||
          (p == best_primary && (s < best_secondary ||
                                 (s == best_secondary && plan.cover[i] < plan.cover[best])))) {
        best = static_cast<int>(i);
        best_primary = p;
        best_secondary = s;
      }
    }
    return best;
  };

  while (left > 0) {
    if (!plan.entries.empty()) {
      const int dot = pick_best(neighbor_of_placed_hub,
                                [&](const Graphlet& r) { return stats.node(r); });
      if (dot >= 0) {
        place(dot, PlanMark::Dot);
        continue;
      }
      const int star = pick_best(shares_neighbor_with_placed,
                                 [&](const Graphlet& r) { return stats.neighbor(r); });
      if (star >= 0) {
        place(star, PlanMark::Star);
        continue;
      }
    }
    // seed a (new) component with the most node-selective graphlet
    int best = -1;
    int best_sel = 0;
    for (size_t i = 0; i < plan.cover.size(); ++i) {
      if (placed[i]) continue;
      const int sel = stats.node(gl[i]);
      if (best < 0 || sel < best_sel ||
          (sel == best_sel && plan.cover[i] < plan.cover[best])) {
        best = static_cast<int>(i);
        best_sel = sel;
      }
    }
    place(best, PlanMark::Top);
  }
  return plan;
}

namespace {

std::vector<char> used_data_vertices(const Substitution& theta, int data_n) {
  std::vector<char> used(data_n, 0);
  for (int dv : theta.vertex_map) {
    if (dv >= 0) used[dv] = 1;
  }
  return used;
}

// Binds qv -> dv if injectivity and the mode's label rules allow it.
bool try_bind(Substitution& theta, std::vector<char>& used, int qv, int dv,
              MatchMode mode, const Graph& q, const Graph& d) {
  if (theta.bound(qv)) return theta.vertex_map[qv] == dv;
  if (used[dv]) return false;
  const int lq = q.label_id(qv);
  const int ld = d.label_id(dv);
  if (mode == MatchMode::Match) {
    const std::string qt = lq >= 0 ? q.label_text(lq) : std::string();
    const std::string dt = ld >= 0 ? d.label_text(ld) : std::string();
    if (qt != dt) return false;
  } else if (mode == MatchMode::Label) {
    auto it = theta.label_map.find(lq);
    if (it != theta.label_map.end()) {
      if (it->second != ld) return false;
    } else {
      auto rit = theta.label_rev.find(ld);
      if (rit != theta.label_rev.end()) return false;  // label map must stay injective
      theta.label_map.emplace(lq, ld);
      theta.label_rev.emplace(ld, lq);
    }
  }
  theta.vertex_map[qv] = dv;
  used[dv] = 1;
  return true;
}

}  // namespace

std::vector<Substitution> graphlet_matches(const Graphlet& r_q, const Graphlet& r_d,
                                           const Substitution& theta, MatchMode mode,
                                           const Graph& q, const Graph& d) {
  std::vector<Substitution> out;
  Substitution base = theta;
  if (static_cast<int>(base.vertex_map.size()) != q.num_vertices()) {
    base.vertex_map.assign(q.num_vertices(), -1);
  }
  std::vector<char> used = used_data_vertices(base, d.num_vertices());
  if (!try_bind(base, used, r_q.v, r_d.v, mode, q, d)) return out;

  // Depth-first assignment of r_q's neighbors into r_d's neighbors.
  const auto& qn = r_q.neighbors;
  const auto& dn = r_d.neighbors;

  auto cross_ok = [&](const Substitution& s, int u) {
    for (const auto& [a, b] : r_q.cross_edges) {
      if (a != u && b != u) continue;
      const int w = a == u ? b : a;
      if (s.bound(w) && !d.has_edge(s.vertex_map[u], s.vertex_map[w])) return false;
    }
    return true;
  };

  struct Frame {
    Substitution theta;
    std::vector<char> used;
    size_t next;
  };
  std::vector<Frame> frames;
  frames.push_back({std::move(base), std::move(used), 0});

  while (!frames.empty()) {
    Frame f = std::move(frames.back());
    frames.pop_back();
    if (f.next == qn.size()) {
      out.push_back(std::move(f.theta));
      continue;
    }
    const int u = qn[f.next];
    if (f.theta.bound(u)) {
      const int y = f.theta.vertex_map[u];
      if (std::binary_search(dn.begin(), dn.end(), y) && cross_ok(f.theta, u)) {
        frames.push_back({std::move(f.theta), std::move(f.used), f.next + 1});
      }
      continue;
    }
    // candidates descending so the stack pops them in ascending order
    for (auto it = dn.rbegin(); it != dn.rend(); ++it) {
      Substitution t = f.theta;
      std::vector<char> us = f.used;
      if (try_bind(t, us, u, *it, mode, q, d) && cross_ok(t, u)) {
        frames.push_back({std::move(t), std::move(us), f.next + 1});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Substitution& a, const Substitution& b) {
    return a.vertex_map < b.vertex_map;
  });
  return out;
}

namespace {

void complete_unbound(const Substitution& theta, const Graph& q, const Graph& d,
                      MatchMode mode, int qv, std::set<std::vector<int>>& results) {
  const int nq = q.num_vertices();
  while (qv < nq && theta.bound(qv)) ++qv;
  if (qv == nq) {
    results.insert(theta.vertex_map);
    return;
  }
  std::vector<char> used = used_data_vertices(theta, d.num_vertices());
  for (int dv = 0; dv < d.num_vertices(); ++dv) {
    if (used[dv]) continue;
    Substitution t = theta;
    std::vector<char> us = used;
    if (try_bind(t, us, qv, dv, mode, q, d)) {
      complete_unbound(t, q, d, mode, qv + 1, results);
    }
  }
}

}  // namespace

std::vector<std::vector<int>> find_solutions(const QueryPlan& plan, const Graph& q,
                                             const Graph& d, const Indices& indices,
                                             MatchMode mode) {
  std::vector<Graphlet> qg = make_graphlets(q);
  std::set<std::vector<int>> results;

  auto dfs = [&](auto&& self, size_t k, const Substitution& theta) -> void {
    if (k == plan.entries.size()) {
      complete_unbound(theta, q, d, mode, 0, results);
      return;
    }
    const auto& entry = plan.entries[k];
    const Graphlet& rq = qg[entry.vertex];
    std::vector<int> candidates;
    switch (entry.mark) {
      case PlanMark::Top:
        for (const Graphlet& rd : indices.hash.all()) {
          if (rd.neighbor_count() >= rq.neighbor_count() &&
              rd.cross_edge_count() >= rq.cross_edge_count()) {
            candidates.push_back(rd.v);
          }
        }
        break;
      case PlanMark::Dot: {
        const int bound_to = theta.vertex_map[entry.vertex];
        if (bound_to < 0) return;  // plan invariant violated; no matches this way
        candidates.push_back(bound_to);
        break;
      }
      case PlanMark::Star: {
        std::vector<int> mapped;
        for (int u : q.neighbors(entry.vertex)) {
          if (theta.bound(u)) mapped.push_back(theta.vertex_map[u]);
        }
        std::sort(mapped.begin(), mapped.end());
        mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
        candidates = indices.set.lookup(mapped, rq.neighbor_count());
        break;
      }
    }
    for (int x : candidates) {
      for (const Substitution& ext :
           graphlet_matches(rq, indices.hash.get(x), theta, mode, q, d)) {
        self(self, k + 1, ext);
      }
    }
  };
  dfs(dfs, 0, Substitution(q.num_vertices()));

  return {results.begin(), results.end()};
}

std::vector<std::vector<int>> brute_force_matches(const Graph& q, const Graph& d,
                                                  MatchMode mode) {
  if (q.num_vertices() > 8) throw std::invalid_argument("matching oracle: query over 8 vertices");
  if (d.num_vertices() > 14) throw std::invalid_argument("matching oracle: data over 14 vertices");

  std::vector<std::vector<int>> out;
  auto dfs = [&](auto&& self, int qv, Substitution theta, std::vector<char> used) -> void {
    if (qv == q.num_vertices()) {
      out.push_back(theta.vertex_map);
      return;
    }
    for (int dv = 0; dv < d.num_vertices(); ++dv) {
      if (used[dv]) continue;
      Substitution t = theta;
      std::vector<char> us = used;
      if (!try_bind(t, us, qv, dv, mode, q, d)) continue;
      bool edges_ok = true;
      for (int u : q.neighbors(qv)) {
        if (u < qv && !d.has_edge(t.vertex_map[u], dv)) {
          edges_ok = false;
          break;
        }
      }
      if (edges_ok) self(self, qv + 1, std::move(t), std::move(us));
    }
  };
  dfs(dfs, 0, Substitution(q.num_vertices()), std::vector<char>(d.num_vertices(), 0));
  std::sort(out.begin(), out.end());
  return out;
}

QueryPlan choose_plan(const Graph& q, const Graph& d, MatchMode mode, int oracle_limit) {
  SelectivityProvider stats(d, mode);
  std::vector<std::vector<int>> covers;
  if (q.num_vertices() <= oracle_limit) {
    covers = brute_force_all_mhc(q, oracle_limit);
  } else {
    IpModel model = build_ip(q);
    covers.push_back(solve_exact(model).cover);
  }
  QueryPlan best;
  double best_score = 0.0;
  bool first = true;
  for (const auto& cover : covers) {
    QueryPlan plan = order_graphlets(q, cover, stats, mode);
    double score = 1.0;
    for (const auto& e : plan.entries) {
      const Graphlet g = make_graphlet(q, e.vertex);
      switch (e.mark) {
        case PlanMark::Top: score *= std::max(1, stats.node(g)); break;
        case PlanMark::Dot: break;  // a bound vertex fetches one graphlet
        case PlanMark::Star: score *= std::max(1, stats.neighbor(g)); break;
      }
    }
    if (first || score < best_score) {
      best = std::move(plan);
      best_score = score;
      first = false;
    }
  }
  return best;
}

}  // namespace mhc
