#include "mhc/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace mhc {

namespace {

bool numeric_token(const std::string& t) {
  return !t.empty() && std::all_of(t.begin(), t.end(),
                                   [](unsigned char c) { return std::isdigit(c); });
}

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  int n = -1, m = -1;
  bool labeled = false;
  int lineno = 0;

  auto fail = [&](const std::string& what) -> void {
    throw ParseError("graph line " + std::to_string(lineno) + ": " + what);
  };

  // header
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag != "graph") fail("expected 'graph <n> <m> [labeled]'");
    if (!(ls >> n >> m) || n < 0 || m < 0) fail("bad vertex/edge counts");
    std::string flag;
    if (ls >> flag) {
      if (flag != "labeled") fail("unknown header flag '" + flag + "'");
      labeled = true;
    }
    break;
  }
  if (n < 0) throw ParseError("graph: missing header");

  std::unordered_map<std::string, int> intern;
  std::vector<std::string> names;
  bool symbolic = false;
  bool any_vertex_seen = false;

  auto vertex_id = [&](const std::string& token) -> int {
    if (!any_vertex_seen) {
      symbolic = !numeric_token(token);
      any_vertex_seen = true;
    }
    if (!symbolic) {
      if (!numeric_token(token)) fail("mixed numeric ids and names");
      const long v = std::stol(token);
      if (v < 0 || v >= n) fail("vertex id " + token + " out of range");
      return static_cast<int>(v);
    }
    auto [it, inserted] = intern.emplace(token, static_cast<int>(names.size()));
    if (inserted) {
      if (static_cast<int>(names.size()) == n) fail("more than " + std::to_string(n) + " distinct vertices");
      names.push_back(token);
    }
    return it->second;
  };

  std::vector<Edge> edges;
  std::vector<std::string> labels(n);
  std::vector<char> label_seen(n, 0);

  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "v") {
      std::string vtok, label;
      if (!(ls >> vtok)) fail("expected 'v <vertex> [label]'");
      const int v = vertex_id(vtok);
      if (ls >> label) {
        if (!labeled) fail("label line in unlabeled graph");
        labels[v] = label;
        label_seen[v] = 1;
      }
    } else if (tag == "e") {
      std::string atok, btok;
      if (!(ls >> atok >> btok)) fail("expected 'e <a> <b>'");
      const int a = vertex_id(atok);
      const int b = vertex_id(btok);
      if (a == b) fail("self-loop on '" + atok + "'");
      edges.emplace_back(a, b);
    } else {
      fail("unknown record '" + tag + "'");
    }
  }
  if (static_cast<int>(edges.size()) != m) {
    throw ParseError("graph: header promises " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  if (labeled) {
    for (int v = 0; v < n; ++v) {
      if (!label_seen[v]) {
        throw ParseError("graph: vertex " + std::to_string(v) + " has no label");
      }
    }
  }

  Graph g = labeled ? Graph(n, std::move(edges), std::move(labels))
                    : Graph(n, std::move(edges));
  if (symbolic) {
    while (static_cast<int>(names.size()) < n) {
      names.push_back(std::to_string(names.size()));
    }
    g.set_vertex_names(std::move(names));
  }
  return g;
}

Graph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

void emit_graph(const Graph& g, std::ostream& out) {
  out << "graph " << g.num_vertices() << " " << g.num_edges();
  if (g.labeled()) out << " labeled";
  out << "\n";
  if (g.labeled()) {
    for (int v = 0; v < g.num_vertices(); ++v) {
      out << "v " << g.vertex_name(v) << " " << g.label_text(g.label_id(v)) << "\n";
    }
  } else if (g.has_names()) {
    // declaration lines pin the name-to-id assignment across round trips
    for (int v = 0; v < g.num_vertices(); ++v) {
      out << "v " << g.vertex_name(v) << "\n";
    }
  }
  for (const auto& [a, b] : g.edges()) {
    out << "e " << g.vertex_name(a) << " " << g.vertex_name(b) << "\n";
  }
}

std::string emit_graph_string(const Graph& g) {
  std::ostringstream os;
  emit_graph(g, os);
  return os.str();
}

}  // namespace mhc
