#pragma once

#include <iosfwd>
#include <string>

#include "mhc/graph.hpp"

namespace mhc {

/// Plain-text graph format:
///   # comment
///   graph <n> <m> [labeled]
///   v <vertex> [label]        (label required per vertex when labeled;
///                              bare form declares a vertex/its order)
///   e <a> <b>                 (exactly m lines)
/// Vertex tokens are either all numeric ids in [0,n) or all symbolic names
/// (u1, v2, ...), interned in first-appearance order and preserved on
/// output. Emission is canonical: v lines by id, edges in lexicographic
/// id order.
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);

void emit_graph(const Graph& g, std::ostream& out);
std::string emit_graph_string(const Graph& g);

}  // namespace mhc
