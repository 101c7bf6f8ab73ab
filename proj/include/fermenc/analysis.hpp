#pragma once

#include <optional>
#include <string>

#include "fermenc/eight_shape.hpp"
#include "fermenc/graph.hpp"

namespace fermenc {

enum class GraphClass { tree, separate_cycles, overlapping_cycles };

/// "tree", "single-or-disjoint-cycles", "overlapping-cycles".
std::string to_string(GraphClass c);

/// True when some biconnected component has more edges than vertices,
/// which is exactly when g contains an 8-shaped subgraph.
bool has_eight_shape(const LocalityGraph& g);

struct AnalysisReport {
  GraphClass graph_class = GraphClass::tree;
  bool local_encoding_possible = true;
  bool block_encoding_possible = true;
  bool vacuum_entangled = false;  // otherwise a product state
  std::optional<int> max_eight_size;
  std::optional<int> depth_lower_bound;
  bool size_exact = true;
  std::string size_method;
  std::optional<EightSizeCertificate> certificate;
};

AnalysisReport analyze(const LocalityGraph& g, const EightSearchOptions& opts = {});

}  // namespace fermenc
