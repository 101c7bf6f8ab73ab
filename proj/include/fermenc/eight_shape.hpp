#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fermenc/graph.hpp"

namespace fermenc {

/// Three internally disjoint paths between two branch vertices. Each path is
/// a vertex sequence from `start` to `end`; path t has paths[t].size() - 1
/// edges.
struct EightShape {
  Vertex start = 0;
  Vertex end = 0;
  std::array<std::vector<Vertex>, 3> paths;

  std::size_t length(std::size_t t) const { return paths[t].size() - 1; }
  std::size_t min_length() const;
  /// The same subgraph with the roles of start and end exchanged.
  EightShape reversed() const;
};

/// Pairwise edge-disjoint, internally vertex-disjoint, simple, all edges in g.
bool is_valid_shape(const LocalityGraph& g, const EightShape& shape);

/// Witness that `shape` (oriented so that shape.start carries the prefixes)
/// has size `d` at prefix length `D`.
struct EightSizeCertificate {
  EightShape shape;
  int prefix_length = 0;  // D
  int size = 0;           // d
  std::array<std::vector<Edge>, 3> prefixes;  // I_D, J_D, K_D
  std::vector<Edge> remainder;                // R_D
};

/// Split of an oriented shape into its first D edges per path and the rest.
EightSizeCertificate split_shape(const EightShape& shape, int prefix_length);

/// True when no vertex of g is within distance d of the remainder and within
/// distance d of two or more prefixes. Distance to a prefix is the distance
/// to its nearest vertex; distance to the remainder is measured to its
/// vertices other than the three junctions where the prefixes end.
bool size_condition_holds(const LocalityGraph& g, const EightShape& shape, int prefix_length, int d);

/// Largest d for which size_condition_holds at this D, or nullopt.
std::optional<int> size_at_prefix(const LocalityGraph& g, const EightShape& shape, int prefix_length);

/// Size of the shape maximized over D in 1..min(n,m,l)-1 and over which of
/// the two branch vertices plays the start. nullopt means no D admits even
/// d = 0, which is distinct from size 0.
std::optional<EightSizeCertificate> eight_size(const LocalityGraph& g, const EightShape& shape);

/// Checks a certificate from scratch: condition holds at its d, and no D of
/// either orientation reaches d + 1.
bool revalidate(const LocalityGraph& g, const EightSizeCertificate& cert);

struct ShapeEnumeration {
  std::vector<EightShape> shapes;
  bool complete = true;
};

/// All shapes over unordered branch pairs {s < e}, each listed once up to
/// permutation of its paths. `budget` bounds enumerated paths plus triples.
ShapeEnumeration find_eight_shapes(const LocalityGraph& g, std::size_t budget = 2'000'000);

struct PrefixSearchOptions {
  /// Only prefixes whose t-th vertex lies at distance t from the start.
  bool geodesic_only = true;
  /// Prefix lengths tried are max(1, 2d) .. max(1, 2d) + slack.
  int prefix_slack = 2;
  /// Work units (prefix pairs plus prefix triples examined) before giving up.
  std::size_t budget = 4'000'000;
};

struct PrefixSearchResult {
  std::optional<EightShape> shape;
  bool complete = true;
};

/// Looks for a shape of size >= d by choosing the three length-D prefixes at
/// a branch vertex first and then completing the remainder with three
/// vertex-disjoint paths (unit-capacity max flow) through the vertices that
/// keep the size condition. Exhaustive over the prefix family it searches.
PrefixSearchResult find_shape_with_size(const LocalityGraph& g, int d, const PrefixSearchOptions& opts = {});

struct EightSearchOptions {
  std::size_t budget = 2'000'000;
  /// Graphs up to this many vertices are enumerated shape by shape.
  std::size_t exact_vertex_limit = 14;
  PrefixSearchOptions prefix;
};

struct MaxEightSize {
  std::optional<int> size;
  std::optional<EightSizeCertificate> certificate;
  /// False when the value is only a lower bound (heuristic mode or budget hit).
  bool exact = true;
  std::string method;  // "exhaustive" or "prefix-search"
};

MaxEightSize max_eight_size(const LocalityGraph& g, const EightSearchOptions& opts = {});

}  // namespace fermenc
