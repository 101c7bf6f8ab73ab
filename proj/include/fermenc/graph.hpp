#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fermenc/errors.hpp"
#include "fermenc/pauli.hpp"

namespace fermenc {

/// Undirected edge with first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Why a graph description was rejected.
enum class GraphErrorKind { malformed, vertex_out_of_range, self_loop, duplicate_edge, disconnected, unknown_generator };

class GraphError : public ParseError {
 public:
  GraphError(GraphErrorKind kind, const std::string& what) : ParseError(what), kind_(kind) {}
  GraphErrorKind kind() const { return kind_; }

 private:
  GraphErrorKind kind_;
};

/// Connected simple undirected graph on vertices 1..N.
class LocalityGraph {
 public:
  LocalityGraph() = default;
  /// Validates: no self-loops, no duplicates, connected.
  LocalityGraph(std::size_t n_vertices, std::vector<Edge> edges);

  std::size_t n_vertices() const { return adjacency_.size(); }
  std::size_t n_edges() const { return edges_.size(); }
  /// Edges normalized to (low, high) in insertion order.
  const std::vector<Edge>& edges() const { return edges_; }
  /// Ascending neighbour list.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v - 1)); }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool has_edge(Vertex a, Vertex b) const;
  /// Position of the edge in edges(), or npos.
  std::size_t edge_index(Vertex a, Vertex b) const;

  /// The same vertices without edge (a, b); throws GraphError if that disconnects.
  LocalityGraph without_edge(Vertex a, Vertex b) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<std::size_t>> incident_;  // edge indices, aligned with adjacency_
};

/// Edge-list text: first line N, then "j k" per line; '#' starts a comment.
LocalityGraph parse_graph(std::string_view text);

/// Graph file text for g (round-trips through parse_graph).
std::string format_graph(const LocalityGraph& g);

/// Built-in families: path:N, ring:N, grid:RxC, ladder:WxL, theta:a,b,c, star:M.
///
/// grid:RxC is R rows by C columns of vertices, numbered row-major from 1.
/// ladder:WxL is a strip W edges wide and L edges long, i.e. the
/// (W+1) x (L+1) lattice. theta:a,b,c joins vertex 1 (branch point)
/// and vertex 2 by arms with a, b and c edges.
LocalityGraph generate_graph(std::string_view spec);

/// Reads a generator spec ("ring:6", optionally prefixed "gen:") or a file path.
LocalityGraph load_graph(const std::string& source);

/// |E| == |V| - 1.
bool is_tree(const LocalityGraph& g);

/// Fundamental cycles of the BFS spanning tree rooted at vertex 1, one per
/// non-tree edge in edge order. Each cycle lists its vertices once; the
/// closing edge back to the first vertex is implied.
std::vector<std::vector<Vertex>> cycle_basis(const LocalityGraph& g);

/// Multi-source BFS; result[v-1] is the distance of v to the nearest source.
std::vector<int> bfs_distance(const LocalityGraph& g, const std::vector<Vertex>& sources);

}  // namespace fermenc
