#include "fermenc/analysis.hpp"

#include <algorithm>
#include <functional>

namespace fermenc {

std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::tree:
      return "tree";
    case GraphClass::separate_cycles:
      return "single-or-disjoint-cycles";
    case GraphClass::overlapping_cycles:
      return "overlapping-cycles";
  }
  return "?";
}

bool has_eight_shape(const LocalityGraph& g) {
  // Hopcroft-Tarjan biconnected components over an edge stack
  const std::size_t n = g.n_vertices();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> stack;
  int time = 0;
  bool found = false;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
    const auto iu = static_cast<std::size_t>(u - 1);
    disc[iu] = low[iu] = time++;
    for (Vertex w : g.neighbors(u)) {
      const auto iw = static_cast<std::size_t>(w - 1);
      if (w == parent) continue;
      if (disc[iw] < 0) {
        stack.push_back(make_edge(u, w));
        dfs(w, u);
        low[iu] = std::min(low[iu], low[iw]);
        if (low[iw] >= disc[iu]) {
          // pop one component
          std::vector<Vertex> verts;
          std::size_t n_edges = 0;
          const Edge top = make_edge(u, w);
          for (;;) {
            const Edge e = stack.back();
            stack.pop_back();
            ++n_edges;
            verts.push_back(e.first);
            verts.push_back(e.second);
            if (e == top) break;
          }
          std::sort(verts.begin(), verts.end());
          verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
          if (n_edges > verts.size()) found = true;
        }
      } else if (disc[iw] < disc[iu]) {
        stack.push_back(make_edge(u, w));
        low[iu] = std::min(low[iu], disc[iw]);
      }
    }
  };
  if (n > 0) dfs(1, 0);
  return found;
}

AnalysisReport analyze(const LocalityGraph& g, const EightSearchOptions& opts) {
  AnalysisReport r;
  if (is_tree(g)) {
    r.graph_class = GraphClass::tree;
  } else if (has_eight_shape(g)) {
    r.graph_class = GraphClass::overlapping_cycles;
  } else {
    r.graph_class = GraphClass::separate_cycles;
  }
  r.local_encoding_possible = r.graph_class == GraphClass::tree;
  r.vacuum_entangled = r.graph_class == GraphClass::overlapping_cycles;
  if (r.graph_class == GraphClass::overlapping_cycles) {
    auto m = max_eight_size(g, opts);
    r.max_eight_size = m.size;
    r.size_exact = m.exact;
    r.size_method = m.method;
    r.certificate = std::move(m.certificate);
  } else {
    r.size_method = "no 8-shape";
  }
  r.depth_lower_bound = r.max_eight_size;
  return r;
}

}  // namespace fermenc
