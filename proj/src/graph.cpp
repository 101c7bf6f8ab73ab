#include "fermenc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>

namespace fermenc {

namespace {

int parse_int(std::string_view s, const std::string& context) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end) throw GraphError(GraphErrorKind::malformed, context + ": not an integer '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

LocalityGraph::LocalityGraph(std::size_t n_vertices, std::vector<Edge> edges)
    : adjacency_(n_vertices), incident_(n_vertices) {
  const auto n = static_cast<Vertex>(n_vertices);
  if (n_vertices == 0) throw GraphError(GraphErrorKind::malformed, "graph needs at least one vertex");
  for (auto [a, b] : edges) {
    if (a < 1 || b < 1 || a > n || b > n)
      throw GraphError(GraphErrorKind::vertex_out_of_range,
                       "edge (" + std::to_string(a) + ", " + std::to_string(b) + ") outside 1.." + std::to_string(n));
    if (a == b) throw GraphError(GraphErrorKind::self_loop, "self-loop at vertex " + std::to_string(a));
    const Edge e = make_edge(a, b);
    if (has_edge(a, b))
      throw GraphError(GraphErrorKind::duplicate_edge,
                       "duplicate edge (" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")");
    adjacency_[static_cast<std::size_t>(a - 1)].push_back(b);
    adjacency_[static_cast<std::size_t>(b - 1)].push_back(a);
    incident_[static_cast<std::size_t>(a - 1)].push_back(edges_.size());
    incident_[static_cast<std::size_t>(b - 1)].push_back(edges_.size());
    edges_.push_back(e);
  }
  for (std::size_t v = 0; v < n_vertices; ++v) {
    std::vector<std::size_t> order(adjacency_[v].size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return adjacency_[v][x] < adjacency_[v][y]; });
    std::vector<Vertex> adj;
    std::vector<std::size_t> inc;
    for (auto i : order) {
      adj.push_back(adjacency_[v][i]);
      inc.push_back(incident_[v][i]);
    }
    adjacency_[v] = std::move(adj);
    incident_[v] = std::move(inc);
  }
  const auto dist = bfs_distance(*this, {1});
  for (std::size_t v = 0; v < n_vertices; ++v)
    if (dist[v] < 0)
      throw GraphError(GraphErrorKind::disconnected, "graph is disconnected (vertex " + std::to_string(v + 1) +
                                                         " unreachable from vertex 1)");
}

bool LocalityGraph::has_edge(Vertex a, Vertex b) const { return edge_index(a, b) != npos; }

std::size_t LocalityGraph::edge_index(Vertex a, Vertex b) const {
  if (a < 1 || a > static_cast<Vertex>(adjacency_.size())) return npos;
  const auto& adj = adjacency_[static_cast<std::size_t>(a - 1)];
  for (std::size_t i = 0; i < adj.size(); ++i)
    if (adj[i] == b) return incident_[static_cast<std::size_t>(a - 1)][i];
  return npos;
}

LocalityGraph LocalityGraph::without_edge(Vertex a, Vertex b) const {
  const Edge drop = make_edge(a, b);
  std::vector<Edge> kept;
  for (const auto& e : edges_)
    if (e != drop) kept.push_back(e);
  return LocalityGraph(n_vertices(), std::move(kept));
}

LocalityGraph parse_graph(std::string_view text) {
  std::vector<Edge> edges;
  long n = -1;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    const std::string ctx = "line " + std::to_string(line_no);
    if (n < 0) {
      if (tokens.size() != 1) throw GraphError(GraphErrorKind::malformed, ctx + ": expected the vertex count");
      n = parse_int(tokens[0], ctx);
      if (n < 1) throw GraphError(GraphErrorKind::malformed, ctx + ": vertex count must be positive");
      continue;
    }
    if (tokens.size() != 2) throw GraphError(GraphErrorKind::malformed, ctx + ": expected 'j k'");
    edges.emplace_back(parse_int(tokens[0], ctx), parse_int(tokens[1], ctx));
  }
  if (n < 0) throw GraphError(GraphErrorKind::malformed, "empty graph description");
  return LocalityGraph(static_cast<std::size_t>(n), std::move(edges));
}

std::string format_graph(const LocalityGraph& g) {
  std::ostringstream os;
  os << g.n_vertices() << '\n';
  for (auto [a, b] : g.edges()) os << a << ' ' << b << '\n';
  return os.str();
}

namespace {

std::pair<int, int> parse_pair(std::string_view body, char sep, const std::string& spec) {
  const auto x = body.find(sep);
  if (x == std::string_view::npos) throw GraphError(GraphErrorKind::malformed, "expected AxB in '" + spec + "'");
  return {parse_int(body.substr(0, x), spec), parse_int(body.substr(x + 1), spec)};
}

LocalityGraph lattice(int rows, int cols) {
  if (rows < 1 || cols < 1) throw GraphError(GraphErrorKind::malformed, "lattice sides must be positive");
  std::vector<Edge> edges;
  auto id = [cols](int r, int c) { return r * cols + c + 1; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  return LocalityGraph(static_cast<std::size_t>(rows * cols), std::move(edges));
}

}  // namespace

LocalityGraph generate_graph(std::string_view spec_view) {
  const std::string spec(spec_view);
  const auto colon = spec_view.find(':');
  if (colon == std::string_view::npos) throw GraphError(GraphErrorKind::unknown_generator, "not a generator: '" + spec + "'");
  const std::string_view kind = spec_view.substr(0, colon);
  const std::string_view body = spec_view.substr(colon + 1);
  std::vector<Edge> edges;
  if (kind == "path" || kind == "ring") {
    const int n = parse_int(body, spec);
    if (n < 1 || (kind == "ring" && n < 3)) throw GraphError(GraphErrorKind::malformed, "bad size in '" + spec + "'");
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    if (kind == "ring") edges.emplace_back(1, n);
    return LocalityGraph(static_cast<std::size_t>(n), std::move(edges));
  }
  if (kind == "star") {
    const int m = parse_int(body, spec);
    if (m < 1) throw GraphError(GraphErrorKind::malformed, "bad size in '" + spec + "'");
    for (int v = 2; v <= m + 1; ++v) edges.emplace_back(1, v);
    return LocalityGraph(static_cast<std::size_t>(m + 1), std::move(edges));
  }
  if (kind == "grid") {
    const auto [rows, cols] = parse_pair(body, 'x', spec);
    return lattice(rows, cols);
  }
  if (kind == "ladder") {
    // counted in edges: W edges across, L edges along
    const auto [width, length] = parse_pair(body, 'x', spec);
    if (width < 1 || length < 1) throw GraphError(GraphErrorKind::malformed, "ladder sides must be positive");
    return lattice(width + 1, length + 1);
  }
  if (kind == "theta") {
    std::vector<int> arms;
    std::size_t p = 0;
    while (p <= body.size()) {
      std::size_t c = body.find(',', p);
      if (c == std::string_view::npos) c = body.size();
      arms.push_back(parse_int(body.substr(p, c - p), spec));
      p = c + 1;
    }
    if (arms.size() != 3) throw GraphError(GraphErrorKind::malformed, "theta needs three arm lengths");
    int short_arms = 0;
    for (int a : arms) {
      if (a < 1) throw GraphError(GraphErrorKind::malformed, "arm lengths must be positive");
      if (a == 1) ++short_arms;
    }
    if (short_arms > 1) throw GraphError(GraphErrorKind::duplicate_edge, "two arms of length 1 would duplicate an edge");
    Vertex next = 3;
    for (int a : arms) {
      Vertex prev = 1;
      for (int t = 1; t < a; ++t) {
        edges.emplace_back(prev, next);
        prev = next++;
      }
      edges.emplace_back(prev, 2);
    }
    return LocalityGraph(static_cast<std::size_t>(next - 1), std::move(edges));
  }
  throw GraphError(GraphErrorKind::unknown_generator, "unknown generator '" + std::string(kind) + "'");
}

LocalityGraph load_graph(const std::string& source) {
  std::string s = source;
  if (s.rfind("gen:", 0) == 0) return generate_graph(s.substr(4));
  for (const char* kind : {"path:", "ring:", "grid:", "ladder:", "theta:", "star:"})
    if (s.rfind(kind, 0) == 0) return generate_graph(s);
  std::ifstream in(s);
  if (!in) throw GraphError(GraphErrorKind::malformed, "cannot open graph file '" + s + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

bool is_tree(const LocalityGraph& g) { return g.n_edges() + 1 == g.n_vertices(); }

std::vector<int> bfs_distance(const LocalityGraph& g, const std::vector<Vertex>& sources) {
  std::vector<int> dist(g.n_vertices(), -1);
  std::queue<Vertex> q;
  for (Vertex s : sources) {
    if (dist[static_cast<std::size_t>(s - 1)] != 0) {
      dist[static_cast<std::size_t>(s - 1)] = 0;
      q.push(s);
    }
  }
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u)) {
      auto& dw = dist[static_cast<std::size_t>(w - 1)];
      if (dw < 0) {
        dw = dist[static_cast<std::size_t>(u - 1)] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

std::vector<std::vector<Vertex>> cycle_basis(const LocalityGraph& g) {
  const std::size_t n = g.n_vertices();
  std::vector<Vertex> parent(n, 0);
  std::vector<int> depth(n, -1);
  std::vector<bool> tree_edge(g.n_edges(), false);
  std::queue<Vertex> q;
  depth[0] = 0;
  q.push(1);
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u)) {
      if (depth[static_cast<std::size_t>(w - 1)] < 0) {
        depth[static_cast<std::size_t>(w - 1)] = depth[static_cast<std::size_t>(u - 1)] + 1;
        parent[static_cast<std::size_t>(w - 1)] = u;
        tree_edge[g.edge_index(u, w)] = true;
        q.push(w);
      }
    }
  }
  std::vector<std::vector<Vertex>> cycles;
  for (std::size_t e = 0; e < g.n_edges(); ++e) {
    if (tree_edge[e]) continue;
    auto [a, b] = g.edges()[e];
    // a -> ... -> lca -> ... -> b, closed by the non-tree edge b -> a
    std::vector<Vertex> up_a{a};
    std::vector<Vertex> up_b{b};
    Vertex x = a;
    Vertex y = b;
    while (x != y) {
      if (depth[static_cast<std::size_t>(x - 1)] >= depth[static_cast<std::size_t>(y - 1)]) {
        x = parent[static_cast<std::size_t>(x - 1)];
        up_a.push_back(x);
      } else {
        y = parent[static_cast<std::size_t>(y - 1)];
        up_b.push_back(y);
      }
    }
    up_b.pop_back();  // lca already in up_a
    std::vector<Vertex> cycle = up_a;
    cycle.insert(cycle.end(), up_b.rbegin(), up_b.rend());
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace fermenc
