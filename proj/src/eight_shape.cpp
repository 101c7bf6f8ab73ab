#include "fermenc/eight_shape.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

#include "fermenc/bitvector.hpp"

namespace fermenc {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v - 1); }

int second_smallest(int a, int b, int c) {
  // median of three
  return std::max(std::min(a, b), std::min(std::max(a, b), c));
}

}  // namespace

std::size_t EightShape::min_length() const { return std::min({length(0), length(1), length(2)}); }

EightShape EightShape::reversed() const {
  EightShape r;
  r.start = end;
  r.end = start;
  for (std::size_t t = 0; t < 3; ++t) r.paths[t].assign(paths[t].rbegin(), paths[t].rend());
  return r;
}

bool is_valid_shape(const LocalityGraph& g, const EightShape& shape) {
  if (shape.start == shape.end) return false;
  std::vector<int> seen(g.n_vertices(), 0);
  std::vector<Edge> edges;
  for (const auto& p : shape.paths) {
    if (p.size() < 2 || p.front() != shape.start || p.back() != shape.end) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (!g.has_edge(p[i], p[i + 1])) return false;
      edges.push_back(make_edge(p[i], p[i + 1]));
    }
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (p[i] < 1 || p[i] > static_cast<Vertex>(g.n_vertices())) return false;
      if (p[i] == shape.start || p[i] == shape.end) return false;
      if (seen[idx(p[i])]++) return false;
    }
  }
  std::sort(edges.begin(), edges.end());
  return std::adjacent_find(edges.begin(), edges.end()) == edges.end();
}

EightSizeCertificate split_shape(const EightShape& shape, int prefix_length) {
  EightSizeCertificate c;
  c.shape = shape;
  c.prefix_length = prefix_length;
  const auto D = static_cast<std::size_t>(prefix_length);
  for (std::size_t t = 0; t < 3; ++t) {
    const auto& p = shape.paths[t];
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      const Edge e = make_edge(p[i], p[i + 1]);
      if (i < D) {
        c.prefixes[t].push_back(e);
      } else {
        c.remainder.push_back(e);
      }
    }
  }
  return c;
}

namespace {

struct SplitDistances {
  std::vector<int> remainder;
  std::array<std::vector<int>, 3> prefix;
};

SplitDistances split_distances(const LocalityGraph& g, const EightShape& shape, std::size_t D) {
  SplitDistances out;
  std::vector<Vertex> rest;
  for (std::size_t t = 0; t < 3; ++t) {
    const auto& p = shape.paths[t];
    out.prefix[t] = bfs_distance(g, std::vector<Vertex>(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(D + 1)));
    // junction p[D] belongs to the prefix; the remainder starts after it
    rest.insert(rest.end(), p.begin() + static_cast<std::ptrdiff_t>(D + 1), p.end());
  }
  out.remainder = bfs_distance(g, rest);
  return out;
}

bool prefix_in_range(const EightShape& shape, int D) {
  return D >= 1 && static_cast<std::size_t>(D) < shape.min_length();
}

}  // namespace

bool size_condition_holds(const LocalityGraph& g, const EightShape& shape, int prefix_length, int d) {
  if (!prefix_in_range(shape, prefix_length) || d < 0) return false;
  const auto s = split_distances(g, shape, static_cast<std::size_t>(prefix_length));
  for (std::size_t v = 0; v < g.n_vertices(); ++v) {
    if (s.remainder[v] > d) continue;
    int near = 0;
    for (std::size_t t = 0; t < 3; ++t) near += s.prefix[t][v] <= d ? 1 : 0;
    if (near >= 2) return false;
  }
  return true;
}

std::optional<int> size_at_prefix(const LocalityGraph& g, const EightShape& shape, int prefix_length) {
  if (!prefix_in_range(shape, prefix_length)) return std::nullopt;
  const auto s = split_distances(g, shape, static_cast<std::size_t>(prefix_length));
  // Vertex v is a violation for every d >= max(dist to R, second-nearest prefix).
  int first_bad = std::numeric_limits<int>::max();
  for (std::size_t v = 0; v < g.n_vertices(); ++v) {
    const int bad = std::max(s.remainder[v], second_smallest(s.prefix[0][v], s.prefix[1][v], s.prefix[2][v]));
    first_bad = std::min(first_bad, bad);
  }
  if (first_bad <= 0) return std::nullopt;
  return first_bad - 1;
}

std::optional<EightSizeCertificate> eight_size(const LocalityGraph& g, const EightShape& shape) {
  if (!is_valid_shape(g, shape)) throw PreconditionError("not a valid 8-shaped subgraph of this graph");
  std::optional<EightSizeCertificate> best;
  for (const EightShape& oriented : {shape, shape.reversed()}) {
    const int max_D = static_cast<int>(oriented.min_length()) - 1;
    for (int D = 1; D <= max_D; ++D) {
      const auto d = size_at_prefix(g, oriented, D);
      if (d && (!best || *d > best->size)) {
        best = split_shape(oriented, D);
        best->size = *d;
      }
    }
  }
  return best;
}

bool revalidate(const LocalityGraph& g, const EightSizeCertificate& cert) {
  if (!is_valid_shape(g, cert.shape)) return false;
  if (!size_condition_holds(g, cert.shape, cert.prefix_length, cert.size)) return false;
  const auto expected = split_shape(cert.shape, cert.prefix_length);
  if (expected.prefixes != cert.prefixes || expected.remainder != cert.remainder) return false;
  for (const EightShape& oriented : {cert.shape, cert.shape.reversed()}) {
    const int max_D = static_cast<int>(oriented.min_length()) - 1;
    for (int D = 1; D <= max_D; ++D)
      if (size_condition_holds(g, oriented, D, cert.size + 1)) return false;
  }
  return true;
}

namespace {

/// Streams every shape over pairs s < e; returns false if the budget ran out.
bool for_each_shape(const LocalityGraph& g, std::size_t budget,
                    const std::function<void(const EightShape&)>& visit) {
  std::size_t spent = 0;
  const auto n = static_cast<Vertex>(g.n_vertices());
  for (Vertex s = 1; s <= n; ++s) {
    if (g.degree(s) < 3) continue;
    for (Vertex e = s + 1; e <= n; ++e) {
      if (g.degree(e) < 3) continue;
      std::vector<std::vector<Vertex>> paths;
      std::vector<BitVector> interiors;
      std::vector<Vertex> stack{s};
      std::vector<bool> on(g.n_vertices(), false);
      on[idx(s)] = true;
      bool out_of_budget = false;
      std::function<void(Vertex)> dfs = [&](Vertex u) {
        if (out_of_budget) return;
        for (Vertex w : g.neighbors(u)) {
          if (on[idx(w)]) continue;
          if (w == e) {
            if (++spent > budget) {
              out_of_budget = true;
              return;
            }
            paths.push_back(stack);
            paths.back().push_back(e);
            continue;
          }
          on[idx(w)] = true;
          stack.push_back(w);
          dfs(w);
          stack.pop_back();
          on[idx(w)] = false;
        }
      };
      dfs(s);
      if (out_of_budget) return false;
      for (const auto& p : paths) {
        BitVector b(g.n_vertices());
        for (std::size_t i = 1; i + 1 < p.size(); ++i) b.set(idx(p[i]));
        interiors.push_back(std::move(b));
      }
      for (std::size_t a = 0; a < paths.size(); ++a)
        for (std::size_t b = a + 1; b < paths.size(); ++b) {
          if (and_count(interiors[a], interiors[b])) continue;
          for (std::size_t c = b + 1; c < paths.size(); ++c) {
            if (and_count(interiors[a], interiors[c]) || and_count(interiors[b], interiors[c])) continue;
            if (++spent > budget) return false;
            EightShape shape;
            shape.start = s;
            shape.end = e;
            shape.paths = {paths[a], paths[b], paths[c]};
            visit(shape);
          }
        }
    }
  }
  return true;
}

}  // namespace

ShapeEnumeration find_eight_shapes(const LocalityGraph& g, std::size_t budget) {
  ShapeEnumeration out;
  out.complete = for_each_shape(g, budget, [&](const EightShape& s) { out.shapes.push_back(s); });
  return out;
}

namespace {

struct Prefix {
  std::vector<Vertex> verts;  // start .. tip
  BitVector body;             // every vertex except the start
  std::vector<int> dist;      // distance of each vertex to the prefix
  BitVector near;             // vertices within the target size of the prefix
  Vertex tip() const { return verts.back(); }
};

/// Three vertex-disjoint paths from the tips to a common end through
/// `allowed`, as a unit-capacity flow on the vertex-split graph.
class TripodFinder {
 public:
  explicit TripodFinder(std::size_t n) : n_(n), head_(2 * n + 1, -1) {}

  void add_arc(int from, int to) {
    arcs_.push_back({to, head_[static_cast<std::size_t>(from)], 1});
    head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[static_cast<std::size_t>(to)], 0});
    head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
  }

  static int in(Vertex v) { return 2 * static_cast<int>(v - 1); }
  static int out(Vertex v) { return 2 * static_cast<int>(v - 1) + 1; }
  int source() const { return static_cast<int>(2 * n_); }

  /// Returns the three paths tip .. target (excluding nothing) on success.
  std::optional<std::array<std::vector<Vertex>, 3>> route(const std::array<Vertex, 3>& tips, Vertex target) {
    for (std::size_t a = 0; a < arcs_.size(); ++a) arcs_[a].cap = (a % 2 == 0) ? 1 : 0;
    const int sink = in(target);
    for (int round = 0; round < 3; ++round)
      if (!augment(sink)) return std::nullopt;
    std::array<std::vector<Vertex>, 3> paths;
    for (std::size_t t = 0; t < 3; ++t) {
      Vertex v = tips[t];
      paths[t].push_back(v);
      while (v != target) {
        // follow the saturated forward arc leaving out(v)
        Vertex next = 0;
        for (int a = head_[static_cast<std::size_t>(out(v))]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
          const auto& arc = arcs_[static_cast<std::size_t>(a)];
          if (a % 2 == 0 && arc.cap == 0 && arc.to % 2 == 0) {
            next = static_cast<Vertex>(arc.to / 2 + 1);
            break;
          }
        }
        if (next == 0) return std::nullopt;
        v = next;
        paths[t].push_back(v);
      }
    }
    return paths;
  }

 private:
  struct Arc {
    int to;
    int next;
    int cap;
  };

  bool augment(int sink) {
    std::vector<int> via(2 * n_ + 1, -2);
    std::queue<int> q;
    via[static_cast<std::size_t>(source())] = -1;
    q.push(source());
    while (!q.empty() && via[static_cast<std::size_t>(sink)] == -2) {
      const int u = q.front();
      q.pop();
      for (int a = head_[static_cast<std::size_t>(u)]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
        const auto& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.cap > 0 && via[static_cast<std::size_t>(arc.to)] == -2) {
          via[static_cast<std::size_t>(arc.to)] = a;
          q.push(arc.to);
        }
      }
    }
    if (via[static_cast<std::size_t>(sink)] == -2) return false;
    for (int v = sink; v != source();) {
      const int a = via[static_cast<std::size_t>(v)];
      arcs_[static_cast<std::size_t>(a)].cap -= 1;
      arcs_[static_cast<std::size_t>(a ^ 1)].cap += 1;
      v = arcs_[static_cast<std::size_t>(a ^ 1)].to;
    }
    return true;
  }

  std::size_t n_;
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

/// Completes three prefixes into a shape whose size condition holds at d.
/// `allowed` marks the vertices outside every prefix that are farther than d
/// from each vertex near two or more prefixes.
std::optional<EightShape> complete_prefixes(const LocalityGraph& g, const std::array<const Prefix*, 3>& pre,
                                            const BitVector& allowed) {
  const std::size_t n = g.n_vertices();
  const std::array<Vertex, 3> tips{pre[0]->tip(), pre[1]->tip(), pre[2]->tip()};

  // component labels of the allowed region; every tip must touch a common one
  std::vector<int> comp(n, -1);
  int n_comp = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!allowed.test(v) || comp[v] >= 0) continue;
    std::vector<Vertex> stack{static_cast<Vertex>(v + 1)};
    comp[v] = n_comp;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u))
        if (allowed.test(idx(w)) && comp[idx(w)] < 0) {
          comp[idx(w)] = n_comp;
          stack.push_back(w);
        }
    }
    ++n_comp;
  }
  std::vector<int> touch(static_cast<std::size_t>(n_comp), 0);
  for (std::size_t t = 0; t < 3; ++t)
    for (Vertex w : g.neighbors(tips[t]))
      if (allowed.test(idx(w))) touch[static_cast<std::size_t>(comp[idx(w)])] |= 1 << t;

  std::vector<char> role(n, 0);  // 1 allowed interior/end, 2 tip
  for (std::size_t v = 0; v < n; ++v)
    if (allowed.test(v) && touch[static_cast<std::size_t>(comp[v])] == 7) role[v] = 1;
  for (Vertex t : tips) role[idx(t)] = 2;

  std::vector<Vertex> ends;
  for (std::size_t v = 0; v < n; ++v) {
    if (role[v] != 1) continue;
    int reach = 0;
    for (Vertex w : g.neighbors(static_cast<Vertex>(v + 1))) reach += role[idx(w)] ? 1 : 0;
    if (reach >= 3) ends.push_back(static_cast<Vertex>(v + 1));
  }
  if (ends.empty()) return std::nullopt;

  TripodFinder flow(n);
  for (Vertex t : tips) flow.add_arc(flow.source(), TripodFinder::in(t));
  for (std::size_t v = 0; v < n; ++v) {
    if (!role[v]) continue;
    const auto vv = static_cast<Vertex>(v + 1);
    flow.add_arc(TripodFinder::in(vv), TripodFinder::out(vv));
    for (Vertex w : g.neighbors(vv))
      if (role[idx(w)] == 1) flow.add_arc(TripodFinder::out(vv), TripodFinder::in(w));
  }
  for (Vertex e : ends) {
    auto rest = flow.route(tips, e);
    if (!rest) continue;
    EightShape shape;
    shape.start = pre[0]->verts.front();
    shape.end = e;
    for (std::size_t t = 0; t < 3; ++t) {
      shape.paths[t] = pre[t]->verts;
      shape.paths[t].insert(shape.paths[t].end(), (*rest)[t].begin() + 1, (*rest)[t].end());
    }
    return shape;
  }
  return std::nullopt;
}

std::vector<Prefix> enumerate_prefixes(const LocalityGraph& g, Vertex s, int D, bool geodesic,
                                       const std::vector<int>& from_start, std::size_t cap, bool& truncated) {
  std::vector<Prefix> out;
  std::vector<Vertex> stack{s};
  std::vector<bool> on(g.n_vertices(), false);
  on[idx(s)] = true;
  std::function<void()> dfs = [&]() {
    if (truncated) return;
    if (static_cast<int>(stack.size()) == D + 1) {
      if (out.size() >= cap) {
        truncated = true;
        return;
      }
      Prefix p;
      p.verts = stack;
      p.body = BitVector(g.n_vertices());
      for (std::size_t i = 1; i < stack.size(); ++i) p.body.set(idx(stack[i]));
      out.push_back(std::move(p));
      return;
    }
    const Vertex u = stack.back();
    for (Vertex w : g.neighbors(u)) {
      if (on[idx(w)]) continue;
      if (geodesic && from_start[idx(w)] != static_cast<int>(stack.size())) continue;
      on[idx(w)] = true;
      stack.push_back(w);
      dfs();
      stack.pop_back();
      on[idx(w)] = false;
    }
  };
  dfs();
  for (auto& p : out) p.dist = bfs_distance(g, p.verts);
  return out;
}

}  // namespace

PrefixSearchResult find_shape_with_size(const LocalityGraph& g, int d, const PrefixSearchOptions& opts) {
  PrefixSearchResult result;
  if (d < 0) d = 0;
  std::size_t spent = 0;
  constexpr std::size_t kPrefixCap = 200'000;
  const std::size_t nv = g.n_vertices();
  const auto n = static_cast<Vertex>(nv);
  const int first_D = std::max(1, 2 * d);
  // balls[v]: vertices within distance d of v
  std::vector<BitVector> balls;
  for (Vertex v = 1; v <= n; ++v) {
    const auto dist = bfs_distance(g, {v});
    BitVector b(nv);
    for (std::size_t w = 0; w < nv; ++w)
      if (dist[w] <= d) b.set(w);
    balls.push_back(std::move(b));
  }
  BitVector all(nv);
  for (std::size_t v = 0; v < nv; ++v) all.set(v);
  for (Vertex s = 1; s <= n; ++s) {
    if (g.degree(s) < 3) continue;
    const auto from_start = bfs_distance(g, {s});
    for (int D = first_D; D <= first_D + opts.prefix_slack; ++D) {
      bool truncated = false;
      auto prefixes = enumerate_prefixes(g, s, D, opts.geodesic_only, from_start, kPrefixCap, truncated);
      if (truncated) result.complete = false;
      const std::size_t m = prefixes.size();
      if (m < 3) continue;
      auto has_free_neighbor = [&](Vertex tip, const BitVector& region) {
        for (Vertex w : g.neighbors(tip))
          if (region.test(idx(w))) return true;
        return false;
      };
      for (auto& p : prefixes) {
        p.near = BitVector(nv);
        for (Vertex v : p.verts) p.near |= balls[idx(v)];
      }
      // For each usable pair: vertices outside both prefixes and farther than d
      // from everything within d of both.
      std::vector<std::vector<std::pair<std::size_t, BitVector>>> pair_region(m);
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
          const auto& pa = prefixes[a];
          const auto& pb = prefixes[b];
          if (and_count(pa.body, pb.body)) continue;
          // a tip this close to the other prefix makes its remainder neighbour crowded
          if (d >= 1 && (pb.dist[idx(pa.tip())] <= 2 * d - 1 || pa.dist[idx(pb.tip())] <= 2 * d - 1)) continue;
          if (++spent > opts.budget) {
            result.complete = false;
            return result;
          }
          const BitVector crowded = pa.near & pb.near;
          BitVector blocked(nv);
          for (std::size_t v = 0; v < nv; ++v)
            if (crowded.test(v)) blocked |= balls[v];
          blocked |= pa.body;
          blocked |= pb.body;
          blocked.set(idx(s));
          BitVector region = all;
          region.subtract(blocked);
          if (!has_free_neighbor(pa.tip(), region) || !has_free_neighbor(pb.tip(), region)) continue;
          pair_region[a].emplace_back(b, std::move(region));
        }
      auto find_region = [&](std::size_t a, std::size_t b) -> const BitVector* {
        const auto& row = pair_region[a];
        auto it = std::lower_bound(row.begin(), row.end(), b,
                                   [](const auto& entry, std::size_t key) { return entry.first < key; });
        return it != row.end() && it->first == b ? &it->second : nullptr;
      };
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t ib = 0; ib < pair_region[a].size(); ++ib) {
          const std::size_t b = pair_region[a][ib].first;
          const BitVector& ab = pair_region[a][ib].second;
          for (std::size_t ic = ib + 1; ic < pair_region[a].size(); ++ic) {
            const std::size_t c = pair_region[a][ic].first;
            const BitVector* bc = find_region(b, c);
            if (!bc) continue;
            if (++spent > opts.budget) {
              result.complete = false;
              return result;
            }
            BitVector region = ab & pair_region[a][ic].second;
            region &= *bc;
            if (!has_free_neighbor(prefixes[a].tip(), region) || !has_free_neighbor(prefixes[b].tip(), region) ||
                !has_free_neighbor(prefixes[c].tip(), region))
              continue;
            auto shape = complete_prefixes(g, {&prefixes[a], &prefixes[b], &prefixes[c]}, region);
            if (shape) {
              result.shape = std::move(shape);
              return result;
            }
          }
        }
    }
  }
  return result;
}

MaxEightSize max_eight_size(const LocalityGraph& g, const EightSearchOptions& opts) {
  MaxEightSize out;
  // An 8-shape needs two independent cycles.
  if (g.n_edges() + 1 < g.n_vertices() + 2) {
    out.method = "cycle-rank";
    return out;
  }
  if (g.n_vertices() <= opts.exact_vertex_limit) {
    out.method = "exhaustive";
    out.exact = for_each_shape(g, opts.budget, [&](const EightShape& shape) {
      // d <= (D - 1) / 2 <= (min length - 2) / 2
      const int bound = (static_cast<int>(shape.min_length()) - 2) / 2;
      if (out.size && bound <= *out.size) return;
      if (bound < 0) return;
      auto cert = eight_size(g, shape);
      if (cert && (!out.size || cert->size > *out.size)) {
        out.size = cert->size;
        out.certificate = std::move(cert);
      }
    });
    return out;
  }
  out.method = "prefix-search";
  out.exact = false;
  int target = 0;
  for (;;) {
    auto found = find_shape_with_size(g, target, opts.prefix);
    if (!found.shape) break;
    auto cert = eight_size(g, *found.shape);
    if (!cert || cert->size < target) break;  // cannot happen for a completed shape
    out.size = cert->size;
    out.certificate = std::move(cert);
    target = *out.size + 1;
  }
  return out;
}

}  // namespace fermenc
