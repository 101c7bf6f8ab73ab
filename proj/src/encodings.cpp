#include "fermenc/encodings.hpp"

#include <algorithm>

namespace fermenc {

Encoding::Encoding(LocalityGraph graph, QubitLayout layout, std::vector<PauliString> edge_ops,
                   std::vector<PauliString> vertex_ops, EncodingKind kind, std::string method)
    : graph_(std::move(graph)),
      layout_(std::move(layout)),
      edge_ops_(std::move(edge_ops)),
      vertex_ops_(std::move(vertex_ops)),
      kind_(kind),
      method_(std::move(method)) {
  if (edge_ops_.size() != graph_.n_edges() || vertex_ops_.size() != graph_.n_vertices())
    throw DimensionError("one operator per edge and per vertex expected");
  if (layout_.n_vertices() != graph_.n_vertices()) throw DimensionError("layout does not match the graph");
  for (const auto* ops : {&edge_ops_, &vertex_ops_})
    for (const auto& p : *ops)
      if (p.n_qubits() != layout_.total_qubits()) throw DimensionError("operator on the wrong number of qubits");
}

PauliString Encoding::edge_op(Vertex j, Vertex k) const {
  const std::size_t e = graph_.edge_index(j, k);
  if (e == LocalityGraph::npos)
    throw PreconditionError("(" + std::to_string(j) + "," + std::to_string(k) + ") is not an edge");
  return j < k ? edge_ops_[e] : edge_ops_[e].negated();
}

Encoding Encoding::with_edge_op(std::size_t edge_index, PauliString p) const {
  auto edges = edge_ops_;
  edges.at(edge_index) = std::move(p);
  return Encoding(graph_, layout_, std::move(edges), vertex_ops_, kind_, method_);
}

Encoding Encoding::with_vertex_op(Vertex k, PauliString p) const {
  auto verts = vertex_ops_;
  verts.at(static_cast<std::size_t>(k - 1)) = std::move(p);
  return Encoding(graph_, layout_, edge_ops_, std::move(verts), kind_, method_);
}

GammaSet gamma_set(Vertex vertex, const std::vector<std::size_t>& qubits, std::size_t n_qubits) {
  GammaSet out;
  out.vertex = vertex;
  PauliString string(n_qubits);
  for (std::size_t q : qubits) {
    out.operators.push_back(string.with_op(q, 'X'));
    out.operators.push_back(string.with_op(q, 'Y'));
    string = string.with_op(q, 'Z');
  }
  return out;
}

std::string edge_label(Vertex j, Vertex k) { return "A(" + std::to_string(j) + "," + std::to_string(k) + ")"; }
std::string vertex_label(Vertex k) { return "B(" + std::to_string(k) + ")"; }
std::string stabilizer_label(std::size_t index) { return "S(" + std::to_string(index + 1) + ")"; }

PauliString encoded_loop(const Encoding& enc, const std::vector<Vertex>& cycle) {
  PauliString loop(enc.n_qubits());
  const std::size_t n = cycle.size();
  for (std::size_t i = 0; i < n; ++i) loop = pauli_mul(loop, enc.edge_op(cycle[i], cycle[(i + 1) % n]));
  return loop.scaled(QuarterPhase(static_cast<int>(n % 4)));
}

Encoding jordan_wigner(const LocalityGraph& g, const std::vector<Vertex>& ordering) {
  const std::size_t n = g.n_vertices();
  std::vector<std::size_t> position(n, n);
  if (ordering.size() != n) throw PreconditionError("ordering must list every vertex once");
  for (std::size_t q = 0; q < n; ++q) {
    const Vertex v = ordering[q];
    if (v < 1 || static_cast<std::size_t>(v) > n || position[static_cast<std::size_t>(v - 1)] != n)
      throw PreconditionError("ordering is not a permutation of the vertices");
    position[static_cast<std::size_t>(v - 1)] = q;
  }
  // c_k and c_{N+k}: Z on every earlier qubit, then X or Y
  auto majorana = [&](Vertex v, char last) {
    const std::size_t q = position[static_cast<std::size_t>(v - 1)];
    PauliString p(n);
    for (std::size_t r = 0; r < q; ++r) p = p.with_op(r, 'Z');
    return p.with_op(q, last);
  };
  const QuarterPhase minus_i = QuarterPhase::minus_i();
  std::vector<PauliString> vertex_ops;
  for (Vertex k = 1; k <= static_cast<Vertex>(n); ++k)
    vertex_ops.push_back(pauli_mul(majorana(k, 'X'), majorana(k, 'Y')).scaled(minus_i));
  std::vector<PauliString> edge_ops;
  for (auto [j, k] : g.edges()) edge_ops.push_back(pauli_mul(majorana(j, 'X'), majorana(k, 'X')).scaled(minus_i));
  std::vector<std::vector<std::size_t>> owned(n);
  for (std::size_t v = 0; v < n; ++v) owned[v] = {position[v]};
  return Encoding(g, QubitLayout(std::move(owned)), std::move(edge_ops), std::move(vertex_ops), EncodingKind::exact,
                  "jw");
}

Encoding jordan_wigner(const LocalityGraph& g) {
  std::vector<Vertex> ordering(g.n_vertices());
  for (std::size_t q = 0; q < ordering.size(); ++q) ordering[q] = static_cast<Vertex>(q + 1);
  return jordan_wigner(g, ordering);
}

namespace {

/// Shared construction for the tree and superfast encodings.
Encoding gamma_encoding(const LocalityGraph& g, EncodingKind kind, const std::string& method) {
  const std::size_t n = g.n_vertices();
  std::vector<std::size_t> counts(n);
  for (std::size_t v = 0; v < n; ++v) {
    // ceil(m/2) qubits; an isolated vertex still gets one
    counts[v] = std::max<std::size_t>(1, (g.degree(static_cast<Vertex>(v + 1)) + 1) / 2);
  }
  QubitLayout layout = QubitLayout::consecutive(counts);
  const std::size_t total = layout.total_qubits();
  std::vector<GammaSet> gammas;
  for (Vertex v = 1; v <= static_cast<Vertex>(n); ++v) gammas.push_back(gamma_set(v, layout.qubits(v), total));

  // gamma number of neighbour w at vertex v: its rank in the ascending neighbour list
  auto slot = [&](Vertex v, Vertex w) -> const PauliString& {
    const auto& nb = g.neighbors(v);
    const auto rank = static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), w) - nb.begin());
    return gammas[static_cast<std::size_t>(v - 1)].operators[rank];
  };
  std::vector<PauliString> edge_ops;
  for (auto [j, k] : g.edges()) edge_ops.push_back(pauli_mul(slot(j, k), slot(k, j)));

  std::vector<PauliString> vertex_ops;
  for (const auto& gs : gammas) {
    const auto d = static_cast<int>(gs.operators.size());
    PauliString b(total);
    for (const auto& gamma : gs.operators) b = pauli_mul(b, gamma);
    vertex_ops.push_back(b.scaled(QuarterPhase(d * (d - 1) / 2)));
  }
  return Encoding(g, std::move(layout), std::move(edge_ops), std::move(vertex_ops), kind, method);
}

}  // namespace

Encoding tree_encoding(const LocalityGraph& g) {
  if (!is_tree(g))
    throw PreconditionError("the tree encoding needs a tree; a graph with a cycle admits no local exact encoding");
  return gamma_encoding(g, EncodingKind::exact, "tree");
}

BlockEncoding ring_block_encoding(std::size_t n) {
  if (n < 3) throw PreconditionError("a ring needs at least 3 vertices");
  const LocalityGraph g = generate_graph("ring:" + std::to_string(n));
  const std::size_t bar = n;  // the extra qubit of vertex 1
  std::vector<std::vector<std::size_t>> owned(n);
  owned[0] = {0, bar};
  for (std::size_t v = 1; v < n; ++v) owned[v] = {v};
  PauliString id(n + 1);
  std::vector<PauliString> vertex_ops;
  for (std::size_t v = 0; v < n; ++v) vertex_ops.push_back(id.with_op(v, 'Z'));
  std::vector<PauliString> edge_ops;
  for (auto [j, k] : g.edges()) {
    const auto a = static_cast<std::size_t>(j - 1);
    const auto b = static_cast<std::size_t>(k - 1);
    if (b == a + 1) {
      edge_ops.push_back(id.with_op(a, 'X').with_op(b, 'Y'));
    } else {
      edge_ops.push_back(id.with_op(b, 'X').with_op(a, 'Y').with_op(bar, 'Z'));  // A_{1,N}
    }
  }
  PauliString stab = id;
  for (std::size_t q = 0; q <= n; ++q) stab = stab.with_op(q, 'Z');
  BlockEncoding out;
  out.base = Encoding(g, QubitLayout(std::move(owned)), std::move(edge_ops), std::move(vertex_ops),
                      EncodingKind::block, "ring");
  out.stabilizers = {stab};
  return out;
}

BlockEncoding superfast_block_encoding(const LocalityGraph& g) {
  BlockEncoding out;
  out.base = gamma_encoding(g, EncodingKind::block, "superfast");
  for (const auto& cycle : cycle_basis(g)) out.stabilizers.push_back(encoded_loop(out.base, cycle));
  return out;
}

LocalityReport locality_check(const Encoding& enc) {
  LocalityReport r;
  const auto& g = enc.graph();
  for (Vertex k = 1; k <= static_cast<Vertex>(g.n_vertices()); ++k) {
    LocalityEntry e{vertex_label(k), support(enc.vertex_op(k), enc.layout()), true};
    e.local = std::all_of(e.support.begin(), e.support.end(), [k](Vertex v) { return v == k; });
    r.entries.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < g.n_edges(); ++i) {
    auto [j, k] = g.edges()[i];
    LocalityEntry e{edge_label(j, k), support(enc.edge_ops()[i], enc.layout()), true};
    e.local = std::all_of(e.support.begin(), e.support.end(), [j, k](Vertex v) { return v == j || v == k; });
    r.entries.push_back(std::move(e));
  }
  r.all_local = std::all_of(r.entries.begin(), r.entries.end(), [](const LocalityEntry& e) { return e.local; });
  r.local_encoding = r.all_local && enc.kind() == EncodingKind::exact;
  return r;
}

}  // namespace fermenc
