#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fermenc/graph.hpp"
#include "fermenc/pauli.hpp"

namespace fermenc {

enum class EncodingKind { exact, block };

/// Pauli images of the edge operators A_jk and vertex operators B_k of a
/// locality graph. Edge images are stored for the orientation low -> high,
/// aligned with graph().edges().
class Encoding {
 public:
  Encoding() = default;
  /// Throws DimensionError when counts or qubit numbers do not match.
  Encoding(LocalityGraph graph, QubitLayout layout, std::vector<PauliString> edge_ops,
           std::vector<PauliString> vertex_ops, EncodingKind kind, std::string method);

  const LocalityGraph& graph() const { return graph_; }
  const QubitLayout& layout() const { return layout_; }
  EncodingKind kind() const { return kind_; }
  /// "jw", "tree", "ring" or "superfast".
  const std::string& method() const { return method_; }
  std::size_t n_qubits() const { return layout_.total_qubits(); }

  /// Image of A_jk; A_kj comes back negated. Throws PreconditionError off the graph.
  PauliString edge_op(Vertex j, Vertex k) const;
  const PauliString& vertex_op(Vertex k) const { return vertex_ops_.at(static_cast<std::size_t>(k - 1)); }
  const std::vector<PauliString>& edge_ops() const { return edge_ops_; }
  const std::vector<PauliString>& vertex_ops() const { return vertex_ops_; }

  Encoding with_edge_op(std::size_t edge_index, PauliString p) const;
  Encoding with_vertex_op(Vertex k, PauliString p) const;

 private:
  LocalityGraph graph_;
  QubitLayout layout_;
  std::vector<PauliString> edge_ops_;
  std::vector<PauliString> vertex_ops_;
  EncodingKind kind_ = EncodingKind::exact;
  std::string method_;
};

/// An encoding whose relations hold on the joint +1 eigenspace of the
/// stabilizer generators.
struct BlockEncoding {
  Encoding base;
  std::vector<PauliString> stabilizers;
};

/// Pairwise anticommuting Hermitian involutions on one vertex's qubits.
struct GammaSet {
  Vertex vertex = 0;
  std::vector<PauliString> operators;
};

/// gamma_{2a-1} = Z..Z X and gamma_{2a} = Z..Z Y on the a-th of `qubits`,
/// with Z on the earlier qubits of the list. Yields 2 * qubits.size() operators.
GammaSet gamma_set(Vertex vertex, const std::vector<std::size_t>& qubits, std::size_t n_qubits);

/// One qubit per vertex; ordering[q] is the vertex placed on qubit q.
/// Throws PreconditionError unless ordering is a permutation of 1..N.
Encoding jordan_wigner(const LocalityGraph& g, const std::vector<Vertex>& ordering);
/// Natural ordering 1..N.
Encoding jordan_wigner(const LocalityGraph& g);

/// Qubit-per-pair-of-incident-edges construction. Refuses graphs with a cycle.
Encoding tree_encoding(const LocalityGraph& g);

/// N + 1 qubits on the ring 1..N: vertex k owns qubit k-1 and vertex 1 also
/// owns the extra qubit N (rendered last). One stabilizer.
BlockEncoding ring_block_encoding(std::size_t n);

/// The gamma construction on an arbitrary graph with one stabilizer per
/// fundamental cycle of cycle_basis(g).
BlockEncoding superfast_block_encoding(const LocalityGraph& g);

/// i^n A_{c1 c2} ... A_{cn c1} with the encoded edge operators.
PauliString encoded_loop(const Encoding& enc, const std::vector<Vertex>& cycle);

/// "A(1,2)", "B(3)", "S(1)".
std::string edge_label(Vertex j, Vertex k);
std::string vertex_label(Vertex k);
std::string stabilizer_label(std::size_t index);

struct LocalityEntry {
  std::string subject;
  std::vector<Vertex> support;
  bool local = true;
};

struct LocalityReport {
  std::vector<LocalityEntry> entries;  // vertices first, then edges in graph order
  bool all_local = true;
  /// all_local and the encoding is exact.
  bool local_encoding = false;
};

/// B_k must act inside vertex k's qubits and A_jk inside those of j and k.
LocalityReport locality_check(const Encoding& enc);

}  // namespace fermenc
