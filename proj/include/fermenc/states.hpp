#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fermenc/encodings.hpp"

namespace fermenc {

/// prod_s (I + S_s) / 2 over the stabilizer generators (identity when there are none).
Eigen::MatrixXcd codespace_projector(const BlockEncoding& benc, std::size_t cap = kDefaultDenseCap);

/// An exact encoding viewed as a block encoding with no stabilizers.
BlockEncoding as_block(const Encoding& enc);

struct EquivalenceReport {
  std::size_t samples = 0;
  std::size_t mismatches = 0;
  double max_deviation = 0.0;
  /// +1 or -1 when the parity prod_k B_k is fixed on the codespace; the
  /// fermionic side is then restricted to that parity sector.
  std::optional<int> parity_sector;
  /// First mismatching word, e.g. "A(1,2) B(3)".
  std::string witness;
  bool pass() const { return mismatches == 0; }
};

/// Compares normalized traces of random words (length 0..8) in the
/// generators {A_jk, B_k}: Tr(w)/dim on the Fock side against
/// Tr(P_C w)/rank(P_C) on the encoded side, tolerance 1e-10.
EquivalenceReport equivalence_test(const BlockEncoding& benc, std::size_t n_samples, std::uint64_t seed,
                                   std::size_t cap = kDefaultDenseCap);
EquivalenceReport equivalence_test(const Encoding& enc, std::size_t n_samples, std::uint64_t seed,
                                   std::size_t cap = kDefaultDenseCap);

struct ReferenceState {
  Eigen::VectorXcd state;
  /// Dimension of the joint +1 eigenspace of the B_k inside C.
  std::size_t degeneracy = 0;
};

/// A +1 eigenvector of every B_k inside C: the normalized projection of the
/// first computational basis state with non-zero overlap. Throws
/// ConstructionError when that eigenspace is empty.
ReferenceState encoded_reference_state(const BlockEncoding& benc, std::size_t cap = kDefaultDenseCap);

/// exp(i alpha A) for a Hermitian involution A, i.e. cos(alpha) I + i sin(alpha) A.
Eigen::MatrixXcd involution_exp(const Eigen::MatrixXcd& a, double alpha);
/// exp(i alpha H) for Hermitian H through its eigendecomposition.
Eigen::MatrixXcd hermitian_exp(const Eigen::MatrixXcd& h, double alpha);

/// Edges ordered by a DSatur colouring of the line graph (colour, then edge order).
std::vector<Edge> greedy_edge_schedule(const LocalityGraph& g);
/// Layers of the gate sequence when every gate starts as early as its two vertices allow.
std::size_t schedule_depth(const LocalityGraph& g, const std::vector<Edge>& schedule);

struct ExpectationPair {
  std::string subject;
  double fermionic = 0.0;
  double encoded = 0.0;
};

struct PhiStateResult {
  Eigen::VectorXcd fermionic;
  Eigen::VectorXcd encoded;
  std::vector<ExpectationPair> expectations;  // every B_k, then every A_jk
  double max_deviation = 0.0;
  /// Largest gap between the cos/sin form and the eigendecomposition, over the gates.
  double exp_crosscheck = 0.0;
  std::size_t depth = 0;
};

/// prod over `schedule` of exp(i alpha A_jk), first schedule entry applied
/// first, on the Fock vacuum and on the encoded reference state. Throws
/// PreconditionError unless the schedule lists every edge exactly once.
PhiStateResult example_phi_state(const BlockEncoding& benc, double alpha, const std::vector<Edge>& schedule,
                                 std::size_t cap = kDefaultDenseCap);

struct ProductSearchOptions {
  std::size_t restarts = 100;
  std::size_t max_iters = 200;
  std::uint64_t seed = 0;
};

struct ProductSearchResult {
  double best_overlap = 0.0;
  std::vector<Eigen::VectorXcd> best_state;  // one local state per vertex
  std::size_t best_restart = 0;
  std::size_t restarts_used = 0;
  /// The best restart stopped because the gain fell below 1e-12.
  bool converged = false;
  /// No sweep in any restart decreased the overlap by more than 1e-12.
  bool monotone = true;
  /// Overlap after each sweep of the best restart.
  std::vector<double> history;
};

/// Alternating maximization of <psi|P|psi> over product states across the
/// layout's vertices, restarted from seeded random states.
ProductSearchResult product_state_search(const Eigen::MatrixXcd& projector, const QubitLayout& layout,
                                         const ProductSearchOptions& opts);

/// Kronecker product of per-vertex states placed on the layout's qubits.
Eigen::VectorXcd product_state(const std::vector<Eigen::VectorXcd>& local, const QubitLayout& layout);

/// Reduced density matrix of one vertex's qubits (local basis bit i = i-th qubit of the vertex).
Eigen::MatrixXcd reduced_density_matrix(const Eigen::VectorXcd& psi, const QubitLayout& layout, Vertex v);

}  // namespace fermenc
