#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "fermenc/bitvector.hpp"

namespace fermenc {

/// Graph vertices are numbered 1..N throughout the library.
using Vertex = int;

/// Largest qubit count accepted by dense conversions unless overridden.
inline constexpr std::size_t kDefaultDenseCap = 14;

/// An element i^k of {+1, +i, -1, -i}.
class QuarterPhase {
 public:
  constexpr QuarterPhase() = default;
  constexpr explicit QuarterPhase(int exponent) : k_(static_cast<std::uint8_t>(((exponent % 4) + 4) % 4)) {}

  static constexpr QuarterPhase one() { return QuarterPhase(0); }
  static constexpr QuarterPhase i() { return QuarterPhase(1); }
  static constexpr QuarterPhase minus_one() { return QuarterPhase(2); }
  static constexpr QuarterPhase minus_i() { return QuarterPhase(3); }

  constexpr int exponent() const { return k_; }
  constexpr bool is_real() const { return (k_ & 1u) == 0; }
  std::complex<double> value() const;
  /// "+1", "+i", "-1" or "-i".
  std::string str() const;

  friend constexpr QuarterPhase operator*(QuarterPhase a, QuarterPhase b) { return QuarterPhase(a.k_ + b.k_); }
  friend constexpr bool operator==(QuarterPhase, QuarterPhase) = default;

 private:
  std::uint8_t k_ = 0;
};

/// Multi-qubit Pauli operator i^phase * P_0 (x) P_1 (x) ... in symplectic form.
///
/// Qubit q carries X when only x(q) is set, Z when only z(q) is set and the
/// Hermitian Y when both are set, i.e. Y = i X Z. Because Y is absorbed into
/// the letters, an operator is Hermitian exactly when its phase is +-1, and
/// two strings are equal exactly when their masks and phase are equal.
class PauliString {
 public:
  PauliString() = default;
  /// Identity on n qubits.
  explicit PauliString(std::size_t n_qubits) : x_(n_qubits), z_(n_qubits) {}
  PauliString(BitVector x, BitVector z, QuarterPhase phase);

  /// Single-qubit operator ('I', 'X', 'Y' or 'Z') on `qubit`, identity elsewhere.
  static PauliString single(std::size_t n_qubits, std::size_t qubit, char op);
  /// Parses "+1·XYIZ" (also "-i·...", and '*' in place of the dot).
  static PauliString parse(std::string_view text);

  std::size_t n_qubits() const { return x_.size(); }
  const BitVector& x() const { return x_; }
  const BitVector& z() const { return z_; }
  QuarterPhase phase() const { return phase_; }

  char op(std::size_t qubit) const;
  PauliString with_op(std::size_t qubit, char op) const;
  PauliString with_phase(QuarterPhase phase) const { return PauliString(x_, z_, phase); }
  PauliString negated() const { return with_phase(phase_ * QuarterPhase::minus_one()); }
  PauliString scaled(QuarterPhase factor) const { return with_phase(phase_ * factor); }

  bool is_identity_up_to_phase() const { return !x_.any() && !z_.any(); }
  /// Exactly +I.
  bool is_identity() const { return is_identity_up_to_phase() && phase_ == QuarterPhase::one(); }
  bool is_hermitian() const { return phase_.is_real(); }
  std::size_t weight() const;

  /// "+1·XYI"; qubit 0 is the leftmost letter.
  std::string str() const;
  /// Letters only, "XYI".
  std::string letters() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  BitVector x_;
  BitVector z_;
  QuarterPhase phase_;
};

enum class Commutation { commutes, anticommutes };

/// Exact operator product a*b.
PauliString pauli_mul(const PauliString& a, const PauliString& b);

/// Decided through the symplectic form <a.x, b.z> + <a.z, b.x> mod 2.
Commutation commutation(const PauliString& a, const PauliString& b);
inline bool commutes(const PauliString& a, const PauliString& b) {
  return commutation(a, b) == Commutation::commutes;
}

/// Assignment of qubits to graph vertices (vertex v owns vertex_qubits[v-1]).
class QubitLayout {
 public:
  QubitLayout() = default;
  /// Throws PreconditionError unless the lists are disjoint and cover 0..total-1.
  explicit QubitLayout(std::vector<std::vector<std::size_t>> vertex_qubits);

  /// Consecutive blocks: vertex v gets counts[v-1] qubits.
  static QubitLayout consecutive(const std::vector<std::size_t>& counts);

  std::size_t total_qubits() const { return owner_.size(); }
  std::size_t n_vertices() const { return vertex_qubits_.size(); }
  const std::vector<std::size_t>& qubits(Vertex v) const { return vertex_qubits_.at(static_cast<std::size_t>(v - 1)); }
  Vertex owner(std::size_t qubit) const { return owner_.at(qubit); }

 private:
  std::vector<std::vector<std::size_t>> vertex_qubits_;
  std::vector<Vertex> owner_;
};

/// Sorted vertices owning at least one qubit on which p acts non-trivially.
std::vector<Vertex> support(const PauliString& p, const QubitLayout& layout);

/// Dense 2^n x 2^n matrix. Basis index bit q is the state of qubit q.
Eigen::MatrixXcd to_dense(const PauliString& p, std::size_t cap = kDefaultDenseCap);

/// p|psi> without forming the matrix.
Eigen::VectorXcd apply(const PauliString& p, const Eigen::VectorXcd& psi);

}  // namespace fermenc
