#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fermenc/bitvector.hpp"
#include "fermenc/pauli.hpp"

namespace fermenc {

/// i^phase * c_{i1} c_{i2} ... with i1 < i2 < ..., over the 2N Majorana
/// operators c_1..c_{2N} of N modes. Index i is stored at mask bit i-1.
class MajoranaMonomial {
 public:
  MajoranaMonomial() = default;
  /// Identity on n_modes modes.
  explicit MajoranaMonomial(std::size_t n_modes) : n_modes_(n_modes), mask_(2 * n_modes) {}
  MajoranaMonomial(std::size_t n_modes, BitVector mask, QuarterPhase phase);

  /// Single c_index, 1 <= index <= 2N.
  static MajoranaMonomial single(std::size_t n_modes, std::size_t index);

  std::size_t n_modes() const { return n_modes_; }
  const BitVector& mask() const { return mask_; }
  QuarterPhase phase() const { return phase_; }
  /// Ascending 1-based Majorana indices.
  std::vector<std::size_t> indices() const;
  bool is_even() const { return (mask_.count() & 1u) == 0; }
  bool is_identity() const { return !mask_.any() && phase_ == QuarterPhase::one(); }

  MajoranaMonomial scaled(QuarterPhase f) const { return {n_modes_, mask_, phase_ * f}; }
  MajoranaMonomial negated() const { return scaled(QuarterPhase::minus_one()); }

  /// "-i·c1 c2"; the identity renders as "+1·I".
  std::string str() const;

  friend bool operator==(const MajoranaMonomial&, const MajoranaMonomial&) = default;

 private:
  std::size_t n_modes_ = 0;
  BitVector mask_;
  QuarterPhase phase_;
};

/// Canonical product a*b; the sign counts the transpositions of the merge.
MajoranaMonomial majorana_mul(const MajoranaMonomial& a, const MajoranaMonomial& b);

/// A_jk = -i c_j c_k for an edge (j, k) of an N-vertex graph.
MajoranaMonomial build_A(Vertex j, Vertex k, std::size_t n_modes);
/// B_k = -i c_k c_{N+k}.
MajoranaMonomial build_B(Vertex k, std::size_t n_modes);

/// i^n A_{j1 j2} A_{j2 j3} ... A_{jn j1}; the closing edge jn -> j1 is
/// implied, so `cycle` lists each vertex once.
MajoranaMonomial loop_monomial(const std::vector<Vertex>& cycle, std::size_t n_modes);

/// Dense image in the chain-ordered reference representation
/// c_k = Z..Z X_k, c_{N+k} = Z..Z Y_k (Z on modes 1..k-1). Mode k is bit k-1
/// of the basis index and the vacuum is index 0.
Eigen::MatrixXcd fock_matrix(const MajoranaMonomial& m, std::size_t cap = kDefaultDenseCap);

/// Dense image of the single Majorana c_index in the same representation.
Eigen::MatrixXcd fock_majorana(std::size_t n_modes, std::size_t index);

}  // namespace fermenc
