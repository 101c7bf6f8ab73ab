#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "fermenc/encodings.hpp"

namespace fermenc {

struct RelationCheck {
  /// "Eq6".."Eq10" for exact encodings, "Eq13".."Eq18" for block encodings,
  /// plus "hermiticity", "antisymmetry", "closure" and "stabilizers".
  std::string relation;
  std::vector<std::string> subjects;
  bool pass = true;
  std::string witness;  // empty on pass
};

struct RelationTally {
  std::size_t checked = 0;
  std::size_t failed = 0;
};

struct RelationReport {
  /// Sorted by relation id, then subjects.
  std::vector<RelationCheck> checks;
  bool overall() const;
  std::map<std::string, RelationTally> summary() const;
  std::vector<RelationCheck> failures() const;
};

/// Symbolic check of the defining relations of an exact encoding: vertex
/// operators commute, edge/vertex and edge/edge (anti)commutation signs,
/// squares, fundamental-cycle loop products, hermiticity, antisymmetry.
RelationReport verify_exact(const Encoding& enc);

struct BlockVerifyOptions {
  /// Also check ||(L - I) P_C|| <= 1e-10 on dense matrices for every loop.
  bool dense_fallback = false;
  std::size_t dense_cap = kDefaultDenseCap;
};

/// The same relations on the codespace. Pauli relations hold on C exactly
/// when they hold globally, so they are checked symbolically; loops must be
/// +1 times an element of the stabilizer group.
RelationReport verify_block(const BlockEncoding& benc, const BlockVerifyOptions& opts = {});

struct Membership {
  bool member = false;
  /// p = phase * (product of the generators in `used`), when member.
  QuarterPhase phase;
  std::vector<std::size_t> used;
};

/// Gaussian elimination over the symplectic vectors with exact phases.
/// Throws PreconditionError for non-Hermitian, non-commuting or dependent
/// generators.
Membership stabilizer_membership(const PauliString& p, const std::vector<PauliString>& gens);

}  // namespace fermenc
