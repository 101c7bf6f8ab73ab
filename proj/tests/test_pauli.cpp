#include <doctest.h>

#include <random>

#include "fermenc/encodings.hpp"
#include "fermenc/errors.hpp"
#include "fermenc/pauli.hpp"
#include "oracles.hpp"

using namespace fermenc;

namespace {
PauliString P(const char* s) { return PauliString::parse(s); }
}  // namespace

TEST_CASE("pauli: single-qubit products") {
  CHECK(pauli_mul(P("+1·X"), P("+1·Y")) == P("+i·Z"));
  CHECK(pauli_mul(P("+1·Y"), P("+1·X")) == P("-i·Z"));
  CHECK(pauli_mul(P("+1·Z"), P("+1·Z")) == P("+1·I"));
  const PauliString p = P("-i·XYZI");
  CHECK(pauli_mul(PauliString(4), p) == p);
  CHECK(pauli_mul(p, PauliString(4)) == p);
}

TEST_CASE("pauli: ring closing edge squares to identity") {
  // X_N Y_1 Z_1bar on a 4-ring: qubits 0..3 are vertices 1..4, qubit 4 is 1bar
  const PauliString a = P("+1·YIIXZ");
  CHECK(pauli_mul(a, a).is_identity());
}

TEST_CASE("pauli: parse and render") {
  CHECK(P("+1·XYI").str() == "+1·XYI");
  CHECK(P("i*ZZ").str() == "+i·ZZ");
  CHECK(P("-1·Y").phase() == QuarterPhase::minus_one());
  CHECK(P("-i·XZ").letters() == "XZ");
  CHECK_THROWS_AS(P("+2·X"), ParseError);
  CHECK_THROWS_AS(P("+1·XQ"), ParseError);
  CHECK(P("+1·IXIY").weight() == 2);
}

TEST_CASE("pauli: size mismatch is a dimension error") {
  CHECK_THROWS_AS(pauli_mul(P("+1·X"), P("+1·XX")), DimensionError);
  CHECK_THROWS_AS(commutation(P("+1·X"), P("+1·XX")), DimensionError);
}

TEST_CASE("pauli: commutation examples") {
  CHECK(commutation(P("+1·X"), P("+1·Z")) == Commutation::anticommutes);
  CHECK(commutation(P("+1·XI"), P("+1·IZ")) == Commutation::commutes);
  // adjacent ring edges X_k Y_{k+1} and X_{k+1} Y_{k+2}
  CHECK(commutation(P("+1·XYI"), P("+1·IXY")) == Commutation::anticommutes);
}

TEST_CASE("pauli: dense conversion") {
  Eigen::MatrixXcd z(2, 2);
  z << 1, 0, 0, -1;
  CHECK(to_dense(P("+1·Z")) == z);
  CHECK(to_dense(P("+i·Z")) == to_dense(P("+1·X")) * to_dense(P("+1·Y")));
  CHECK_THROWS_AS(to_dense(PauliString(15)), ResourceError);
  CHECK_NOTHROW(to_dense(PauliString(3), 3));
}

TEST_CASE("pauli: products and commutation agree with the dense oracle on up to 3 qubits") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 300; ++trial) {
      const PauliString a = oracle::random_pauli(n, rng);
      const PauliString b = oracle::random_pauli(n, rng);
      const Eigen::MatrixXcd da = oracle::dense(a);
      const Eigen::MatrixXcd db = oracle::dense(b);
      CHECK(to_dense(a) == da);
      CHECK(oracle::dense(pauli_mul(a, b)) == da * db);
      const double comm = (da * db - db * da).norm();
      CHECK(commutes(a, b) == (comm == 0.0));
      // Hermitian exactly when the phase is real
      CHECK(a.is_hermitian() == ((da - da.adjoint()).norm() == 0.0));
      // unitary
      CHECK((da * da.adjoint() - Eigen::MatrixXcd::Identity(da.rows(), da.cols())).norm() < 1e-12);
    }
}

TEST_CASE("pauli: associativity on random triples") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 70;
    const auto a = oracle::random_pauli(n, rng);
    const auto b = oracle::random_pauli(n, rng);
    const auto c = oracle::random_pauli(n, rng);
    CHECK(pauli_mul(pauli_mul(a, b), c) == pauli_mul(a, pauli_mul(b, c)));
  }
}

TEST_CASE("pauli: quarter phases close under products") {
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const QuarterPhase p = QuarterPhase(a) * QuarterPhase(b);
      CHECK(std::abs(p.value() - QuarterPhase(a).value() * QuarterPhase(b).value()) < 1e-15);
      CHECK(p.exponent() == (a + b) % 4);
    }
}

TEST_CASE("pauli: apply matches the dense matrix") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = oracle::random_pauli(4, rng);
    Eigen::VectorXcd psi = Eigen::VectorXcd::Random(16);
    CHECK((fermenc::apply(p, psi) - oracle::dense(p) * psi).norm() < 1e-12);
  }
}

TEST_CASE("pauli: support and layout") {
  const QubitLayout layout({{0, 4}, {1}, {2}, {3}});
  CHECK(support(PauliString(5), layout).empty());
  CHECK(support(P("+1·IIIIZ"), layout) == std::vector<Vertex>{1});
  CHECK(support(P("+1·YIIXZ"), layout) == std::vector<Vertex>{1, 4});
  CHECK(layout.owner(4) == 1);
  CHECK_THROWS_AS(QubitLayout({{0}, {0}}), PreconditionError);
  CHECK_THROWS_AS(QubitLayout({{0}, {2}}), PreconditionError);
  const auto cons = QubitLayout::consecutive({2, 1});
  CHECK(cons.qubits(1) == std::vector<std::size_t>{0, 1});
  CHECK(cons.qubits(2) == std::vector<std::size_t>{2});
}

TEST_CASE("pauli: ring vertex operators and the JW closing edge have the expected supports") {
  const auto ring = ring_block_encoding(5);
  for (Vertex k = 1; k <= 5; ++k) CHECK(support(ring.base.vertex_op(k), ring.base.layout()) == std::vector<Vertex>{k});
  const auto jw = jordan_wigner(generate_graph("ring:6"));
  CHECK(support(jw.edge_op(1, 6), jw.layout()).size() == 6);
}

TEST_CASE("pauli: symbolic algebra beyond one machine word") {
  PauliString a = PauliString(130).with_op(129, 'X').with_op(0, 'Z');
  PauliString b = PauliString(130).with_op(129, 'Z').with_op(64, 'Y');
  CHECK(!commutes(a, b));
  CHECK(pauli_mul(a, a).is_identity());
  CHECK(pauli_mul(a, b).weight() == 3);
}
