#include <doctest.h>

#include <algorithm>
#include <random>

#include "fermenc/graph.hpp"
#include "fermenc/majorana.hpp"
#include "oracles.hpp"

using namespace fermenc;

namespace {

MajoranaMonomial c(std::size_t n, std::size_t i) { return MajoranaMonomial::single(n, i); }

MajoranaMonomial random_monomial(std::size_t n, std::mt19937_64& rng) {
  BitVector mask(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) mask.set(i, rng() & 1u);
  return MajoranaMonomial(n, mask, QuarterPhase(static_cast<int>(rng() % 4)));
}

/// Product of single Majoranas as dense matrices, index by index.
Eigen::MatrixXcd dense_by_factors(const MajoranaMonomial& m) {
  const auto dim = Eigen::Index{1} << m.n_modes();
  Eigen::MatrixXcd out = m.phase().value() * Eigen::MatrixXcd::Identity(dim, dim);
  for (std::size_t i : m.indices()) out = out * fock_majorana(m.n_modes(), i);
  return out;
}

}  // namespace

TEST_CASE("majorana: small products") {
  CHECK(majorana_mul(c(2, 1), c(2, 1)).is_identity());
  CHECK(majorana_mul(c(2, 1), c(2, 2)).str() == "+1·c1 c2");
  CHECK(majorana_mul(c(2, 2), c(2, 1)).str() == "-1·c1 c2");
  CHECK(MajoranaMonomial(3).str() == "+1·I");
  CHECK_THROWS_AS(majorana_mul(c(2, 1), c(3, 1)), DimensionError);
}

TEST_CASE("majorana: edge and vertex operators") {
  CHECK(build_A(1, 2, 2).str() == "-i·c1 c2");
  CHECK(build_A(2, 1, 2) == build_A(1, 2, 2).negated());
  CHECK(majorana_mul(build_A(1, 2, 2), build_A(1, 2, 2)).is_identity());
  CHECK(build_B(1, 1).str() == "-i·c1 c2");
  for (Vertex k = 1; k <= 3; ++k) CHECK(majorana_mul(build_B(k, 3), build_B(k, 3)).is_identity());
  for (Vertex j = 1; j <= 3; ++j)
    for (Vertex k = 1; k <= 3; ++k)
      CHECK(majorana_mul(build_B(j, 3), build_B(k, 3)) == majorana_mul(build_B(k, 3), build_B(j, 3)));
  // edges sharing vertex 2 anticommute
  CHECK(majorana_mul(build_A(1, 2, 3), build_A(2, 3, 3)) ==
        majorana_mul(build_A(2, 3, 3), build_A(1, 2, 3)).negated());
  CHECK_THROWS_AS(build_A(2, 2, 3), PreconditionError);
  CHECK_THROWS_AS(build_A(1, 4, 3), PreconditionError);
  CHECK_THROWS_AS(build_B(0, 3), PreconditionError);
}

TEST_CASE("majorana: loops close to the identity") {
  CHECK(loop_monomial({1, 2, 3}, 3).is_identity());
  CHECK(loop_monomial({1, 2, 3, 4}, 4).is_identity());
  CHECK(loop_monomial({4, 3, 2, 1}, 4).is_identity());
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 3 + rng() % 30;
    std::vector<Vertex> cyc(n);
    for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Vertex>(i + 1);
    std::shuffle(cyc.begin(), cyc.end(), rng);
    cyc.resize(3 + rng() % (n - 2));
    CHECK(loop_monomial(cyc, n).is_identity());
  }
}

TEST_CASE("majorana: Fock images anticommute canonically") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto dim = Eigen::Index{1} << n;
    for (std::size_t i = 1; i <= 2 * n; ++i)
      for (std::size_t j = 1; j <= 2 * n; ++j) {
        const Eigen::MatrixXcd ci = fock_majorana(n, i);
        const Eigen::MatrixXcd cj = fock_majorana(n, j);
        const Eigen::MatrixXcd expect = (i == j ? 2.0 : 0.0) * Eigen::MatrixXcd::Identity(dim, dim);
        CHECK((ci * cj + cj * ci - expect).norm() < 1e-12);
      }
  }
}

TEST_CASE("majorana: vacuum and occupation parity") {
  const std::size_t n = 4;
  for (Vertex k = 1; k <= 4; ++k) {
    const Eigen::MatrixXcd b = fock_matrix(build_B(k, n));
    CHECK(b.isDiagonal(1e-15));
    for (Eigen::Index i = 0; i < b.rows(); ++i) {
      // B_k = 1 - 2 n_k with mode k on bit k-1
      const double expect = ((i >> (k - 1)) & 1) ? -1.0 : 1.0;
      CHECK(b(i, i) == std::complex<double>(expect, 0));
    }
  }
  CHECK(fock_matrix(MajoranaMonomial(3)) == Eigen::MatrixXcd::Identity(8, 8));
  const Eigen::MatrixXcd a = fock_matrix(build_A(1, 2, 3));
  CHECK((a * a - Eigen::MatrixXcd::Identity(8, 8)).norm() < 1e-12);
  CHECK_THROWS_AS(fock_matrix(MajoranaMonomial(8)), ResourceError);
}

TEST_CASE("majorana: symbolic products match the Fock oracle") {
  std::mt19937_64 rng(23);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 60; ++trial) {
      const auto a = random_monomial(n, rng);
      const auto b = random_monomial(n, rng);
      const Eigen::MatrixXcd fa = dense_by_factors(a);
      const Eigen::MatrixXcd fb = dense_by_factors(b);
      CHECK((fock_matrix(a) - fa).norm() < 1e-12);
      CHECK((dense_by_factors(majorana_mul(a, b)) - fa * fb).norm() < 1e-12);
      CHECK((fock_matrix(majorana_mul(a, b)) - fock_matrix(a) * fock_matrix(b)).norm() < 1e-12);
    }
}

TEST_CASE("majorana: even monomials commute with disjoint monomials") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    auto a = random_monomial(n, rng);
    auto b = random_monomial(n, rng);
    BitVector overlap_free = b.mask();
    for (std::size_t i = 0; i < 2 * n; ++i)
      if (a.mask().test(i)) overlap_free.set(i, false);
    b = MajoranaMonomial(n, overlap_free, b.phase());
    if (!a.is_even()) continue;
    CHECK(majorana_mul(a, b) == majorana_mul(b, a));
  }
}

TEST_CASE("majorana: defining relations hold for the Fock images on small graphs") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const auto g = oracle::random_graph(n, rng() % 4, rng);
    const auto dim = Eigen::Index{1} << n;
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
    std::vector<Eigen::MatrixXcd> b, a;
    for (Vertex k = 1; k <= static_cast<Vertex>(n); ++k) b.push_back(fock_matrix(build_B(k, n)));
    for (auto [j, k] : g.edges()) a.push_back(fock_matrix(build_A(j, k, n)));
    for (std::size_t j = 0; j < n; ++j) {
      CHECK((b[j] * b[j] - id).norm() < 1e-12);
      for (std::size_t k = 0; k < n; ++k) CHECK((b[j] * b[k] - b[k] * b[j]).norm() < 1e-12);
    }
    for (std::size_t e = 0; e < a.size(); ++e) {
      auto [j, k] = g.edges()[e];
      CHECK((a[e] * a[e] - id).norm() < 1e-12);
      for (Vertex l = 1; l <= static_cast<Vertex>(n); ++l) {
        const double s = (l == j || l == k) ? -1.0 : 1.0;
        CHECK((a[e] * b[l - 1] - s * b[l - 1] * a[e]).norm() < 1e-12);
      }
      for (std::size_t f = 0; f < a.size(); ++f) {
        auto [l, m] = g.edges()[f];
        const int shared = (j == l) + (k == l) + (j == m) + (k == m);
        const double s = shared % 2 ? -1.0 : 1.0;
        CHECK((a[e] * a[f] - s * a[f] * a[e]).norm() < 1e-12);
      }
    }
    for (const auto& cyc : cycle_basis(g)) CHECK((fock_matrix(loop_monomial(cyc, n)) - id).norm() < 1e-12);
  }
}
