#include <doctest.h>

#include <algorithm>
#include <deque>
#include <random>

#include "fermenc/encodings.hpp"
#include "fermenc/states.hpp"
#include "fermenc/verifier.hpp"
#include "oracles.hpp"

using namespace fermenc;

namespace {

PauliString P(const char* s) { return PauliString::parse(s); }

/// All defining relations of an exact encoding, checked on dense matrices.
bool dense_exact_oracle(const Encoding& enc) {
  const auto& g = enc.graph();
  const auto n = static_cast<Vertex>(g.n_vertices());
  const auto dim = Eigen::Index{1} << enc.n_qubits();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
  std::vector<Eigen::MatrixXcd> a, b;
  for (Vertex k = 1; k <= n; ++k) b.push_back(oracle::dense(enc.vertex_op(k)));
  for (const auto& p : enc.edge_ops()) a.push_back(oracle::dense(p));
  auto close = [](const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) { return (x - y).norm() < 1e-9; };
  auto check_single = [&](const Eigen::MatrixXcd& m) { return close(m, m.adjoint()) && close(m * m, id); };
  for (const auto& m : b)
    if (!check_single(m)) return false;
  for (const auto& m : a)
    if (!check_single(m)) return false;
  for (Vertex j = 0; j < n; ++j)
    for (Vertex k = 0; k < n; ++k)
      if (!close(b[j] * b[k], b[k] * b[j])) return false;
  for (std::size_t e = 0; e < a.size(); ++e) {
    auto [j, k] = g.edges()[e];
    for (Vertex l = 1; l <= n; ++l) {
      const double s = (l == j || l == k) ? -1.0 : 1.0;
      if (!close(a[e] * b[l - 1], s * b[l - 1] * a[e])) return false;
    }
    for (std::size_t f = 0; f < a.size(); ++f) {
      auto [l, m] = g.edges()[f];
      const int shared = (j == l) + (k == l) + (j == m) + (k == m);
      const double s = shared % 2 ? -1.0 : 1.0;
      if (!close(a[e] * a[f], s * a[f] * a[e])) return false;
    }
  }
  for (const auto& cyc : cycle_basis(g)) {
    Eigen::MatrixXcd loop = id;
    std::complex<double> ph(1, 0);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const Vertex x = cyc[i], y = cyc[(i + 1) % cyc.size()];
      const auto e = g.edge_index(x, y);
      loop = loop * (x < y ? a[e] : Eigen::MatrixXcd(-a[e]));
      ph *= std::complex<double>(0, 1);
    }
    if (!close(ph * loop, id)) return false;
  }
  return true;
}

/// A random simple cycle through a random edge: a BFS detour that avoids it.
std::vector<Vertex> random_cycle(const LocalityGraph& g, std::mt19937_64& rng) {
  for (;;) {
    auto [a, b] = g.edges()[rng() % g.n_edges()];
    std::vector<Vertex> parent(g.n_vertices() + 1, 0);
    std::deque<Vertex> queue{b};
    parent[b] = b;
    while (!queue.empty() && !parent[a]) {
      const Vertex v = queue.front();
      queue.pop_front();
      auto nb = g.neighbors(v);
      std::shuffle(nb.begin(), nb.end(), rng);
      for (Vertex w : nb) {
        if (parent[w] || (v == b && w == a)) continue;
        parent[w] = v;
        queue.push_back(w);
      }
    }
    if (!parent[a]) continue;
    std::vector<Vertex> cycle;
    for (Vertex v = a; v != b; v = parent[v]) cycle.push_back(v);
    cycle.push_back(b);
    return cycle;
  }
}

PauliString mutate(const PauliString& p, std::size_t qubit, int shift) {
  static const char kLetters[] = "IXYZ";
  const char cur = p.op(qubit);
  const int idx = static_cast<int>(std::string_view("IXYZ").find(cur));
  return p.with_op(qubit, kLetters[(idx + shift) % 4]);
}

}  // namespace

TEST_CASE("verifier: report structure") {
  const auto enc = tree_encoding(generate_graph("star:3"));
  const auto report = verify_exact(enc);
  CHECK(report.overall());
  CHECK(report.failures().empty());
  const auto summary = report.summary();
  for (const char* id : {"Eq6", "Eq7", "Eq8", "Eq9", "Eq10", "hermiticity", "antisymmetry"}) CHECK(summary.count(id) == (std::string(id) != "Eq10"));
  CHECK(summary.at("Eq6").checked == 6);
  CHECK(summary.at("Eq7").checked == 3 * 4);
  CHECK(summary.at("Eq8").checked == 3);
  CHECK(summary.at("Eq9").checked == 7);
  CHECK(std::is_sorted(report.checks.begin(), report.checks.end(), [](const auto& x, const auto& y) {
    return std::tie(x.relation, x.subjects) < std::tie(y.relation, y.subjects);
  }));
}

TEST_CASE("verifier: a corrupted tree encoding names the broken pair") {
  const auto enc = tree_encoding(generate_graph("star:3"));
  const auto bad = enc.with_edge_op(1, P("+1·XIIXI"));
  const auto report = verify_exact(bad);
  CHECK_FALSE(report.overall());
  const auto fails = report.failures();
  REQUIRE(fails.size() == 1);
  CHECK(fails[0].relation == "Eq8");
  CHECK(fails[0].subjects == std::vector<std::string>{"A(1,2)", "A(1,3)"});
  CHECK(fails[0].witness.find("commute, expected to anticommute") != std::string::npos);
}

TEST_CASE("verifier: non-Hermitian operators are reported") {
  const auto enc = jordan_wigner(generate_graph("path:2"));
  const auto bad = enc.with_vertex_op(1, P("+i·ZI"));
  const auto fails = verify_exact(bad).failures();
  REQUIRE(fails.size() == 2);
  CHECK(fails[0].relation == "Eq9");
  CHECK(fails[1].relation == "hermiticity");
}

TEST_CASE("verifier: loop relations") {
  const auto g = generate_graph("ring:4");
  // JW on a ring is exact
  CHECK(verify_exact(jordan_wigner(g)).overall());
  // dropping the closing string breaks only the loop
  const auto enc = jordan_wigner(g);
  const auto e = g.edge_index(1, 4);
  const auto bad = enc.with_edge_op(e, enc.edge_ops()[e].negated());
  const auto fails = verify_exact(bad).failures();
  REQUIRE(fails.size() == 1);
  CHECK(fails[0].relation == "Eq10");
}

TEST_CASE("verifier: stabilizer membership") {
  const std::vector<PauliString> gens{P("+1·ZZI"), P("+1·IZZ")};
  auto m = stabilizer_membership(P("+1·ZIZ"), gens);
  CHECK(m.member);
  CHECK(m.phase == QuarterPhase::one());
  CHECK(m.used == std::vector<std::size_t>{0, 1});
  m = stabilizer_membership(P("-1·ZIZ"), gens);
  CHECK(m.member);
  CHECK(m.phase == QuarterPhase::minus_one());
  CHECK(stabilizer_membership(P("+1·III"), gens).member);
  CHECK(stabilizer_membership(P("+1·III"), gens).used.empty());
  CHECK_FALSE(stabilizer_membership(P("+1·XII"), gens).member);
  CHECK_FALSE(stabilizer_membership(P("+1·ZII"), gens).member);
  CHECK_THROWS_AS(stabilizer_membership(P("+1·II"), {P("+1·XI"), P("+1·ZI")}), PreconditionError);
  CHECK_THROWS_AS(stabilizer_membership(P("+1·II"), {P("+1·ZZ"), P("-1·ZZ")}), PreconditionError);
  CHECK_THROWS_AS(stabilizer_membership(P("+1·II"), {P("+i·ZZ")}), PreconditionError);
}

TEST_CASE("verifier: membership matches products of random generator subsets") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 200; ++trial) {
    const auto benc = superfast_block_encoding(oracle::random_graph(4 + rng() % 10, 1 + rng() % 6, rng));
    const auto& gens = benc.stabilizers;
    PauliString prod(benc.base.n_qubits());
    std::vector<std::size_t> used;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (rng() & 1u) {
        prod = pauli_mul(prod, gens[i]);
        used.push_back(i);
      }
    const auto sign = (rng() & 1u) ? QuarterPhase::one() : QuarterPhase::minus_one();
    const auto m = stabilizer_membership(prod.scaled(sign), gens);
    CHECK(m.member);
    CHECK(m.phase == sign);
    CHECK(m.used == used);
  }
}

TEST_CASE("verifier: flipping a stabilizer sign breaks the loop relation") {
  auto benc = ring_block_encoding(5);
  benc.stabilizers[0] = benc.stabilizers[0].negated();
  const auto fails = verify_block(benc).failures();
  REQUIRE(fails.size() == 1);
  CHECK(fails[0].relation == "Eq18");
}

TEST_CASE("verifier: operators must preserve the codespace") {
  auto benc = ring_block_encoding(4);
  benc.base = benc.base.with_vertex_op(2, P("+1·IXIII"));
  const auto report = verify_block(benc);
  CHECK_FALSE(report.overall());
  bool closure_failed = false;
  for (const auto& f : report.failures()) closure_failed |= f.relation == "closure";
  CHECK(closure_failed);
}

TEST_CASE("verifier: dense fallback agrees with the symbolic loop check") {
  for (std::size_t n = 3; n <= 8; ++n) {
    auto benc = ring_block_encoding(n);
    CHECK(verify_block(benc, {true, 14}).overall());
    benc.stabilizers[0] = benc.stabilizers[0].negated();
    CHECK_FALSE(verify_block(benc, {true, 14}).overall());
  }
  CHECK(verify_block(superfast_block_encoding(generate_graph("theta:2,2,2")), {true, 14}).overall());
}

TEST_CASE("verifier: fundamental cycles imply every cycle") {
  std::mt19937_64 rng(89);
  int cycles = 0;
  while (cycles < 100) {
    const auto g = oracle::random_graph(4 + rng() % 10, 2 + rng() % 6, rng);
    const auto jw = jordan_wigner(g);
    const auto sf = superfast_block_encoding(g);
    REQUIRE(verify_exact(jw).overall());
    REQUIRE(verify_block(sf).overall());
    for (int c = 0; c < 5; ++c, ++cycles) {
      const auto cyc = random_cycle(g, rng);
      CHECK(encoded_loop(jw, cyc).is_identity());
      const auto m = stabilizer_membership(encoded_loop(sf.base, cyc), sf.stabilizers);
      CHECK(m.member);
      CHECK(m.phase == QuarterPhase::one());
    }
  }
}

TEST_CASE("verifier: single-letter mutations agree with the dense oracle") {
  // A mutation need not break the encoding: changing a letter the relations
  // never see (for instance X -> Y on a leaf qubit touched by one edge only)
  // gives another valid encoding. The verifier must classify both outcomes
  // the same way as the matrix check.
  std::mt19937_64 rng(97);
  int broken = 0, still_valid = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = oracle::random_graph(2 + rng() % 5, rng() % 3, rng);
    const auto enc = is_tree(g) && (rng() & 1u) ? tree_encoding(g) : jordan_wigner(g);
    if (enc.n_qubits() > 8) continue;
    const std::size_t n_ops = g.n_vertices() + g.n_edges();
    const std::size_t which = rng() % n_ops;
    const std::size_t qubit = rng() % enc.n_qubits();
    const int shift = 1 + static_cast<int>(rng() % 3);
    Encoding bad;
    if (which < g.n_vertices()) {
      const auto v = static_cast<Vertex>(which + 1);
      bad = enc.with_vertex_op(v, mutate(enc.vertex_op(v), qubit, shift));
    } else {
      const auto e = which - g.n_vertices();
      bad = enc.with_edge_op(e, mutate(enc.edge_ops()[e], qubit, shift));
    }
    const bool symbolic = verify_exact(bad).overall();
    CHECK(symbolic == dense_exact_oracle(bad));
    (symbolic ? still_valid : broken)++;
  }
  MESSAGE("mutations: ", broken, " broke the encoding, ", still_valid, " left it valid");
  CHECK(broken > still_valid);
}

TEST_CASE("verifier: X to Y on a leaf edge qubit keeps a valid encoding") {
  const auto enc = tree_encoding(generate_graph("path:2"));
  const auto changed = enc.with_edge_op(0, P("+1·XY"));
  CHECK(verify_exact(changed).overall());
  CHECK(dense_exact_oracle(changed));
}
