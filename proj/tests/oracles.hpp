#pragma once
// Independent reference implementations used only by the tests.

#include <algorithm>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fermenc/graph.hpp"
#include "fermenc/pauli.hpp"

namespace oracle {

using cd = std::complex<double>;

inline Eigen::Matrix2cd letter_matrix(char c) {
  Eigen::Matrix2cd m;
  switch (c) {
    case 'X':
      m << 0, 1, 1, 0;
      break;
    case 'Y':
      m << 0, cd(0, -1), cd(0, 1), 0;
      break;
    case 'Z':
      m << 1, 0, 0, -1;
      break;
    default:
      m << 1, 0, 0, 1;
  }
  return m;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Dense matrix from the textual letters, qubit 0 being the least significant index bit.
inline Eigen::MatrixXcd dense(const std::string& letters, cd phase) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (char c : letters) m = kron(letter_matrix(c), m);
  return phase * m;
}

inline Eigen::MatrixXcd dense(const fermenc::PauliString& p) { return dense(p.letters(), p.phase().value()); }

inline fermenc::PauliString random_pauli(std::size_t n, std::mt19937_64& rng) {
  static const char kLetters[] = "IXYZ";
  std::string s;
  for (std::size_t q = 0; q < n; ++q) s += kLetters[rng() % 4];
  static const char* kPhases[] = {"+1", "+i", "-1", "-i"};
  return fermenc::PauliString::parse(std::string(kPhases[rng() % 4]) + "·" + s);
}

/// Uniformly random labelled recursive tree on n vertices.
inline fermenc::LocalityGraph random_tree(std::size_t n, std::mt19937_64& rng) {
  std::vector<fermenc::Vertex> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = static_cast<fermenc::Vertex>(i + 1);
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<fermenc::Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.push_back(fermenc::make_edge(label[v], label[rng() % v]));
  return fermenc::LocalityGraph(n, edges);
}

/// Random connected graph: a random tree plus `extra` further edges.
inline fermenc::LocalityGraph random_graph(std::size_t n, std::size_t extra, std::mt19937_64& rng) {
  auto tree = random_tree(n, rng);
  auto edges = tree.edges();
  for (std::size_t tries = 0; tries < 50 * (extra + 1) && edges.size() < tree.n_edges() + extra; ++tries) {
    const auto a = static_cast<fermenc::Vertex>(rng() % n + 1);
    const auto b = static_cast<fermenc::Vertex>(rng() % n + 1);
    if (a == b) continue;
    const auto e = fermenc::make_edge(a, b);
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  }
  return fermenc::LocalityGraph(n, edges);
}

/// All-pairs distances by Floyd-Warshall (0-based).
inline std::vector<std::vector<int>> all_distances(const fermenc::LocalityGraph& g) {
  const std::size_t n = g.n_vertices();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [a, b] : g.edges()) d[a - 1][b - 1] = d[b - 1][a - 1] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

}  // namespace oracle
