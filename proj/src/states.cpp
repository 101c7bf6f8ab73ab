#include "fermenc/states.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <set>

#include "fermenc/majorana.hpp"
#include "fermenc/verifier.hpp"

namespace fermenc {

namespace {

using cd = std::complex<double>;

/// p * m, column by column.
Eigen::MatrixXcd apply_left(const PauliString& p, const Eigen::MatrixXcd& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (Eigen::Index c = 0; c < m.cols(); ++c) out.col(c) = fermenc::apply(p, m.col(c));
  return out;
}

void check_qubit_cap(std::size_t n, std::size_t cap) {
  if (n > cap || n > 30)
    throw ResourceError(std::to_string(n) + " qubits exceed the dense cap " + std::to_string(cap));
}

std::size_t local_index(std::size_t b, const std::vector<std::size_t>& qubits) {
  std::size_t a = 0;
  for (std::size_t i = 0; i < qubits.size(); ++i) a |= ((b >> qubits[i]) & 1u) << i;
  return a;
}

std::size_t with_local(std::size_t b, const std::vector<std::size_t>& qubits, std::size_t a) {
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    b &= ~(std::size_t{1} << qubits[i]);
    b |= ((a >> i) & 1u) << qubits[i];
  }
  return b;
}

}  // namespace

Eigen::MatrixXcd codespace_projector(const BlockEncoding& benc, std::size_t cap) {
  const std::size_t n = benc.base.n_qubits();
  check_qubit_cap(n, cap);
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  Eigen::MatrixXcd proj = Eigen::MatrixXcd::Identity(dim, dim);
  for (const auto& s : benc.stabilizers) proj = 0.5 * (proj + apply_left(s, proj));
  return proj;
}

BlockEncoding as_block(const Encoding& enc) { return BlockEncoding{enc, {}}; }

EquivalenceReport equivalence_test(const BlockEncoding& benc, std::size_t n_samples, std::uint64_t seed,
                                   std::size_t cap) {
  const Encoding& enc = benc.base;
  const auto& g = enc.graph();
  const std::size_t modes = g.n_vertices();
  check_qubit_cap(enc.n_qubits(), cap);

  struct Generator {
    std::string label;
    Eigen::MatrixXcd fock;
    PauliString encoded;
  };
  std::vector<Generator> gens;
  for (Vertex k = 1; k <= static_cast<Vertex>(modes); ++k)
    gens.push_back({vertex_label(k), fock_matrix(build_B(k, modes), cap), enc.vertex_op(k)});
  for (std::size_t e = 0; e < g.n_edges(); ++e) {
    auto [j, k] = g.edges()[e];
    gens.push_back({edge_label(j, k), fock_matrix(build_A(j, k, modes), cap), enc.edge_ops()[e]});
  }

  const auto fock_dim = static_cast<Eigen::Index>(std::size_t{1} << modes);
  Eigen::MatrixXcd fock_weight = Eigen::MatrixXcd::Identity(fock_dim, fock_dim);
  EquivalenceReport report;
  // If prod B_k is +-1 times a stabilizer, C holds a single parity sector.
  PauliString parity(enc.n_qubits());
  Eigen::MatrixXcd fock_parity = Eigen::MatrixXcd::Identity(fock_dim, fock_dim);
  for (Vertex k = 1; k <= static_cast<Vertex>(modes); ++k) {
    parity = pauli_mul(parity, enc.vertex_op(k));
    fock_parity = fock_parity * gens[static_cast<std::size_t>(k - 1)].fock;
  }
  const Membership pm = stabilizer_membership(parity, benc.stabilizers);
  if (pm.member && pm.phase.is_real()) {
    const int sigma = pm.phase == QuarterPhase::one() ? 1 : -1;
    report.parity_sector = sigma;
    fock_weight = 0.5 * (fock_weight + static_cast<double>(sigma) * fock_parity);
  }
  const cd fock_norm = fock_weight.trace();

  const Eigen::MatrixXcd proj = codespace_projector(benc, cap);
  const cd rank = proj.trace();

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> length_dist(0, 8);
  std::uniform_int_distribution<std::size_t> letter_dist(0, gens.size() - 1);
  for (std::size_t s = 0; s < n_samples; ++s) {
    const std::size_t len = length_dist(rng);
    Eigen::MatrixXcd fock = Eigen::MatrixXcd::Identity(fock_dim, fock_dim);
    PauliString word(enc.n_qubits());
    std::string text;
    for (std::size_t i = 0; i < len; ++i) {
      const auto& gen = gens[letter_dist(rng)];
      fock = fock * gen.fock;
      word = pauli_mul(word, gen.encoded);
      text += (i ? " " : "") + gen.label;
    }
    const cd lhs = (fock * fock_weight).trace() / fock_norm;
    const Eigen::MatrixXcd dense = to_dense(word, cap);
    const cd rhs = proj.transpose().cwiseProduct(dense).sum() / rank;
    const double dev = std::abs(lhs - rhs);
    report.max_deviation = std::max(report.max_deviation, dev);
    if (dev > 1e-10) {
      if (report.mismatches == 0) report.witness = text.empty() ? "I" : text;
      ++report.mismatches;
    }
    ++report.samples;
  }
  return report;
}

EquivalenceReport equivalence_test(const Encoding& enc, std::size_t n_samples, std::uint64_t seed, std::size_t cap) {
  return equivalence_test(as_block(enc), n_samples, seed, cap);
}

ReferenceState encoded_reference_state(const BlockEncoding& benc, std::size_t cap) {
  Eigen::MatrixXcd proj = codespace_projector(benc, cap);
  for (const auto& b : benc.base.vertex_ops()) proj = 0.5 * (proj + apply_left(b, proj));
  const double rank = proj.trace().real();
  if (rank < 0.5)
    throw ConstructionError("no state of the codespace is a +1 eigenvector of every vertex operator");
  ReferenceState out;
  out.degeneracy = static_cast<std::size_t>(std::llround(rank));
  for (Eigen::Index c = 0; c < proj.cols(); ++c) {
    const double nrm = proj.col(c).norm();
    if (nrm > 1e-8) {
      out.state = proj.col(c) / nrm;
      return out;
    }
  }
  throw ConstructionError("reference projector vanishes on every basis state");
}

Eigen::MatrixXcd involution_exp(const Eigen::MatrixXcd& a, double alpha) {
  return std::cos(alpha) * Eigen::MatrixXcd::Identity(a.rows(), a.cols()) + cd(0, std::sin(alpha)) * a;
}

Eigen::MatrixXcd hermitian_exp(const Eigen::MatrixXcd& h, double alpha) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  const Eigen::VectorXcd phases = (cd(0, alpha) * es.eigenvalues().cast<cd>()).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

std::vector<Edge> greedy_edge_schedule(const LocalityGraph& g) {
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  std::vector<std::vector<std::size_t>> adj(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      auto [p, q] = edges[a];
      auto [r, s] = edges[b];
      if (p == r || p == s || q == r || q == s) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
    }
  // DSatur: most distinct neighbour colours first, then most neighbours, then lowest index
  std::vector<int> colour(m, -1);
  std::vector<std::set<int>> seen(m);
  for (std::size_t step = 0; step < m; ++step) {
    std::size_t pick = m;
    for (std::size_t e = 0; e < m; ++e) {
      if (colour[e] >= 0) continue;
      if (pick == m || seen[e].size() > seen[pick].size() ||
          (seen[e].size() == seen[pick].size() && adj[e].size() > adj[pick].size()))
        pick = e;
    }
    int c = 0;
    while (seen[pick].count(c)) ++c;
    colour[pick] = c;
    for (std::size_t f : adj[pick]) seen[f].insert(c);
  }
  std::vector<std::size_t> order(m);
  for (std::size_t e = 0; e < m; ++e) order[e] = e;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return colour[a] < colour[b]; });
  std::vector<Edge> out;
  for (std::size_t e : order) out.push_back(edges[e]);
  return out;
}

std::size_t schedule_depth(const LocalityGraph& g, const std::vector<Edge>& schedule) {
  std::vector<std::size_t> layer(g.n_vertices(), 0);
  std::size_t depth = 0;
  for (auto [j, k] : schedule) {
    auto& lj = layer.at(static_cast<std::size_t>(j - 1));
    auto& lk = layer.at(static_cast<std::size_t>(k - 1));
    const std::size_t l = std::max(lj, lk) + 1;
    lj = lk = l;
    depth = std::max(depth, l);
  }
  return depth;
}

PhiStateResult example_phi_state(const BlockEncoding& benc, double alpha, const std::vector<Edge>& schedule,
                                 std::size_t cap) {
  const Encoding& enc = benc.base;
  const auto& g = enc.graph();
  const std::size_t modes = g.n_vertices();
  std::set<Edge> used;
  for (auto [a, b] : schedule) {
    const Edge e = make_edge(a, b);
    if (!g.has_edge(e.first, e.second)) throw PreconditionError("schedule entry is not an edge");
    if (!used.insert(e).second) throw PreconditionError("schedule repeats an edge");
  }
  if (used.size() != g.n_edges()) throw PreconditionError("schedule must cover every edge");

  PhiStateResult out;
  const auto fock_dim = static_cast<Eigen::Index>(std::size_t{1} << modes);
  out.fermionic = Eigen::VectorXcd::Zero(fock_dim);
  out.fermionic(0) = 1.0;
  out.encoded = encoded_reference_state(benc, cap).state;
  const double c = std::cos(alpha);
  const cd is(0, std::sin(alpha));
  for (auto [a, b] : schedule) {
    const Edge e = make_edge(a, b);
    const Eigen::MatrixXcd fa = fock_matrix(build_A(e.first, e.second, modes), cap);
    const Eigen::MatrixXcd u = involution_exp(fa, alpha);
    out.exp_crosscheck = std::max(out.exp_crosscheck, (u - hermitian_exp(fa, alpha)).norm());
    out.fermionic = u * out.fermionic;
    const PauliString ea = enc.edge_op(e.first, e.second);
    out.encoded = c * out.encoded + is * fermenc::apply(ea, out.encoded);
  }
  out.depth = schedule_depth(g, schedule);

  auto record = [&](const std::string& label, const Eigen::MatrixXcd& f, const PauliString& p) {
    ExpectationPair x{label, out.fermionic.dot(f * out.fermionic).real(), out.encoded.dot(fermenc::apply(p, out.encoded)).real()};
    out.max_deviation = std::max(out.max_deviation, std::abs(x.fermionic - x.encoded));
    out.expectations.push_back(std::move(x));
  };
  for (Vertex k = 1; k <= static_cast<Vertex>(modes); ++k)
    record(vertex_label(k), fock_matrix(build_B(k, modes), cap), enc.vertex_op(k));
  for (std::size_t e = 0; e < g.n_edges(); ++e) {
    auto [j, k] = g.edges()[e];
    record(edge_label(j, k), fock_matrix(build_A(j, k, modes), cap), enc.edge_ops()[e]);
  }
  return out;
}

Eigen::VectorXcd product_state(const std::vector<Eigen::VectorXcd>& local, const QubitLayout& layout) {
  const std::size_t dim = std::size_t{1} << layout.total_qubits();
  Eigen::VectorXcd psi(static_cast<Eigen::Index>(dim));
  for (std::size_t b = 0; b < dim; ++b) {
    cd amp = 1.0;
    for (std::size_t v = 0; v < local.size(); ++v)
      amp *= local[v](static_cast<Eigen::Index>(local_index(b, layout.qubits(static_cast<Vertex>(v + 1)))));
    psi(static_cast<Eigen::Index>(b)) = amp;
  }
  return psi;
}

Eigen::MatrixXcd reduced_density_matrix(const Eigen::VectorXcd& psi, const QubitLayout& layout, Vertex v) {
  const auto& qubits = layout.qubits(v);
  const std::size_t ld = std::size_t{1} << qubits.size();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(ld), static_cast<Eigen::Index>(ld));
  for (std::size_t b = 0; b < static_cast<std::size_t>(psi.size()); ++b) {
    const std::size_t a = local_index(b, qubits);
    for (std::size_t a2 = 0; a2 < ld; ++a2)
      rho(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a2)) +=
          psi(static_cast<Eigen::Index>(b)) * std::conj(psi(static_cast<Eigen::Index>(with_local(b, qubits, a2))));
  }
  return rho;
}

ProductSearchResult product_state_search(const Eigen::MatrixXcd& projector, const QubitLayout& layout,
                                         const ProductSearchOptions& opts) {
  if (opts.restarts < 1) throw PreconditionError("at least one restart is needed");
  const std::size_t n = layout.total_qubits();
  check_qubit_cap(n, 30);
  if (projector.rows() != static_cast<Eigen::Index>(std::size_t{1} << n) || projector.cols() != projector.rows())
    throw DimensionError("projector does not match the layout");
  const std::size_t nv = layout.n_vertices();

  ProductSearchResult result;
  result.best_overlap = -1.0;
  for (std::size_t r = 0; r < opts.restarts; ++r) {
    std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                      static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(r >> 32)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal;
    std::vector<Eigen::VectorXcd> local(nv);
    for (std::size_t v = 0; v < nv; ++v) {
      const auto ld = static_cast<Eigen::Index>(std::size_t{1} << layout.qubits(static_cast<Vertex>(v + 1)).size());
      local[v].resize(ld);
      for (Eigen::Index i = 0; i < ld; ++i) local[v](i) = cd(normal(rng), normal(rng));
      local[v].normalize();
    }
    Eigen::VectorXcd psi = product_state(local, layout);
    double current = psi.dot(projector * psi).real();
    std::vector<double> history;
    bool converged = false;
    for (std::size_t it = 0; it < opts.max_iters; ++it) {
      const double before = current;
      for (std::size_t v = 0; v < nv; ++v) {
        // effective operator on vertex v with every other local state contracted
        const auto ld = local[v].size();
        std::vector<Eigen::VectorXcd> basis(static_cast<std::size_t>(ld));
        std::vector<Eigen::VectorXcd> image(static_cast<std::size_t>(ld));
        auto trial = local;
        for (Eigen::Index a = 0; a < ld; ++a) {
          trial[v] = Eigen::VectorXcd::Unit(ld, a);
          basis[static_cast<std::size_t>(a)] = product_state(trial, layout);
          image[static_cast<std::size_t>(a)] = projector * basis[static_cast<std::size_t>(a)];
        }
        Eigen::MatrixXcd eff(ld, ld);
        for (Eigen::Index a = 0; a < ld; ++a)
          for (Eigen::Index a2 = 0; a2 < ld; ++a2)
            eff(a2, a) = basis[static_cast<std::size_t>(a2)].dot(image[static_cast<std::size_t>(a)]);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (eff + eff.adjoint()));
        const double top = es.eigenvalues()(ld - 1);
        if (top < current - 1e-12) result.monotone = false;
        local[v] = es.eigenvectors().col(ld - 1);
        current = top;
      }
      history.push_back(current);
      if (current - before < 1e-12) {
        converged = true;
        break;
      }
    }
    ++result.restarts_used;
    if (current > result.best_overlap) {
      result.best_overlap = current;
      result.best_state = local;
      result.best_restart = r;
      result.converged = converged;
      result.history = std::move(history);
    }
  }
  return result;
}

}  // namespace fermenc
