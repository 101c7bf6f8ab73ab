#include "fermenc/majorana.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include "fermenc/errors.hpp"

namespace fermenc {

MajoranaMonomial::MajoranaMonomial(std::size_t n_modes, BitVector mask, QuarterPhase phase)
    : n_modes_(n_modes), mask_(std::move(mask)), phase_(phase) {
  if (mask_.size() != 2 * n_modes_) throw DimensionError("Majorana mask must have 2N bits");
}

MajoranaMonomial MajoranaMonomial::single(std::size_t n_modes, std::size_t index) {
  if (index < 1 || index > 2 * n_modes) throw PreconditionError("Majorana index out of range");
  BitVector mask(2 * n_modes);
  mask.set(index - 1);
  return {n_modes, std::move(mask), QuarterPhase::one()};
}

std::vector<std::size_t> MajoranaMonomial::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_.test(i)) out.push_back(i + 1);
  return out;
}

std::string MajoranaMonomial::str() const {
  std::string s = phase_.str() + "\xC2\xB7";
  const auto idx = indices();
  if (idx.empty()) return s + "I";
  for (std::size_t t = 0; t < idx.size(); ++t) {
    if (t) s += ' ';
    s += "c" + std::to_string(idx[t]);
  }
  return s;
}

MajoranaMonomial majorana_mul(const MajoranaMonomial& a, const MajoranaMonomial& b) {
  if (a.n_modes() != b.n_modes()) throw DimensionError("Majorana monomials on different mode counts");
  // Each c_j of b moves left past every c_i of a with i > j.
  std::size_t swaps = 0;
  for (std::size_t j = 0; j < b.mask().size(); ++j)
    if (b.mask().test(j)) swaps += a.mask().count_above(j);
  const QuarterPhase sign = (swaps & 1u) ? QuarterPhase::minus_one() : QuarterPhase::one();
  return {a.n_modes(), a.mask() ^ b.mask(), a.phase() * b.phase() * sign};
}

MajoranaMonomial build_A(Vertex j, Vertex k, std::size_t n_modes) {
  const auto n = static_cast<Vertex>(n_modes);
  if (j == k) throw PreconditionError("edge operator needs two distinct vertices");
  if (j < 1 || k < 1 || j > n || k > n) throw PreconditionError("edge vertex out of range");
  const auto cj = MajoranaMonomial::single(n_modes, static_cast<std::size_t>(j));
  const auto ck = MajoranaMonomial::single(n_modes, static_cast<std::size_t>(k));
  return majorana_mul(cj, ck).scaled(QuarterPhase::minus_i());
}

MajoranaMonomial build_B(Vertex k, std::size_t n_modes) {
  if (k < 1 || k > static_cast<Vertex>(n_modes)) throw PreconditionError("vertex out of range");
  const auto ck = MajoranaMonomial::single(n_modes, static_cast<std::size_t>(k));
  const auto cnk = MajoranaMonomial::single(n_modes, n_modes + static_cast<std::size_t>(k));
  return majorana_mul(ck, cnk).scaled(QuarterPhase::minus_i());
}

MajoranaMonomial loop_monomial(const std::vector<Vertex>& cycle, std::size_t n_modes) {
  if (cycle.size() < 2) throw PreconditionError("a closed path needs at least two vertices");
  MajoranaMonomial acc(n_modes);
  for (std::size_t t = 0; t < cycle.size(); ++t) {
    const Vertex a = cycle[t];
    const Vertex b = cycle[(t + 1) % cycle.size()];
    if (a == b) throw PreconditionError("consecutive vertices of a closed path must differ");
    acc = majorana_mul(acc, build_A(a, b, n_modes));
  }
  return acc.scaled(QuarterPhase(static_cast<int>(cycle.size() % 4)));
}

Eigen::MatrixXcd fock_majorana(std::size_t n_modes, std::size_t index) {
  if (index < 1 || index > 2 * n_modes) throw PreconditionError("Majorana index out of range");
  using C = std::complex<double>;
  Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  Eigen::Matrix2cd x;
  x << 0, 1, 1, 0;
  Eigen::Matrix2cd y;
  y << 0, C(0, -1), C(0, 1), 0;
  Eigen::Matrix2cd z;
  z << 1, 0, 0, -1;
  const std::size_t mode = (index - 1) % n_modes;  // 0-based
  const bool second = index > n_modes;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  // Kronecker order: highest mode leftmost so that mode q is bit q.
  for (std::size_t q = n_modes; q-- > 0;) {
    const Eigen::Matrix2cd& f = q < mode ? z : (q == mode ? (second ? y : x) : id);
    Eigen::MatrixXcd next = Eigen::kroneckerProduct(m, f).eval();
    m = std::move(next);
  }
  return m;
}

Eigen::MatrixXcd fock_matrix(const MajoranaMonomial& m, std::size_t cap) {
  if (m.n_modes() > cap / 2 && m.n_modes() > 0)
    throw ResourceError("Fock matrix of " + std::to_string(m.n_modes()) + " modes exceeds cap");
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << m.n_modes());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(dim, dim) * m.phase().value();
  for (std::size_t i : m.indices()) out = out * fock_majorana(m.n_modes(), i);
  return out;
}

}  // namespace fermenc
