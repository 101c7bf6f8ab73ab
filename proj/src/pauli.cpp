#include "fermenc/pauli.hpp"

#include <algorithm>
#include <utility>

#include "fermenc/errors.hpp"

namespace fermenc {

namespace {

constexpr std::string_view kDot = "\xC2\xB7";  // U+00B7

void require_same_size(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits())
    throw DimensionError("Pauli strings act on " + std::to_string(a.n_qubits()) + " and " +
                         std::to_string(b.n_qubits()) + " qubits");
}

}  // namespace

std::complex<double> QuarterPhase::value() const {
  switch (k_) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

std::string QuarterPhase::str() const {
  static constexpr const char* kNames[] = {"+1", "+i", "-1", "-i"};
  return kNames[k_];
}

PauliString::PauliString(BitVector x, BitVector z, QuarterPhase phase)
    : x_(std::move(x)), z_(std::move(z)), phase_(phase) {
  if (x_.size() != z_.size()) throw DimensionError("x and z masks differ in length");
}

PauliString PauliString::single(std::size_t n_qubits, std::size_t qubit, char op) {
  if (qubit >= n_qubits) throw DimensionError("qubit index out of range");
  return PauliString(n_qubits).with_op(qubit, op);
}

char PauliString::op(std::size_t qubit) const {
  const bool x = x_.test(qubit);
  const bool z = z_.test(qubit);
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

PauliString PauliString::with_op(std::size_t qubit, char op) const {
  PauliString out = *this;
  switch (op) {
    case 'I': out.x_.set(qubit, false); out.z_.set(qubit, false); break;
    case 'X': out.x_.set(qubit, true); out.z_.set(qubit, false); break;
    case 'Y': out.x_.set(qubit, true); out.z_.set(qubit, true); break;
    case 'Z': out.x_.set(qubit, false); out.z_.set(qubit, true); break;
    default: throw ParseError(std::string("not a Pauli letter: ") + op);
  }
  return out;
}

std::size_t PauliString::weight() const {
  std::size_t w = 0;
  for (std::size_t q = 0; q < n_qubits(); ++q) w += (x_.test(q) || z_.test(q)) ? 1 : 0;
  return w;
}

std::string PauliString::letters() const {
  std::string s;
  s.reserve(n_qubits());
  for (std::size_t q = 0; q < n_qubits(); ++q) s.push_back(op(q));
  return s;
}

std::string PauliString::str() const { return phase_.str() + std::string(kDot) + letters(); }

PauliString PauliString::parse(std::string_view text) {
  std::size_t pos;
  std::size_t sep_len;
  if ((pos = text.find(kDot)) != std::string_view::npos) {
    sep_len = kDot.size();
  } else if ((pos = text.find('*')) != std::string_view::npos) {
    sep_len = 1;
  } else {
    throw ParseError("missing phase separator in Pauli string '" + std::string(text) + "'");
  }
  const std::string_view head = text.substr(0, pos);
  const std::string_view body = text.substr(pos + sep_len);
  QuarterPhase phase;
  if (head == "+1" || head == "1") {
    phase = QuarterPhase::one();
  } else if (head == "+i" || head == "i") {
    phase = QuarterPhase::i();
  } else if (head == "-1") {
    phase = QuarterPhase::minus_one();
  } else if (head == "-i") {
    phase = QuarterPhase::minus_i();
  } else {
    throw ParseError("bad phase '" + std::string(head) + "'");
  }
  PauliString p(body.size());
  for (std::size_t q = 0; q < body.size(); ++q) p = p.with_op(q, body[q]);
  return p.with_phase(phase);
}

PauliString pauli_mul(const PauliString& a, const PauliString& b) {
  require_same_size(a, b);
  // a = i^pa i^|xa&za| X^xa Z^za; moving Z^za past X^xb costs (-1)^<za,xb>.
  BitVector x = a.x() ^ b.x();
  BitVector z = a.z() ^ b.z();
  const std::size_t k = a.phase().exponent() + b.phase().exponent() + and_count(a.x(), a.z()) +
                        and_count(b.x(), b.z()) + 2 * and_count(a.z(), b.x()) + 4 * x.size() -
                        and_count(x, z);
  return PauliString(std::move(x), std::move(z), QuarterPhase(static_cast<int>(k % 4)));
}

Commutation commutation(const PauliString& a, const PauliString& b) {
  require_same_size(a, b);
  const std::size_t form = and_count(a.x(), b.z()) + and_count(a.z(), b.x());
  return (form & 1u) ? Commutation::anticommutes : Commutation::commutes;
}

QubitLayout::QubitLayout(std::vector<std::vector<std::size_t>> vertex_qubits)
    : vertex_qubits_(std::move(vertex_qubits)) {
  std::size_t total = 0;
  for (const auto& qs : vertex_qubits_) total += qs.size();
  owner_.assign(total, 0);
  for (std::size_t v = 0; v < vertex_qubits_.size(); ++v) {
    for (std::size_t q : vertex_qubits_[v]) {
      if (q >= total) throw PreconditionError("qubit index " + std::to_string(q) + " outside layout");
      if (owner_[q] != 0) throw PreconditionError("qubit " + std::to_string(q) + " assigned twice");
      owner_[q] = static_cast<Vertex>(v + 1);
    }
  }
}

QubitLayout QubitLayout::consecutive(const std::vector<std::size_t>& counts) {
  std::vector<std::vector<std::size_t>> lists;
  std::size_t next = 0;
  for (std::size_t c : counts) {
    std::vector<std::size_t> qs(c);
    for (auto& q : qs) q = next++;
    lists.push_back(std::move(qs));
  }
  return QubitLayout(std::move(lists));
}

std::vector<Vertex> support(const PauliString& p, const QubitLayout& layout) {
  if (p.n_qubits() != layout.total_qubits()) throw DimensionError("Pauli string does not match layout");
  std::vector<Vertex> out;
  for (std::size_t q = 0; q < p.n_qubits(); ++q)
    if (p.x().test(q) || p.z().test(q)) out.push_back(layout.owner(q));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap || n > 30)
    throw ResourceError("dense conversion of " + std::to_string(n) + " qubits exceeds cap " + std::to_string(cap));
}

// P|b> = i^(phase + |x&z|) (-1)^<z,b> |b ^ x>
struct BasisAction {
  std::uint64_t xmask;
  std::uint64_t zmask;
  std::complex<double> scale;
};

BasisAction basis_action(const PauliString& p) {
  const int k = p.phase().exponent() + static_cast<int>(and_count(p.x(), p.z()));
  return {p.x().low_word(), p.z().low_word(), QuarterPhase(k).value()};
}

}  // namespace

Eigen::MatrixXcd to_dense(const PauliString& p, std::size_t cap) {
  check_cap(p.n_qubits(), cap);
  const std::size_t dim = std::size_t{1} << p.n_qubits();
  const BasisAction act = basis_action(p);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint64_t b = 0; b < dim; ++b) {
    const double sign = (std::popcount(act.zmask & b) & 1) ? -1.0 : 1.0;
    m(static_cast<Eigen::Index>(b ^ act.xmask), static_cast<Eigen::Index>(b)) = sign * act.scale;
  }
  return m;
}

Eigen::VectorXcd apply(const PauliString& p, const Eigen::VectorXcd& psi) {
  const std::size_t dim = std::size_t{1} << p.n_qubits();
  if (static_cast<std::size_t>(psi.size()) != dim) throw DimensionError("state size does not match Pauli string");
  const BasisAction act = basis_action(p);
  Eigen::VectorXcd out(psi.size());
  for (std::uint64_t b = 0; b < dim; ++b) {
    const double sign = (std::popcount(act.zmask & b) & 1) ? -1.0 : 1.0;
    out(static_cast<Eigen::Index>(b ^ act.xmask)) = sign * act.scale * psi(static_cast<Eigen::Index>(b));
  }
  return out;
}

}  // namespace fermenc
