#include "fermenc/verifier.hpp"

#include <algorithm>
#include <tuple>

#include "fermenc/states.hpp"

namespace fermenc {

bool RelationReport::overall() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.pass; });
}

std::map<std::string, RelationTally> RelationReport::summary() const {
  std::map<std::string, RelationTally> out;
  for (const auto& c : checks) {
    auto& t = out[c.relation];
    ++t.checked;
    if (!c.pass) ++t.failed;
  }
  return out;
}

std::vector<RelationCheck> RelationReport::failures() const {
  std::vector<RelationCheck> out;
  for (const auto& c : checks)
    if (!c.pass) out.push_back(c);
  return out;
}

namespace {

/// Relation ids used by the two report flavours.
struct RelationNames {
  const char* vertex_commute;
  const char* edge_vertex;
  const char* edge_edge;
  const char* hermitian;
  const char* squares;
  const char* loops;
};

constexpr RelationNames kExactNames{"Eq6", "Eq7", "Eq8", "hermiticity", "Eq9", "Eq10"};
constexpr RelationNames kBlockNames{"Eq13", "Eq14", "Eq15", "Eq16", "Eq17", "Eq18"};

const char* commutation_word(bool anticommute) { return anticommute ? "anticommute" : "commute"; }

class ReportBuilder {
 public:
  void add(std::string relation, std::vector<std::string> subjects, bool pass, std::string witness = {}) {
    report_.checks.push_back({std::move(relation), std::move(subjects), pass, pass ? std::string() : std::move(witness)});
  }
  RelationReport finish() {
    std::sort(report_.checks.begin(), report_.checks.end(), [](const RelationCheck& a, const RelationCheck& b) {
      return std::tie(a.relation, a.subjects) < std::tie(b.relation, b.subjects);
    });
    return std::move(report_);
  }

 private:
  RelationReport report_;
};

void check_sign_pattern(const Encoding& enc, const RelationNames& names, ReportBuilder& out) {
  const auto& g = enc.graph();
  const auto n = static_cast<Vertex>(g.n_vertices());
  auto pair_check = [&](const char* rel, const std::string& la, const PauliString& a, const std::string& lb,
                        const PauliString& b, bool expect_anti) {
    const bool anti = !commutes(a, b);
    out.add(rel, {la, lb}, anti == expect_anti,
            la + " = " + a.str() + " and " + lb + " = " + b.str() + " " + commutation_word(anti) + ", expected to " +
                commutation_word(expect_anti));
  };
  for (Vertex j = 1; j <= n; ++j)
    for (Vertex k = j + 1; k <= n; ++k)
      pair_check(names.vertex_commute, vertex_label(j), enc.vertex_op(j), vertex_label(k), enc.vertex_op(k), false);
  const auto& edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [j, k] = edges[e];
    for (Vertex l = 1; l <= n; ++l)
      pair_check(names.edge_vertex, edge_label(j, k), enc.edge_ops()[e], vertex_label(l), enc.vertex_op(l),
                 l == j || l == k);
    for (std::size_t f = e + 1; f < edges.size(); ++f) {
      auto [l, m] = edges[f];
      const int shared = (j == l) + (j == m) + (k == l) + (k == m);
      pair_check(names.edge_edge, edge_label(j, k), enc.edge_ops()[e], edge_label(l, m), enc.edge_ops()[f],
                 shared % 2 == 1);
    }
  }
}

void check_single_operators(const Encoding& enc, const RelationNames& names, ReportBuilder& out) {
  const auto& g = enc.graph();
  auto single = [&](const std::string& label, const PauliString& p) {
    out.add(names.hermitian, {label}, p.is_hermitian(), label + " = " + p.str() + " is not Hermitian");
    const PauliString sq = pauli_mul(p, p);
    out.add(names.squares, {label}, sq.is_identity(), label + " squared is " + sq.str());
  };
  for (Vertex k = 1; k <= static_cast<Vertex>(g.n_vertices()); ++k) single(vertex_label(k), enc.vertex_op(k));
  for (std::size_t e = 0; e < g.n_edges(); ++e) {
    auto [j, k] = g.edges()[e];
    single(edge_label(j, k), enc.edge_ops()[e]);
    const PauliString back = enc.edge_op(k, j);
    out.add("antisymmetry", {edge_label(j, k)}, back == enc.edge_ops()[e].negated(),
            edge_label(k, j) + " = " + back.str() + " is not the negation of " + enc.edge_ops()[e].str());
  }
}

std::string cycle_label(const std::vector<Vertex>& cycle) {
  std::string s = "loop(";
  for (std::size_t i = 0; i < cycle.size(); ++i) s += (i ? "," : "") + std::to_string(cycle[i]);
  return s + ")";
}

}  // namespace

RelationReport verify_exact(const Encoding& enc) {
  ReportBuilder out;
  check_sign_pattern(enc, kExactNames, out);
  check_single_operators(enc, kExactNames, out);
  for (const auto& cycle : cycle_basis(enc.graph())) {
    const PauliString loop = encoded_loop(enc, cycle);
    out.add(kExactNames.loops, {cycle_label(cycle)}, loop.is_identity(), "loop product is " + loop.str());
  }
  return out.finish();
}

RelationReport verify_block(const BlockEncoding& benc, const BlockVerifyOptions& opts) {
  ReportBuilder out;
  const Encoding& enc = benc.base;
  check_sign_pattern(enc, kBlockNames, out);
  check_single_operators(enc, kBlockNames, out);

  const auto& stabs = benc.stabilizers;
  bool usable = true;
  for (std::size_t s = 0; s < stabs.size(); ++s) {
    const auto label = stabilizer_label(s);
    const bool ok = stabs[s].n_qubits() == enc.n_qubits() && stabs[s].is_hermitian();
    out.add("stabilizers", {label}, ok, label + " = " + stabs[s].str() + " is not a Hermitian Pauli on the code qubits");
    usable = usable && ok;
    if (!ok) continue;
    for (std::size_t t = s + 1; t < stabs.size(); ++t) {
      const bool c = commutes(stabs[s], stabs[t]);
      out.add("stabilizers", {label, stabilizer_label(t)}, c, label + " and " + stabilizer_label(t) + " anticommute");
      usable = usable && c;
    }
    auto closure = [&](const std::string& op_label, const PauliString& p) {
      out.add("closure", {op_label, label}, commutes(p, stabs[s]),
              op_label + " = " + p.str() + " anticommutes with " + label + " = " + stabs[s].str());
    };
    for (Vertex k = 1; k <= static_cast<Vertex>(enc.graph().n_vertices()); ++k)
      closure(vertex_label(k), enc.vertex_op(k));
    for (std::size_t e = 0; e < enc.graph().n_edges(); ++e) {
      auto [j, k] = enc.graph().edges()[e];
      closure(edge_label(j, k), enc.edge_ops()[e]);
    }
  }
  if (usable) {
    try {
      stabilizer_membership(PauliString(enc.n_qubits()), stabs);
    } catch (const PreconditionError& err) {
      out.add("stabilizers", {"independence"}, false, err.what());
      usable = false;
    }
  }

  const auto cycles = cycle_basis(enc.graph());
  for (const auto& cycle : cycles) {
    const PauliString loop = encoded_loop(enc, cycle);
    if (!usable) {
      out.add(kBlockNames.loops, {cycle_label(cycle)}, false, "stabilizer generators unusable; loop is " + loop.str());
      continue;
    }
    const Membership m = stabilizer_membership(loop, stabs);
    std::string witness;
    if (!m.member) {
      witness = "loop product " + loop.str() + " is not in the stabilizer group";
    } else if (m.phase != QuarterPhase::one()) {
      witness = "loop product " + loop.str() + " is " + m.phase.str() + " times a stabilizer";
    }
    out.add(kBlockNames.loops, {cycle_label(cycle)}, witness.empty(), witness);
  }

  if (opts.dense_fallback) {
    if (enc.n_qubits() > opts.dense_cap) throw ResourceError("dense fallback exceeds the qubit cap");
    const Eigen::MatrixXcd proj = codespace_projector(benc, opts.dense_cap);
    for (const auto& cycle : cycles) {
      const Eigen::MatrixXcd loop = to_dense(encoded_loop(enc, cycle), opts.dense_cap);
      const double dev = ((loop - Eigen::MatrixXcd::Identity(loop.rows(), loop.cols())) * proj).norm();
      out.add(kBlockNames.loops, {cycle_label(cycle), "dense"}, dev <= 1e-10,
              "||(L - I) P_C|| = " + std::to_string(dev));
    }
  }
  return out.finish();
}

Membership stabilizer_membership(const PauliString& p, const std::vector<PauliString>& gens) {
  const std::size_t n = p.n_qubits();
  // Reduced rows with the generator combination each one stands for.
  struct Row {
    PauliString op;
    BitVector combo;
    std::size_t pivot;
  };
  auto first_bit = [n](const PauliString& q) -> std::size_t {
    for (std::size_t i = 0; i < n; ++i)
      if (q.x().test(i)) return i;
    for (std::size_t i = 0; i < n; ++i)
      if (q.z().test(i)) return n + i;
    return 2 * n;
  };
  auto has_bit = [n](const PauliString& q, std::size_t bit) { return bit < n ? q.x().test(bit) : q.z().test(bit - n); };

  std::vector<Row> rows;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& gi = gens[i];
    if (gi.n_qubits() != n) throw DimensionError("generator on a different number of qubits");
    if (!gi.is_hermitian()) throw PreconditionError("generator " + gi.str() + " is not Hermitian");
    for (std::size_t j = 0; j < i; ++j)
      if (!commutes(gi, gens[j])) throw PreconditionError("generators " + std::to_string(j + 1) + " and " +
                                                          std::to_string(i + 1) + " anticommute");
    Row r{gi, BitVector(gens.size()), 0};
    r.combo.set(i);
    for (const auto& prev : rows)
      if (has_bit(r.op, prev.pivot)) {
        r.op = pauli_mul(r.op, prev.op);
        r.combo ^= prev.combo;
      }
    r.pivot = first_bit(r.op);
    if (r.pivot == 2 * n) throw PreconditionError("generator " + std::to_string(i + 1) + " depends on the others");
    rows.push_back(std::move(r));
  }

  PauliString rest = p;
  BitVector combo(gens.size());
  for (const auto& r : rows)
    if (has_bit(rest, r.pivot)) {
      rest = pauli_mul(rest, r.op);
      combo ^= r.combo;
    }
  Membership m;
  if (!rest.is_identity_up_to_phase()) return m;
  // p * R = phase * I with R a product of commuting involutions, so p = phase * R.
  m.member = true;
  m.phase = rest.phase();
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (combo.test(i)) m.used.push_back(i);
  return m;
}

}  // namespace fermenc
