#include "fermenc/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fermenc/analysis.hpp"
#include "fermenc/encodings.hpp"
#include "fermenc/states.hpp"
#include "fermenc/verifier.hpp"

namespace fermenc {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string graph;
  std::string positional;
  std::string method = "superfast";
  std::string format = "text";
  std::uint64_t seed = 0;
  std::size_t restarts = 100;
  std::size_t max_iters = 200;
  std::size_t samples = 500;
  std::size_t budget = 0;  // 0 keeps the library defaults
  std::size_t dense_cap = kDefaultDenseCap;
  std::string mutate;
};

/// A problem with the invocation rather than a verification failure.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_natural_ring(const LocalityGraph& g) {
  const auto n = static_cast<Vertex>(g.n_vertices());
  if (n < 3 || g.n_edges() != g.n_vertices()) return false;
  for (Vertex v = 1; v < n; ++v)
    if (!g.has_edge(v, v + 1)) return false;
  return g.has_edge(1, n);
}

/// Either flavour, with `block` telling which verifier applies.
struct Built {
  BlockEncoding enc;
  bool block = false;
};

Built build(const LocalityGraph& g, const std::string& method) {
  if (method == "jw") return {as_block(jordan_wigner(g)), false};
  if (method == "tree") {
    if (!is_tree(g)) throw UsageError("method tree: the graph has a cycle, and no local exact encoding exists on a "
                                      "graph with a cycle; use --method superfast or ring");
    return {as_block(tree_encoding(g)), false};
  }
  if (method == "ring") {
    if (!is_natural_ring(g)) throw UsageError("method ring: the graph must be the ring 1-2-...-N-1 with N >= 3");
    return {ring_block_encoding(g.n_vertices()), true};
  }
  if (method == "superfast") return {superfast_block_encoding(g), true};
  throw UsageError("unknown method '" + method + "' (jw, tree, ring, superfast)");
}

ordered_json support_json(const std::vector<Vertex>& s) { return ordered_json(s); }

std::string support_text(const std::vector<Vertex>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

int cmd_analyze(const Options& o, std::ostream& out) {
  const LocalityGraph g = load_graph(o.graph);
  EightSearchOptions search;
  if (o.budget) search.budget = search.prefix.budget = o.budget;
  const AnalysisReport r = analyze(g, search);
  if (o.format == "json") {
    ordered_json j;
    j["schema_version"] = 1;
    j["graph_class"] = to_string(r.graph_class);
    j["local_encoding_possible"] = r.local_encoding_possible;
    j["block_encoding_possible"] = r.block_encoding_possible;
    j["vacuum_state_class"] = r.vacuum_entangled ? "entangled" : "product";
    j["max_eight_size"] = r.max_eight_size ? ordered_json(*r.max_eight_size) : ordered_json(nullptr);
    j["depth_lower_bound"] = r.depth_lower_bound ? ordered_json(*r.depth_lower_bound) : ordered_json(nullptr);
    j["size_exact"] = r.size_exact;
    j["size_method"] = r.size_method;
    if (r.certificate) {
      const auto& c = *r.certificate;
      ordered_json cert;
      cert["start"] = c.shape.start;
      cert["end"] = c.shape.end;
      cert["paths"] = c.shape.paths;
      cert["prefix_length"] = c.prefix_length;
      cert["size"] = c.size;
      j["certificate"] = cert;
    }
    emit(out, j);
  } else {
    out << "graph_class             " << to_string(r.graph_class) << '\n'
        << "local_encoding_possible " << (r.local_encoding_possible ? "yes" : "no") << '\n'
        << "block_encoding_possible yes\n"
        << "vacuum_state_class      " << (r.vacuum_entangled ? "entangled" : "product") << '\n'
        << "max_eight_size          " << (r.max_eight_size ? std::to_string(*r.max_eight_size) : "none")
        << (r.max_eight_size && !r.size_exact ? " (lower bound)" : "") << '\n'
        << "depth_lower_bound       " << (r.depth_lower_bound ? std::to_string(*r.depth_lower_bound) : "none") << '\n';
  }
  return kExitOk;
}

int cmd_encode(const Options& o, std::ostream& out) {
  const LocalityGraph g = load_graph(o.graph);
  const Built b = build(g, o.method);
  const Encoding& enc = b.enc.base;
  const auto& layout = enc.layout();
  if (o.format == "json") {
    ordered_json j;
    j["schema_version"] = 1;
    j["method"] = o.method;
    j["kind"] = enc.kind() == EncodingKind::exact ? "exact" : "block";
    j["n_qubits"] = enc.n_qubits();
    std::vector<Vertex> owners;
    for (std::size_t q = 0; q < enc.n_qubits(); ++q) owners.push_back(layout.owner(q));
    j["qubit_owners"] = owners;
    ordered_json gens = ordered_json::array();
    for (Vertex k = 1; k <= static_cast<Vertex>(g.n_vertices()); ++k)
      gens.push_back({{"type", "vertex"},
                      {"vertex", k},
                      {"pauli", enc.vertex_op(k).str()},
                      {"support", support_json(support(enc.vertex_op(k), layout))}});
    for (std::size_t e = 0; e < g.n_edges(); ++e) {
      auto [a, c] = g.edges()[e];
      gens.push_back({{"type", "edge"},
                      {"edge", {a, c}},
                      {"pauli", enc.edge_ops()[e].str()},
                      {"support", support_json(support(enc.edge_ops()[e], layout))}});
    }
    j["generators"] = gens;
    ordered_json stabs = ordered_json::array();
    for (const auto& s : b.enc.stabilizers)
      stabs.push_back({{"pauli", s.str()}, {"support", support_json(support(s, layout))}});
    j["stabilizers"] = stabs;
    emit(out, j);
    return kExitOk;
  }
  out << "method " << o.method << ", " << enc.n_qubits() << " qubits\n";
  out << "qubit owners:";
  for (std::size_t q = 0; q < enc.n_qubits(); ++q) out << ' ' << layout.owner(q);
  out << '\n';
  auto row = [&](const std::string& label, const PauliString& p) {
    out << std::left << std::setw(10) << label << ' ' << std::setw(static_cast<int>(enc.n_qubits()) + 4) << p.str()
        << ' ' << support_text(support(p, layout)) << '\n';
  };
  for (Vertex k = 1; k <= static_cast<Vertex>(g.n_vertices()); ++k) row(vertex_label(k), enc.vertex_op(k));
  for (std::size_t e = 0; e < g.n_edges(); ++e) row(edge_label(g.edges()[e].first, g.edges()[e].second), enc.edge_ops()[e]);
  for (std::size_t s = 0; s < b.enc.stabilizers.size(); ++s) row(stabilizer_label(s), b.enc.stabilizers[s]);
  return kExitOk;
}

/// Replaces one Pauli letter of one generator, chosen by the seed.
std::string mutate(BlockEncoding& benc, std::uint64_t seed) {
  const Encoding& enc = benc.base;
  const auto& g = enc.graph();
  std::mt19937_64 rng(seed);
  const std::size_t n_ops = g.n_vertices() + g.n_edges();
  const std::size_t which = std::uniform_int_distribution<std::size_t>(0, n_ops - 1)(rng);
  const std::size_t qubit = std::uniform_int_distribution<std::size_t>(0, enc.n_qubits() - 1)(rng);
  const std::size_t shift = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
  auto swap_letter = [&](const PauliString& p) {
    const char old = p.op(qubit);
    const std::size_t pos = static_cast<std::size_t>(std::find(kLetters, kLetters + 4, old) - kLetters);
    const char now = kLetters[(pos + shift) % 4];
    return std::pair{p.with_op(qubit, now), std::string(1, old) + " -> " + std::string(1, now)};
  };
  std::string label;
  if (which < g.n_vertices()) {
    const auto k = static_cast<Vertex>(which + 1);
    auto [p, change] = swap_letter(enc.vertex_op(k));
    benc.base = enc.with_vertex_op(k, p);
    label = vertex_label(k) + " qubit " + std::to_string(qubit) + ": " + change;
  } else {
    const std::size_t e = which - g.n_vertices();
    auto [p, change] = swap_letter(enc.edge_ops()[e]);
    benc.base = enc.with_edge_op(e, p);
    label = edge_label(g.edges()[e].first, g.edges()[e].second) + " qubit " + std::to_string(qubit) + ": " + change;
  }
  return label;
}

std::uint64_t parse_mutate_seed(const std::string& spec) {
  const std::string prefix = "seed=";
  const std::string digits = spec.rfind(prefix, 0) == 0 ? spec.substr(prefix.size()) : spec;
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw UsageError("--mutate expects seed=N");
  return std::stoull(digits);
}

int cmd_verify(const Options& o, std::ostream& out) {
  const LocalityGraph g = load_graph(o.graph);
  Built b = build(g, o.method);
  std::optional<std::string> mutation;
  if (!o.mutate.empty()) mutation = mutate(b.enc, parse_mutate_seed(o.mutate));
  RelationReport report;
  if (b.block) {
    BlockVerifyOptions opts;
    // dense cross-check only where it stays cheap
    opts.dense_fallback = b.enc.base.n_qubits() <= std::min<std::size_t>(o.dense_cap, 10);
    opts.dense_cap = o.dense_cap;
    report = verify_block(b.enc, opts);
  } else {
    report = verify_exact(b.enc.base);
  }
  const bool pass = report.overall();
  if (o.format == "json") {
    ordered_json j;
    j["schema_version"] = 1;
    j["method"] = o.method;
    if (mutation) j["mutation"] = *mutation;
    j["overall"] = pass ? "pass" : "fail";
    ordered_json summary = ordered_json::object();
    for (const auto& [rel, t] : report.summary()) summary[rel] = {{"checked", t.checked}, {"failed", t.failed}};
    j["summary"] = summary;
    ordered_json fails = ordered_json::array();
    for (const auto& c : report.failures())
      fails.push_back({{"relation_id", c.relation}, {"subjects", c.subjects}, {"witness", c.witness}});
    j["failures"] = fails;
    emit(out, j);
  } else {
    if (mutation) out << "mutation: " << *mutation << '\n';
    for (const auto& [rel, t] : report.summary())
      out << std::left << std::setw(14) << rel << " checked " << t.checked << ", failed " << t.failed << '\n';
    for (const auto& c : report.failures()) {
      out << "FAIL " << c.relation;
      for (const auto& s : c.subjects) out << ' ' << s;
      out << ": " << c.witness << '\n';
    }
    out << "overall: " << (pass ? "pass" : "fail") << '\n';
  }
  return pass ? kExitOk : kExitFail;
}

int cmd_equivalence(const Options& o, std::ostream& out) {
  const LocalityGraph g = load_graph(o.graph);
  const Built b = build(g, o.method);
  const EquivalenceReport r = equivalence_test(b.enc, o.samples, o.seed, o.dense_cap);
  if (o.format == "json") {
    ordered_json j;
    j["schema_version"] = 1;
    j["method"] = o.method;
    j["pass"] = r.pass();
    j["samples"] = r.samples;
    j["mismatches"] = r.mismatches;
    j["max_deviation"] = r.max_deviation;
    j["parity_sector"] = r.parity_sector ? ordered_json(*r.parity_sector) : ordered_json(nullptr);
    if (!r.pass()) j["witness"] = r.witness;
    emit(out, j);
  } else {
    out << (r.pass() ? "pass" : "fail") << ": " << r.samples << " words, " << r.mismatches
        << " mismatches, max deviation " << r.max_deviation << '\n';
    if (!r.pass()) out << "first mismatch: " << r.witness << '\n';
  }
  return r.pass() ? kExitOk : kExitFail;
}

int cmd_search_product(const Options& o, std::ostream& out) {
  const LocalityGraph g = load_graph(o.graph);
  const Built b = build(g, o.method);
  ProductSearchOptions opts;
  opts.restarts = o.restarts;
  opts.max_iters = o.max_iters;
  opts.seed = o.seed;
  const auto r = product_state_search(codespace_projector(b.enc, o.dense_cap), b.enc.base.layout(), opts);
  if (o.format == "json") {
    ordered_json j;
    j["schema_version"] = 1;
    j["method"] = o.method;
    j["best_overlap"] = r.best_overlap;
    j["converged"] = r.converged;
    j["restarts_used"] = r.restarts_used;
    emit(out, j);
  } else {
    out << "best_overlap  " << std::setprecision(17) << r.best_overlap << '\n'
        << "converged     " << (r.converged ? "yes" : "no") << '\n'
        << "restarts_used " << r.restarts_used << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fermion-to-qubit encodings on locality graphs"};
  app.require_subcommand(1);
  Options o;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("source", o.positional, "generator spec (ring:6, gen:grid:4x4) or graph file");
    sub->add_option("--graph", o.graph, "same as the positional argument");
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_method = [&](CLI::App* sub) {
    sub->add_option("--method", o.method, "jw, tree, ring or superfast")
        ->check(CLI::IsMember({"jw", "tree", "ring", "superfast"}));
    sub->add_option("--dense-cap", o.dense_cap, "largest qubit count for dense matrices");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "classify the graph and bound its 8-shape size");
  add_graph(analyze_cmd);
  analyze_cmd->add_option("--budget", o.budget, "search work budget");
  auto* encode_cmd = app.add_subcommand("encode", "print the encoded generators and stabilizers");
  add_graph(encode_cmd);
  add_method(encode_cmd);
  auto* verify_cmd = app.add_subcommand("verify", "check the defining relations");
  add_graph(verify_cmd);
  add_method(verify_cmd);
  verify_cmd->add_option("--mutate", o.mutate, "seed=N: corrupt one Pauli letter before verifying");
  auto* equiv_cmd = app.add_subcommand("equivalence", "compare word traces with the Fock representation");
  add_graph(equiv_cmd);
  add_method(equiv_cmd);
  equiv_cmd->add_option("--samples", o.samples, "number of random words");
  equiv_cmd->add_option("--seed", o.seed, "random seed");
  auto* search_cmd = app.add_subcommand("search-product", "maximize codespace overlap over product states");
  add_graph(search_cmd);
  add_method(search_cmd);
  search_cmd->add_option("--restarts", o.restarts, "random restarts")->check(CLI::PositiveNumber);
  search_cmd->add_option("--max-iters", o.max_iters, "sweeps per restart");
  search_cmd->add_option("--seed", o.seed, "random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (o.graph.empty()) o.graph = o.positional;
    if (o.graph.empty()) throw UsageError("a graph is required (positional or --graph)");
    if (analyze_cmd->parsed()) return cmd_analyze(o, out);
    if (encode_cmd->parsed()) return cmd_encode(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (equiv_cmd->parsed()) return cmd_equivalence(o, out);
    return cmd_search_product(o, out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {  // parse, precondition and dimension errors
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {  // resource and construction errors
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace fermenc
