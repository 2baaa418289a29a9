#include "blockbetti/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

#include "blockbetti/classify.hpp"
#include "blockbetti/errors.hpp"
#include "blockbetti/generate.hpp"
#include "blockbetti/parallel.hpp"

namespace blockbetti {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped_budget: return "skipped:budget";
  }
  return "?";
}

Json Report::to_json(bool timing) const {
  Json j;
  j["claim"] = claim;
  j["verdict"] = verdict_name(verdict);
  j["instance"] = instance;
  j["computed"] = computed;
  j["expected"] = expected;
  j["notes"] = notes;
  if (timing) j["wall_seconds"] = wall_seconds;
  return j;
}

// ---------------------------------------------------------------- workspace

Workspace::Workspace(Instance instance, const HarnessConfig& config)
    : instance_(std::move(instance)), config_(config) {}

Json Workspace::descriptor() const {
  const Graph& g = graph();
  Json d;
  if (!instance_.name.empty()) d["name"] = instance_.name;
  d["hash"] = hex_hash(graph_hash(g));
  d["n"] = g.order();
  if (g.order() > 0 && g.connected() && is_block_graph(g)) {
    BlockStructure bs = block_structure(g);
    d["f"] = bs.f();
    d["i"] = bs.i();
    d["s"] = decompose(g).s();
  }
  d["edges"] = graph_json(g)["edges"];
  d["char"] = config_.p;
  if (instance_.seed) d["seed"] = *instance_.seed;
  return d;
}

const MonomialIdeal& Workspace::initial() {
  if (!initial_) initial_ = initial_ideal(graph());
  return *initial_;
}

std::optional<BettiTable> Workspace::monomial_columns(std::uint32_t p, int from_column) {
  auto key = std::make_pair(p, std::max(from_column, 0));
  if (auto it = monomial_.find(key); it != monomial_.end()) return it->second;
  std::optional<BettiTable> t;
  MonomialBudget budget = config_.monomial;
  budget.threads = 1;
  try {
    t = betti_monomial_columns(initial(), p, key.second, budget);
  } catch (const ResourceError& e) {
    budget_["monomial"] = e.what();
  }
  monomial_[key] = t;
  return t;
}

std::optional<BettiTable> Workspace::monomial(std::uint32_t p) { return monomial_columns(p, 0); }

std::string Workspace::binomial_mode() const {
  return graph().order() <= config_.exhaustive_binomial_max_n ? "exhaustive" : "initial-support";
}

std::optional<BettiTable> Workspace::binomial(std::uint32_t p) {
  if (auto it = binomial_.find(p); it != binomial_.end()) return it->second;
  std::optional<BettiTable> t;
  BinomialOptions opts = config_.binomial;
  opts.window.reset();
  opts.threads = 1;
  opts.support = graph().order() <= config_.exhaustive_binomial_max_n ? SupportMode::kExhaustive
                                                                       : SupportMode::kInitialSupport;
  try {
    t = betti_binomial(graph(), p, opts).table;
  } catch (const ResourceError& e) {
    budget_["binomial"] = e.what();
  }
  binomial_[p] = t;
  return t;
}

std::string Workspace::budget_message(const std::string& side) const {
  auto it = budget_.find(side);
  return it == budget_.end() ? std::string{} : it->second;
}

// ---------------------------------------------------------------- helpers

std::optional<bool> extremal_at(const BettiTable& t, int i, int j, int complete_from_column) {
  if (!t.total && complete_from_column > i) return std::nullopt;
  if (t.at(i, j) == 0) return false;
  int l = j - i;
  for (const auto& [d, beta] : t.entries)
    if (d != Bidegree{i, j} && d.first >= i && d.second - d.first >= l) return false;
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

Report start(Workspace& ws, const std::string& claim) {
  Report r;
  r.claim = claim;
  r.instance = ws.descriptor();
  return r;
}

Json skipped(const std::string& reason) { return {{"status", "skipped:budget"}, {"reason", reason}}; }

// fail beats skip beats pass; all-skipped parts make the report skipped.
Verdict combine(const std::vector<Verdict>& parts) {
  if (std::find(parts.begin(), parts.end(), Verdict::fail) != parts.end()) return Verdict::fail;
  if (std::find(parts.begin(), parts.end(), Verdict::pass) != parts.end()) return Verdict::pass;
  return parts.empty() ? Verdict::pass : Verdict::skipped_budget;
}

struct Shape {
  int n, f, i;
};

Shape require_block_graph(const Graph& g, const std::string& claim) {
  if (g.order() < 2 || !g.connected() || !is_block_graph(g))
    throw PreconditionError(claim + ": needs a connected block graph on at least two vertices");
  BlockStructure bs = block_structure(g);
  return {g.order(), bs.f(), bs.i()};
}

Shape require_indecomposable(const Graph& g, const std::string& claim, const std::string& redirect) {
  Shape s = require_block_graph(g, claim);
  if (decompose(g).s() > 1) throw PreconditionError(claim + ": graph is decomposable; use " + redirect);
  return s;
}

Json entry_list(const BettiTable& t) {
  Json out = Json::array();
  for (const auto& e : table_analytics(t).extremal) out.push_back({e.i, e.j, e.beta});
  return out;
}

// Ideal tables, entrywise `small` <= `large`.
std::vector<Bidegree> exceeding(const BettiTable& small, const BettiTable& large) {
  std::vector<Bidegree> bad;
  for (const auto& [d, beta] : small.entries)
    if (beta > large.at(d.first, d.second)) bad.push_back(d);
  return bad;
}

Json bidegrees(const std::vector<Bidegree>& ds) {
  Json out = Json::array();
  for (auto [i, j] : ds) out.push_back({i, j});
  return out;
}

BettiTable binomial_table_of(const Graph& g, const HarnessConfig& cfg, std::uint32_t p) {
  BinomialOptions opts = cfg.binomial;
  opts.window.reset();
  opts.threads = 1;
  opts.support = g.order() <= cfg.exhaustive_binomial_max_n ? SupportMode::kExhaustive : SupportMode::kInitialSupport;
  return betti_binomial(g, p, opts).table;
}

Mask shift_ideal_mask(Mask m, const Subgraph& sub, int n) {
  int k = sub.graph.order();
  Mask out = 0;
  for_each_bit(m, [&](int v) { out |= v < k ? bit(sub.origin[v]) : bit(n + sub.origin[v - k]); });
  return out;
}

}  // namespace

// ---------------------------------------------------------------- checks

Report check_theorem_main(Workspace& ws, Side sides) {
  Report r = start(ws, "theorem-main");
  Shape s = require_indecomposable(ws.graph(), "theorem-main", "check_corollary_product");
  int i0 = s.n - 1, j0 = s.n + s.i;
  long want = s.f - 1;
  r.expected = {{"position", {i0, j0}}, {"value", want}, {"extremal", true}, {"rule", "f(G)-1 at (n-1, n+i(G))"}};
  std::uint32_t p = ws.config().p;
  std::vector<Verdict> parts;

  if (sides != Side::binomial) {
    bool columns = s.n >= ws.config().monomial_columns_from_n;
    auto t = columns ? ws.monomial_columns(p, i0) : ws.monomial(p);
    if (!t) {
      r.computed["monomial"] = skipped(ws.budget_message("monomial"));
      parts.push_back(Verdict::skipped_budget);
    } else {
      long v = t->at(i0, j0);
      auto ext = extremal_at(*t, i0, j0, columns ? i0 : 0);
      int pd = t->projdim();
      bool ok = v == want && ext.value_or(false) && pd == i0;
      r.computed["monomial"] = {{"status", ok ? "pass" : "fail"},
                                {"value", v},
                                {"extremal", ext ? Json(*ext) : Json(nullptr)},
                                {"pd", pd},
                                {"columns_from", columns ? i0 : 0}};
      if (!columns) r.computed["monomial"]["polynomial"] = betti_polynomial_string(*t);
      parts.push_back(ok ? Verdict::pass : Verdict::fail);
    }
  }
  if (sides != Side::monomial) {
    auto t = ws.binomial(p);
    if (!t) {
      r.computed["binomial"] = skipped(ws.budget_message("binomial"));
      parts.push_back(Verdict::skipped_budget);
    } else {
      long v = t->at(i0, j0);
      bool ext = extremal_at(*t, i0, j0, 0).value_or(false);
      bool ok = v == want && ext;
      r.computed["binomial"] = {{"status", ok ? "pass" : "fail"}, {"value", v},         {"extremal", ext},
                                {"pd", t->projdim()},               {"mode", ws.binomial_mode()},
                                {"polynomial", betti_polynomial_string(*t)}};
      parts.push_back(ok ? Verdict::pass : Verdict::fail);
    }
  }
  r.verdict = combine(parts);
  return r;
}

Report check_prop_product(Workspace& ws) {
  Report r = start(ws, "prop-product");
  const Graph& g = ws.graph();
  if (g.order() < 2 || !g.connected()) throw PreconditionError("prop-product: needs a connected graph");
  auto split = split_once(g);
  if (!split) throw PreconditionError("prop-product: graph is indecomposable");
  int n = g.order();

  // Relabel so that G1 occupies 1..m and G2 occupies m..n, the split vertex being m.
  std::vector<int> perm(n, -1);
  int next = 0;
  for (int v : split->first.origin)
    if (v != split->vertex) perm[v] = next++;
  int m = next;
  perm[split->vertex] = next++;
  for (int v : split->second.origin)
    if (v != split->vertex) perm[v] = next++;
  Graph h = g.permuted(perm);
  Mask low = bit(m + 1) - 1;
  Mask high = (h.vertices() & ~low) | bit(m);
  Subgraph g1 = induced_subgraph(h, low), g2 = induced_subgraph(h, high);
  r.computed["split_vertex"] = split->vertex + 1;
  r.computed["relabeled_edges"] = graph_json(h)["edges"];
  r.computed["G1"] = graph_json(g1.graph);
  r.computed["G2"] = graph_json(g2.graph);

  std::vector<Verdict> parts;
  std::uint32_t p = ws.config().p;
  auto t = ws.binomial(p);
  try {
    if (!t) throw ResourceError(ws.budget_message("binomial"));
    BettiTable t1 = binomial_table_of(g1.graph, ws.config(), p);
    BettiTable t2 = binomial_table_of(g2.graph, ws.config(), p);
    BettiTable product = betti_polynomial_product(t1, t2);
    bool ok = product == *t;
    r.computed["betti"] = {{"status", ok ? "pass" : "fail"},
                           {"G", betti_polynomial_string(*t)},
                           {"G1", betti_polynomial_string(t1)},
                           {"G2", betti_polynomial_string(t2)},
                           {"product", betti_polynomial_string(product)}};
    parts.push_back(ok ? Verdict::pass : Verdict::fail);
  } catch (const ResourceError& e) {
    r.computed["betti"] = skipped(e.what());
    parts.push_back(Verdict::skipped_budget);
  }

  // in(J_G) = in(J_G1) + in(J_G2), G1 living in x_1..x_{m-1}, y_1..y_m and
  // G2 in x_m..x_n, y_{m+1}..y_n.
  MonomialIdeal in = initial_ideal(h);
  MonomialIdeal in1 = initial_ideal(g1.graph), in2 = initial_ideal(g2.graph);
  MonomialIdeal sum{2 * n, {}};
  for (Mask x : in1.gens) sum.gens.push_back(shift_ideal_mask(x, g1, n));
  for (Mask x : in2.gens) sum.gens.push_back(shift_ideal_mask(x, g2, n));
  sum.minimalize();
  Mask allowed1 = (bit(m) - 1) | ((bit(m) - 1) << n) | bit(n + m);
  Mask allowed2 = (h.vertices() & ~(bit(m + 1) - 1)) | ((h.vertices() & ~(bit(m + 1) - 1)) << n) | bit(m);
  bool supports = true;
  for (Mask x : in1.gens) supports = supports && subset_of(shift_ideal_mask(x, g1, n), allowed1);
  for (Mask x : in2.gens) supports = supports && subset_of(shift_ideal_mask(x, g2, n), allowed2);
  bool equal = sum == in;
  r.computed["initial"] = {{"status", equal && supports ? "pass" : "fail"},
                           {"sum_equals_initial", equal},
                           {"separated_supports", supports},
                           {"generators", in.gens.size()}};
  parts.push_back(equal && supports ? Verdict::pass : Verdict::fail);
  r.expected = {{"betti", "B(G) = B(G1) B(G2)"}, {"initial", "in(J_G) = in(J_G1) + in(J_G2), supports meet in x_m, y_m"}};
  r.verdict = combine(parts);
  return r;
}

Report check_corollary_product(Workspace& ws) {
  Report r = start(ws, "corollary-product");
  Shape s = require_block_graph(ws.graph(), "corollary-product");
  Decomposition d = decompose(ws.graph());
  if (d.s() < 2) throw PreconditionError("corollary-product: graph is indecomposable; use check_theorem_main");
  long value = 1;
  int inner_sum = 0;
  Json comps = Json::array();
  for (const auto& c : d.components) {
    BlockStructure bs = block_structure(c.graph);
    value *= bs.f() - 1;
    inner_sum += bs.i();
    Json labels = Json::array();
    for (int v : c.origin) labels.push_back(v + 1);
    comps.push_back({{"vertices", labels}, {"f", bs.f()}, {"i", bs.i()}});
  }
  int i0 = s.n - 1;
  int degree = i0 + inner_sum + d.s();
  int printed = i0 + s.i + d.s();
  r.expected = {{"position", {i0, degree}},
                {"value", value},
                {"rule", "prod (f(G_t)-1) at (n-1, (n-1) + sum i(G_t) + s)"},
                {"printed_degree", printed}};
  r.computed["components"] = comps;
  if (printed != degree)
    r.notes.push_back("printed exponent (n-1)+i(G)+s gives degree " + std::to_string(printed) +
                      "; the decomposition gives " + std::to_string(degree) + " = (n-1)+i(G)+1");
  if (degree != i0 + s.i + 1) r.notes.push_back("sum i(G_t) + s differs from i(G) + 1");

  auto t = ws.binomial(ws.config().p);
  if (!t) {
    r.computed["binomial"] = skipped(ws.budget_message("binomial"));
    r.verdict = Verdict::skipped_budget;
    return r;
  }
  long v = t->at(i0, degree);
  bool ext = extremal_at(*t, i0, degree, 0).value_or(false);
  int top = 0;
  for (const auto& [bd, beta] : t->entries)
    if (bd.first == i0) top = std::max(top, bd.second);
  bool ok = v == value && ext;
  r.computed["binomial"] = {{"status", ok ? "pass" : "fail"},
                            {"value", v},
                            {"extremal", ext},
                            {"top_degree_in_column", top},
                            {"value_at_printed_degree", t->at(i0, printed)},
                            {"polynomial", betti_polynomial_string(*t)}};
  r.verdict = ok ? Verdict::pass : Verdict::fail;
  return r;
}

Report check_hope(Workspace& ws, Depth depth) {
  static const char* names[] = {"hope-ii-iii", "hope-monomial", "hope-binomial"};
  std::string claim = names[static_cast<int>(depth)];
  Report r = start(ws, claim);
  Shape s = require_indecomposable(ws.graph(), claim, "check_corollary_product");
  std::vector<Verdict> parts;

  ClassificationVerdict v;
  try {
    v = classify(ws.graph());
  } catch (const VerificationFailure& e) {
    r.computed["combinatorial"] = {{"status", "fail"}, {"error", e.what()}};
    r.verdict = Verdict::fail;
    return r;
  }
  bool ii = !v.forbidden_hit.has_value();
  bool iii = v.cutpoint_condition.ok;
  r.computed["combinatorial"] = {{"status", ii == iii ? "pass" : "fail"}, {"verdict", verdict_json(v)}};
  r.computed["ii"] = ii;
  r.computed["iii"] = iii;
  r.expected = {{"ii_iff_iii", true}, {"reg_lower_bound", s.i + 1}};
  parts.push_back(ii == iii ? Verdict::pass : Verdict::fail);
  std::uint32_t p = ws.config().p;

  std::optional<BettiTable> in_table;
  if (depth != Depth::combinatorial) {
    in_table = ws.monomial(p);
    Verdict part = Verdict::skipped_budget;
    if (!in_table) {
      r.computed["monomial"] = skipped(ws.budget_message("monomial"));
    } else {
      TableAnalytics a = table_analytics(*in_table);
      bool single = a.single_extremal();
      // reg(J) <= reg(in J), and one extremal entry of in(J) sits at (n-1, n+i(G)).
      bool ok = a.reg >= s.i + 1 && (!single || iii);
      Json m = {{"status", ok ? "pass" : "fail"},
                {"reg", a.reg},
                {"pd", a.pd},
                {"extremal", entry_list(*in_table)},
                {"single_extremal", single}};
      if (single) m["derived"] = "reg(S/J_G) = i(G)+1 = " + std::to_string(s.i + 1);
      r.computed["monomial"] = m;
      part = ok ? Verdict::pass : Verdict::fail;
    }
    if (depth == Depth::monomial) {
      if (part == Verdict::skipped_budget) parts.clear();
      parts.push_back(part);
    } else if (part == Verdict::fail) {
      parts.push_back(part);
    }
  }

  if (depth == Depth::binomial) {
    Verdict part = Verdict::skipped_budget;
    auto t = ws.binomial(p);
    if (t) {
      TableAnalytics a = table_analytics(*t);
      bool ok = a.reg >= s.i + 1 && a.single_extremal() == iii;
      r.computed["binomial"] = {{"status", ok ? "pass" : "fail"},
                                {"reg", a.reg},
                                {"pd", a.pd},
                                {"extremal", entry_list(*t)},
                                {"single_extremal", a.single_extremal()},
                                {"mode", ws.binomial_mode()}};
      part = ok ? Verdict::pass : Verdict::fail;
    } else if (!iii && in_table && 2 * s.n <= ws.config().binomial.max_variables_window) {
      // Targeted search for reg(S/J_G) > i(G)+1: strands i(G)+2 .. reg(in J).
      TableAnalytics a = table_analytics(*in_table);
      BinomialOptions opts = ws.config().binomial;
      opts.support = SupportMode::kInitialSupport;
      opts.threads = 1;
      std::vector<Bidegree> window;
      for (int l = s.i + 2; l <= a.reg; ++l)
        for (int k = 1; k <= a.pd; ++k) window.push_back({k, k + l});
      opts.window = window;
      Json b = {{"full_table", skipped(ws.budget_message("binomial"))}, {"window", bidegrees(window)}};
      try {
        BinomialBetti w = betti_binomial(ws.graph(), p, opts);
        int reg = 0;
        for (const auto& [d, beta] : w.table.entries) reg = std::max(reg, d.second - d.first);
        Json found = Json::array();
        for (const auto& [d, beta] : w.table.entries) found.push_back({d.first, d.second, beta});
        bool ok = reg > s.i + 1;
        b["status"] = ok ? "verified" : "fail";
        b["nonzero"] = found;
        b["reg_lower_bound"] = reg;
        b["strands"] = w.complexes;
        part = ok ? Verdict::pass : Verdict::fail;
      } catch (const ResourceError& e) {
        b["status"] = "skipped:budget";
        b["reason"] = e.what();
      }
      r.computed["binomial"] = b;
    } else {
      r.computed["binomial"] = skipped(ws.budget_message("binomial"));
    }
    if (part == Verdict::skipped_budget) parts.erase(std::remove(parts.begin(), parts.end(), Verdict::pass), parts.end());
    parts.push_back(part);
  }
  r.verdict = combine(parts);
  return r;
}

Report check_matsuda_murai(Workspace& ws, Mask w) {
  Report r = start(ws, "matsuda-murai");
  const Graph& g = ws.graph();
  w &= g.vertices();
  if (w == 0) throw PreconditionError("matsuda-murai: empty vertex set");
  Subgraph sub = induced_subgraph(g, w);
  r.computed["W"] = vertex_list(w);
  std::uint32_t p = ws.config().p;
  auto big = ws.binomial(p);
  if (!big) {
    r.computed["binomial"] = skipped(ws.budget_message("binomial"));
    r.verdict = Verdict::skipped_budget;
    return r;
  }
  BettiTable small;
  try {
    small = binomial_table_of(sub.graph, ws.config(), p);
  } catch (const ResourceError& e) {
    r.computed["binomial"] = skipped(e.what());
    r.verdict = Verdict::skipped_budget;
    return r;
  }
  BettiTable a = ideal_from_quotient(small), b = ideal_from_quotient(*big);
  auto bad = exceeding(a, b);
  bool equal_expected = w == g.vertices();
  bool ok = bad.empty() && (!equal_expected || a == b);
  r.expected = {{"rule", "beta_ij(J_{G_W}) <= beta_ij(J_G)"}, {"equality", equal_expected}};
  r.computed["subgraph"] = betti_polynomial_string(small);
  r.computed["graph"] = betti_polynomial_string(*big);
  r.computed["violations"] = bidegrees(bad);
  r.verdict = ok ? Verdict::pass : Verdict::fail;
  return r;
}

Report check_groebner_oracle(Workspace& ws) {
  Report r = start(ws, "groebner-oracle");
  const MonomialIdeal& paths = ws.initial();
  r.computed["admissible_path_generators"] = paths.gens.size();
  try {
    MonomialIdeal bb = buchberger_initial_ideal(ws.graph(), ws.config().binomial.buchberger);
    r.computed["buchberger_generators"] = bb.gens.size();
    r.verdict = bb == paths ? Verdict::pass : Verdict::fail;
    if (r.verdict == Verdict::fail) {
      r.computed["from_paths"] = ideal_json(paths, ws.graph().order());
      r.computed["from_buchberger"] = ideal_json(bb, ws.graph().order());
    }
  } catch (const ResourceError& e) {
    r.computed["buchberger"] = skipped(e.what());
    r.verdict = Verdict::skipped_budget;
  }
  r.expected = {{"rule", "initial ideal from admissible paths equals Buchberger's leading ideal"}};
  return r;
}

Report check_triple_oracle(Workspace& ws) {
  Report r = start(ws, "triple-oracle");
  std::uint32_t p = ws.config().p;
  const MonomialIdeal& in = ws.initial();
  auto lattice = ws.monomial(p);
  std::vector<Verdict> parts;
  Json results;
  auto compare = [&](const std::string& name, auto&& compute) {
    try {
      BettiTable t = compute();
      bool ok = lattice && t == *lattice;
      results[name] = ok ? "equal" : "differs";
      parts.push_back(ok ? Verdict::pass : Verdict::fail);
    } catch (const ResourceError& e) {
      results[name] = skipped(e.what());
    }
  };
  if (!lattice) {
    r.computed["lcm_lattice"] = skipped(ws.budget_message("monomial"));
    r.verdict = Verdict::skipped_budget;
    return r;
  }
  compare("hochster", [&] { return hochster_betti(in, p, ws.config().monomial); });
  compare("taylor", [&] { return taylor_betti(in, p, ws.config().monomial); });
  r.computed["lcm_lattice"] = betti_polynomial_string(*lattice);
  r.computed["oracles"] = results;
  r.verdict = combine(parts);
  return r;
}

Report check_semicontinuity(Workspace& ws) {
  Report r = start(ws, "semicontinuity");
  std::uint32_t p = ws.config().p;
  auto j = ws.binomial(p);
  auto in = ws.monomial(p);
  if (!j || !in) {
    r.computed["reason"] = !j ? ws.budget_message("binomial") : ws.budget_message("monomial");
    r.verdict = Verdict::skipped_budget;
    return r;
  }
  auto bad = exceeding(*j, *in);
  r.computed["binomial"] = betti_polynomial_string(*j);
  r.computed["initial"] = betti_polynomial_string(*in);
  r.computed["binomial_mode"] = ws.binomial_mode();
  r.computed["violations"] = bidegrees(bad);
  r.expected = {{"rule", "beta_ij(S/J_G) <= beta_ij(S/in(J_G))"}};
  r.verdict = bad.empty() ? Verdict::pass : Verdict::fail;
  return r;
}

Report check_conjecture_extremal(Workspace& ws) {
  Report r = start(ws, "conjecture-extremal");
  std::uint32_t p = ws.config().p;
  auto j = ws.binomial(p);
  auto in = ws.monomial(p);
  if (!j || !in) {
    r.computed["reason"] = !j ? ws.budget_message("binomial") : ws.budget_message("monomial");
    r.verdict = Verdict::skipped_budget;
    return r;
  }
  Json a = entry_list(*j), b = entry_list(*in);
  r.computed["binomial_extremal"] = a;
  r.computed["initial_extremal"] = b;
  r.expected = {{"rule", "extremal positions and values of S/J_G and S/in(J_G) coincide"}};
  r.verdict = a == b ? Verdict::pass : Verdict::fail;
  if (a != b) r.notes.push_back("COUNTEREXAMPLE to extremal coincidence");
  return r;
}

Report check_char_robustness(Workspace& ws) {
  Report r = start(ws, "char-robustness");
  std::uint32_t p = ws.config().p, q = ws.config().confirm_p;
  std::vector<Verdict> parts;
  auto side = [&](const std::string& name, std::optional<BettiTable> a, std::optional<BettiTable> b) {
    if (!a || !b) {
      r.computed[name] = skipped(ws.budget_message(name));
      return;
    }
    bool ok = *a == *b;
    r.computed[name] = {{"status", ok ? "pass" : "fail"},
                        {"p" + std::to_string(p), betti_polynomial_string(*a)},
                        {"p" + std::to_string(q), betti_polynomial_string(*b)}};
    parts.push_back(ok ? Verdict::pass : Verdict::fail);
  };
  side("monomial", ws.monomial(p), ws.monomial(q));
  side("binomial", ws.binomial(p), ws.binomial(q));
  r.expected = {{"rule", "tables agree over both primes"}, {"primes", {p, q}}};
  r.verdict = combine(parts);
  return r;
}

Report check_koszul_consistency(Workspace& ws) {
  Report r = start(ws, "koszul-consistency");
  std::uint32_t p = ws.config().p;
  auto j = ws.binomial(p);
  if (!j) {
    r.computed["binomial"] = skipped(ws.budget_message("binomial"));
    r.verdict = Verdict::skipped_budget;
    return r;
  }
  auto in = ws.monomial(p);
  int top = in ? in->projdim() + in->regularity() + 1 : j->projdim() + j->regularity() + 1;
  std::vector<long> numerator = hilbert_numerator(ws.initial(), top);
  std::vector<long> sums = alternating_betti_sums(*j, top);
  r.computed["degrees"] = top;
  r.computed["alternating_sums"] = sums;
  r.expected = {{"hilbert_numerator", numerator}};
  r.verdict = numerator == sums ? Verdict::pass : Verdict::fail;
  return r;
}

Report check_relabel_invariance(Workspace& ws) {
  Report r = start(ws, "relabel-invariance");
  const Graph& g = ws.graph();
  int n = g.order();
  std::uint32_t p = ws.config().p;
  bool indecomposable_block = n >= 2 && g.connected() && is_block_graph(g) && decompose(g).s() == 1;
  std::optional<Shape> shape;
  if (indecomposable_block) shape = require_block_graph(g, "relabel-invariance");
  auto base = ws.binomial(p);
  std::vector<Verdict> parts;
  Json trials = Json::array();
  std::mt19937_64 rng(ws.config().seed ^ graph_hash(g));
  for (int k = 0; k < ws.config().relabelings; ++k) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int a = n - 1; a > 0; --a) std::swap(perm[a], perm[rng() % static_cast<std::uint64_t>(a + 1)]);
    Graph h = g.permuted(perm);
    Json trial;
    Json labels = Json::array();
    for (int x : perm) labels.push_back(x + 1);
    trial["perm"] = labels;
    if (base) {
      try {
        bool same = binomial_table_of(h, ws.config(), p) == *base;
        trial["binomial_equal"] = same;
        parts.push_back(same ? Verdict::pass : Verdict::fail);
      } catch (const ResourceError& e) {
        trial["binomial"] = skipped(e.what());
      }
    }
    if (shape) {
      int i0 = n - 1, j0 = n + shape->i;
      bool columns = n >= ws.config().monomial_columns_from_n;
      try {
        MonomialBudget budget = ws.config().monomial;
        budget.threads = 1;
        BettiTable t = betti_monomial_columns(initial_ideal(h), p, columns ? i0 : 0, budget);
        bool ok = t.at(i0, j0) == shape->f - 1 && extremal_at(t, i0, j0, columns ? i0 : 0).value_or(false);
        trial["monomial_entry"] = t.at(i0, j0);
        parts.push_back(ok ? Verdict::pass : Verdict::fail);
      } catch (const ResourceError& e) {
        trial["monomial"] = skipped(e.what());
      }
    }
    trials.push_back(trial);
  }
  r.computed["trials"] = trials;
  r.expected = {{"rule", "binomial table and the (n-1, n+i(G)) entry of the initial table are label-invariant"}};
  r.verdict = combine(parts);
  return r;
}

Report check_theorem_main(const Graph& g, Side sides, const HarnessConfig& config) {
  Workspace ws({"", g, std::nullopt}, config);
  return check_theorem_main(ws, sides);
}
Report check_prop_product(const Graph& g, const HarnessConfig& config) {
  Workspace ws({"", g, std::nullopt}, config);
  return check_prop_product(ws);
}
Report check_corollary_product(const Graph& g, const HarnessConfig& config) {
  Workspace ws({"", g, std::nullopt}, config);
  return check_corollary_product(ws);
}
Report check_hope(const Graph& g, Depth depth, const HarnessConfig& config) {
  Workspace ws({"", g, std::nullopt}, config);
  return check_hope(ws, depth);
}
Report check_matsuda_murai(const Graph& g, Mask w, const HarnessConfig& config) {
  Workspace ws({"", g, std::nullopt}, config);
  return check_matsuda_murai(ws, w);
}

// ---------------------------------------------------------------- corpora

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> ids = {
      "theorem-main",   "prop-product",  "corollary-product", "hope-ii-iii",         "hope-monomial",
      "hope-binomial",  "matsuda-murai", "groebner-oracle",   "triple-oracle",       "semicontinuity",
      "conjecture-extremal", "char-robustness", "koszul-consistency", "relabel-invariance"};
  return ids;
}

Graph named_graph(const std::string& name) {
  auto number = [&](std::size_t from) {
    try {
      std::size_t used = 0;
      int v = std::stoi(name.substr(from), &used);
      if (used + from != name.size() || v < 1 || v > 64) throw PreconditionError("");
      return v;
    } catch (const std::exception&) {
      throw PreconditionError("unknown graph name '" + name + "'");
    }
  };
  if (name == "paw") return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  if (name == "bowtie") return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  if (name == "double-star") return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}});
  for (const auto& t : forbidden_T_graphs())
    if (name == t.name()) return t.graph;
  if (name.rfind("K1,", 0) == 0) return star_graph(number(3));
  if (name.size() > 1 && name[0] == 'K') return complete_graph(number(1));
  if (name.size() > 1 && name[0] == 'P') return path_graph(number(1));
  if (name.size() > 1 && name[0] == 'C') return cycle_graph(number(1));
  throw PreconditionError("unknown graph name '" + name + "'");
}

namespace {

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

// "a..b", "<=b", "=a" or "a" after a key such as n.
std::pair<int, int> parse_range(const std::string& text, const std::string& spec) {
  try {
    if (text.rfind("<=", 0) == 0) return {1, std::stoi(text.substr(2))};
    std::string t = text.rfind("=", 0) == 0 ? text.substr(1) : text;
    auto dots = t.find("..");
    if (dots != std::string::npos) return {std::stoi(t.substr(0, dots)), std::stoi(t.substr(dots + 2))};
    int v = std::stoi(t);
    return {v, v};
  } catch (const std::exception&) {
    throw PreconditionError("malformed range '" + text + "' in corpus spec '" + spec + "'");
  }
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::vector<Instance> build_corpus(const std::string& spec, std::uint64_t seed) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw PreconditionError("corpus spec '" + spec + "' lacks a kind prefix");
  std::string kind = spec.substr(0, colon), body = spec.substr(colon + 1);
  std::vector<Instance> out;
  if (kind == "exhaustive") {
    if (body.rfind("n", 0) != 0) throw PreconditionError("exhaustive corpus needs n<=N or n=a..b");
    auto [lo, hi] = parse_range(body.substr(1), spec);
    lo = std::max(lo, 2);
    if (hi > 12) throw PreconditionError("exhaustive corpus limited to n <= 12");
    for (int n = lo; n <= hi; ++n) {
      auto graphs = enumerate_block_graphs(n);
      for (std::size_t k = 0; k < graphs.size(); ++k)
        out.push_back({"n" + std::to_string(n) + "#" + std::to_string(k), graphs[k], std::nullopt});
    }
  } else if (kind == "random") {
    int count = 100, n_max = 25, clique = 5;
    bool indecomposable = false;
    for (const auto& part : split_on(body, ',')) {
      if (part.rfind("count=", 0) == 0) count = parse_range(part.substr(6), spec).second;
      else if (part.rfind("n", 0) == 0) n_max = parse_range(part.substr(1), spec).second;
      else if (part.rfind("clique", 0) == 0) clique = parse_range(part.substr(6), spec).second;
      else if (part.rfind("seed=", 0) == 0) seed = static_cast<std::uint64_t>(std::stoull(part.substr(5)));
      else if (part == "indecomposable") indecomposable = true;
      else throw PreconditionError("unknown random corpus option '" + part + "'");
    }
    for (int k = 0; k < count; ++k) {
      std::uint64_t s = splitmix(seed + static_cast<std::uint64_t>(k));
      out.push_back({"random#" + std::to_string(k), random_block_graph(n_max, clique, indecomposable, s), s});
    }
  } else if (kind == "cliques") {
    auto [lo, hi] = parse_range(body, spec);
    for (int n = std::max(lo, 2); n <= hi; ++n) out.push_back({"K" + std::to_string(n), complete_graph(n), std::nullopt});
  } else if (kind == "named") {
    // "K1,3" keeps its comma: a purely numeric piece continues the previous name.
    std::vector<std::string> names;
    for (const auto& piece : split_on(body, ','))
      if (!names.empty() && std::all_of(piece.begin(), piece.end(), ::isdigit)) names.back() += "," + piece;
      else names.push_back(piece);
    for (const auto& name : names) out.push_back({name, named_graph(name), std::nullopt});
  } else if (kind == "file") {
    bool g6 = body.size() > 3 && body.substr(body.size() - 3) == ".g6";
    if (!g6) {
      out.push_back({body, read_graph_file(body), std::nullopt});
    } else {
      std::ifstream in(body);
      if (!in) throw PreconditionError("cannot open '" + body + "'");
      std::string line;
      int k = 0;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back({body + "#" + std::to_string(k++), parse_graph6(line), std::nullopt});
      }
    }
  } else {
    throw PreconditionError("unknown corpus kind '" + kind + "'");
  }
  return out;
}

// ---------------------------------------------------------------- suite

namespace {

bool applicable(const std::string& check, const Graph& g) {
  if (g.order() < 2 || !g.connected()) return false;
  bool block = is_block_graph(g);
  bool indecomposable = decompose(g).s() == 1;
  if (check == "theorem-main" || check.rfind("hope", 0) == 0) return block && indecomposable;
  if (check == "prop-product") return !indecomposable;
  if (check == "corollary-product") return block && !indecomposable;
  return true;
}

Report run_check(Workspace& ws, const std::string& check) {
  if (check == "theorem-main") return check_theorem_main(ws, Side::both);
  if (check == "prop-product") return check_prop_product(ws);
  if (check == "corollary-product") return check_corollary_product(ws);
  if (check == "hope-ii-iii") return check_hope(ws, Depth::combinatorial);
  if (check == "hope-monomial") return check_hope(ws, Depth::monomial);
  if (check == "hope-binomial") return check_hope(ws, Depth::binomial);
  if (check == "groebner-oracle") return check_groebner_oracle(ws);
  if (check == "triple-oracle") return check_triple_oracle(ws);
  if (check == "semicontinuity") return check_semicontinuity(ws);
  if (check == "conjecture-extremal") return check_conjecture_extremal(ws);
  if (check == "char-robustness") return check_char_robustness(ws);
  if (check == "koszul-consistency") return check_koszul_consistency(ws);
  if (check == "relabel-invariance") return check_relabel_invariance(ws);
  if (check == "matsuda-murai") {
    // Every vertex-deleted induced subgraph, merged into one report.
    const Graph& g = ws.graph();
    Report merged = start(ws, "matsuda-murai");
    std::vector<Verdict> parts;
    Json subs = Json::array();
    for (int v = g.order() - 1; v >= 0; --v) {
      Report one = check_matsuda_murai(ws, g.vertices() & ~bit(v));
      parts.push_back(one.verdict);
      subs.push_back({{"W", one.computed["W"]}, {"verdict", verdict_name(one.verdict)},
                      {"violations", one.computed.value("violations", Json::array())}});
    }
    merged.computed["subgraphs"] = subs;
    merged.expected = {{"rule", "beta_ij(J_{G_W}) <= beta_ij(J_G) for W = V minus one vertex"}};
    merged.verdict = combine(parts);
    return merged;
  }
  throw PreconditionError("unknown check '" + check + "'");
}

}  // namespace

SuiteResult run_suite(const std::vector<Instance>& corpus, const std::vector<std::string>& checks,
                      const HarnessConfig& config) {
  for (const auto& c : checks)
    if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
      throw PreconditionError("unknown check '" + c + "'");
  std::vector<std::string> ordered;
  for (const auto& c : known_checks())
    if (std::find(checks.begin(), checks.end(), c) != checks.end()) ordered.push_back(c);

  std::vector<std::size_t> order(corpus.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::uint64_t> hashes(corpus.size());
  for (std::size_t k = 0; k < corpus.size(); ++k) hashes[k] = graph_hash(corpus[k].graph);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return hashes[a] < hashes[b]; });

  std::vector<std::vector<Report>> per_instance(corpus.size());
  parallel_for(order.size(), config.threads, [&](std::size_t slot) {
    const Instance& inst = corpus[order[slot]];
    Workspace ws(inst, config);
    for (const auto& check : ordered) {
      if (!applicable(check, inst.graph)) continue;
      auto t0 = Clock::now();
      Report r;
      try {
        r = run_check(ws, check);
      } catch (const std::exception& e) {
        r = start(ws, check);
        r.verdict = Verdict::fail;
        r.computed["error"] = e.what();
      }
      r.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
      per_instance[slot].push_back(std::move(r));
    }
  });

  SuiteResult out;
  for (auto& reports : per_instance)
    for (auto& r : reports) {
      if (r.verdict == Verdict::pass) ++out.passed;
      else if (r.verdict == Verdict::fail) ++out.failed;
      else ++out.skipped;
      out.reports.push_back(std::move(r));
    }
  return out;
}

SuiteResult run_suite(const std::string& corpus, const std::vector<std::string>& checks, const HarnessConfig& config) {
  return run_suite(build_corpus(corpus, config.seed), checks, config);
}

std::string suite_summary(const SuiteResult& r) {
  std::map<std::string, std::array<int, 3>> counts;
  for (const auto& rep : r.reports) ++counts[rep.claim][static_cast<int>(rep.verdict)];
  std::ostringstream os;
  os << std::left << std::setw(22) << "claim" << std::right << std::setw(8) << "pass" << std::setw(8) << "fail"
     << std::setw(10) << "skipped" << "\n";
  for (const auto& c : known_checks()) {
    auto it = counts.find(c);
    if (it == counts.end()) continue;
    os << std::left << std::setw(22) << c << std::right << std::setw(8) << it->second[0] << std::setw(8)
       << it->second[1] << std::setw(10) << it->second[2] << "\n";
  }
  os << std::left << std::setw(22) << "total" << std::right << std::setw(8) << r.passed << std::setw(8) << r.failed
     << std::setw(10) << r.skipped << "\n";
  return os.str();
}

}  // namespace blockbetti
