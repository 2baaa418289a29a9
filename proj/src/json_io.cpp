#include "blockbetti/json_io.hpp"

#include <cstdio>

namespace blockbetti {

Json vertex_list(Mask m) {
  Json out = Json::array();
  for_each_bit(m, [&](int v) { out.push_back(v + 1); });
  return out;
}

std::string hex_hash(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  return {{"n", g.order()}, {"edges", edges}};
}

namespace {

Json sets_json(const std::vector<Mask>& sets) {
  Json out = Json::array();
  for (Mask s : sets) out.push_back(vertex_list(s));
  return out;
}

Json entry_json(const ExtremalEntry& e) { return {{"i", e.i}, {"j", e.j}, {"beta", e.beta}}; }

}  // namespace

Json analysis_json(const Graph& g) {
  Json out = graph_json(g);
  out["hash"] = hex_hash(graph_hash(g));
  out["connected"] = g.connected();
  if (!g.connected() || g.order() == 0) return out;
  BlockStructure bs = block_structure(g);
  out["block_graph"] = is_block_graph(g);
  out["blocks"] = sets_json(bs.blocks);
  out["cutpoints"] = vertex_list(bs.cutpoints);
  out["maximal_cliques"] = sets_json(bs.maximal_cliques);
  out["cdeg"] = bs.cdeg;
  out["free_vertices"] = vertex_list(bs.free_vertices);
  out["inner_vertices"] = vertex_list(bs.inner_vertices);
  out["f"] = bs.f();
  out["i"] = bs.i();
  Decomposition d = decompose(g);
  Json comps = Json::array();
  for (const auto& c : d.components) {
    Mask m = 0;
    for (int v : c.origin) m |= bit(v);
    comps.push_back(vertex_list(m));
  }
  out["decomposition"] = {{"s", d.s()}, {"components", comps}, {"gluing_vertices", vertex_list(d.gluing_vertices)}};
  return out;
}

Json verdict_json(const ClassificationVerdict& v) {
  Json out;
  out["indecomposable"] = v.indecomposable;
  if (v.forbidden_hit) {
    Json emb = Json::array();
    for (int x : v.forbidden_hit->embedding) emb.push_back(x + 1);
    out["forbidden"] = {{"id", "T" + std::to_string(v.forbidden_hit->id)}, {"embedding", emb}};
  } else {
    out["forbidden"] = nullptr;
  }
  Json viol = Json::array();
  for (const auto& x : v.cutpoint_condition.violations) viol.push_back({{"vertex", x.vertex + 1}, {"cliques", x.cliques}});
  out["cutpoint_condition"] = {{"ok", v.cutpoint_condition.ok}, {"violations", viol}};
  out["predicted_single_extremal"] = v.predicted_single_extremal;
  if (!v.components.empty()) {
    Json comps = Json::array();
    for (std::size_t k = 0; k < v.components.size(); ++k) {
      Json labels = Json::array();
      for (int x : v.component_labels[k]) labels.push_back(x + 1);
      Json c = verdict_json(v.components[k]);
      c["vertices"] = labels;
      comps.push_back(c);
    }
    out["components"] = comps;
  }
  return out;
}

Json table_json(const BettiTable& t) {
  Json out;
  out["char"] = t.characteristic;
  out["total"] = t.total;
  Json entries = Json::array();
  for (const auto& [d, beta] : t.entries) entries.push_back({{"i", d.first}, {"j", d.second}, {"beta", beta}});
  out["entries"] = entries;
  if (!t.total) {
    Json computed = Json::array();
    for (const auto& [i, j] : t.computed) computed.push_back({i, j});
    out["computed"] = computed;
    return out;
  }
  TableAnalytics a = table_analytics(t);
  out["reg"] = a.reg;
  out["pd"] = a.pd;
  Json ext = Json::array();
  for (const auto& e : a.extremal) ext.push_back(entry_json(e));
  out["extremal"] = ext;
  out["distinguished"] = {{"reg", entry_json(a.reg_extremal)},
                          {"pd", entry_json(a.pd_extremal)},
                          {"single", a.single_extremal()}};
  out["polynomial"] = betti_polynomial_string(t);
  return out;
}

BettiTable table_from_json(const Json& j) {
  BettiTable t;
  t.characteristic = j.at("char").get<std::uint32_t>();
  t.total = j.at("total").get<bool>();
  for (const auto& e : j.at("entries")) t.add(e.at("i").get<int>(), e.at("j").get<int>(), e.at("beta").get<long>());
  if (!t.total)
    for (const auto& c : j.at("computed")) t.computed.insert({c.at(0).get<int>(), c.at(1).get<int>()});
  return t;
}

Json ideal_json(const MonomialIdeal& I, int n) {
  Json out = Json::array();
  for (Mask g : I.gens) out.push_back(format_monomial(g, n));
  return out;
}

Json groebner_json(const Graph& g, const MonomialIdeal& in) {
  int n = g.order();
  Json gens = Json::array();
  for (const auto& b : binomial_generators(g))
    gens.push_back(format_monomial(b.lead, n) + " - " + format_monomial(b.trail, n));
  Json paths = Json::array();
  for (const auto& p : admissible_paths(g)) {
    Json verts = Json::array();
    for (int v : p.vertices) verts.push_back(v + 1);
    paths.push_back({{"path", verts}, {"monomial", format_monomial(p.generator, n)}});
  }
  return {{"n", n},
          {"generators", gens},
          {"admissible_paths", paths},
          {"initial_ideal", ideal_json(in, n)}};
}

}  // namespace blockbetti
