#include <doctest.h>

#include "blockbetti/blocks.hpp"
#include "blockbetti/classify.hpp"
#include "blockbetti/errors.hpp"
#include "blockbetti/generate.hpp"
#include "blockbetti/graph.hpp"
#include "blockbetti/harness.hpp"
#include "oracles.hpp"

using namespace blockbetti;

namespace {
Mask set_of(std::initializer_list<int> one_based) {
  Mask m = 0;
  for (int v : one_based) m |= bit(v - 1);
  return m;
}
}  // namespace

TEST_CASE("edge-list and graph6 parsing") {
  Graph g = parse_graph("4\n1 2\n2 3\n3 4\n");
  CHECK(g == path_graph(4));
  CHECK(parse_graph6(to_graph6(g)) == g);
  CHECK(parse_graph6("C~") == complete_graph(4));
  CHECK_THROWS_AS(parse_graph("3\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3\n1 4\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("x\n"), ParseError);
}

TEST_CASE("block structure of small fixtures") {
  BlockStructure k3 = block_structure(complete_graph(3));
  CHECK(k3.blocks == std::vector<Mask>{set_of({1, 2, 3})});
  CHECK(k3.cutpoints == 0);
  CHECK(k3.f() == 3);
  CHECK(k3.i() == 0);

  BlockStructure p3 = block_structure(path_graph(3));
  CHECK(p3.cutpoints == set_of({2}));
  CHECK(p3.cdeg == std::vector<int>{1, 2, 1});

  BlockStructure t0 = block_structure(named_graph("T0"));
  CHECK(t0.blocks.size() == 3);
  CHECK(popcount(t0.cutpoints) == 1);
  CHECK(t0.f() == 6);
  CHECK(t0.i() == 1);

  CHECK_FALSE(is_block_graph(cycle_graph(4)));
  CHECK(is_block_graph(named_graph("bowtie")));
  CHECK_THROWS_AS(block_structure(Graph(3, {{0, 1}})), PreconditionError);
}

TEST_CASE("block recognition agrees with the cycle/diamond characterization") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : oracle::unlabeled_graphs(n, [](const Graph& h) { return h.connected(); }))
      CHECK(is_block_graph(g) == oracle::block_graph_by_cycles(g));
}

TEST_CASE("enumeration matches brute force up to isomorphism") {
  for (int n = 1; n <= 6; ++n) {
    auto brute = oracle::unlabeled_graphs(n, [](const Graph& h) { return h.connected() && oracle::block_graph_by_cycles(h); });
    auto listed = enumerate_block_graphs(n);
    REQUIRE(listed.size() == brute.size());
    std::vector<std::vector<std::uint64_t>> a, b;
    for (const auto& g : brute) a.push_back(oracle::canonical(g));
    for (const auto& g : listed) b.push_back(oracle::canonical(g));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("block graph counts") {
  // Connected block graphs on n unlabeled vertices (checked against brute force to n = 6 above).
  const std::vector<std::size_t> counts = {1, 1, 2, 4, 9, 22, 59, 165, 496, 1540};
  for (int n = 1; n <= 9; ++n) CHECK(enumerate_block_graphs(n).size() == counts[n - 1]);
  const std::vector<std::size_t> indecomposable = {6, 11, 23, 48};
  for (int n = 6; n <= 9; ++n) {
    std::size_t k = 0;
    for (const auto& g : enumerate_block_graphs(n)) k += decompose(g).s() == 1;
    CHECK(k == indecomposable[n - 6]);
  }
}

TEST_CASE("decomposition glues back") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& g : enumerate_block_graphs(n)) {
      Decomposition d = decompose(g);
      CHECK(reglue(d, n) == g);
      for (const auto& c : d.components) CHECK(decompose(c.graph).s() == 1);
      Mask glue = 0;
      for (int v = 0; v < n; ++v)
        if (is_splitting_vertex(g, block_structure(g), v)) glue |= bit(v);
      CHECK(d.gluing_vertices == glue);
      CHECK(d.s() == popcount(glue) + 1);
    }
  Decomposition p4 = decompose(path_graph(4));
  CHECK(p4.s() == 3);
  CHECK(p4.gluing_vertices == set_of({2, 3}));
}

TEST_CASE("leaf surgery on T0") {
  Graph t0 = named_graph("T0");
  auto leaves = leaf_blocks(t0);
  REQUIRE(leaves.size() == 3);
  LeafSurgery s = leaf_surgery(t0, leaves.front());
  BlockStructure before = block_structure(t0), after = block_structure(s.g_prime);
  CHECK(is_block_graph(s.g_prime));
  CHECK(after.i() == before.i() - 1);
  CHECK(s.q >= 2);
  CHECK(s.g_double_prime.graph.order() == 6);
  CHECK(s.h.graph.order() == 6);
}

TEST_CASE("forbidden graphs and the cutpoint condition") {
  for (const auto& t : forbidden_T_graphs()) {
    CAPTURE(t.name());
    ClassificationVerdict v = classify(t.graph);
    REQUIRE(v.forbidden_hit.has_value());
    CHECK(v.forbidden_hit->id == t.id);
    CHECK_FALSE(v.cutpoint_condition.ok);
    CHECK_FALSE(v.predicted_single_extremal);
    REQUIRE(v.cutpoint_condition.violations.size() == 1);
    CHECK(v.cutpoint_condition.violations[0].cliques == 3);
  }
  CHECK(named_graph("T0").order() == 7);
  CHECK(named_graph("T1").order() == 8);
  CHECK(named_graph("T2").order() == 9);
  CHECK(named_graph("T3").order() == 10);

  for (const char* name : {"K5", "K1,3", "double-star", "K2"}) {
    CAPTURE(name);
    ClassificationVerdict v = classify(named_graph(name));
    CHECK(v.indecomposable);
    CHECK_FALSE(v.forbidden_hit.has_value());
    CHECK(v.cutpoint_condition.ok);
    CHECK(v.predicted_single_extremal);
  }
  ClassificationVerdict p4 = classify(path_graph(4));
  CHECK_FALSE(p4.indecomposable);
  CHECK(p4.components.size() == 3);
}

TEST_CASE("(ii) iff (iii) on every indecomposable block graph up to 9 vertices") {
  int checked = 0;
  for (int n = 2; n <= 9; ++n)
    for (const auto& g : enumerate_block_graphs(n)) {
      if (decompose(g).s() != 1) continue;
      bool ii = !contains_forbidden(g).has_value();
      bool iii = satisfies_cutpoint_condition(g).ok;
      CHECK(ii == iii);
      ++checked;
    }
  CHECK(checked == 1 + 1 + 2 + 3 + 6 + 11 + 23 + 48);
}

TEST_CASE("random block graphs are seeded and respect their bounds") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Graph g = random_block_graph(25, 5, true, seed);
    CHECK(g == random_block_graph(25, 5, true, seed));
    CHECK(g.order() <= 25);
    REQUIRE(g.connected());
    CHECK(is_block_graph(g));
    CHECK(decompose(g).s() == 1);
    for (Mask c : block_structure(g).maximal_cliques) CHECK(popcount(c) <= 5);
  }
}

TEST_CASE("relabeling and canonical forms") {
  Graph g = named_graph("double-star");
  Graph h = g.permuted({5, 4, 3, 2, 1, 0});
  CHECK(block_graph_canonical_form(g) == block_graph_canonical_form(h));
  CHECK(block_graph_canonical_form(g) != block_graph_canonical_form(named_graph("K1,5")));
}
