#include <doctest.h>

#include <algorithm>
#include <set>

#include "blockbetti/errors.hpp"
#include "blockbetti/generate.hpp"
#include "blockbetti/groebner.hpp"
#include "blockbetti/harness.hpp"
#include "oracles.hpp"

using namespace blockbetti;

namespace {

// Admissible-path generators straight from the definition: condition (3) is
// tested against every proper subset of the internal vertices.
std::set<Mask> admissible_by_definition(const Graph& g) {
  int n = g.order();
  std::set<Mask> gens;
  auto connects = [&](int i, int j, Mask allowed) {
    Mask seen = bit(i), frontier = bit(i);
    while (frontier) {
      Mask next = 0;
      for_each_bit(frontier, [&](int v) { next |= g.neighbors(v) & allowed & ~seen; });
      seen |= next;
      frontier = next;
    }
    return (seen >> j) & 1U;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto walk = [&](auto&& self, int v, Mask used) -> void {
        if (v == j) {
          Mask inner = used & ~bit(i) & ~bit(j);
          bool minimal = true;
          for (Mask w = (inner - 1) & inner;; w = (w - 1) & inner) {
            if (w != inner && connects(i, j, w | bit(i) | bit(j))) minimal = false;
            if (w == 0 || !minimal) break;
          }
          if (!minimal) return;
          Mask gen = bit(i) | bit(n + j);
          for_each_bit(inner, [&](int u) { gen |= u > j ? bit(u) : bit(n + u); });
          gens.insert(gen);
          return;
        }
        for_each_bit(g.neighbors(v) & ~used, [&](int w) {
          if (w != j && w > i && w < j) return;  // internal vertices lie outside [i, j]
          self(self, w, used | bit(w));
        });
      };
      walk(walk, i, bit(i));
    }
  return gens;
}

std::set<Mask> as_set(const MonomialIdeal& I) { return {I.gens.begin(), I.gens.end()}; }

std::set<Mask> minimal_of(const std::set<Mask>& gens, int nvars) {
  MonomialIdeal I{nvars, {gens.begin(), gens.end()}};
  I.minimalize();
  return as_set(I);
}

}  // namespace

TEST_CASE("generators and initial terms of small graphs") {
  auto gens = binomial_generators(path_graph(3));
  REQUIRE(gens.size() == 2);
  CHECK(format_monomial(gens[0].lead, 3) == "x1*y2");
  CHECK(format_monomial(gens[0].trail, 3) == "x2*y1");
  MonomialIdeal in = initial_ideal(path_graph(3));
  CHECK(in.gens.size() == 2);
}

TEST_CASE("labeling 1-3-2 of the path adds a cubic initial generator") {
  Graph g(3, {{0, 2}, {1, 2}});
  std::set<std::string> printed;
  for (Mask m : initial_ideal(g).gens) printed.insert(format_monomial(m, 3));
  CHECK(printed == std::set<std::string>{"x1*y3", "x2*y3", "x1*x3*y2"});
  CHECK(initial_ideal(g) == buchberger_initial_ideal(g));
}

TEST_CASE("admissible paths match the definition on every connected graph up to 6 vertices") {
  for (int n = 2; n <= 6; ++n) {
    int count = 0;
    for (const Graph& g : oracle::unlabeled_graphs(n, [](const Graph& h) { return h.connected(); })) {
      CHECK(as_set(initial_ideal(g)) == minimal_of(admissible_by_definition(g), 2 * n));
      ++count;
    }
    CHECK(count > 0);
  }
}

TEST_CASE("admissible-path initial ideal equals Buchberger's on all labeled graphs up to 5 vertices") {
  for (int n = 2; n <= 5; ++n) {
    int pairs = n * (n - 1) / 2;
    for (Mask m = 0; m < bit(pairs); ++m) {
      Graph g(n);
      int k = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++k)
          if ((m >> k) & 1U) g.add_edge(u, v);
      CHECK(initial_ideal(g) == buchberger_initial_ideal(g));
    }
  }
}

TEST_CASE("relabeled block graphs keep the two initial ideals equal") {
  for (int n = 6; n <= 7; ++n)
    for (const auto& g : enumerate_block_graphs(n)) {
      std::vector<int> perm(n);
      for (int v = 0; v < n; ++v) perm[v] = (3 * v + 1) % n;
      if (n % 3 == 0)
        for (int v = 0; v < n; ++v) perm[v] = n - 1 - v;
      Graph h = g.permuted(perm);
      CHECK(initial_ideal(h) == buchberger_initial_ideal(h));
    }
  for (const auto& t : forbidden_T_graphs()) {
    CAPTURE(t.name());
    CHECK(initial_ideal(t.graph) == buchberger_initial_ideal(t.graph, {.max_variables = 20}));
  }
}

TEST_CASE("normal forms stay standard") {
  Graph g = named_graph("bowtie");
  GroebnerBasis gb = buchberger(g);
  MonomialIdeal in = gb.leading_ideal();
  for (const Monomial& m : standard_monomials(in, 5, 2))
    for (int k = 0; k < 10; ++k) {
      Monomial r = normal_form(m, Variable::from_index(k, 5), gb);
      CHECK(gb.is_standard(r));
      CHECK(r.degree() == 3);
    }
}

TEST_CASE("Buchberger budget") {
  CHECK_THROWS_AS(buchberger(complete_graph(10), {.max_variables = 16}), ResourceError);
}
