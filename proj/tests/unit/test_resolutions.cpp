#include <doctest.h>

#include "blockbetti/binomial_betti.hpp"
#include "blockbetti/errors.hpp"
#include "blockbetti/generate.hpp"
#include "blockbetti/groebner.hpp"
#include "blockbetti/harness.hpp"
#include "blockbetti/monomial_betti.hpp"

using namespace blockbetti;

namespace {

MonomialIdeal ideal(int nvars, std::vector<std::vector<int>> gens) {
  MonomialIdeal I{nvars, {}};
  for (const auto& g : gens) {
    Mask m = 0;
    for (int v : g) m |= bit(v - 1);
    I.gens.push_back(m);
  }
  I.minimalize();
  return I;
}

BettiTable table(std::initializer_list<std::tuple<int, int, long>> entries) {
  BettiTable t;
  for (auto [i, j, b] : entries) t.add(i, j, b);
  return t;
}

// Stanley-Reisner ideal of the six-vertex projective plane: the ten missing triangles.
MonomialIdeal rp2_ideal() {
  std::vector<std::vector<int>> faces = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                         {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}};
  std::vector<std::vector<int>> missing;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      for (int c = b + 1; c <= 6; ++c)
        if (std::find(faces.begin(), faces.end(), std::vector<int>{a, b, c}) == faces.end())
          missing.push_back({a, b, c});
  return ideal(6, missing);
}

void all_three_agree(const MonomialIdeal& I, std::uint32_t p) {
  BettiTable a = betti_monomial(I, p), b = hochster_betti(I, p), c = taylor_betti(I, p);
  CHECK(a == b);
  CHECK(a == c);
  CHECK(multigraded_betti_monomial(I, p) == multigraded_hochster_betti(I, p));
}

BinomialOptions mode(SupportMode m) {
  BinomialOptions o;
  o.support = m;
  return o;
}

}  // namespace

TEST_CASE("monomial fixtures") {
  CHECK(betti_monomial(ideal(3, {{1, 2}, {2, 3}}), 2) == table({{0, 0, 1}, {1, 2, 2}, {2, 3, 1}}));
  CHECK(betti_monomial(ideal(3, {{1}, {2}, {3}}), 2) == table({{0, 0, 1}, {1, 1, 3}, {2, 2, 3}, {3, 3, 1}}));
  CHECK(betti_monomial(ideal(4, {{1, 2}, {3, 4}}), 2) == table({{0, 0, 1}, {1, 2, 2}, {2, 4, 1}}));
  CHECK(betti_monomial(MonomialIdeal{3, {}}, 2) == table({{0, 0, 1}}));
  all_three_agree(ideal(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}), 2);
  all_three_agree(ideal(5, {{1, 2, 3}, {2, 4}, {3, 5}, {1, 5}}), 3);
}

TEST_CASE("projective plane ideal: characteristic-dependent tables, engines agree per characteristic") {
  MonomialIdeal I = rp2_ideal();
  REQUIRE(I.gens.size() == 10);
  for (std::uint32_t p : {2u, 3u}) all_three_agree(I, p);
  BettiTable t2 = betti_monomial(I, 2), t3 = betti_monomial(I, 3);
  CHECK(t2 != t3);
  // Hochster at the full vertex set: H~_1(RP^2) = F_2 feeds beta_{3,6} in characteristic 2 only.
  CHECK(t2.at(3, 6) == 1);
  CHECK(t3.at(3, 6) == 0);
  CHECK(betti_monomial(I, 0) == t3);
}

TEST_CASE("engines agree on initial ideals of small graphs") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& g : enumerate_block_graphs(n)) all_three_agree(initial_ideal(g), 2);
  all_three_agree(initial_ideal(cycle_graph(5)), 2);
  all_three_agree(initial_ideal(Graph(3, {{0, 2}, {1, 2}})), 5);
}

TEST_CASE("column mode equals the tail of the full table") {
  for (const char* name : {"T0", "double-star", "bowtie", "K1,4"}) {
    CAPTURE(name);
    MonomialIdeal I = initial_ideal(named_graph(name));
    BettiTable full = betti_monomial(I, 2);
    int from = named_graph(name).order() - 1;
    BettiTable tail = betti_monomial_columns(I, 2, from);
    CHECK_FALSE(tail.total);
    for (const auto& [d, beta] : full.entries)
      if (d.first >= from) CHECK(tail.at(d.first, d.second) == beta);
    for (const auto& [d, beta] : tail.entries) CHECK(d.first >= from);
  }
}

TEST_CASE("lattice and generator budgets raise ResourceError") {
  MonomialBudget tiny;
  tiny.max_lattice = 10;
  CHECK_THROWS_AS(betti_monomial(initial_ideal(named_graph("T0")), 2, tiny), ResourceError);
  MonomialBudget few;
  few.taylor_max_generators = 3;
  CHECK_THROWS_AS(taylor_betti(initial_ideal(path_graph(5)), 2, few), ResourceError);
}

TEST_CASE("Hilbert numerator matches alternating Betti sums of the initial table") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& g : enumerate_block_graphs(n)) {
      MonomialIdeal in = initial_ideal(g);
      BettiTable t = betti_monomial(in, 2);
      int top = t.projdim() + t.regularity() + 2;
      CHECK(hilbert_numerator(in, top) == alternating_betti_sums(t, top));
    }
}

TEST_CASE("clique oracle") {
  CHECK(clique_betti_oracle(3) == table({{0, 0, 1}, {1, 2, 3}, {2, 3, 2}}));
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    BettiTable t = betti_binomial(complete_graph(n), 2).table;
    CHECK(t == clique_betti_oracle(n));
    CHECK(t.at(n - 1, n) == n - 1);
    CHECK(betti_binomial(complete_graph(n), 3).table == t);
  }
}

TEST_CASE("paths are complete intersections") {
  BettiTable quadric = table({{0, 0, 1}, {1, 2, 1}});
  BettiTable expect = quadric;
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(betti_binomial(path_graph(n), 2).table == expect);
    expect = betti_polynomial_product(expect, quadric);
  }
  CHECK(betti_polynomial_string(betti_binomial(path_graph(3), 2).table) == "1 + 2*s*t^2 + s^2*t^4");
}

TEST_CASE("double star") {
  BettiTable t = betti_binomial(named_graph("double-star"), 2).table;
  CHECK(betti_polynomial_string(t) ==
        "1 + 5*s*t^2 + 12*s^2*t^4 + 4*s^3*t^5 + 13*s^3*t^6 + 12*s^4*t^7 + 3*s^5*t^8");
  TableAnalytics a = table_analytics(t);
  CHECK(a.reg == 3);
  CHECK(a.single_extremal());
  CHECK(a.extremal == std::vector<ExtremalEntry>{{5, 8, 3}});
  CHECK(betti_binomial(named_graph("double-star"), 2, mode(SupportMode::kInitialSupport)).table == t);
}

TEST_CASE("both strand selections and the Hilbert series agree") {
  std::vector<Graph> graphs;
  for (int n = 2; n <= 5; ++n)
    for (const auto& g : enumerate_block_graphs(n)) graphs.push_back(g);
  graphs.push_back(cycle_graph(4));
  graphs.push_back(cycle_graph(5));
  graphs.push_back(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}}));
  graphs.push_back(Graph(3, {{0, 2}, {1, 2}}));
  for (const auto& g : graphs) {
    BettiTable full = betti_binomial(g, 2, mode(SupportMode::kExhaustive)).table;
    BettiTable pruned = betti_binomial(g, 2, mode(SupportMode::kInitialSupport)).table;
    CHECK(full == pruned);
    MonomialIdeal in = initial_ideal(g);
    BettiTable tin = betti_monomial(in, 2);
    int top = tin.projdim() + tin.regularity() + 2;
    CHECK(hilbert_numerator(in, top) == alternating_betti_sums(full, top));
    for (const auto& [d, beta] : full.entries) CHECK(beta <= tin.at(d.first, d.second));
  }
}

TEST_CASE("rational and odd characteristic agree with characteristic 2 on small graphs") {
  for (const char* name : {"P4", "paw", "bowtie", "K1,3"}) {
    CAPTURE(name);
    BettiTable t2 = betti_binomial(named_graph(name), 2).table;
    CHECK(betti_binomial(named_graph(name), 0).table == t2);
    CHECK(betti_binomial(named_graph(name), 32003).table == t2);
  }
}

TEST_CASE("windowed search on T0") {
  BinomialOptions o = mode(SupportMode::kInitialSupport);
  o.window = std::vector<Bidegree>{{3, 6}, {4, 7}, {5, 8}, {6, 8}};
  BinomialBetti w = betti_binomial(named_graph("T0"), 2, o);
  CHECK_FALSE(w.table.total);
  CHECK(w.table.at(3, 6) == 1);
  CHECK(w.table.at(6, 8) == 5);
  CHECK(w.table.query(2, 4) == std::nullopt);
  // The initial ideal has the same entry.
  CHECK(betti_monomial(initial_ideal(named_graph("T0")), 2).at(6, 8) == 5);
}

TEST_CASE("binomial budgets") {
  CHECK_THROWS_AS(betti_binomial(complete_graph(7), 2), ResourceError);
  BinomialOptions o;
  o.max_nonzeros = 5;
  CHECK_THROWS_AS(betti_binomial(complete_graph(4), 2, o), ResourceError);
  CHECK_THROWS_AS(betti_binomial(complete_graph(3), 4), PreconditionError);
}
