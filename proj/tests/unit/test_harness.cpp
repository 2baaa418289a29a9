#include <doctest.h>

#include "blockbetti/errors.hpp"
#include "blockbetti/generate.hpp"
#include "blockbetti/harness.hpp"

using namespace blockbetti;

namespace {
std::string stream_of(const SuiteResult& r) {
  std::string out;
  for (const auto& rep : r.reports) out += rep.to_json().dump() + "\n";
  return out;
}
}  // namespace

TEST_CASE("named fixtures") {
  CHECK(named_graph("K4") == complete_graph(4));
  CHECK(named_graph("K1,3") == star_graph(3));
  CHECK(named_graph("paw").size() == 4);
  CHECK(named_graph("bowtie").order() == 5);
  CHECK_THROWS_AS(named_graph("Q7"), PreconditionError);
}

TEST_CASE("corpus specs") {
  CHECK(build_corpus("exhaustive:n<=6", 0).size() == 1 + 2 + 4 + 9 + 22);
  CHECK(build_corpus("exhaustive:n=7..8", 0).size() == 59 + 165);
  CHECK(build_corpus("cliques:2..6", 0).size() == 5);
  auto named = build_corpus("named:K1,3,P4,T0", 0);
  REQUIRE(named.size() == 3);
  CHECK(named[0].name == "K1,3");
  auto a = build_corpus("random:count=20,n<=12,clique<=4,indecomposable,seed=5", 0);
  auto b = build_corpus("random:count=20,n<=12,clique<=4,indecomposable,seed=5", 99);
  REQUIRE(a.size() == 20);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].graph == b[k].graph);
    CHECK(a[k].graph == random_block_graph(12, 4, true, *a[k].seed));
  }
  CHECK_THROWS_AS(build_corpus("nonsense", 0), PreconditionError);
  CHECK_THROWS_AS(build_corpus("random:count=3,color=red", 0), PreconditionError);
}

TEST_CASE("theorem-main on cliques and stars") {
  for (int n = 2; n <= 6; ++n) CHECK(check_theorem_main(complete_graph(n), Side::both).verdict == Verdict::pass);
  Report star = check_theorem_main(star_graph(3), Side::both);
  CHECK(star.verdict == Verdict::pass);
  CHECK(star.computed["binomial"]["value"] == 2);
  CHECK_THROWS_AS(check_theorem_main(path_graph(4), Side::both), PreconditionError);
}

TEST_CASE("budget skips are explicit") {
  Report r = check_theorem_main(named_graph("T2"), Side::both);
  CHECK(r.computed["binomial"]["status"] == "skipped:budget");
  CHECK(r.computed["monomial"]["status"] == "pass");
  HarnessConfig tight;
  tight.monomial.max_lattice = 10;
  Report m = check_theorem_main(named_graph("K1,4"), Side::monomial, tight);
  CHECK(m.verdict == Verdict::skipped_budget);
}

TEST_CASE("corollary reports flag the printed exponent") {
  Report p3 = check_corollary_product(path_graph(3));
  CHECK(p3.verdict == Verdict::pass);
  CHECK(p3.expected["position"][1] == 4);
  CHECK(p3.expected["printed_degree"] == 5);
  CHECK_FALSE(p3.notes.empty());
  Report p4 = check_corollary_product(path_graph(4));
  CHECK(p4.verdict == Verdict::pass);
  CHECK(p4.expected["position"][1] == 6);
  CHECK(p4.expected["printed_degree"] == 8);
  CHECK(p4.computed["binomial"]["value"] == 1);
}

TEST_CASE("product proposition on a labeling that splits unevenly") {
  // Bowtie relabeled so the split vertex is vertex 1.
  Graph g = named_graph("bowtie").permuted({1, 2, 0, 3, 4});
  Report r = check_prop_product(g);
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.computed["initial"]["separated_supports"] == true);
}

TEST_CASE("hope at each depth") {
  CHECK(check_hope(named_graph("T1"), Depth::combinatorial).verdict == Verdict::pass);
  Report ds = check_hope(named_graph("double-star"), Depth::binomial);
  CHECK(ds.verdict == Verdict::pass);
  CHECK(ds.computed["binomial"]["single_extremal"] == true);
  Report t0 = check_hope(named_graph("T0"), Depth::binomial);
  CHECK(t0.computed["binomial"]["status"] == "verified");
  CHECK(t0.computed["binomial"]["reg_lower_bound"] == 3);
  Report t0m = check_hope(named_graph("T0"), Depth::monomial);
  CHECK(t0m.verdict == Verdict::pass);
  CHECK(t0m.computed["monomial"]["single_extremal"] == false);
}

TEST_CASE("Matsuda-Murai inequality") {
  CHECK(check_matsuda_murai(path_graph(4), 0b0111).verdict == Verdict::pass);
  CHECK(check_matsuda_murai(complete_graph(4), 0b0111).verdict == Verdict::pass);
  CHECK(check_matsuda_murai(complete_graph(4), 0b1111).verdict == Verdict::pass);
}

TEST_CASE("suites are deterministic across thread counts") {
  HarnessConfig one, four;
  four.threads = 4;
  std::vector<std::string> checks = {"theorem-main", "prop-product", "hope-ii-iii", "groebner-oracle", "relabel-invariance"};
  SuiteResult a = run_suite("exhaustive:n<=5", checks, one);
  SuiteResult b = run_suite("exhaustive:n<=5", checks, four);
  CHECK(a.ok());
  CHECK(stream_of(a) == stream_of(b));
  CHECK(suite_summary(a) == suite_summary(b));
  CHECK_THROWS_AS(run_suite("cliques:2..3", {"no-such-check"}, one), PreconditionError);
}

TEST_CASE("hope (ii) iff (iii) on a seeded random corpus") {
  SuiteResult r = run_suite("random:count=200,n<=25,clique<=5,indecomposable,seed=3", {"hope-ii-iii"}, {});
  CHECK(r.passed == 200);
  CHECK(r.failed == 0);
}
