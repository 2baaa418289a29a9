#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "blockbetti/binomial_betti.hpp"
#include "blockbetti/json_io.hpp"
#include "blockbetti/monomial_betti.hpp"

namespace blockbetti {

struct HarnessConfig {
  std::uint32_t p = 2;
  std::uint32_t confirm_p = 32003;
  MonomialBudget monomial{};
  BinomialOptions binomial{};
  /// From this many vertices on, the monomial side of theorem-main computes
  /// only the columns i >= n-1 (all that extremality at column n-1 needs).
  int monomial_columns_from_n = 9;
  /// Binomial tables visit every multidegree up to this n, and only the
  /// support of the initial table beyond it.
  int exhaustive_binomial_max_n = 6;
  int relabelings = 3;
  int threads = 1;
  bool timing = false;
  std::uint64_t seed = 0;
};

enum class Side { monomial, binomial, both };
enum class Depth { combinatorial, monomial, binomial };
enum class Verdict { pass, fail, skipped_budget };

std::string verdict_name(Verdict v);

struct Instance {
  std::string name;  // empty for anonymous corpus members
  Graph graph;
  std::optional<std::uint64_t> seed;
};

struct Report {
  std::string claim;
  Json instance;
  Json computed = Json::object();
  Json expected = Json::object();
  Verdict verdict = Verdict::pass;
  std::vector<std::string> notes;
  double wall_seconds = 0;

  /// Wall time is included only when `timing` is set, so report streams
  /// stay byte-identical across runs.
  Json to_json(bool timing = false) const;
};

/// Lazily computed tables of one instance, shared by the checks run on it.
/// Budget failures are remembered and surface as nullopt plus a message.
class Workspace {
 public:
  Workspace(Instance instance, const HarnessConfig& config);

  const Instance& instance() const { return instance_; }
  const Graph& graph() const { return instance_.graph; }
  const HarnessConfig& config() const { return config_; }
  Json descriptor() const;

  const MonomialIdeal& initial();
  std::optional<BettiTable> monomial(std::uint32_t p);
  std::optional<BettiTable> monomial_columns(std::uint32_t p, int from_column);
  std::optional<BettiTable> binomial(std::uint32_t p);
  std::string binomial_mode() const;
  /// Last budget message per side ("monomial", "binomial").
  std::string budget_message(const std::string& side) const;

 private:
  Instance instance_;
  HarnessConfig config_;
  std::optional<MonomialIdeal> initial_;
  std::map<std::pair<std::uint32_t, int>, std::optional<BettiTable>> monomial_;
  std::map<std::uint32_t, std::optional<BettiTable>> binomial_;
  std::map<std::string, std::string> budget_;
};

/// Extremality of a nonzero (i, j) in a table that is total or holds every
/// column from `i` on. nullopt when the table cannot decide.
std::optional<bool> extremal_at(const BettiTable& t, int i, int j, int complete_from_column);

Report check_theorem_main(Workspace& ws, Side sides);
Report check_prop_product(Workspace& ws);
Report check_corollary_product(Workspace& ws);
Report check_hope(Workspace& ws, Depth depth);
Report check_matsuda_murai(Workspace& ws, Mask w);
Report check_groebner_oracle(Workspace& ws);
Report check_semicontinuity(Workspace& ws);
Report check_conjecture_extremal(Workspace& ws);
Report check_char_robustness(Workspace& ws);
Report check_koszul_consistency(Workspace& ws);
Report check_relabel_invariance(Workspace& ws);
Report check_triple_oracle(Workspace& ws);

Report check_theorem_main(const Graph& g, Side sides, const HarnessConfig& config = {});
Report check_prop_product(const Graph& g, const HarnessConfig& config = {});
Report check_corollary_product(const Graph& g, const HarnessConfig& config = {});
Report check_hope(const Graph& g, Depth depth, const HarnessConfig& config = {});
Report check_matsuda_murai(const Graph& g, Mask w, const HarnessConfig& config = {});

/// Every check id accepted by run_suite, in emission order.
const std::vector<std::string>& known_checks();

/// Corpus specs:
///   exhaustive:n<=6 | exhaustive:n=7..10   connected block graphs, one per class
///   random:count=1000,n<=25[,clique<=5][,indecomposable][,seed=7]
///   cliques:2..6 | named:K4,T0,paw,... | file:path (edge list or graph6 lines)
std::vector<Instance> build_corpus(const std::string& spec, std::uint64_t seed);

/// Named fixtures: Kn, Pn, Cn, K1,n (star), paw, bowtie, double-star, T0..T3.
Graph named_graph(const std::string& name);

struct SuiteResult {
  std::vector<Report> reports;  // ordered by (instance hash, check order)
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  bool ok() const { return failed == 0; }
};

/// Runs every applicable check on every instance; checks a graph does not
/// satisfy the hypotheses of are not emitted.
SuiteResult run_suite(const std::vector<Instance>& corpus, const std::vector<std::string>& checks,
                      const HarnessConfig& config);
SuiteResult run_suite(const std::string& corpus, const std::vector<std::string>& checks, const HarnessConfig& config);

/// Per-claim pass/fail/skip table.
std::string suite_summary(const SuiteResult& r);

}  // namespace blockbetti
