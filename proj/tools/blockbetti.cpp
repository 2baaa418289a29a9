// blockbetti: block graphs, binomial edge ideals and their Betti tables.
#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <fstream>
#include <iostream>
#include <sstream>

#include "blockbetti/binomial_betti.hpp"
#include "blockbetti/blocks.hpp"
#include "blockbetti/classify.hpp"
#include "blockbetti/errors.hpp"
#include "blockbetti/groebner.hpp"
#include "blockbetti/harness.hpp"
#include "blockbetti/json_io.hpp"
#include "blockbetti/linalg.hpp"
#include "blockbetti/monomial_betti.hpp"

namespace fs = std::filesystem;
using namespace blockbetti;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3 };

struct Options {
  std::string graph;
  std::string side = "both";
  std::string window;
  std::string mode = "auto";
  std::string format = "json";
  std::string emit_dot;
  std::string report;
  std::string out;
  std::vector<std::string> corpus;
  std::string checks = "theorem-main";
  std::uint32_t p = 2;
  std::uint32_t confirm_p = 32003;
  int threads = 1;
  std::uint64_t seed = 0;
  bool timing = false;
  bool per_component = false;
};

// Budget overrides from the environment; the variable name is the message.
template <class T>
void env_override(const char* name, T& target) {
  const char* v = std::getenv(name);
  if (!v || !*v) return;
  try {
    long long x = std::stoll(v);
    if (x <= 0) throw std::invalid_argument("");
    target = static_cast<T>(x);
  } catch (const std::exception&) {
    throw PreconditionError(std::string(name) + " must be a positive integer, got '" + v + "'");
  }
}

HarnessConfig make_config(const Options& o) {
  if (o.p != 0 && !is_prime(o.p)) throw PreconditionError("--char must be 0 or a prime");
  if (!is_prime(o.confirm_p)) throw PreconditionError("--confirm-char must be a prime");
  HarnessConfig c;
  c.p = o.p;
  c.confirm_p = o.confirm_p;
  c.threads = std::max(1, o.threads);
  c.seed = o.seed;
  c.timing = o.timing;
  env_override("BLOCKBETTI_MAX_LATTICE", c.monomial.max_lattice);
  env_override("BLOCKBETTI_MAX_GENERATORS", c.monomial.max_generators);
  env_override("BLOCKBETTI_MAX_MONOMIAL_VARIABLES", c.monomial.max_variables);
  env_override("BLOCKBETTI_HOCHSTER_MAX_VARIABLES", c.monomial.hochster_max_variables);
  env_override("BLOCKBETTI_TAYLOR_MAX_GENERATORS", c.monomial.taylor_max_generators);
  env_override("BLOCKBETTI_MAX_VARIABLES", c.binomial.max_variables_full);
  env_override("BLOCKBETTI_MAX_WINDOW_VARIABLES", c.binomial.max_variables_window);
  env_override("BLOCKBETTI_MAX_NONZEROS", c.binomial.max_nonzeros);
  env_override("BLOCKBETTI_MAX_BASIS", c.binomial.buchberger.max_basis);
  env_override("BLOCKBETTI_EXHAUSTIVE_MAX_N", c.exhaustive_binomial_max_n);
  env_override("BLOCKBETTI_COLUMNS_FROM_N", c.monomial_columns_from_n);
  c.binomial.buchberger.max_variables = std::max(c.binomial.buchberger.max_variables, c.binomial.max_variables_window);
  return c;
}

Graph load_graph(const Options& o) {
  if (o.graph.empty()) throw PreconditionError("--graph is required");
  if (!fs::exists(o.graph)) {
    // Fixture names are accepted where no such file exists.
    try {
      return named_graph(o.graph);
    } catch (const PreconditionError&) {
      throw PreconditionError("no graph file or fixture named '" + o.graph + "'");
    }
  }
  return read_graph_file(o.graph);
}

std::vector<Bidegree> parse_window(const std::string& text) {
  std::vector<Bidegree> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    auto comma = item.find(',');
    try {
      if (comma == std::string::npos) throw std::invalid_argument("");
      std::size_t a = 0, b = 0;
      int i = std::stoi(item.substr(0, comma), &a);
      int j = std::stoi(item.substr(comma + 1), &b);
      if (a != comma || b != item.size() - comma - 1 || i < 0 || j < i) throw std::invalid_argument("");
      out.push_back({i, j});
    } catch (const std::exception&) {
      throw PreconditionError("malformed --window entry '" + item + "' (expected i,j with 0 <= i <= j)");
    }
  }
  if (out.empty()) throw PreconditionError("--window is empty");
  return out;
}

void print(const Json& j, const Options& o) { std::cout << (o.format == "json" ? j.dump(2) : j.dump()) << "\n"; }

void emit_dot(const std::string& prefix, const Graph& g, const std::vector<std::pair<std::string, BettiTable>>& tables) {
  if (prefix.empty()) return;
  std::ofstream gf(prefix + ".graph.dot");
  gf << "graph G {\n  node [shape=circle];\n";
  for (int v = 0; v < g.order(); ++v) gf << "  " << v + 1 << ";\n";
  for (auto [u, v] : g.edges()) gf << "  " << u + 1 << " -- " << v + 1 << ";\n";
  gf << "}\n";
  for (const auto& [name, t] : tables) {
    std::ofstream tf(prefix + "." + name + ".dot");
    std::string text = render_table(t), escaped;
    for (char c : text) escaped += c == '\n' ? std::string("\\l") : c == '"' ? std::string("\\\"") : std::string(1, c);
    tf << "digraph betti {\n  node [shape=box, fontname=monospace];\n  table [label=\"" << name << "\\l" << escaped
       << "\"];\n}\n";
  }
  if (!gf) throw std::runtime_error("cannot write " + prefix + ".graph.dot");
}

// Maps a per-graph JSON producer over components when requested.
Json per_component(const Graph& g, const Options& o, const std::function<Json(const Graph&)>& f) {
  if (!o.per_component || g.connected()) return f(g);
  Json out = Json::array();
  for (Mask c : g.components()) {
    Subgraph sub = induced_subgraph(g, c);
    Json j = f(sub.graph);
    j["component"] = vertex_list(c);
    out.push_back(j);
  }
  return out;
}

int cmd_analyze(const Options& o) {
  Graph g = load_graph(o);
  if (!g.connected() && !o.per_component)
    throw PreconditionError("graph is disconnected; pass --per-component to analyze each component");
  Json j = per_component(g, o, [](const Graph& h) { return analysis_json(h); });
  emit_dot(o.emit_dot, g, {});
  print(j, o);
  return kOk;
}

int cmd_groebner(const Options& o) {
  Graph g = load_graph(o);
  Json j = groebner_json(g, initial_ideal(g));
  if (o.format == "text") {
    std::cout << "generators:\n";
    for (const auto& s : j["generators"]) std::cout << "  " << s.get<std::string>() << "\n";
    std::cout << "initial ideal:\n";
    for (const auto& s : j["initial_ideal"]) std::cout << "  " << s.get<std::string>() << "\n";
    return kOk;
  }
  print(j, o);
  return kOk;
}

int cmd_classify(const Options& o) {
  Graph g = load_graph(o);
  if (!g.connected() && !o.per_component)
    throw PreconditionError("graph is disconnected; pass --per-component to classify each component");
  Json j = per_component(g, o, [](const Graph& h) { return verdict_json(classify(h)); });
  print(j, o);
  return kOk;
}

int cmd_betti(const Options& o) {
  Graph g = load_graph(o);
  HarnessConfig c = make_config(o);
  if (o.side != "monomial" && o.side != "binomial" && o.side != "both")
    throw PreconditionError("--side must be monomial, binomial or both");
  std::optional<std::vector<Bidegree>> window;
  if (!o.window.empty()) window = parse_window(o.window);

  Json j;
  j["graph"] = graph_json(g);
  std::vector<std::pair<std::string, BettiTable>> tables;
  if (o.side != "binomial") {
    c.monomial.threads = c.threads;
    BettiTable t = betti_monomial(initial_ideal(g), c.p, c.monomial);
    if (window) {
      BettiTable w;
      w.characteristic = t.characteristic;
      w.total = false;
      for (auto [i, jj] : *window) {
        w.computed.insert({i, jj});
        if (long b = t.at(i, jj)) w.add(i, jj, b);
      }
      t = w;
    }
    j["monomial"] = table_json(t);
    tables.push_back({"monomial", t});
  }
  if (o.side != "monomial") {
    BinomialOptions b = c.binomial;
    b.window = window;
    b.threads = c.threads;
    if (o.mode == "exhaustive") b.support = SupportMode::kExhaustive;
    else if (o.mode == "initial-support") b.support = SupportMode::kInitialSupport;
    else if (o.mode == "auto")
      b.support = g.order() <= c.exhaustive_binomial_max_n ? SupportMode::kExhaustive : SupportMode::kInitialSupport;
    else throw PreconditionError("--mode must be auto, exhaustive or initial-support");
    BinomialBetti r = betti_binomial(g, c.p, b);
    j["binomial"] = table_json(r.table);
    j["binomial"]["mode"] = r.support == SupportMode::kExhaustive ? "exhaustive" : "initial-support";
    tables.push_back({"binomial", r.table});
  }
  emit_dot(o.emit_dot, g, tables);
  if (o.format == "text") {
    for (const auto& [name, t] : tables) std::cout << name << ":\n" << render_table(t) << "\n";
    return kOk;
  }
  print(j, o);
  return kOk;
}

std::vector<std::string> parse_checks(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (item == "all") out = known_checks();
    else if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<Instance> gather(const Options& o, std::uint64_t seed) {
  if (o.corpus.empty()) throw PreconditionError("--corpus is required");
  std::vector<Instance> all;
  for (const auto& spec : o.corpus) {
    auto part = build_corpus(spec, seed);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

int cmd_verify(const Options& o) {
  HarnessConfig c = make_config(o);
  SuiteResult r = run_suite(gather(o, c.seed), parse_checks(o.checks), c);
  std::ofstream file;
  std::ostream* stream = &std::cout;
  if (!o.report.empty()) {
    file.open(o.report);
    if (!file) throw std::runtime_error("cannot write " + o.report);
    stream = &file;
  }
  if (o.format == "json" || !o.report.empty())
    for (const auto& rep : r.reports) *stream << rep.to_json(c.timing).dump() << "\n";
  std::cout << suite_summary(r);
  return r.ok() ? kOk : kCheckFailed;
}

int cmd_generate(const Options& o) {
  if (o.out.empty()) throw PreconditionError("--out is required");
  auto corpus = gather(o, o.seed);
  bool g6 = o.out.size() > 3 && o.out.substr(o.out.size() - 3) == ".g6";
  if (g6) {
    std::ofstream f(o.out);
    if (!f) throw std::runtime_error("cannot write " + o.out);
    for (const auto& inst : corpus) f << to_graph6(inst.graph) << "\n";
  } else {
    fs::create_directories(o.out);
    for (const auto& inst : corpus) {
      std::string name = inst.name;
      for (char& ch : name)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '-' && ch != '_') ch = '_';
      std::ofstream f(fs::path(o.out) / (name + ".txt"));
      if (!f) throw std::runtime_error("cannot write into " + o.out);
      f << format_graph(inst.graph);
    }
  }
  std::cout << corpus.size() << " graphs written to " << o.out << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Block graphs, binomial edge ideals and their graded Betti tables.\n\n"
               "Budget overrides (positive integers): BLOCKBETTI_MAX_LATTICE, BLOCKBETTI_MAX_GENERATORS,\n"
               "BLOCKBETTI_MAX_MONOMIAL_VARIABLES, BLOCKBETTI_HOCHSTER_MAX_VARIABLES, BLOCKBETTI_TAYLOR_MAX_GENERATORS,\n"
               "BLOCKBETTI_MAX_VARIABLES, BLOCKBETTI_MAX_WINDOW_VARIABLES, BLOCKBETTI_MAX_NONZEROS, BLOCKBETTI_MAX_BASIS,\n"
               "BLOCKBETTI_EXHAUSTIVE_MAX_N, BLOCKBETTI_COLUMNS_FROM_N.\n\n"
               "Exit status: 0 success, 1 a check failed, 2 usage or input error, 3 budget exceeded.",
               "blockbetti"};
  app.require_subcommand(1);
  Options o;

  auto graph_opt = [&](CLI::App* s) {
    s->add_option("--graph", o.graph, "edge-list or graph6 file, or a fixture name (K4, P3, T0, ...)")->required();
  };
  auto format_opt = [&](CLI::App* s, const std::vector<std::string>& choices) {
    s->add_option("--format", o.format, "output format")->check(CLI::IsMember(choices));
  };
  auto char_opt = [&](CLI::App* s) {
    s->add_option("--char", o.p, "field characteristic (0 or a prime)");
    s->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* analyze = app.add_subcommand("analyze", "blocks, cut points, clique degrees and decomposition");
  graph_opt(analyze);
  format_opt(analyze, {"json", "jsonl"});
  analyze->add_flag("--per-component", o.per_component, "analyze each connected component");
  analyze->add_option("--emit-dot", o.emit_dot, "write PREFIX.graph.dot");

  auto* groebner = app.add_subcommand("groebner", "generators of J_G and its lex initial ideal");
  graph_opt(groebner);
  format_opt(groebner, {"json", "jsonl", "text"});

  auto* betti = app.add_subcommand("betti", "graded Betti tables of S/in(J_G) and S/J_G");
  graph_opt(betti);
  char_opt(betti);
  format_opt(betti, {"json", "jsonl", "text"});
  betti->add_option("--side", o.side, "monomial, binomial or both")
      ->check(CLI::IsMember({"monomial", "binomial", "both"}));
  betti->add_option("--window", o.window, "only these positions: \"i,j;i,j\"");
  betti->add_option("--mode", o.mode, "binomial strand selection: auto, exhaustive, initial-support")
      ->check(CLI::IsMember({"auto", "exhaustive", "initial-support"}));
  betti->add_option("--emit-dot", o.emit_dot, "write PREFIX.graph.dot and PREFIX.<side>.dot");

  auto* cls = app.add_subcommand("classify", "forbidden induced subgraphs and the cut point condition");
  graph_opt(cls);
  format_opt(cls, {"json", "jsonl"});
  cls->add_flag("--per-component", o.per_component, "classify each connected component");

  auto* verify = app.add_subcommand("verify", "run checks over a corpus; JSON lines plus a summary");
  verify->add_option("--corpus", o.corpus, "exhaustive:n<=6 | random:count=..,n<=.. | cliques:2..6 | named:.. | file:..")
      ->required();
  verify->add_option("--checks", o.checks, "comma-separated check ids, or all");
  verify->add_option("--seed", o.seed, "seed for random corpora and relabelings");
  verify->add_option("--confirm-char", o.confirm_p, "second prime for char-robustness");
  verify->add_option("--report", o.report, "write the JSON-lines stream here instead of stdout");
  verify->add_flag("--timing", o.timing, "include wall times (breaks byte-identical output)");
  char_opt(verify);
  format_opt(verify, {"json", "text"});

  auto* generate = app.add_subcommand("generate", "write a corpus as edge-list files or one graph6 file");
  generate->add_option("--corpus", o.corpus, "corpus spec, as for verify")->required();
  generate->add_option("--out", o.out, "directory, or a path ending in .g6")->required();
  generate->add_option("--seed", o.seed, "seed for random corpora");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(o);
    if (*groebner) return cmd_groebner(o);
    if (*betti) return cmd_betti(o);
    if (*cls) return cmd_classify(o);
    if (*verify) return cmd_verify(o);
    if (*generate) return cmd_generate(o);
  } catch (const ResourceError& e) {
    std::cerr << "blockbetti: budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const ParseError& e) {
    std::cerr << "blockbetti: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "blockbetti: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "blockbetti: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}
