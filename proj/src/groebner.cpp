#include "blockbetti/groebner.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <tuple>

#include "blockbetti/errors.hpp"

namespace blockbetti {

namespace {

Monomial xy(int n, int i, int j) {
  Monomial m;
  m.e[i] = 1;
  m.e[n + j] = 1;
  return m;
}

const Binomial* find_reducer(const std::vector<Binomial>& basis, const Monomial& m, Mask support) {
  for (const auto& b : basis)
    if (subset_of(b.lead.support(), support) && b.lead.divides(m)) return &b;
  return nullptr;
}

Monomial reduce(const std::vector<Binomial>& basis, Monomial m) {
  for (;;) {
    const Binomial* r = find_reducer(basis, m, m.support());
    if (!r) return m;
    m = (m / r->lead) * r->trail;
  }
}

void sort_basis(std::vector<Binomial>& basis) {
  std::sort(basis.begin(), basis.end(),
            [](const Binomial& a, const Binomial& b) { return lex_greater(a.lead, b.lead); });
}

}  // namespace

std::vector<Binomial> binomial_generators(const Graph& g) {
  std::vector<Binomial> out;
  int n = g.order();
  for (auto [i, j] : g.edges()) out.push_back({xy(n, i, j), xy(n, j, i)});
  return out;
}

std::vector<AdmissiblePath> admissible_paths(const Graph& g) {
  int n = g.order();
  std::vector<AdmissiblePath> out;
  std::vector<int> path;
  Mask on_path = 0;

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Mask allowed = (bit(i) - 1) | (g.vertices() & ~(bit(j + 1) - 1));
      // Depth-first over chordless paths from i: a chord would let a proper
      // subset of the internal vertices form an i-j path.
      auto dfs = [&](auto&& self, int last) -> void {
        Mask previous = on_path & ~bit(last);
        if (g.adjacent(last, j) && !(g.neighbors(j) & previous)) {
          AdmissiblePath p;
          p.vertices = path;
          p.vertices.push_back(j);
          for (std::size_t k = 1; k < path.size(); ++k) {
            int v = path[k];
            if (v > j) p.u.e[v] = 1;
            else p.u.e[n + v] = 1;
          }
          p.generator = xy(n, i, j) * p.u;
          out.push_back(std::move(p));
        }
        if (g.adjacent(last, j)) return;  // any longer path has the chord last-j
        for_each_bit(g.neighbors(last) & allowed & ~on_path, [&](int w) {
          if (g.neighbors(w) & previous) return;
          path.push_back(w);
          on_path |= bit(w);
          self(self, w);
          on_path &= ~bit(w);
          path.pop_back();
        });
      };
      path = {i};
      on_path = bit(i);
      dfs(dfs, i);
    }
  }
  return out;
}

MonomialIdeal initial_ideal(const Graph& g) {
  MonomialIdeal I{2 * g.order(), {}};
  for (const auto& p : admissible_paths(g)) {
    if (p.generator.support() == 0 || popcount(p.generator.support()) != p.generator.degree())
      throw VerificationFailure("initial_ideal: generator is not squarefree");
    I.gens.push_back(p.generator.support());
  }
  I.minimalize();
  return I;
}

GroebnerBasis::GroebnerBasis(int n, std::vector<Binomial> basis) : n_(n), basis_(std::move(basis)) {
  sort_basis(basis_);
}

MonomialIdeal GroebnerBasis::leading_ideal() const {
  MonomialIdeal I{2 * n_, {}};
  for (const auto& b : basis_) {
    Mask s = b.lead.support();
    if (popcount(s) != b.lead.degree())
      throw VerificationFailure("leading term is not squarefree: " + format_monomial(b.lead, n_));
    I.gens.push_back(s);
  }
  I.minimalize();
  return I;
}

Monomial GroebnerBasis::normal_form(const Monomial& m) const { return reduce(basis_, m); }

bool GroebnerBasis::is_standard(const Monomial& m) const {
  return find_reducer(basis_, m, m.support()) == nullptr;
}

GroebnerBasis buchberger(const Graph& g, const BuchbergerBudget& budget) {
  int n = g.order();
  if (2 * n > budget.max_variables)
    throw ResourceError("buchberger: " + std::to_string(2 * n) + " variables exceed the budget of " +
                        std::to_string(budget.max_variables));
  std::vector<Binomial> basis;
  using Pair = std::tuple<int, std::size_t, std::size_t>;  // (lcm degree, i, j)
  std::priority_queue<Pair, std::vector<Pair>, std::greater<>> pairs;
  std::size_t processed = 0;

  auto add = [&](Binomial b) {
    std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (basis[i].lead.coprime(b.lead)) continue;  // product criterion
      pairs.emplace(basis[i].lead.lcm(b.lead).degree(), i, k);
    }
    basis.push_back(std::move(b));
    if (basis.size() > budget.max_basis)
      throw ResourceError("buchberger: basis exceeds " + std::to_string(budget.max_basis) + " elements");
  };
  auto normalized = [&](Monomial p, Monomial q) -> std::optional<Binomial> {
    p = reduce(basis, p);
    q = reduce(basis, q);
    if (p == q) return std::nullopt;
    if (lex_greater(q, p)) std::swap(p, q);
    return Binomial{p, q};
  };

  for (const auto& b : binomial_generators(g))
    if (auto r = normalized(b.lead, b.trail)) add(*r);

  while (!pairs.empty()) {
    auto [deg, i, j] = pairs.top();
    pairs.pop();
    if (++processed > budget.max_pairs)
      throw ResourceError("buchberger: more than " + std::to_string(budget.max_pairs) + " S-pairs");
    const Binomial& a = basis[i];
    const Binomial& b = basis[j];
    Monomial l = a.lead.lcm(b.lead);
    Monomial p = (l / a.lead) * a.trail;
    Monomial q = (l / b.lead) * b.trail;
    if (auto r = normalized(p, q)) add(*r);
  }

  // Reduced basis: minimal leading terms, fully reduced trails.
  std::vector<Binomial> minimal;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    bool redundant = false;
    for (std::size_t o = 0; o < basis.size() && !redundant; ++o) {
      if (o == k || !basis[o].lead.divides(basis[k].lead)) continue;
      redundant = basis[o].lead != basis[k].lead || o < k;
    }
    if (!redundant) minimal.push_back(basis[k]);
  }
  for (auto& b : minimal) b.trail = reduce(minimal, b.trail);
  return GroebnerBasis(n, std::move(minimal));
}

MonomialIdeal buchberger_initial_ideal(const Graph& g, const BuchbergerBudget& budget) {
  return buchberger(g, budget).leading_ideal();
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& initial, int n, int d) {
  std::vector<Monomial> out;
  Monomial m;
  int nv = 2 * n;
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == nv - 1) {
      m.e[k] = static_cast<std::uint8_t>(left);
      if (!initial.contains(m.support())) out.push_back(m);
      m.e[k] = 0;
      return;
    }
    for (int a = left; a >= 0; --a) {
      m.e[k] = static_cast<std::uint8_t>(a);
      self(self, k + 1, left - a);
    }
    m.e[k] = 0;
  };
  if (nv == 0) {
    if (d == 0) out.push_back(m);
    return out;
  }
  rec(rec, 0, d);
  return out;
}

Monomial normal_form(const Monomial& m, Variable var, const GroebnerBasis& gb) {
  return gb.normal_form(m * Monomial::variable(var.index(gb.n())));
}

}  // namespace blockbetti
