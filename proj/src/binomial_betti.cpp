#include "blockbetti/binomial_betti.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <unordered_map>

#include "blockbetti/errors.hpp"
#include "blockbetti/linalg.hpp"
#include "blockbetti/parallel.hpp"

namespace blockbetti {

namespace {

constexpr int kMaxEngineVariables = 32;
using Exps = std::array<std::uint8_t, kMaxEngineVariables>;

struct ExpsHash {
  std::size_t operator()(const Exps& e) const noexcept {
    std::uint64_t w[4];
    std::memcpy(w, e.data(), sizeof w);
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto x : w) h = (h ^ x) * 0xff51afd7ed558ccdULL + (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

Mask support_of(const Exps& e, int nv) {
  Mask m = 0;
  for (int k = 0; k < nv; ++k)
    if (e[k]) m |= bit(k);
  return m;
}

// Reduction modulo a pure-difference basis with squarefree leading terms:
// divisibility by a lead is containment of supports.
class Reducer {
 public:
  Reducer(const GroebnerBasis& gb, int nv) : nv_(nv) {
    for (const auto& b : gb.elements()) {
      Exps lead{}, trail{};
      for (int k = 0; k < nv; ++k) lead[k] = b.lead.e[k], trail[k] = b.trail.e[k];
      if (popcount(b.lead.support()) != b.lead.degree())
        throw VerificationFailure("Koszul engine: non-squarefree leading term");
      rules_.push_back({b.lead.support(), lead, trail});
    }
  }

  Exps normal_form(Exps m) const {
    for (;;) {
      Mask s = support_of(m, nv_);
      const Rule* r = nullptr;
      for (const auto& rule : rules_)
        if (subset_of(rule.lead_mask, s)) {
          r = &rule;
          break;
        }
      if (!r) return m;
      for (int k = 0; k < nv_; ++k) m[k] = static_cast<std::uint8_t>(m[k] - r->lead[k] + r->trail[k]);
    }
  }

 private:
  struct Rule {
    Mask lead_mask;
    Exps lead, trail;
  };
  int nv_;
  std::vector<Rule> rules_;
};

// One strand of the Koszul complex: multidegree A in N^n with x-degree c.
struct Strand {
  std::vector<std::uint8_t> a;
  int c = 0;
  int copies = 1;  // mirror strands counted along with this one
  int degree() const {
    int d = 0;
    for (auto x : a) d += x;
    return d;
  }
};

struct StrandResult {
  std::map<int, long> homology;  // i -> dim H_i
  std::size_t largest = 0;
};

struct CellKey {
  Mask tau;
  Exps m;
  bool operator==(const CellKey&) const = default;
};
struct CellKeyHash {
  std::size_t operator()(const CellKey& k) const noexcept {
    return ExpsHash{}(k.m) ^ (static_cast<std::size_t>(k.tau) * 0x9e3779b97f4a7c15ULL);
  }
};

class KoszulEngine {
 public:
  KoszulEngine(const GroebnerBasis& gb, const MonomialIdeal& in, std::uint32_t p, std::size_t max_nonzeros)
      : n_(gb.n()), nv_(2 * gb.n()), reducer_(gb, 2 * gb.n()), p_(p), max_nonzeros_(max_nonzeros),
        by_last_vertex_(gb.n()) {
    for (Mask g : in.gens) {
      int last = 0;
      for_each_bit(g, [&](int v) { last = std::max(last, v % n_); });
      by_last_vertex_[last].push_back(g);
    }
  }

  // Homology in the requested homological degrees (all when `wanted` is empty).
  StrandResult homology(const Strand& s, const std::set<int>& wanted) const {
    std::vector<std::vector<CellKey>> cells = chain_groups(s);
    int top = static_cast<int>(cells.size()) - 1;
    std::set<int> degrees = wanted;
    if (degrees.empty())
      for (int i = 0; i <= top; ++i) degrees.insert(i);

    StrandResult out;
    std::map<int, std::size_t> rank;  // rank of d_i : C_i -> C_{i-1}
    auto rank_of = [&](int i) -> std::size_t {
      if (i <= 0 || i > top || cells[i].empty() || cells[i - 1].empty()) return 0;
      if (auto it = rank.find(i); it != rank.end()) return it->second;
      SparseMatrix d = differential(cells[i], cells[i - 1], s);
      out.largest = std::max(out.largest, d.nonzeros());
      return rank[i] = rank_over(d, p_);
    };
    for (int i : degrees) {
      if (i < 0 || i > top || cells[i].empty()) continue;
      long h = static_cast<long>(cells[i].size()) - static_cast<long>(rank_of(i)) - static_cast<long>(rank_of(i + 1));
      if (h) out.homology[i] = h;
    }
    return out;
  }

 private:
  // Basis e_tau (x) m of the strand, m standard, grouped by |tau|.
  std::vector<std::vector<CellKey>> chain_groups(const Strand& s) const {
    std::vector<std::vector<CellKey>> cells(static_cast<std::size_t>(nv_) + 1);
    std::vector<int> residual(n_);
    auto monomials = [&](Mask tau, int c_left) {
      auto& bucket = cells[popcount(tau)];
      Exps m{};
      auto rec = [&](auto&& self, int k, int left, Mask supp) -> void {
        if (k == n_) {
          if (left == 0) bucket.push_back({tau, m});
          return;
        }
        int r = residual[k];
        for (int e = std::min(r, left); e >= 0; --e) {
          Mask next = supp;
          if (e) next |= bit(k);
          if (r - e) next |= bit(n_ + k);
          if (next != supp && closes_generator(k, next)) continue;
          m[k] = static_cast<std::uint8_t>(e);
          m[n_ + k] = static_cast<std::uint8_t>(r - e);
          self(self, k + 1, left - e, next);
        }
        m[k] = 0;
        m[n_ + k] = 0;
      };
      rec(rec, 0, c_left, 0);
    };
    auto taus = [&](auto&& self, int k, Mask tau, int xs) -> void {
      if (k == n_) {
        monomials(tau, s.c - xs);
        return;
      }
      int a = s.a[k];
      for (int choice = 0; choice < 4; ++choice) {
        bool x = choice & 1, y = choice & 2;
        int used = x + y;
        if (used > a || xs + x > s.c) continue;
        residual[k] = a - used;
        Mask t = tau | (x ? bit(k) : 0) | (y ? bit(n_ + k) : 0);
        self(self, k + 1, t, xs + x);
      }
    };
    taus(taus, 0, 0, 0);
    while (cells.size() > 1 && cells.back().empty()) cells.pop_back();
    return cells;
  }

  // Generators whose last vertex is k; earlier ones were ruled out already.
  bool closes_generator(int k, Mask supp) const {
    for (Mask g : by_last_vertex_[k])
      if (subset_of(g, supp)) return true;
    return false;
  }

  SparseMatrix differential(const std::vector<CellKey>& from, const std::vector<CellKey>& to, const Strand& s) const {
    std::unordered_map<CellKey, std::uint32_t, CellKeyHash> index;
    index.reserve(to.size());
    for (std::size_t k = 0; k < to.size(); ++k) index.emplace(to[k], static_cast<std::uint32_t>(k));
    SparseMatrix d(from.size(), to.size());
    std::size_t nonzeros = 0;
    for (std::size_t r = 0; r < from.size(); ++r) {
      const CellKey& cell = from[r];
      int pos = 0;
      for_each_bit(cell.tau, [&](int v) {
        Exps m = cell.m;
        ++m[v];
        CellKey target{cell.tau & ~bit(v), reducer_.normal_form(m)};
        auto it = index.find(target);
        if (it == index.end()) throw VerificationFailure("Koszul engine: normal form left the strand");
        d.add(r, it->second, (pos % 2) ? -1 : 1);
        ++pos;
        ++nonzeros;
      });
      if (nonzeros > max_nonzeros_) {
        std::string deg;
        for (auto x : s.a) deg += std::to_string(x);
        throw ResourceError("Koszul engine: differential " + std::to_string(from.size()) + " x " +
                            std::to_string(to.size()) + " in multidegree " + deg + "/" + std::to_string(s.c) +
                            " exceeds " + std::to_string(max_nonzeros_) + " nonzeros");
      }
    }
    d.finalize();
    return d;
  }

  int n_;
  int nv_;
  Reducer reducer_;
  std::uint32_t p_;
  std::size_t max_nonzeros_;
  std::vector<std::vector<Mask>> by_last_vertex_;
};

void for_each_composition(int n, int total, const std::function<void(const std::vector<std::uint8_t>&)>& f) {
  std::vector<std::uint8_t> a(n, 0);
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == n - 1) {
      a[k] = static_cast<std::uint8_t>(left);
      f(a);
      return;
    }
    for (int x = left; x >= 0; --x) {
      a[k] = static_cast<std::uint8_t>(x);
      self(self, k + 1, left - x);
    }
  };
  if (n == 0) {
    if (total == 0) f(a);
    return;
  }
  rec(rec, 0, total);
}

// Automorphisms of g by backtracking; perm[v] is the image of v.
std::vector<std::vector<int>> automorphisms(const Graph& g) {
  int n = g.order();
  std::vector<std::vector<int>> out;
  std::vector<int> perm(n, -1);
  Mask used = 0;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      out.push_back(perm);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if ((used >> w) & 1U || g.degree(w) != g.degree(v)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == g.adjacent(perm[u], w);
      if (!ok) continue;
      perm[v] = w;
      used |= bit(w);
      self(self, v + 1);
      used &= ~bit(w);
    }
    perm[v] = -1;
  };
  rec(rec, 0);
  return out;
}

Strand strand_of(Mask sigma, int n) {
  Strand s;
  s.a.assign(n, 0);
  for_each_bit(sigma, [&](int v) {
    if (v < n) ++s.a[v], ++s.c;
    else ++s.a[v - n];
  });
  return s;
}

}  // namespace

BinomialBetti betti_binomial(const Graph& g, std::uint32_t p, const BinomialOptions& options) {
  if (p != 0 && !is_prime(p)) throw PreconditionError("betti_binomial: characteristic must be 0 or a prime");
  int n = g.order();
  int nv = 2 * n;
  bool windowed = options.window.has_value();
  int limit = windowed ? options.max_variables_window : options.max_variables_full;
  if (nv > limit)
    throw ResourceError("betti_binomial: " + std::to_string(nv) + " variables exceed the " +
                        (windowed ? "windowed" : "full-table") + " budget of " + std::to_string(limit));
  if (nv > kMaxEngineVariables) throw ResourceError("betti_binomial: more than 32 variables");

  GroebnerBasis gb = buchberger(g, options.buchberger);
  MonomialIdeal in = gb.leading_ideal();
  KoszulEngine engine(gb, in, p, options.max_nonzeros);

  BinomialBetti out;
  out.support = options.support;
  out.table.characteristic = p;
  out.table.total = !windowed;

  // Which homological degrees each internal degree needs.
  std::map<int, std::set<int>> by_j;
  if (windowed) {
    for (auto [i, j] : *options.window) {
      if (i < 0 || j < 0) throw PreconditionError("betti_binomial: negative bidegree in window");
      by_j[j].insert(i);
      out.table.computed.insert({i, j});
    }
  }

  std::vector<std::pair<Strand, std::set<int>>> tasks;
  if (options.support == SupportMode::kInitialSupport) {
    // beta_{i,(A,c)}(S/J) <= beta_{i,(A,c)}(S/in J): only the support of the initial table can carry homology.
    MultigradedBetti fine;
    if (!in.gens.empty()) fine = multigraded_betti_monomial(in, p, options.monomial);
    // Several squarefree sigma coarsen to one strand (A, c); each strand is computed once.
    std::map<std::pair<std::vector<std::uint8_t>, int>, std::set<int>> support;
    for (const auto& [key, beta] : fine.entries) {
      auto [i, sigma] = key;
      if (sigma == 0) continue;
      int j = popcount(sigma);
      if (windowed && !(by_j.contains(j) && by_j[j].contains(i))) continue;
      Strand s = strand_of(sigma, n);
      support[{s.a, s.c}].insert(i);
    }
    for (auto& [strand, is] : support)
      tasks.push_back({Strand{strand.first, strand.second}, windowed ? is : std::set<int>{}});
  } else {
    int max_j;
    if (windowed) {
      max_j = by_j.empty() ? -1 : by_j.rbegin()->first;
    } else {
      // One degree past pd + reg of the initial table, so the bound is observed rather than assumed.
      BettiTable coarse = in.gens.empty() ? BettiTable{} : betti_monomial(in, 2, options.monomial);
      max_j = coarse.projdim() + coarse.regularity() + 1;
    }
    auto auts = automorphisms(g);
    std::vector<std::uint8_t> image(n);
    for (int j = 1; j <= max_j; ++j) {
      if (windowed && !by_j.contains(j)) continue;
      std::set<int> wanted = windowed ? by_j[j] : std::set<int>{};
      // x <-> y maps J_G to itself, so strand (A, c) mirrors (A, j - c);
      // an automorphism of G carries strand (A, c) to (A o perm^-1, c).
      // One strand per orbit, weighted by the orbit size.
      for_each_composition(n, j, [&](const std::vector<std::uint8_t>& a) {
        int stabilizer = 0;
        for (const auto& perm : auts) {
          for (int k = 0; k < n; ++k) image[perm[k]] = a[k];
          if (image < a) return;
          stabilizer += image == a;
        }
        int orbit = static_cast<int>(auts.size()) / stabilizer;
        for (int c = 0; 2 * c <= j; ++c) tasks.push_back({Strand{a, c, orbit * (2 * c < j ? 2 : 1)}, wanted});
      });
    }
  }

  std::mutex guard;
  parallel_for(tasks.size(), options.threads, [&](std::size_t k) {
    const auto& [s, wanted] = tasks[k];
    StrandResult r = engine.homology(s, wanted);
    std::lock_guard lock(guard);
    ++out.complexes;
    out.largest_matrix = std::max(out.largest_matrix, r.largest);
    for (auto [i, h] : r.homology) out.table.add(i, s.degree(), h * s.copies);
  });
  if (!windowed || (by_j.contains(0) && by_j[0].contains(0))) out.table.add(0, 0, 1);
  return out;
}

BettiTable clique_betti_oracle(int n) {
  if (n < 2) throw PreconditionError("clique_betti_oracle: n must be at least 2");
  BettiTable t;
  t.add(0, 0, 1);
  for (int i = 1; i <= n - 1; ++i) {
    long binom = 1;
    for (int k = 1; k <= i + 1; ++k) binom = binom * (n - i - 1 + k) / k;
    t.add(i, i + 1, static_cast<long>(i) * binom);
  }
  return t;
}

std::vector<long> hilbert_numerator(const MonomialIdeal& I, int max_degree) {
  int nv = I.nvars;
  std::vector<long> faces(static_cast<std::size_t>(nv) + 2, 0);  // f-vector by face size
  auto grow = [&](auto&& self, int start, Mask face) -> void {
    ++faces[popcount(face)];
    for (int v = start; v < nv; ++v) {
      Mask next = face | bit(v);
      if (!I.contains(next)) self(self, v + 1, next);
    }
  };
  grow(grow, 0, 0);

  auto binom = [](long a, long b) -> long {
    if (b < 0 || a < b) return 0;
    long r = 1;
    for (long k = 1; k <= b; ++k) r = r * (a - b + k) / k;
    return r;
  };
  // HF(0) = 1; HF(d) = sum over nonempty faces F of C(d-1, |F|-1).
  std::vector<long> hf(static_cast<std::size_t>(max_degree) + 1, 0);
  for (int d = 0; d <= max_degree; ++d) {
    if (d == 0) {
      hf[0] = 1;
      continue;
    }
    for (int s = 1; s <= nv; ++s) hf[d] += faces[s] * binom(d - 1, s - 1);
  }
  std::vector<long> num(static_cast<std::size_t>(max_degree) + 1, 0);
  for (int j = 0; j <= max_degree; ++j)
    for (int k = 0; k <= std::min(j, nv); ++k) num[j] += (k % 2 ? -1 : 1) * binom(nv, k) * hf[j - k];
  return num;
}

std::vector<long> alternating_betti_sums(const BettiTable& t, int max_degree) {
  std::vector<long> out(static_cast<std::size_t>(max_degree) + 1, 0);
  for (const auto& [d, beta] : t.entries)
    if (d.second <= max_degree) out[d.second] += (d.first % 2 ? -1 : 1) * beta;
  return out;
}

}  // namespace blockbetti
