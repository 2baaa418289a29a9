#include "blockbetti/monomial.hpp"

#include <algorithm>

namespace blockbetti {

std::string format_monomial(const Monomial& m, int n) {
  std::string s;
  for (int k = 0; k < 2 * n && k < kMaxVariables; ++k) {
    for (int p = 0; p < m.e[k]; ++p) {
      if (!s.empty()) s += '*';
      s += Variable::from_index(k, n).name();
    }
  }
  return s.empty() ? "1" : s;
}

std::string format_monomial(Mask m, int n) { return format_monomial(Monomial::from_mask(m), n); }

void MonomialIdeal::minimalize() {
  std::sort(gens.begin(), gens.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return lex_greater(a, b);
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Mask> kept;
  for (Mask g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](Mask k) { return subset_of(k, g); });
    if (!redundant) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end(), [](Mask a, Mask b) { return lex_greater(a, b); });
  gens = std::move(kept);
}

bool MonomialIdeal::contains(Mask m) const {
  return std::any_of(gens.begin(), gens.end(), [&](Mask g) { return subset_of(g, m); });
}

Mask MonomialIdeal::support() const {
  Mask s = 0;
  for (Mask g : gens) s |= g;
  return s;
}

}  // namespace blockbetti
