#include "blockbetti/betti_table.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "blockbetti/errors.hpp"

namespace blockbetti {

void BettiTable::add(int i, int j, long beta) {
  if (beta == 0) return;
  long& slot = entries[{i, j}];
  slot += beta;
  if (slot == 0) entries.erase({i, j});
}

long BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

std::optional<long> BettiTable::query(int i, int j) const {
  if (!total && !computed.contains({i, j})) return std::nullopt;
  return at(i, j);
}

int BettiTable::regularity() const {
  int r = 0;
  for (const auto& [d, b] : entries) r = std::max(r, d.second - d.first);
  return r;
}

int BettiTable::projdim() const {
  int p = 0;
  for (const auto& [d, b] : entries) p = std::max(p, d.first);
  return p;
}

TableAnalytics table_analytics(const BettiTable& t) {
  if (!t.total) throw PreconditionError("table_analytics: extremal entries need a total table");
  TableAnalytics a;
  a.reg = t.regularity();
  a.pd = t.projdim();
  for (const auto& [d, beta] : t.entries) {
    auto [i, j] = d;
    int l = j - i;
    bool dominated = std::any_of(t.entries.begin(), t.entries.end(), [&](const auto& other) {
      auto [k, jj] = other.first;
      return other.first != d && k >= i && jj - k >= l;
    });
    if (!dominated) a.extremal.push_back({i, j, beta});
  }
  for (const auto& e : a.extremal) {
    if (e.j - e.i == a.reg) a.reg_extremal = e;
    if (e.i == a.pd) a.pd_extremal = e;
  }
  return a;
}

BettiTable betti_polynomial_product(const BettiTable& a, const BettiTable& b) {
  if (!a.total || !b.total) throw PreconditionError("betti_polynomial_product: tables must be total");
  BettiTable out;
  out.characteristic = a.characteristic;
  for (const auto& [da, x] : a.entries)
    for (const auto& [db, y] : b.entries) out.add(da.first + db.first, da.second + db.second, x * y);
  return out;
}

std::string betti_polynomial_string(const BettiTable& t) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, beta] : t.entries) {
    if (!first) os << " + ";
    first = false;
    bool unit = d.first == 0 && d.second == 0;
    if (beta != 1 || unit) os << beta;
    if (d.first) os << (beta != 1 ? "*" : "") << "s" << (d.first > 1 ? "^" + std::to_string(d.first) : "");
    if (d.second) os << (beta != 1 || d.first ? "*" : "") << "t" << (d.second > 1 ? "^" + std::to_string(d.second) : "");
  }
  return first ? "0" : os.str();
}

std::string render_table(const BettiTable& t) {
  int pd = t.projdim(), reg = t.regularity();
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(reg) + 1,
                                              std::vector<std::string>(static_cast<std::size_t>(pd) + 1, "."));
  std::vector<long> totals(static_cast<std::size_t>(pd) + 1, 0);
  for (const auto& [d, beta] : t.entries) {
    cells[d.second - d.first][d.first] = std::to_string(beta);
    totals[d.first] += beta;
  }
  if (!t.total)
    for (int l = 0; l <= reg; ++l)
      for (int i = 0; i <= pd; ++i)
        if (!t.computed.contains({i, i + l})) cells[l][i] = "?";
  std::size_t width = 1;
  for (auto& row : cells)
    for (auto& c : row) width = std::max(width, c.size());
  for (long x : totals) width = std::max(width, std::to_string(x).size());
  std::size_t label = std::max<std::size_t>(6, std::to_string(reg).size() + 1);

  std::ostringstream os;
  os << std::string(label + 1, ' ');
  for (int i = 0; i <= pd; ++i) os << std::setw(static_cast<int>(width)) << i << (i < pd ? " " : "");
  os << "\n" << std::setw(static_cast<int>(label)) << "total:" << ' ';
  for (int i = 0; i <= pd; ++i) os << std::setw(static_cast<int>(width)) << totals[i] << (i < pd ? " " : "");
  os << "\n";
  for (int l = 0; l <= reg; ++l) {
    os << std::setw(static_cast<int>(label)) << (std::to_string(l) + ":") << ' ';
    for (int i = 0; i <= pd; ++i) os << std::setw(static_cast<int>(width)) << cells[l][i] << (i < pd ? " " : "");
    os << "\n";
  }
  return os.str();
}

BettiTable quotient_from_ideal(const BettiTable& ideal) {
  BettiTable q;
  q.characteristic = ideal.characteristic;
  q.total = ideal.total;
  q.add(0, 0, 1);
  q.computed.insert({0, 0});
  for (const auto& [d, beta] : ideal.entries) q.add(d.first + 1, d.second, beta);
  for (const auto& d : ideal.computed) q.computed.insert({d.first + 1, d.second});
  return q;
}

BettiTable ideal_from_quotient(const BettiTable& quotient) {
  BettiTable id;
  id.characteristic = quotient.characteristic;
  id.total = quotient.total;
  for (const auto& [d, beta] : quotient.entries)
    if (d.first > 0) id.add(d.first - 1, d.second, beta);
  for (const auto& d : quotient.computed)
    if (d.first > 0) id.computed.insert({d.first - 1, d.second});
  return id;
}

}  // namespace blockbetti
