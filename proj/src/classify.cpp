#include "flip/classify.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace flip {

const char* side_name(Side s) noexcept {
  switch (s) {
    case Side::Whole: return "WHOLE";
    case Side::U: return "U";
    case Side::UBar: return "UBAR";
  }
  return "?";
}

const char* clause_name(Clause c) noexcept {
  switch (c) {
    case Clause::Pi1One: return "pi1=1";
    case Clause::Pi1Two: return "pi1=2";
    case Clause::Pi1NMinus1: return "pi1=n-1";
    case Clause::Pi1NMinus2: return "pi1=n-2";
    case Clause::Generic: return "generic";
  }
  return "?";
}

std::string to_string(const OrbitLabel& label) {
  std::string s = side_name(label.side);
  s += '{';
  for (std::size_t k = 0; k < label.weights.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(label.weights[k]);
  }
  s += '}';
  return s;
}

std::vector<Clause> applicable_clauses(int n, int q) {
  std::vector<Clause> out;
  if (q % 2 == 1) {
    if (q == 1) out.push_back(Clause::Pi1One);
    if (q == n - 1) out.push_back(Clause::Pi1NMinus1);
    if (q == n - 2) out.push_back(Clause::Pi1NMinus2);
    if (3 <= q && q <= n - 3) out.push_back(Clause::Generic);
  } else {
    if (q == 2) out.push_back(Clause::Pi1Two);
    if (q == n - 1) out.push_back(Clause::Pi1NMinus1);
    if (q == n - 2) out.push_back(Clause::Pi1NMinus2);
    if (4 <= q && q <= n - 3) out.push_back(Clause::Generic);
  }
  return out;
}

int min_feasible_weight(Side) { return 1; }

int max_feasible_weight(Side side, int n) { return side == Side::U ? n - 1 : n; }

namespace {

int mod4(int x) { return ((x % 4) + 4) % 4; }

// All j in [1, hi] congruent mod 4 to one of the residues.
std::vector<int> congruent(int hi, std::initializer_list<int> residues) {
  std::vector<int> out;
  for (int j = 1; j <= hi; ++j)
    for (int r : residues)
      if (mod4(j - r) == 0) {
        out.push_back(j);
        break;
      }
  return out;
}

std::vector<int> odds(int hi) {
  std::vector<int> out;
  for (int j = 1; j <= hi; j += 2) out.push_back(j);
  return out;
}

std::vector<int> clip(std::vector<int> ws, int hi) {
  std::erase_if(ws, [hi](int w) { return w < 1 || w > hi; });
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  return ws;
}

[[noreturn]] void bad_clause(Clause c, int n, int q) {
  throw std::logic_error(std::string("clause ") + clause_name(c) + " does not apply to n=" + std::to_string(n) +
                         " |Pi_1|=" + std::to_string(q));
}

}  // namespace

std::vector<int> weight_class(Clause clause, int n, int q, Side side, int w) {
  const int hi = max_feasible_weight(side, n);
  const int k = (w + 1) / 2;  // w lies in the pair {2k-1, 2k}

  if (side == Side::Whole) {
    switch (clause) {
      case Clause::Pi1One: return clip({w, n + 1 - w}, hi);
      case Clause::Pi1NMinus1: return clip({2 * k - 1, 2 * k}, hi);
      case Clause::Pi1NMinus2: return w % 2 ? odds(hi) : std::vector<int>{w};
      case Clause::Generic: return congruent(hi, {w, n + q - w});
      case Clause::Pi1Two: break;
    }
    bad_clause(clause, n, q);
  }

  if (side == Side::U) {
    switch (clause) {
      case Clause::Pi1Two: return clip({w, n - w}, hi);
      case Clause::Pi1NMinus1: return clip({2 * k - 1, 2 * k, n - 2 * k, n + 1 - 2 * k}, hi);
      case Clause::Pi1NMinus2: return w % 2 ? odds(hi) : clip({w, n - w}, hi);
      case Clause::Generic: return congruent(hi, {w, w + q - 2, n - w, n - w + q - 2});
      case Clause::Pi1One: break;
    }
    bad_clause(clause, n, q);
  }

  switch (clause) {
    case Clause::Pi1Two:
    case Clause::Generic: return congruent(hi, {w, w + q, n + 2 - w, n + 2 - w + q});
    case Clause::Pi1NMinus1: return clip({2 * k - 1, 2 * k, n + 2 - 2 * k, n + 3 - 2 * k}, hi);
    case Clause::Pi1NMinus2: return w % 2 ? odds(hi) : clip({w, n + 2 - w}, hi);
    case Clause::Pi1One: break;
  }
  bad_clause(clause, n, q);
}

Side side_of(const Puzzle& p, const BitVec& coords) {
  if (p.odd()) return Side::Whole;
  return coords.test(static_cast<std::size_t>(p.n() - 1)) ? Side::UBar : Side::U;
}

OrbitLabel label_for(const Puzzle& p, Side side, int sw) {
  if (sw == 0) return OrbitLabel{side, {0}};
  const auto clauses = applicable_clauses(p.n(), p.pi1_size());
  assert(!clauses.empty());
  OrbitLabel label{side, weight_class(clauses.front(), p.n(), p.pi1_size(), side, sw)};
#ifndef NDEBUG
  for (Clause c : clauses) assert(weight_class(c, p.n(), p.pi1_size(), side, sw) == label.weights);
#endif
  return label;
}

OrbitLabel classify(const Puzzle& p, const Config& u) {
  const BitVec c = p.basis().coords(u);
  return label_for(p, side_of(p, c), static_cast<int>(c.count()));
}

OrbitLabel classify_state(const Puzzle& p, std::uint64_t state) {
  const std::uint64_t c = p.basis().coords_word(state);
  Side side = Side::Whole;
  if (!p.odd()) side = ((c >> (p.n() - 1)) & 1U) ? Side::UBar : Side::U;
  return label_for(p, side, std::popcount(c));
}

bool reachable(const Puzzle& p, const Config& u, const Config& v) { return classify(p, u) == classify(p, v); }

OrbitLabel classify_path_subgroup(const Puzzle& p, const Config& u) {
  const BitVec c = p.basis().coords(u);
  const Side side = side_of(p, c);
  const int sw = static_cast<int>(c.count());
  const int n = p.n();
  if (sw == 0) return OrbitLabel{side, {0}};
  switch (side) {
    case Side::Whole: return OrbitLabel{side, {sw}};
    case Side::U: return OrbitLabel{side, clip({sw, n - sw}, n - 1)};
    case Side::UBar: return OrbitLabel{side, clip({sw, n + 2 - sw}, n)};
  }
  return {};
}

int table_orbit_count(int n, int q) {
  if (q % 2 == 1) {
    if (q == 1) return (n + 3) / 2;  // ceil((n+2)/2)
    if (q == n - 2) return (n + 3) / 2;
    if (q == n - 1) return (n + 2) / 2;
    return n % 2 == 0 ? 3 : 4;
  }
  if (q == 2) return n % 2 == 0 ? (n + 6) / 2 : (n + 3) / 2;
  if (q == n - 2) return (n + 6) / 2;
  if (q == n - 1) return (n + 3) / 2;
  return n % 2 == 0 ? 6 : 4;
}

namespace {

std::vector<BigCount> binomial_row(int m) {
  std::vector<BigCount> row(static_cast<std::size_t>(m) + 1);
  row[0] = 1;
  for (int t = 0; t < m; ++t) row[t + 1] = row[t] * (m - t) / (t + 1);
  return row;
}

bool meets(const std::vector<int>& weights, const std::vector<int>& index_set) {
  for (int w : weights)
    if (std::binary_search(index_set.begin(), index_set.end(), w)) return true;
  return false;
}

}  // namespace

OrbitTable orbit_table(const Puzzle& p) {
  const int n = p.n();
  std::map<OrbitLabel, OrbitEntry> entries;

  auto add_side = [&](Side side, int lo, int hi, const std::vector<BigCount>& row, int shift) {
    for (int w = lo; w <= hi; ++w) {
      OrbitLabel label = label_for(p, side, w);
      auto [it, fresh] = entries.try_emplace(label);
      if (fresh) {
        it->second.label = label;
        const auto& index_set = side == Side::UBar ? p.sets().J : p.sets().I;
        it->second.min_weight = label.trivial() ? 0 : (meets(label.weights, index_set) ? 1 : 2);
      }
      it->second.size += row[static_cast<std::size_t>(w - shift)];
    }
  };

  if (p.odd()) {
    add_side(Side::Whole, 0, n, binomial_row(n), 0);
  } else {
    const auto row = binomial_row(n - 1);
    add_side(Side::U, 0, n - 1, row, 0);
    add_side(Side::UBar, 1, n, row, 1);
  }

  OrbitTable table;
  for (auto& [label, entry] : entries) {
    table.max_orbit_weight = std::max(table.max_orbit_weight, entry.min_weight);
    table.orbits.push_back(std::move(entry));
  }
  table.orbit_count = static_cast<int>(table.orbits.size());
  return table;
}

int orbit_count(const Puzzle& p) { return table_orbit_count(p.n(), p.pi1_size()); }

int max_orbit_weight(const Puzzle& p) { return orbit_table(p).max_orbit_weight; }

}  // namespace flip
