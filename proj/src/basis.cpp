#include "flip/basis.hpp"

#include <algorithm>
#include <cassert>

#include "flip/error.hpp"

namespace flip {

namespace {

void fill_prefix(PiSystem& p) {
  p.pi1_prefix.assign(static_cast<std::size_t>(p.n) + 1, 0);
  for (int i = 1; i <= p.n; ++i) p.pi1_prefix[static_cast<std::size_t>(i)] = p.pi1_prefix[i - 1] + (p.in_pi1(i) ? 1 : 0);
  p.pi1_size = p.pi1_prefix.back();
}

}  // namespace

PiSystem build_pi_recursive(const GraphSpec& g) {
  const int n = g.n();
  const auto un = static_cast<std::size_t>(n);
  PiSystem p;
  p.n = n;
  p.pi.reserve(un);
  p.pi.push_back(Config::unit(un, 0));
  for (int i = 1; i <= n - 1; ++i) p.pi.push_back(apply_move(g, p.pi.back(), i, MoveMode::Feigning));

  const Config sn = Config::unit(un, un - 1);
  p.pi1_mask = BitVec(un);
  for (std::size_t i = 0; i < un; ++i)
    if (p.pi[i].dot(sn)) p.pi1_mask.set(i);
  fill_prefix(p);
  return p;
}

bool pi1_by_interval(const GraphSpec& g, int i) {
  const auto& j = g.attach();
  const int m = static_cast<int>(j.size());
  auto at = [&](int t) { return t > m ? g.n() : j[static_cast<std::size_t>(t - 1)]; };
  for (int t = 1; t <= (m + 1) / 2; ++t)
    if (at(2 * t - 1) < i && i <= at(2 * t)) return true;
  return false;
}

PiSystem build_pi_closed(const GraphSpec& g) {
  const int n = g.n();
  const auto un = static_cast<std::size_t>(n);
  PiSystem p;
  p.n = n;
  p.pi1_mask = BitVec(un);
  p.pi.reserve(un);
  for (int i = 1; i <= n; ++i) {
    const bool in1 = pi1_by_interval(g, i);
    Config v(un);
    if (i <= n - 1) {
      // s~_0 := 0
      if (i >= 2) v.set(static_cast<std::size_t>(i - 2));
      v.set(static_cast<std::size_t>(i - 1));
    } else {
      v.set(un - 2);
    }
    if (in1) {
      v.set(un - 1);
      p.pi1_mask.set(static_cast<std::size_t>(i - 1));
    }
    p.pi.push_back(std::move(v));
  }
  fill_prefix(p);
  return p;
}

int pi1_size_formula(const GraphSpec& g) {
  const auto& j = g.attach();
  const int m = static_cast<int>(j.size());
  auto at = [&](int t) { return t > m ? g.n() : j[static_cast<std::size_t>(t - 1)]; };
  int total = 0;
  for (int k = 1; k <= (m + 1) / 2; ++k) total += at(2 * k) - at(2 * k - 1);
  return total;
}

SimpleBasis build_delta(const PiSystem& p) {
  const auto un = static_cast<std::size_t>(p.n);
  SimpleBasis b;
  b.odd_ = (p.pi1_size % 2) == 1;
  b.delta_ = p.pi;
  if (!b.odd_) b.delta_.back() = Config::unit(un, un - 1);
  b.pi1_mask_ = p.pi1_mask;
  if (!b.odd_) b.pi1_mask_.set(un - 1, false);

  if (p.n <= SimpleBasis::kDenseLimit) {
    auto inverse = BitMatrix::from_columns(b.delta_).inverse();
    if (!inverse) throw Error(Errc::InternalRankError, "simple basis is not of full rank");
    b.inverse_columns_.reserve(un);
    for (std::size_t j = 0; j < un; ++j) b.inverse_columns_.push_back(inverse->column(j));
    if (un <= 64)
      for (const BitVec& c : b.inverse_columns_) b.inverse_words_.push_back(c.word());
  }
  return b;
}

BitVec SimpleBasis::coords(const Config& u) const {
  if (!has_dense_inverse()) return coords_linear(u);
  BitVec c(u.size());
  for (std::size_t j = u.find_next(0); j < u.size(); j = u.find_next(j + 1)) c ^= inverse_columns_[j];
  return c;
}

std::uint64_t SimpleBasis::coords_word(std::uint64_t u) const {
  std::uint64_t c = 0;
  while (u) {
    c ^= inverse_words_[static_cast<std::size_t>(std::countr_zero(u))];
    u &= u - 1;
  }
  return c;
}

Config SimpleBasis::combine(const BitVec& coords) const {
  Config u(delta_.size());
  for (std::size_t k : coords.ones()) u ^= delta_[k];
  return u;
}

BitVec SimpleBasis::coords_linear(const Config& u) const {
  const std::size_t n = delta_.size();
  BitVec c(n);
  if (odd_) {
    // u_r = c_r + c_{r+1} (r < n) and u_n = sum of c_i over Pi_1, so
    // c_i = c_1 + (u_1 + ... + u_{i-1}) with c_1 fixed by the odd count.
    std::vector<bool> prefix(n, false);
    bool run = false;
    bool c1 = u.test(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      prefix[i] = run;
      if (pi1_mask_.test(i)) c1 ^= run;
      if (i + 1 < n) run ^= u.test(i);
    }
    for (std::size_t i = 0; i < n; ++i)
      if (c1 ^ prefix[i]) c.set(i);
  } else {
    // u_r = c_r + c_{r+1} (r < n-1), u_{n-1} = c_{n-1}; the s~_n slot absorbs
    // the remaining last coordinate.
    bool run = false;
    bool last = u.test(n - 1);
    for (std::size_t i = n - 1; i-- > 0;) {
      run ^= u.test(i);
      if (run) {
        c.set(i);
        if (pi1_mask_.test(i)) last = !last;
      }
    }
    if (last) c.set(n - 1);
  }
  return c;
}

std::vector<int> simple_coords(const SimpleBasis& b, const Config& u) {
  std::vector<int> out;
  for (std::size_t k : b.coords(u).ones()) out.push_back(b.label(k));
  return out;
}

int sw_of_standard(const SimpleBasis& b, const PiSystem& p, int i) {
  const int n = p.n;
  if (b.odd()) {
    if (i == n) return n;
    return p.prefix(i) % 2 == 0 ? i : n - i;
  }
  if (i == n) return 1;
  return p.prefix(i) % 2 == 0 ? i : i + 1;
}

bool WeightIndexSets::in_I(int w) const { return std::binary_search(I.begin(), I.end(), w); }
bool WeightIndexSets::in_J(int w) const { return std::binary_search(J.begin(), J.end(), w); }

WeightIndexSets weight_index_sets(const PiSystem& p) {
  const int n = p.n;
  WeightIndexSets s;
  if (p.pi1_size % 2 == 1) {
    for (int i = 1; i <= n; ++i)
      if (p.prefix(i) % 2 == 0 || i == n || p.prefix(n - i) % 2 == 1) s.I.push_back(i);
  } else {
    for (int i = 1; i <= n - 1; ++i)
      if (p.prefix(i) % 2 == 0) s.I.push_back(i);
    for (int j = 1; j <= n; ++j)
      if (j == 1 || p.prefix(j - 1) % 2 == 1) s.J.push_back(j);
  }
  return s;
}

SnAction sn_simple_action(const GraphSpec& g, const SimpleBasis& b, const PiSystem& p, const Config& u) {
  const int n = g.n();
  const int q = p.pi1_size;
  const BitVec c = b.coords(u);
  const int sw = static_cast<int>(c.count());
  int k = 0;
  for (std::size_t slot : c.ones())
    if (b.label(slot) <= n && p.in_pi1(b.label(slot))) ++k;

  SnAction out;
  out.k = k;
  out.image = apply_move(g, u, n, MoveMode::Feigning);
  out.simple_weight = simple_weight(b, out.image);

  if (b.odd()) {
    out.predicted_weight = (k % 2 == 0) ? sw : n - q + 2 * k - sw;
  } else {
    const bool in_ubar = c.test(static_cast<std::size_t>(n - 1));
    const bool nbar_in_pi1 = p.in_pi1(n);
    const bool fixed = in_ubar ? (k % 2 == 1) : (k % 2 == 0);
    if (fixed)
      out.predicted_weight = sw;
    else if (nbar_in_pi1)
      out.predicted_weight = n - q + 2 * k + (in_ubar ? 2 : 0) - sw;
    else
      out.predicted_weight = sw + q - 2 * k;
  }
  assert(out.predicted_weight == out.simple_weight);
  return out;
}

Puzzle::Puzzle(GraphSpec g)
    : graph_(std::move(g)), pi_(build_pi_closed(graph_)), basis_(build_delta(pi_)), sets_(weight_index_sets(pi_)) {
  if (build_pi_recursive(graph_) != pi_) throw Error(Errc::InternalRankError, "recursive and closed-form Pi disagree");
  if (pi1_size_formula(graph_) != pi_.pi1_size)
    throw Error(Errc::InternalRankError, "|Pi_1| formula disagrees with the construction");
}

}  // namespace flip
