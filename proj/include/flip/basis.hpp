#pragma once

// The vectors 1bar..nbar obtained by pushing s~_1 through s_1, s_2, ...,
// their split by the dot product with s~_n, and the "simple" basis built
// from them.

#include <cstdint>
#include <optional>
#include <vector>

#include "flip/core.hpp"

namespace flip {

struct PiSystem {
  int n = 0;
  std::vector<Config> pi;        // pi[i-1] is ibar
  BitVec pi1_mask;               // bit i-1 set iff ibar is in Pi_1
  int pi1_size = 0;
  std::vector<int> pi1_prefix;   // pi1_prefix[i] = |{1bar..ibar} ∩ Pi_1|, i = 0..n

  bool in_pi1(int i) const { return pi1_mask.test(static_cast<std::size_t>(i - 1)); }
  int prefix(int i) const { return pi1_prefix[static_cast<std::size_t>(i)]; }

  friend bool operator==(const PiSystem&, const PiSystem&) = default;
};

// ibar+1 = s_i ibar starting from s~_1; membership by dot product with s~_n.
PiSystem build_pi_recursive(const GraphSpec& g);
// Closed forms s~_{i-1} + s~_i (+ s~_n) with membership from the interval
// description (j_1, j_2] ∪ (j_3, j_4] ∪ ..., j_t := n past the end.
PiSystem build_pi_closed(const GraphSpec& g);

bool pi1_by_interval(const GraphSpec& g, int i);
int pi1_size_formula(const GraphSpec& g);

// Slot k (0-based) of the basis holds (k+1)bar, except that with |Pi_1| even
// the last slot holds s~_n (written n+1 bar) in place of nbar.
class SimpleBasis {
 public:
  // Above this size simple_coords uses an O(n) back-substitution instead of
  // the dense inverse.
  static constexpr int kDenseLimit = 2048;

  bool odd() const noexcept { return odd_; }
  int n() const noexcept { return static_cast<int>(delta_.size()); }
  const std::vector<Config>& delta() const noexcept { return delta_; }

  // 1-based label of slot k: k+1, or n+1 for the s~_n slot in the even case.
  int label(std::size_t slot) const noexcept {
    return (!odd_ && slot + 1 == delta_.size()) ? n() + 1 : static_cast<int>(slot) + 1;
  }

  // Bit k set iff slot k belongs to Delta(u).
  BitVec coords(const Config& u) const;
  // Same, for n <= 64 with packed input and output.
  std::uint64_t coords_word(std::uint64_t u) const;
  Config combine(const BitVec& coords) const;

  // Independent O(n) solve from the closed forms; always available.
  BitVec coords_linear(const Config& u) const;

  bool has_dense_inverse() const noexcept { return !inverse_columns_.empty(); }

 private:
  friend SimpleBasis build_delta(const PiSystem& p);

  bool odd_ = true;
  std::vector<Config> delta_;
  std::vector<BitVec> inverse_columns_;      // inverse_columns_[j] = coords of s~_{j+1}
  std::vector<std::uint64_t> inverse_words_; // packed copy when n <= 64
  BitVec pi1_mask_;                          // Pi_1 membership of slots 0..n-1 (as ibar)
};

SimpleBasis build_delta(const PiSystem& p);

// Delta(u) as 1-based labels (n+1 stands for s~_n).
std::vector<int> simple_coords(const SimpleBasis& b, const Config& u);
inline int simple_weight(const SimpleBasis& b, const Config& u) { return static_cast<int>(b.coords(u).count()); }

// sw(s~_i) from the case formulas.
int sw_of_standard(const SimpleBasis& b, const PiSystem& p, int i);

struct WeightIndexSets {
  std::vector<int> I;
  std::vector<int> J;  // empty when |Pi_1| is odd
  bool in_I(int w) const;
  bool in_J(int w) const;
};

WeightIndexSets weight_index_sets(const PiSystem& p);

struct SnAction {
  Config image;
  int simple_weight = 0;      // measured via the basis
  int predicted_weight = 0;   // from the case formula
  int k = 0;                  // |Delta(u) ∩ Pi_1|
};

// Applies s_n (feigning) and evaluates the simple-weight formula for it.
SnAction sn_simple_action(const GraphSpec& g, const SimpleBasis& b, const PiSystem& p, const Config& u);

// Everything derived from a graph that the classifier needs. Construction
// cross-checks the two Pi constructions and the three membership routes.
class Puzzle {
 public:
  explicit Puzzle(GraphSpec g);

  const GraphSpec& graph() const noexcept { return graph_; }
  const PiSystem& pi() const noexcept { return pi_; }
  const SimpleBasis& basis() const noexcept { return basis_; }
  const WeightIndexSets& sets() const noexcept { return sets_; }
  int n() const noexcept { return graph_.n(); }
  int pi1_size() const noexcept { return pi_.pi1_size; }
  bool odd() const noexcept { return basis_.odd(); }

 private:
  GraphSpec graph_;
  PiSystem pi_;
  SimpleBasis basis_;
  WeightIndexSets sets_;
};

}  // namespace flip
