#pragma once

// Graphs of the form "induced path s_1..s_{n-1} plus one extra vertex s_n",
// configurations over GF(2), and the lit-only flipping move.
//
// Vertex indices are 1-based on every public interface (s_1 .. s_n).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "flip/bitvec.hpp"

namespace flip {

// Coordinate i-1 holds the state of s_i (1 = black).
using Config = BitVec;

enum class MoveMode {
  Feigning,  // white vertex: identity
  Strict,    // white vertex: IllegalMove
};

// Path s_1 - ... - s_{n-1} with s_n joined to s_{j} for each j in attach.
// Only validate_graph constructs one, so every instance is valid.
class GraphSpec {
 public:
  int n() const noexcept { return n_; }
  const std::vector<int>& attach() const noexcept { return attach_; }

  const BitVec& neighbor_mask(int v) const { return masks_[static_cast<std::size_t>(v - 1)]; }
  // Packed neighbor mask; only meaningful for n <= 64.
  std::uint64_t neighbor_word(int v) const { return words_[static_cast<std::size_t>(v - 1)]; }
  bool adjacent(int a, int b) const { return neighbor_mask(a).test(static_cast<std::size_t>(b - 1)); }

  // "n=<int> attach=<j1,j2,...>"
  std::string to_text() const;

  friend bool operator==(const GraphSpec& a, const GraphSpec& b) { return a.n_ == b.n_ && a.attach_ == b.attach_; }

 private:
  friend GraphSpec validate_graph(int n, std::vector<int> attach);
  GraphSpec() = default;

  int n_ = 0;
  std::vector<int> attach_;
  std::vector<BitVec> masks_;
  std::vector<std::uint64_t> words_;
};

// Sorts and deduplicates attach, then rejects n < 2, empty attach and
// attachments outside [1, n-1].
GraphSpec validate_graph(int n, std::vector<int> attach);

// Accepts `n=5 attach=1,4` or a JSON object {"n":5,"attach":[1,4]}.
GraphSpec parse_graph(std::string_view text);

// Strict bitstring of exactly n characters, leftmost = s_1.
Config parse_config(const GraphSpec& g, std::string_view text);

std::vector<int> neighbors(const GraphSpec& g, int v);

Config apply_move(const GraphSpec& g, const Config& u, int v, MoveMode mode = MoveMode::Feigning);

inline std::size_t hamming_weight(const Config& u) { return u.count(); }

// Column form of the move matrix: identity plus ones at (a, vertex) for
// every neighbor a of vertex.
struct MoveMatrix {
  int vertex = 0;
  std::vector<int> column;  // neighbors of vertex

  BitMatrix dense(int n) const;
  Config apply(const Config& u) const;
};

MoveMatrix move_matrix(const GraphSpec& g, int v);

void check_vertex(const GraphSpec& g, int v);

}  // namespace flip
