#pragma once

// Brute-force ground truth over all 2^n configurations. States are integers
// with bit i-1 holding the coordinate of s_i.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flip/basis.hpp"

namespace flip {

inline constexpr int kDefaultOracleCap = 20;
inline constexpr int kHardOracleCap = 30;
inline constexpr std::uint64_t kDefaultGroupCap = 100'000'000;

// FLIP_ORACLE_CAP when set to an integer in [2, 30], else 20.
int default_oracle_cap();

struct OrbitPartition {
  int n = 0;
  std::vector<std::uint32_t> block;            // state -> block index
  std::vector<std::uint64_t> representative;   // least state of each block
  std::vector<std::uint64_t> size;
  std::vector<int> min_weight;                 // least Hamming weight per block

  std::size_t block_count() const noexcept { return representative.size(); }
};

// Throws CapExceeded when n > cap (cap itself is clamped to kHardOracleCap).
void check_cap(int n, int cap);

// Connected components of the state graph with edges state -> step(state, k)
// for k in [0, step_count). step returns the state itself when no edge
// exists. Blocks are numbered in order of their least state.
template <class Step>
OrbitPartition partition_states(int n, int step_count, Step&& step) {
  OrbitPartition out;
  out.n = n;
  const std::uint64_t total = std::uint64_t{1} << n;
  constexpr std::uint32_t kUnseen = ~std::uint32_t{0};
  out.block.assign(total, kUnseen);
  std::vector<std::uint64_t> stack;
  for (std::uint64_t s = 0; s < total; ++s) {
    if (out.block[s] != kUnseen) continue;
    const auto id = static_cast<std::uint32_t>(out.representative.size());
    out.representative.push_back(s);
    std::uint64_t count = 0;
    int min_w = n + 1;
    out.block[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const std::uint64_t x = stack.back();
      stack.pop_back();
      ++count;
      min_w = std::min(min_w, std::popcount(x));
      for (int k = 0; k < step_count; ++k) {
        const std::uint64_t y = step(x, k);
        if (out.block[y] == kUnseen) {
          out.block[y] = id;
          stack.push_back(y);
        }
      }
    }
    out.size.push_back(count);
    out.min_weight.push_back(min_w);
  }
  return out;
}

// Orbits under moves at the given 1-based vertices (all vertices when empty).
OrbitPartition bfs_partition(const GraphSpec& g, std::span<const int> generators = {},
                             MoveMode mode = MoveMode::Strict, int cap = default_oracle_cap());

std::vector<int> path_generators(const GraphSpec& g);  // s_1 .. s_{n-1}

struct Witness {
  std::vector<int> moves;  // 1-based vertices, applied left to right
};

// Every move strict-legal in turn and the final state equal to v.
bool replay_valid(const GraphSpec& g, const Config& u, const Witness& w, const Config& v);

// Shortest strict move sequence from u to v, or nullopt if v is unreachable.
std::optional<Witness> find_witness(const GraphSpec& g, const Config& u, const Config& v,
                                    int cap = default_oracle_cap());

// |W| by closure over n x n matrices (n <= 8); CapExceeded past max_elements.
std::uint64_t group_order(const GraphSpec& g, std::uint64_t max_elements = kDefaultGroupCap);

struct VerifyReport {
  int n = 0;
  std::vector<int> attach;
  int pi1_size = 0;
  int predicted_orbit_count = 0;   // closed-form table count
  int labeled_orbit_count = 0;     // distinct classifier labels
  int oracle_orbit_count = 0;
  int predicted_M = 0;
  int oracle_M = 0;
  bool partition_match = false;    // classifier blocks == BFS blocks
  bool sizes_match = false;        // binomial sums == BFS block sizes
  bool min_weight_match = false;   // I/J rule == BFS min weights
  bool path_subgroup_match = false;  // path-subgroup rule vs BFS over s_1..s_{n-1}

  bool pass() const {
    return partition_match && sizes_match && min_weight_match && path_subgroup_match &&
           predicted_orbit_count == oracle_orbit_count && labeled_orbit_count == oracle_orbit_count &&
           predicted_M == oracle_M;
  }
};

VerifyReport verify_graph(const GraphSpec& g, int cap = default_oracle_cap());

struct SweepSummary {
  int graphs = 0;
  int failures = 0;
  std::vector<VerifyReport> failed;
};

// Every graph with 2 <= n <= n_max and nonempty attach, ordered by n and then
// by the attach bitmask. on_report (optional) is called in that order.
SweepSummary sweep(int n_max, int jobs = 1, int cap = default_oracle_cap(),
                   const std::function<void(const VerifyReport&)>& on_report = {});

// All graphs of the sweep for one n, in sweep order.
std::vector<GraphSpec> graphs_with_n(int n);

}  // namespace flip
