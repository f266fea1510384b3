#pragma once

// Closed-form orbit classification. An orbit is named by the side of the
// configuration (all of F_2^n when |Pi_1| is odd, otherwise U = span(Pi) or
// its complement Ubar) together with the set of simple weights it occupies.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "flip/basis.hpp"

namespace flip {

enum class Side { Whole, U, UBar };

const char* side_name(Side s) noexcept;  // "WHOLE", "U", "UBAR"

struct OrbitLabel {
  Side side = Side::Whole;
  std::vector<int> weights;  // sorted

  bool trivial() const { return side != Side::UBar && weights.size() == 1 && weights.front() == 0; }

  friend bool operator==(const OrbitLabel&, const OrbitLabel&) = default;
  friend auto operator<=>(const OrbitLabel&, const OrbitLabel&) = default;
};

std::string to_string(const OrbitLabel& label);

// Cases of the classification by |Pi_1|, in dispatch order.
enum class Clause { Pi1One, Pi1Two, Pi1NMinus1, Pi1NMinus2, Generic };

const char* clause_name(Clause c) noexcept;

// Every clause whose hypothesis holds for (n, |Pi_1|), in dispatch order.
std::vector<Clause> applicable_clauses(int n, int pi1_size);

// Feasible nonzero simple weights on a side: [1, n] for WHOLE and UBAR,
// [1, n-1] for U.
int min_feasible_weight(Side side);
int max_feasible_weight(Side side, int n);

// Weight class containing simple weight w (w feasible and nonzero) under one
// clause. Result is sorted and clipped to the feasible range of the side.
std::vector<int> weight_class(Clause clause, int n, int pi1_size, Side side, int w);

// Side and simple weight of u.
Side side_of(const Puzzle& p, const BitVec& coords);

OrbitLabel label_for(const Puzzle& p, Side side, int sw);
OrbitLabel classify(const Puzzle& p, const Config& u);
// n <= 64 fast path; bit i-1 of state is the coordinate of s_i.
OrbitLabel classify_state(const Puzzle& p, std::uint64_t state);

bool reachable(const Puzzle& p, const Config& u, const Config& v);

// Orbit of u under the subgroup generated by s_1..s_{n-1} only: sw alone when
// |Pi_1| is odd, {sw, n-sw} on U and {sw, n+2-sw} on Ubar otherwise.
OrbitLabel classify_path_subgroup(const Puzzle& p, const Config& u);

using BigCount = boost::multiprecision::cpp_int;

struct OrbitEntry {
  OrbitLabel label;
  BigCount size;        // number of configurations
  int min_weight = 0;   // least Hamming weight in the orbit
};

struct OrbitTable {
  std::vector<OrbitEntry> orbits;  // sorted by label
  int orbit_count = 0;
  int max_orbit_weight = 0;
};

OrbitTable orbit_table(const Puzzle& p);

// |P| from the summary table's closed forms for (n, |Pi_1|).
int table_orbit_count(int n, int pi1_size);

int orbit_count(const Puzzle& p);
int max_orbit_weight(const Puzzle& p);

}  // namespace flip
