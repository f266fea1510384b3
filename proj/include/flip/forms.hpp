#pragma once

// The adjacency matrix A as an alternating form, its quadratic refinement q,
// and the transposed move matrices acting as symplectic transvections.

#include <cstdint>

#include "flip/oracle.hpp"

namespace flip {

struct AdjacencyForm {
  BitMatrix A;
  std::size_t rank = 0;
  bool nonsingular = false;
};

AdjacencyForm adjacency_form(const GraphSpec& g);

// u^t A v over GF(2).
bool bilinear(const AdjacencyForm& f, const Config& u, const Config& v);

// |supp u| + #(edges inside supp u) mod 2: the unique q with q(s~) = 1 and
// q(u + v) = q(u) + q(v) + <u, v>_A.
bool quadratic(const AdjacencyForm& f, const Config& u);

// s A s^t == A for every move matrix s.
bool check_congruence(const GraphSpec& g);

// s^t u = u + <s~, u>_A s~  (s is 1-based).
Config transvection_apply(const AdjacencyForm& f, int s, const Config& u);

// Orbits of the group generated by the transvections (no legality rule).
OrbitPartition transpose_partition(const GraphSpec& g, int cap = default_oracle_cap());

struct AoReport {
  bool well_defined = false;   // every A·O lies inside one orbit of the puzzle
  bool nonsingular = false;
  bool bijection = false;      // induced block map is one-to-one and onto
  std::size_t transpose_orbits = 0;
  std::size_t puzzle_orbits = 0;

  // Bijection is only demanded when A is nonsingular.
  bool ok() const { return well_defined && (!nonsingular || bijection); }
};

AoReport check_ao_bijection(const GraphSpec& g, int cap = default_oracle_cap());

}  // namespace flip
