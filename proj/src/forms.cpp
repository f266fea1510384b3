#include "flip/forms.hpp"

#include <set>

namespace flip {

AdjacencyForm adjacency_form(const GraphSpec& g) {
  const auto n = static_cast<std::size_t>(g.n());
  AdjacencyForm f;
  f.A = BitMatrix(n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t a : g.neighbor_mask(static_cast<int>(v) + 1).ones()) f.A.set(a, v);
  f.rank = f.A.rank();
  f.nonsingular = f.rank == n;
  return f;
}

bool bilinear(const AdjacencyForm& f, const Config& u, const Config& v) { return u.dot(f.A * v); }

bool quadratic(const AdjacencyForm& f, const Config& u) {
  std::size_t edges_twice = 0;
  for (std::size_t a : u.ones()) edges_twice += (f.A.row(a) & u).count();
  return ((u.count() + edges_twice / 2) & 1U) != 0;
}

bool check_congruence(const GraphSpec& g) {
  const AdjacencyForm f = adjacency_form(g);
  for (int v = 1; v <= g.n(); ++v) {
    const BitMatrix s = move_matrix(g, v).dense(g.n());
    if (s * f.A * s.transpose() != f.A) return false;
  }
  return true;
}

Config transvection_apply(const AdjacencyForm& f, int s, const Config& u) {
  const auto idx = static_cast<std::size_t>(s - 1);
  Config out = u;
  // <s~, u>_A is the parity of u over the neighbors of s.
  if (f.A.row(idx).dot(u)) out.flip(idx);
  return out;
}

OrbitPartition transpose_partition(const GraphSpec& g, int cap) {
  check_cap(g.n(), cap);
  return partition_states(g.n(), g.n(), [&](std::uint64_t x, int k) {
    const std::uint64_t nbrs = g.neighbor_word(k + 1);
    return (std::popcount(x & nbrs) & 1) ? x ^ (std::uint64_t{1} << k) : x;
  });
}

AoReport check_ao_bijection(const GraphSpec& g, int cap) {
  const OrbitPartition transposed = transpose_partition(g, cap);
  const OrbitPartition puzzle = bfs_partition(g, {}, MoveMode::Strict, cap);
  const AdjacencyForm f = adjacency_form(g);
  const int n = g.n();

  std::vector<std::uint64_t> columns;  // A applied to unit vectors
  for (int v = 1; v <= n; ++v) columns.push_back(g.neighbor_word(v));
  auto apply_a = [&](std::uint64_t x) {
    std::uint64_t y = 0;
    for (; x; x &= x - 1) y ^= columns[static_cast<std::size_t>(std::countr_zero(x))];
    return y;
  };

  AoReport r;
  r.nonsingular = f.nonsingular;
  r.transpose_orbits = transposed.block_count();
  r.puzzle_orbits = puzzle.block_count();
  r.well_defined = true;

  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> image(transposed.block_count(), kUnset);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < total; ++s) {
    const std::uint32_t target = puzzle.block[apply_a(s)];
    std::uint32_t& slot = image[transposed.block[s]];
    if (slot == kUnset)
      slot = target;
    else if (slot != target)
      r.well_defined = false;
  }
  const std::set<std::uint32_t> hit(image.begin(), image.end());
  r.bijection = r.well_defined && hit.size() == image.size() && hit.size() == puzzle.block_count();
  return r;
}

}  // namespace flip
