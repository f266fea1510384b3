#pragma once

// Reference brute force for the tests. Builds adjacency straight from
// (n, attach) and never touches the library, so agreement with the library
// oracle means something. Union-find for components, plain BFS for distance.

#include <cstdint>
#include <numeric>
#include <queue>
#include <vector>

namespace ref {

struct Graph {
  int n = 0;
  std::vector<std::uint32_t> nbr;  // nbr[v-1]: bit a-1 set iff s_a ~ s_v
};

inline Graph make(int n, const std::vector<int>& attach) {
  Graph g{n, std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0)};
  auto edge = [&](int a, int b) {
    g.nbr[static_cast<std::size_t>(a - 1)] |= 1U << (b - 1);
    g.nbr[static_cast<std::size_t>(b - 1)] |= 1U << (a - 1);
  };
  for (int i = 1; i + 1 <= n - 1; ++i) edge(i, i + 1);
  for (int j : attach) edge(j, n);
  return g;
}

inline std::uint32_t move(const Graph& g, std::uint32_t x, int v) {
  return ((x >> (v - 1)) & 1U) ? x ^ g.nbr[static_cast<std::size_t>(v - 1)] : x;
}

// comp[x] = least state equivalent to x under moves at the given vertices
// (all vertices when `gens` is empty).
inline std::vector<std::uint32_t> components(const Graph& g, std::vector<int> gens = {}) {
  if (gens.empty())
    for (int v = 1; v <= g.n; ++v) gens.push_back(v);
  const std::uint32_t total = 1U << g.n;
  std::vector<std::uint32_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint32_t x = 0; x < total; ++x)
    for (int v : gens) {
      const std::uint32_t a = find(x), b = find(move(g, x, v));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  for (std::uint32_t x = 0; x < total; ++x) parent[x] = find(x);
  return parent;
}

// Strict-move BFS distance from `from`; -1 where unreachable.
inline std::vector<int> distances(const Graph& g, std::uint32_t from) {
  std::vector<int> dist(std::size_t{1} << g.n, -1);
  std::queue<std::uint32_t> q;
  dist[from] = 0;
  q.push(from);
  while (!q.empty()) {
    const std::uint32_t x = q.front();
    q.pop();
    for (int v = 1; v <= g.n; ++v) {
      if (!((x >> (v - 1)) & 1U)) continue;
      const std::uint32_t y = x ^ g.nbr[static_cast<std::size_t>(v - 1)];
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  return dist;
}

// Every nonempty attach subset of [1, n-1], in bitmask order.
inline std::vector<std::vector<int>> attach_sets(int n) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask < (1U << (n - 1)); ++mask) {
    std::vector<int> a;
    for (int j = 1; j <= n - 1; ++j)
      if ((mask >> (j - 1)) & 1U) a.push_back(j);
    out.push_back(a);
  }
  return out;
}

}  // namespace ref
