#include <doctest.h>

#include <random>

#include "flip/forms.hpp"
#include "reference.hpp"

using namespace flip;

namespace {

Config bits(const char* s) { return *BitVec::parse(s); }

Config state(int n, std::uint64_t s) { return Config::from_word(static_cast<std::size_t>(n), s); }

}  // namespace

TEST_CASE("bilinear examples") {
  const AdjacencyForm f = adjacency_form(validate_graph(4, {3}));
  CHECK(bilinear(f, bits("1000"), bits("0100")));
  CHECK_FALSE(bilinear(f, bits("1000"), bits("0010")));
  for (std::uint64_t s = 0; s < 16; ++s) CHECK_FALSE(bilinear(f, state(4, s), state(4, s)));
}

TEST_CASE("quadratic examples") {
  const AdjacencyForm f = adjacency_form(validate_graph(4, {3}));
  for (int i = 0; i < 4; ++i) CHECK(quadratic(f, Config::unit(4, static_cast<std::size_t>(i))));
  CHECK(quadratic(f, bits("1100")));
  CHECK_FALSE(quadratic(f, bits("0000")));
  CHECK_FALSE(quadratic(f, bits("1010")));
}

TEST_CASE("adjacency matrix matches neighbors") {
  for (int n = 2; n <= 8; ++n)
    for (const auto& attach : ref::attach_sets(n)) {
      const GraphSpec g = validate_graph(n, attach);
      const AdjacencyForm f = adjacency_form(g);
      CHECK(f.A == f.A.transpose());
      for (int v = 1; v <= n; ++v) {
        CHECK_FALSE(f.A.get(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(v - 1)));
        CHECK(f.A.column(static_cast<std::size_t>(v - 1)) == g.neighbor_mask(v));
      }
      CHECK(f.nonsingular == (f.rank == static_cast<std::size_t>(n)));
    }
}

TEST_CASE("q satisfies its defining conditions and is invariant") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& attach : ref::attach_sets(n)) {
      const GraphSpec g = validate_graph(n, attach);
      const AdjacencyForm f = adjacency_form(g);
      const std::uint64_t total = std::uint64_t{1} << n;
      for (std::uint64_t a = 0; a < total; ++a) {
        const Config u = state(n, a);
        for (std::uint64_t b = 0; b < total; ++b) {
          const Config v = state(n, b);
          CHECK((quadratic(f, u ^ v) ^ quadratic(f, u) ^ quadratic(f, v)) == bilinear(f, u, v));
        }
        for (int s = 1; s <= n; ++s) {
          const Config t = transvection_apply(f, s, u);
          CHECK(quadratic(f, t) == quadratic(f, u));
          CHECK(transvection_apply(f, s, t) == u);
          CHECK(t == move_matrix(g, s).dense(n).transpose() * u);
        }
      }
    }
}

TEST_CASE("transvections preserve the form") {
  std::mt19937_64 rng(31);
  const GraphSpec g = validate_graph(12, {2, 7, 11});
  const AdjacencyForm f = adjacency_form(g);
  for (int t = 0; t < 2000; ++t) {
    const Config u = state(12, rng() & 0xFFF), v = state(12, rng() & 0xFFF);
    const int s = 1 + static_cast<int>(rng() % 12);
    CHECK(bilinear(f, transvection_apply(f, s, u), transvection_apply(f, s, v)) == bilinear(f, u, v));
  }
}

TEST_CASE("transvection examples") {
  const AdjacencyForm f = adjacency_form(validate_graph(4, {3}));
  CHECK(transvection_apply(f, 1, bits("0100")).to_string() == "1100");
  CHECK(transvection_apply(f, 1, bits("0010")).to_string() == "0010");
  CHECK(transvection_apply(f, 3, bits("0000")).to_string() == "0000");
}

TEST_CASE("congruence holds on every small graph") {
  CHECK(check_congruence(validate_graph(4, {3})));
  CHECK(check_congruence(validate_graph(6, {1, 5})));
  for (int n = 2; n <= 10; ++n)
    for (const auto& attach : ref::attach_sets(n)) CHECK(check_congruence(validate_graph(n, attach)));
}

TEST_CASE("q is constant on transpose orbits") {
  const GraphSpec g = validate_graph(4, {3});
  const AdjacencyForm f = adjacency_form(g);
  const OrbitPartition t = transpose_partition(g);
  std::uint64_t total = 0;
  for (auto s : t.size) total += s;
  CHECK(total == 16);
  for (std::uint64_t s = 0; s < 16; ++s)
    CHECK(quadratic(f, state(4, s)) == quadratic(f, state(4, t.representative[t.block[s]])));
}

TEST_CASE("A maps transpose orbits into puzzle orbits") {
  const AoReport p4 = check_ao_bijection(validate_graph(4, {3}));
  CHECK(p4.nonsingular);
  CHECK(p4.well_defined);
  CHECK(p4.bijection);
  CHECK(p4.transpose_orbits == p4.puzzle_orbits);

  const AoReport p5 = check_ao_bijection(validate_graph(5, {4}));
  CHECK_FALSE(p5.nonsingular);
  CHECK(p5.well_defined);
  CHECK(p5.ok());

  CHECK(check_ao_bijection(validate_graph(6, {1, 5})).well_defined);

  for (int n = 2; n <= 9; ++n)
    for (const auto& attach : ref::attach_sets(n)) {
      const AoReport r = check_ao_bijection(validate_graph(n, attach));
      CHECK(r.ok());
      if (r.nonsingular) CHECK(r.transpose_orbits == r.puzzle_orbits);
    }
}
