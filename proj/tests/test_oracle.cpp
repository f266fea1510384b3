#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "flip/classify.hpp"
#include "flip/error.hpp"
#include "flip/oracle.hpp"
#include "reference.hpp"

using namespace flip;

namespace {

std::multiset<std::uint64_t> sizes(const OrbitPartition& p) { return {p.size.begin(), p.size.end()}; }

// Same blocks as the reference labelling (which names each block by its least state).
bool matches_reference(const OrbitPartition& p, const std::vector<std::uint32_t>& comp) {
  for (std::size_t s = 0; s < comp.size(); ++s)
    if (p.representative[p.block[s]] != comp[s]) return false;
  return true;
}

}  // namespace

TEST_CASE("partition examples") {
  const GraphSpec p4 = validate_graph(4, {3});
  const OrbitPartition all = bfs_partition(p4);
  CHECK(all.block_count() == 3);
  CHECK(sizes(all) == std::multiset<std::uint64_t>{1, 5, 10});
  // 1000 (state 1) sits with the sw in {1,4} class.
  CHECK(all.size[all.block[1]] == 5);

  const OrbitPartition c5 = bfs_partition(validate_graph(5, {1, 4}));
  CHECK(sizes(c5) == std::multiset<std::uint64_t>{1, 5, 10, 16});

  // Under s_1..s_3 the blocks are the simple-weight levels.
  const Puzzle pz(p4);
  const auto gens = path_generators(p4);
  const OrbitPartition path = bfs_partition(p4, gens);
  CHECK(path.block_count() == 5);
  for (std::uint64_t s = 0; s < 16; ++s)
    for (std::uint64_t t = 0; t < 16; ++t)
      CHECK((path.block[s] == path.block[t]) ==
            (std::popcount(pz.basis().coords_word(s)) == std::popcount(pz.basis().coords_word(t))));
}

TEST_CASE("partitions match the reference, and feigning changes nothing") {
  for (int n = 2; n <= 10; ++n)
    for (const auto& attach : ref::attach_sets(n)) {
      const GraphSpec g = validate_graph(n, attach);
      const ref::Graph r = ref::make(n, attach);
      const OrbitPartition strict = bfs_partition(g, {}, MoveMode::Strict);
      CHECK(matches_reference(strict, ref::components(r)));
      CHECK(bfs_partition(g, {}, MoveMode::Feigning).block == strict.block);
      const auto gens = path_generators(g);
      CHECK(matches_reference(bfs_partition(g, gens), ref::components(r, gens)));
      // Nontrivial blocks all contain a state of weight 1 or 2.
      for (std::size_t b = 0; b < strict.block_count(); ++b)
        CHECK(strict.min_weight[b] <= (strict.representative[b] == 0 ? 0 : 2));
    }
}

TEST_CASE("representatives are least states and blocks are numbered in order") {
  const OrbitPartition p = bfs_partition(validate_graph(7, {2, 5}));
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    CHECK(p.block[p.representative[b]] == b);
    if (b) CHECK(p.representative[b - 1] < p.representative[b]);
  }
  for (std::size_t s = 0; s < p.block.size(); ++s) CHECK(p.representative[p.block[s]] <= s);
}

TEST_CASE("witness examples") {
  const GraphSpec p4 = validate_graph(4, {3});
  auto cfg = [&](const char* s) { return parse_config(p4, s); };
  CHECK(find_witness(p4, cfg("1000"), cfg("1000"))->moves.empty());
  CHECK(find_witness(p4, cfg("1000"), cfg("1100"))->moves == std::vector<int>{1});
  CHECK_FALSE(find_witness(p4, cfg("1000"), cfg("0000")));
  CHECK_FALSE(find_witness(p4, cfg("1000"), cfg("1010")));
  CHECK_FALSE(replay_valid(p4, cfg("1000"), Witness{{2}}, cfg("1010")));  // s_2 is white
}

TEST_CASE("witnesses are shortest and replay") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    std::vector<int> attach;
    for (int j = 1; j <= n - 1; ++j)
      if (rng() & 1) attach.push_back(j);
    if (attach.empty()) attach.push_back(n - 1);
    const GraphSpec g = validate_graph(n, attach);
    const auto from = static_cast<std::uint32_t>(rng() % (1U << n));
    const auto to = static_cast<std::uint32_t>(rng() % (1U << n));
    const auto dist = ref::distances(ref::make(n, attach), from);
    const Config u = Config::from_word(static_cast<std::size_t>(n), from);
    const Config v = Config::from_word(static_cast<std::size_t>(n), to);
    const auto w = find_witness(g, u, v);
    CHECK(w.has_value() == (dist[to] >= 0));
    if (w) {
      CHECK(static_cast<int>(w->moves.size()) == dist[to]);
      CHECK(replay_valid(g, u, *w, v));
    }
  }
}

TEST_CASE("cap is enforced") {
  const GraphSpec g = validate_graph(22, {3});
  Config u(22);
  CHECK_THROWS_AS(bfs_partition(g), Error);
  CHECK_THROWS_AS(find_witness(g, u, u, 20), Error);
  CHECK_THROWS_AS(verify_graph(g, 20), Error);
  try {
    bfs_partition(validate_graph(8, {3}), {}, MoveMode::Strict, 6);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CapExceeded);
  }
}

TEST_CASE("group order") {
  CHECK(group_order(validate_graph(2, {1})) == 6);
  CHECK(group_order(validate_graph(3, {2})) == group_order(validate_graph(3, {1})));
  const std::uint64_t factorial[] = {1, 1, 2, 6, 24, 120, 720};
  for (int n = 2; n <= 6; ++n)
    for (const auto& attach : ref::attach_sets(n)) {
      const std::uint64_t order = group_order(validate_graph(n, attach));
      CHECK(order % factorial[n] == 0);
    }
  CHECK_THROWS_AS(group_order(validate_graph(6, {1, 5}), 100), Error);
  CHECK_THROWS_AS(group_order(validate_graph(9, {1})), Error);
}

TEST_CASE("verify_graph examples") {
  const VerifyReport p4 = verify_graph(validate_graph(4, {3}));
  CHECK(p4.pass());
  const VerifyReport c6 = verify_graph(validate_graph(6, {1, 5}));
  CHECK(c6.pass());
  CHECK(c6.oracle_orbit_count == 6);
  CHECK(c6.oracle_M == 2);
}

TEST_CASE("sweep counts and ordering") {
  CHECK(graphs_with_n(2).size() == 1);
  CHECK(sweep(2).graphs == 1);
  std::vector<std::pair<int, std::vector<int>>> order;
  const SweepSummary six = sweep(6, 3, default_oracle_cap(),
                                 [&](const VerifyReport& r) { order.emplace_back(r.n, r.attach); });
  CHECK(six.graphs == 57);
  CHECK(six.failures == 0);
  REQUIRE(order.size() == 57);
  std::size_t k = 0;
  for (int n = 2; n <= 6; ++n)
    for (const auto& attach : ref::attach_sets(n)) {
      CHECK(order[k].first == n);
      CHECK(order[k].second == attach);
      ++k;
    }
  const SweepSummary eight = sweep(8, 2);
  CHECK(eight.graphs == 247);
  CHECK(eight.failures == 0);
}
