#include "flip/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "flip/classify.hpp"
#include "flip/error.hpp"

namespace flip {

int default_oracle_cap() {
  if (const char* env = std::getenv("FLIP_ORACLE_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 2 && v <= kHardOracleCap) return static_cast<int>(v);
  }
  return kDefaultOracleCap;
}

void check_cap(int n, int cap) {
  cap = std::min(cap, kHardOracleCap);
  if (n > cap)
    throw Error(Errc::CapExceeded,
                "n=" + std::to_string(n) + " exceeds the brute-force cap of " + std::to_string(cap));
}

std::vector<int> path_generators(const GraphSpec& g) {
  std::vector<int> gens;
  for (int v = 1; v <= g.n() - 1; ++v) gens.push_back(v);
  return gens;
}

OrbitPartition bfs_partition(const GraphSpec& g, std::span<const int> generators, MoveMode mode, int cap) {
  check_cap(g.n(), cap);
  std::vector<int> vertices(generators.begin(), generators.end());
  if (vertices.empty())
    for (int v = 1; v <= g.n(); ++v) vertices.push_back(v);
  std::vector<std::uint64_t> masks;
  std::vector<std::uint64_t> bits;
  for (int v : vertices) {
    check_vertex(g, v);
    masks.push_back(g.neighbor_word(v));
    bits.push_back(std::uint64_t{1} << (v - 1));
  }
  // A white vertex has no strict move; the feigning move fixes the state.
  // Either way the state graph gets no new edge.
  (void)mode;
  return partition_states(g.n(), static_cast<int>(vertices.size()), [&](std::uint64_t x, int k) {
    return (x & bits[static_cast<std::size_t>(k)]) ? x ^ masks[static_cast<std::size_t>(k)] : x;
  });
}

bool replay_valid(const GraphSpec& g, const Config& u, const Witness& w, const Config& v) {
  Config cur = u;
  try {
    for (int move : w.moves) cur = apply_move(g, cur, move, MoveMode::Strict);
  } catch (const Error&) {
    return false;
  }
  return cur == v;
}

std::optional<Witness> find_witness(const GraphSpec& g, const Config& u, const Config& v, int cap) {
  check_cap(g.n(), cap);
  const int n = g.n();
  const std::uint64_t from = u.word();
  const std::uint64_t to = v.word();
  if (from == to) return Witness{};

  constexpr std::uint8_t kUnseen = 0xFF;
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::uint8_t> via(total, kUnseen);  // 0-based vertex of the move that reached a state
  std::vector<std::uint32_t> parent(total, 0);
  std::deque<std::uint64_t> queue{from};
  via[from] = 0;

  bool found = false;
  while (!queue.empty() && !found) {
    const std::uint64_t x = queue.front();
    queue.pop_front();
    for (int k = 0; k < n; ++k) {
      if (!((x >> k) & 1U)) continue;
      const std::uint64_t y = x ^ g.neighbor_word(k + 1);
      if (via[y] != kUnseen) continue;
      via[y] = static_cast<std::uint8_t>(k);
      parent[y] = static_cast<std::uint32_t>(x);
      if (y == to) {
        found = true;
        break;
      }
      queue.push_back(y);
    }
  }
  if (!found) return std::nullopt;

  Witness w;
  for (std::uint64_t s = to; s != from; s = parent[s]) w.moves.push_back(via[s] + 1);
  std::reverse(w.moves.begin(), w.moves.end());
  if (!replay_valid(g, u, w, v)) throw Error(Errc::InternalRankError, "witness failed replay validation");
  return w;
}

std::uint64_t group_order(const GraphSpec& g, std::uint64_t max_elements) {
  const int n = g.n();
  if (n > 8) throw Error(Errc::CapExceeded, "group closure supports n <= 8");
  const auto un = static_cast<unsigned>(n);
  const std::uint64_t row_mask = (std::uint64_t{1} << un) - 1;

  auto row = [&](std::uint64_t m, unsigned r) { return (m >> (r * un)) & row_mask; };
  auto multiply = [&](std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    for (unsigned r = 0; r < un; ++r) {
      std::uint64_t acc = 0;
      for (std::uint64_t ar = row(a, r); ar; ar &= ar - 1) acc ^= row(b, static_cast<unsigned>(std::countr_zero(ar)));
      out |= acc << (r * un);
    }
    return out;
  };

  std::uint64_t identity = 0;
  for (unsigned r = 0; r < un; ++r) identity |= std::uint64_t{1} << (r * un + r);
  std::vector<std::uint64_t> generators;
  for (int v = 1; v <= n; ++v) {
    const BitMatrix dense = move_matrix(g, v).dense(n);
    std::uint64_t m = 0;
    for (unsigned r = 0; r < un; ++r) m |= dense.row(r).word() << (r * un);
    generators.push_back(m);
  }

  std::unordered_set<std::uint64_t> seen{identity};
  std::vector<std::uint64_t> frontier{identity};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t m : frontier)
      for (std::uint64_t s : generators) {
        const std::uint64_t p = multiply(s, m);
        if (seen.insert(p).second) {
          if (seen.size() > max_elements)
            throw Error(Errc::CapExceeded, "group closure exceeded " + std::to_string(max_elements) + " elements");
          next.push_back(p);
        }
      }
    frontier = std::move(next);
  }
  return seen.size();
}

namespace {

// Bijection check between two labelings of the same state set.
bool same_blocks(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::map<std::uint32_t, std::uint32_t> ab;
  std::map<std::uint32_t, std::uint32_t> ba;
  for (std::size_t s = 0; s < a.size(); ++s) {
    auto [i, fa] = ab.try_emplace(a[s], b[s]);
    auto [j, fb] = ba.try_emplace(b[s], a[s]);
    if (i->second != b[s] || j->second != a[s]) return false;
  }
  return true;
}

// Assigns small integer ids to labels computed once per (side, simple weight).
class LabelIndex {
 public:
  LabelIndex(const Puzzle& p, bool path_subgroup) : p_(p), path_(path_subgroup), slot_(3 * (p.n() + 1), -1) {}

  std::uint32_t id_of_state(std::uint64_t state) {
    const std::uint64_t c = p_.basis().coords_word(state);
    Side side = Side::Whole;
    if (!p_.odd()) side = ((c >> (p_.n() - 1)) & 1U) ? Side::UBar : Side::U;
    const int sw = std::popcount(c);
    int& slot = slot_[static_cast<std::size_t>(static_cast<int>(side) * (p_.n() + 1) + sw)];
    if (slot < 0) {
      const Config u = Config::from_word(static_cast<std::size_t>(p_.n()), state);
      const OrbitLabel label = path_ ? classify_path_subgroup(p_, u) : label_for(p_, side, sw);
      auto [it, fresh] = ids_.try_emplace(label, static_cast<std::uint32_t>(ids_.size()));
      slot = static_cast<int>(it->second);
    }
    return static_cast<std::uint32_t>(slot);
  }

  const std::map<OrbitLabel, std::uint32_t>& ids() const { return ids_; }

 private:
  const Puzzle& p_;
  bool path_;
  std::vector<int> slot_;
  std::map<OrbitLabel, std::uint32_t> ids_;
};

}  // namespace

VerifyReport verify_graph(const GraphSpec& g, int cap) {
  check_cap(g.n(), cap);
  const Puzzle p(g);
  const int n = g.n();
  const std::uint64_t total = std::uint64_t{1} << n;

  VerifyReport r;
  r.n = n;
  r.attach = g.attach();
  r.pi1_size = p.pi1_size();

  const OrbitPartition oracle = bfs_partition(g, {}, MoveMode::Strict, cap);
  LabelIndex labels(p, false);
  std::vector<std::uint32_t> predicted(total);
  for (std::uint64_t s = 0; s < total; ++s) predicted[s] = labels.id_of_state(s);
  r.partition_match = same_blocks(predicted, oracle.block);

  const OrbitTable table = orbit_table(p);
  r.predicted_orbit_count = orbit_count(p);
  r.labeled_orbit_count = table.orbit_count;
  r.oracle_orbit_count = static_cast<int>(oracle.block_count());
  r.predicted_M = table.max_orbit_weight;
  const std::uint32_t zero_block = oracle.block[0];
  for (std::size_t b = 0; b < oracle.block_count(); ++b)
    if (b != zero_block) r.oracle_M = std::max(r.oracle_M, oracle.min_weight[b]);

  r.sizes_match = r.partition_match && static_cast<int>(labels.ids().size()) == table.orbit_count;
  r.min_weight_match = r.sizes_match;
  if (r.sizes_match) {
    // Representative state of each label, then compare against its block.
    std::vector<std::uint64_t> rep_of_id(labels.ids().size(), 0);
    for (std::uint64_t s = total; s-- > 0;) rep_of_id[predicted[s]] = s;
    for (const OrbitEntry& e : table.orbits) {
      const auto it = labels.ids().find(e.label);
      if (it == labels.ids().end()) {
        r.sizes_match = r.min_weight_match = false;
        break;
      }
      const std::uint32_t block = oracle.block[rep_of_id[it->second]];
      if (e.size != oracle.size[block]) r.sizes_match = false;
      if (e.min_weight != oracle.min_weight[block]) r.min_weight_match = false;
    }
  }

  const auto gens = path_generators(g);
  const OrbitPartition path = bfs_partition(g, gens, MoveMode::Strict, cap);
  LabelIndex path_labels(p, true);
  std::vector<std::uint32_t> path_predicted(total);
  for (std::uint64_t s = 0; s < total; ++s) path_predicted[s] = path_labels.id_of_state(s);
  r.path_subgroup_match = same_blocks(path_predicted, path.block);
  return r;
}

std::vector<GraphSpec> graphs_with_n(int n) {
  std::vector<GraphSpec> out;
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    std::vector<int> attach;
    for (int j = 1; j <= n - 1; ++j)
      if ((mask >> (j - 1)) & 1U) attach.push_back(j);
    out.push_back(validate_graph(n, std::move(attach)));
  }
  return out;
}

SweepSummary sweep(int n_max, int jobs, int cap, const std::function<void(const VerifyReport&)>& on_report) {
  check_cap(n_max, cap);
  std::vector<GraphSpec> graphs;
  for (int n = 2; n <= n_max; ++n) {
    auto batch = graphs_with_n(n);
    graphs.insert(graphs.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
  }

  std::vector<std::optional<VerifyReport>> results(graphs.size());
  std::atomic<std::size_t> next{0};
  std::mutex emit_mutex;
  std::size_t next_emit = 0;
  std::exception_ptr failure;

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= graphs.size()) return;
      VerifyReport report;
      try {
        report = verify_graph(graphs[i], cap);
      } catch (...) {
        std::lock_guard lock(emit_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
      std::lock_guard lock(emit_mutex);
      results[i] = std::move(report);
      while (next_emit < results.size() && results[next_emit]) {
        if (on_report && !failure) on_report(*results[next_emit]);
        ++next_emit;
      }
    }
  };

  const int threads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  SweepSummary summary;
  summary.graphs = static_cast<int>(results.size());
  for (auto& r : results) {
    if (!r->pass()) {
      ++summary.failures;
      summary.failed.push_back(*r);
    }
  }
  return summary;
}

}  // namespace flip
