#include "flip/report.hpp"

#include <random>

namespace flip {

using nlohmann::json;

namespace {

json count_json(const BigCount& c) {
  if (c <= std::numeric_limits<std::uint64_t>::max()) return c.convert_to<std::uint64_t>();
  return c.str();
}

json config_list(const std::vector<Config>& vs) {
  json out = json::array();
  for (const Config& v : vs) out.push_back(v.to_string());
  return out;
}

}  // namespace

json graph_json(const GraphSpec& g) { return {{"n", g.n()}, {"attach", g.attach()}}; }

GraphSpec graph_from_json(const json& j) {
  if (j.is_string()) return parse_graph(j.get<std::string>());
  if (j.is_object()) return parse_graph(j.dump());
  throw Error(Errc::Parse, "graph must be an object {\"n\":..,\"attach\":[..]} or a \"n=.. attach=..\" string");
}

json pi_report(const Puzzle& p) {
  const int n = p.n();
  json pi0 = json::array();
  json pi1 = json::array();
  for (int i = 1; i <= n; ++i) (p.pi().in_pi1(i) ? pi1 : pi0).push_back(i);
  json delta_labels = json::array();
  for (std::size_t k = 0; k < p.basis().delta().size(); ++k) delta_labels.push_back(p.basis().label(k));
  return {
      {"graph", graph_json(p.graph())},
      {"n", n},
      {"pi", config_list(p.pi().pi)},
      {"pi0", pi0},
      {"pi1", pi1},
      {"pi1_size", p.pi1_size()},
      {"parity", p.odd() ? "odd" : "even"},
      {"delta", config_list(p.basis().delta())},
      {"delta_labels", delta_labels},
      {"I", p.sets().I},
      {"J", p.odd() ? json(nullptr) : json(p.sets().J)},
  };
}

json label_json(const OrbitLabel& label) {
  return {{"side", side_name(label.side)}, {"weights", label.weights}, {"trivial", label.trivial()}};
}

json classify_json(const Puzzle& p, const Config& u) {
  json j = label_json(classify(p, u));
  j["config"] = u.to_string();
  j["simple_coords"] = simple_coords(p.basis(), u);
  j["simple_weight"] = simple_weight(p.basis(), u);
  j["hamming_weight"] = hamming_weight(u);
  return j;
}

json orbits_report(const Puzzle& p) {
  const OrbitTable table = orbit_table(p);
  json orbits = json::array();
  for (const OrbitEntry& e : table.orbits) {
    json o = label_json(e.label);
    o["size"] = count_json(e.size);
    o["min_weight"] = e.min_weight;
    orbits.push_back(std::move(o));
  }
  return {
      {"graph", graph_json(p.graph())},
      {"pi1_size", p.pi1_size()},
      {"orbits", orbits},
      {"orbit_count", table.orbit_count},
      {"max_orbit_weight", table.max_orbit_weight},
  };
}

json verify_json(const VerifyReport& r) {
  return {
      {"n", r.n},
      {"attach", r.attach},
      {"pi1_size", r.pi1_size},
      {"predicted_orbit_count", r.predicted_orbit_count},
      {"labeled_orbit_count", r.labeled_orbit_count},
      {"oracle_orbit_count", r.oracle_orbit_count},
      {"predicted_M", r.predicted_M},
      {"oracle_M", r.oracle_M},
      {"partition_match", r.partition_match},
      {"sizes_match", r.sizes_match},
      {"min_weight_match", r.min_weight_match},
      {"path_subgroup_match", r.path_subgroup_match},
      {"pass", r.pass()},
  };
}

json forms_report(const GraphSpec& g, int cap, int exhaustive_n, int samples) {
  const AdjacencyForm f = adjacency_form(g);
  const int n = g.n();
  const auto un = static_cast<std::size_t>(n);

  std::vector<Config> states;
  const bool exhaustive = n <= exhaustive_n;
  if (exhaustive) {
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) states.push_back(Config::from_word(un, s));
  } else {
    std::mt19937_64 rng(0x5eed);
    for (int k = 0; k < samples; ++k) {
      Config u(un);
      for (std::size_t i = 0; i < un; ++i)
        if (rng() & 1U) u.set(i);
      states.push_back(std::move(u));
    }
  }

  std::size_t q_checks = 0;
  std::size_t q_failures = 0;
  std::size_t polar_failures = 0;
  for (std::size_t k = 0; k < states.size(); ++k) {
    const Config& u = states[k];
    const bool qu = quadratic(f, u);
    for (int s = 1; s <= n; ++s) {
      ++q_checks;
      if (quadratic(f, transvection_apply(f, s, u)) != qu) ++q_failures;
    }
    const Config& v = states[(k * 7 + 3) % states.size()];
    if ((quadratic(f, u ^ v) ^ qu ^ quadratic(f, v)) != bilinear(f, u, v)) ++polar_failures;
  }

  json j = {
      {"graph", graph_json(g)},
      {"rank", f.rank},
      {"nonsingular", f.nonsingular},
      {"congruence", check_congruence(g)},
      {"q_invariance", {{"exhaustive", exhaustive}, {"checks", q_checks}, {"failures", q_failures}}},
      {"polarization_failures", polar_failures},
  };
  if (n <= std::min(cap, kHardOracleCap)) {
    const AoReport ao = check_ao_bijection(g, cap);
    j["transpose_orbit_count"] = ao.transpose_orbits;
    j["orbit_count"] = ao.puzzle_orbits;
    j["ao_well_defined"] = ao.well_defined;
    j["ao_bijection"] = ao.bijection;
  } else {
    j["transpose_orbit_count"] = nullptr;
    j["orbit_count"] = orbit_count(Puzzle(g));
    j["ao_well_defined"] = nullptr;
    j["ao_bijection"] = nullptr;
    j["notice"] = "n exceeds the brute-force cap; orbit comparison skipped";
  }
  return j;
}

json error_json(Errc code, const std::string& message) {
  return {{"error", {{"code", errc_name(code)}, {"message", message}}}};
}

}  // namespace flip
