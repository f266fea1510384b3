// Exercises libflip through flip.h only.

#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "flip/flip.h"

using nlohmann::json;

namespace {

json take(char* raw) {
  REQUIRE(raw != nullptr);
  json j = json::parse(raw);
  flip_string_free(raw);
  return j;
}

struct Handle {
  flip_graph* g = nullptr;
  explicit Handle(const char* text) { REQUIRE(flip_graph_parse(text, &g) == FLIP_OK); }
  ~Handle() { flip_graph_destroy(g); }
};

}  // namespace

TEST_CASE("graph lifecycle and errors") {
  const int attach[] = {4, 1};
  flip_graph* g = nullptr;
  REQUIRE(flip_graph_create(5, attach, 2, &g) == FLIP_OK);
  CHECK(flip_graph_n(g) == 5);
  CHECK(flip_graph_pi1_size(g) == 3);
  int buf[4] = {};
  size_t m = 0;
  CHECK(flip_graph_attach(g, buf, 4, &m) == FLIP_OK);
  CHECK(m == 2);
  CHECK(buf[0] == 1);
  CHECK(buf[1] == 4);
  flip_graph_destroy(g);

  flip_graph* bad = nullptr;
  CHECK(flip_graph_create(3, nullptr, 0, &bad) == FLIP_E_EMPTY_ATTACH);
  CHECK(bad == nullptr);
  CHECK(std::string(flip_last_error()).find("empty") != std::string::npos);
  CHECK(flip_graph_parse("n=1 attach=1", &bad) == FLIP_E_N_BELOW_TWO);
  CHECK(flip_graph_parse("n=4 attach=4", &bad) == FLIP_E_ATTACH_OUT_OF_RANGE);
  CHECK(flip_graph_parse("n=x", &bad) == FLIP_E_PARSE);
  CHECK(flip_graph_parse(nullptr, &bad) == FLIP_E_INVALID_ARGUMENT);
  CHECK(std::string(flip_status_name(FLIP_E_ILLEGAL_MOVE)) == "IllegalMove");
  flip_graph_destroy(nullptr);
}

TEST_CASE("moves through the C API") {
  Handle h("n=4 attach=3");
  char out[5];
  CHECK(flip_apply_move(h.g, "1000", 1, 1, out, sizeof out) == FLIP_OK);
  CHECK(std::string(out) == "1100");
  CHECK(flip_apply_move(h.g, "0000", 1, 1, out, sizeof out) == FLIP_E_ILLEGAL_MOVE);
  CHECK(flip_apply_move(h.g, "0000", 1, 0, out, sizeof out) == FLIP_OK);
  CHECK(std::string(out) == "0000");
  CHECK(flip_apply_move(h.g, "1000", 7, 1, out, sizeof out) == FLIP_E_VERTEX_OUT_OF_RANGE);
  CHECK(flip_apply_move(h.g, "100", 1, 1, out, sizeof out) == FLIP_E_BAD_CONFIG);
  CHECK(flip_apply_move(h.g, "1000", 1, 1, out, 4) == FLIP_E_BUFFER_TOO_SMALL);
  int w = -1;
  CHECK(flip_hamming_weight(h.g, "1101", &w) == FLIP_OK);
  CHECK(w == 3);
  char* nb = nullptr;
  CHECK(flip_neighbors(h.g, 3, &nb) == FLIP_OK);
  CHECK(take(nb) == json({2, 4}));
}

TEST_CASE("classification through the C API") {
  Handle c5("n=5 attach=1,4");
  char* out = nullptr;
  REQUIRE(flip_classify(c5.g, "00001", &out) == FLIP_OK);
  const json j = take(out);
  CHECK(j["side"] == "WHOLE");
  CHECK(j["weights"] == json({1, 3, 5}));
  CHECK(j["simple_weight"] == 5);

  int count = 0, mow = 0;
  CHECK(flip_orbit_count(c5.g, &count) == FLIP_OK);
  CHECK(flip_max_orbit_weight(c5.g, &mow) == FLIP_OK);
  CHECK(count == 4);
  CHECK(mow == 2);

  REQUIRE(flip_orbits_report(c5.g, &out) == FLIP_OK);
  const json orbits = take(out);
  CHECK(orbits["orbit_count"] == 4);
  CHECK(orbits["orbits"].size() == 4);

  REQUIRE(flip_pi_report(c5.g, &out) == FLIP_OK);
  CHECK(take(out)["pi0"] == json({1, 5}));

  Handle p4("n=4 attach=3");
  int r = -1;
  CHECK(flip_reachable(p4.g, "1000", "0011", &r) == FLIP_OK);
  CHECK(r == 1);
  CHECK(flip_reachable(p4.g, "1000", "1010", &r) == FLIP_OK);
  CHECK(r == 0);
}

TEST_CASE("witness and solve through the C API") {
  Handle p4("n=4 attach=3");
  int found = 0;
  int* moves = nullptr;
  size_t len = 0;
  REQUIRE(flip_find_witness(p4.g, "1000", "1100", 0, &found, &moves, &len) == FLIP_OK);
  CHECK(found == 1);
  REQUIRE(len == 1);
  CHECK(moves[0] == 1);
  flip_moves_free(moves);
  REQUIRE(flip_find_witness(p4.g, "1000", "0000", 0, &found, &moves, &len) == FLIP_OK);
  CHECK(found == 0);
  CHECK(moves == nullptr);

  char* out = nullptr;
  REQUIRE(flip_solve(p4.g, "1000", "0011", 0, &out) == FLIP_OK);
  const json s = take(out);
  CHECK(s["length"] == s["moves"].size());
  REQUIRE(flip_solve(p4.g, "1000", "1010", 0, &out) == FLIP_OK);
  CHECK(take(out)["moves"].is_null());

  Handle big("n=25 attach=3");
  const std::string u(25, '1');
  CHECK(flip_find_witness(big.g, u.c_str(), u.c_str(), 0, &found, &moves, &len) == FLIP_E_CAP_EXCEEDED);
}

TEST_CASE("group order, verify, sweep and forms") {
  Handle two("n=2 attach=1");
  uint64_t order = 0;
  CHECK(flip_group_order(two.g, 0, &order) == FLIP_OK);
  CHECK(order == 6);

  Handle c6("n=6 attach=1,5");
  char* out = nullptr;
  REQUIRE(flip_verify_graph(c6.g, 0, &out) == FLIP_OK);
  const json v = take(out);
  CHECK(v["partition_match"] == true);
  CHECK(v["oracle_orbit_count"] == 6);

  std::vector<std::string> lines;
  auto cb = [](const char* line, void* user) { static_cast<std::vector<std::string>*>(user)->push_back(line); };
  REQUIRE(flip_sweep(6, 2, 0, cb, &lines, &out) == FLIP_OK);
  const json summary = take(out);
  CHECK(summary["graphs"] == 57);
  CHECK(summary["failures"] == 0);
  CHECK(lines.size() == 57);
  CHECK(json::parse(lines.front())["n"] == 2);

  REQUIRE(flip_forms_report(c6.g, 0, &out) == FLIP_OK);
  const json f = take(out);
  CHECK(f["congruence"] == true);
  CHECK(f["ao_well_defined"] == true);
}

TEST_CASE("HTTP facade through the C API") {
  int status = 0;
  char* out = nullptr;
  REQUIRE(flip_api_request("POST", "/api/move", R"({"graph":"n=4 attach=3","config":"1000","vertex":1})", 0, &status,
                           &out) == FLIP_OK);
  CHECK(status == 200);
  CHECK(take(out)["config"] == "1100");
  REQUIRE(flip_api_request("POST", "/api/move", R"({"graph":"n=4 attach=3","config":"0000","vertex":1})", 0, &status,
                           &out) == FLIP_OK);
  CHECK(status == 409);
  flip_string_free(out);
}
