#include "flip/flip.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "flip/report.hpp"
#include "flip/service.hpp"

struct flip_graph {
  flip::Puzzle puzzle;
};

namespace {

thread_local std::string g_last_error;

flip_status to_status(flip::Errc code) {
  using flip::Errc;
  switch (code) {
    case Errc::NBelowTwo: return FLIP_E_N_BELOW_TWO;
    case Errc::EmptyAttach: return FLIP_E_EMPTY_ATTACH;
    case Errc::AttachOutOfRange: return FLIP_E_ATTACH_OUT_OF_RANGE;
    case Errc::VertexOutOfRange: return FLIP_E_VERTEX_OUT_OF_RANGE;
    case Errc::IllegalMove: return FLIP_E_ILLEGAL_MOVE;
    case Errc::BadConfig: return FLIP_E_BAD_CONFIG;
    case Errc::Parse: return FLIP_E_PARSE;
    case Errc::CapExceeded: return FLIP_E_CAP_EXCEEDED;
    case Errc::InternalRankError: return FLIP_E_INTERNAL;
  }
  return FLIP_E_INTERNAL;
}

flip_status set_error(flip_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body with C++ exceptions converted into status codes.
template <class Body>
flip_status guarded(Body&& body) {
  try {
    g_last_error.clear();
    body();
    return FLIP_OK;
  } catch (const flip::Error& e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(FLIP_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(FLIP_E_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int resolve_cap(int cap) { return cap > 0 ? cap : flip::default_oracle_cap(); }

#define FLIP_REQUIRE(cond)                                                      \
  do {                                                                          \
    if (!(cond)) return set_error(FLIP_E_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* flip_status_name(flip_status status) {
  switch (status) {
    case FLIP_OK: return "Ok";
    case FLIP_E_N_BELOW_TWO: return "NBelowTwo";
    case FLIP_E_EMPTY_ATTACH: return "EmptyAttach";
    case FLIP_E_ATTACH_OUT_OF_RANGE: return "AttachOutOfRange";
    case FLIP_E_VERTEX_OUT_OF_RANGE: return "VertexOutOfRange";
    case FLIP_E_ILLEGAL_MOVE: return "IllegalMove";
    case FLIP_E_BAD_CONFIG: return "BadConfig";
    case FLIP_E_PARSE: return "Parse";
    case FLIP_E_CAP_EXCEEDED: return "CapExceeded";
    case FLIP_E_INVALID_ARGUMENT: return "InvalidArgument";
    case FLIP_E_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case FLIP_E_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* flip_last_error(void) { return g_last_error.c_str(); }

void flip_string_free(char* s) { std::free(s); }

int flip_default_oracle_cap(void) { return flip::default_oracle_cap(); }

flip_status flip_graph_create(int n, const int* attach, size_t attach_len, flip_graph** out) {
  FLIP_REQUIRE(out);
  FLIP_REQUIRE(attach || attach_len == 0);
  *out = nullptr;
  return guarded([&] {
    std::vector<int> a(attach, attach + attach_len);
    *out = new flip_graph{flip::Puzzle(flip::validate_graph(n, std::move(a)))};
  });
}

flip_status flip_graph_parse(const char* text, flip_graph** out) {
  FLIP_REQUIRE(text && out);
  *out = nullptr;
  return guarded([&] { *out = new flip_graph{flip::Puzzle(flip::parse_graph(text))}; });
}

void flip_graph_destroy(flip_graph* g) { delete g; }

int flip_graph_n(const flip_graph* g) { return g ? g->puzzle.n() : 0; }

int flip_graph_pi1_size(const flip_graph* g) { return g ? g->puzzle.pi1_size() : 0; }

flip_status flip_graph_attach(const flip_graph* g, int* attach, size_t len, size_t* m_out) {
  FLIP_REQUIRE(g && m_out);
  FLIP_REQUIRE(attach || len == 0);
  const auto& a = g->puzzle.graph().attach();
  *m_out = a.size();
  for (size_t k = 0; k < len && k < a.size(); ++k) attach[k] = a[k];
  return FLIP_OK;
}

flip_status flip_neighbors(const flip_graph* g, int v, char** json_out) {
  FLIP_REQUIRE(g && json_out);
  return guarded([&] { *json_out = dup_string(nlohmann::json(flip::neighbors(g->puzzle.graph(), v)).dump()); });
}

flip_status flip_apply_move(const flip_graph* g, const char* config, int vertex, int strict, char* out,
                            size_t out_len) {
  FLIP_REQUIRE(g && config && out);
  if (out_len < static_cast<size_t>(g->puzzle.n()) + 1)
    return set_error(FLIP_E_BUFFER_TOO_SMALL, "output buffer needs n+1 bytes");
  return guarded([&] {
    const auto& graph = g->puzzle.graph();
    const flip::Config u = flip::parse_config(graph, config);
    const auto next =
        flip::apply_move(graph, u, vertex, strict ? flip::MoveMode::Strict : flip::MoveMode::Feigning).to_string();
    std::memcpy(out, next.c_str(), next.size() + 1);
  });
}

flip_status flip_hamming_weight(const flip_graph* g, const char* config, int* out) {
  FLIP_REQUIRE(g && config && out);
  return guarded([&] {
    *out = static_cast<int>(flip::hamming_weight(flip::parse_config(g->puzzle.graph(), config)));
  });
}

flip_status flip_classify(const flip_graph* g, const char* config, char** json_out) {
  FLIP_REQUIRE(g && config && json_out);
  return guarded([&] {
    const auto u = flip::parse_config(g->puzzle.graph(), config);
    *json_out = dup_string(flip::classify_json(g->puzzle, u).dump());
  });
}

flip_status flip_reachable(const flip_graph* g, const char* from, const char* to, int* out) {
  FLIP_REQUIRE(g && from && to && out);
  return guarded([&] {
    const auto& graph = g->puzzle.graph();
    *out = flip::reachable(g->puzzle, flip::parse_config(graph, from), flip::parse_config(graph, to)) ? 1 : 0;
  });
}

flip_status flip_pi_report(const flip_graph* g, char** json_out) {
  FLIP_REQUIRE(g && json_out);
  return guarded([&] { *json_out = dup_string(flip::pi_report(g->puzzle).dump()); });
}

flip_status flip_orbits_report(const flip_graph* g, char** json_out) {
  FLIP_REQUIRE(g && json_out);
  return guarded([&] { *json_out = dup_string(flip::orbits_report(g->puzzle).dump()); });
}

flip_status flip_orbit_count(const flip_graph* g, int* out) {
  FLIP_REQUIRE(g && out);
  return guarded([&] { *out = flip::orbit_count(g->puzzle); });
}

flip_status flip_max_orbit_weight(const flip_graph* g, int* out) {
  FLIP_REQUIRE(g && out);
  return guarded([&] { *out = flip::max_orbit_weight(g->puzzle); });
}

flip_status flip_find_witness(const flip_graph* g, const char* from, const char* to, int cap, int* found, int** moves,
                              size_t* moves_len) {
  FLIP_REQUIRE(g && from && to && found && moves && moves_len);
  *found = 0;
  *moves = nullptr;
  *moves_len = 0;
  return guarded([&] {
    const auto& graph = g->puzzle.graph();
    const auto w = flip::find_witness(graph, flip::parse_config(graph, from), flip::parse_config(graph, to),
                                      resolve_cap(cap));
    if (!w) return;
    *found = 1;
    *moves_len = w->moves.size();
    if (!w->moves.empty()) {
      *moves = static_cast<int*>(std::malloc(w->moves.size() * sizeof(int)));
      if (!*moves) throw std::bad_alloc();
      std::memcpy(*moves, w->moves.data(), w->moves.size() * sizeof(int));
    }
  });
}

void flip_moves_free(int* moves) { std::free(moves); }

flip_status flip_solve(const flip_graph* g, const char* from, const char* to, int cap, char** json_out) {
  FLIP_REQUIRE(g && from && to && json_out);
  return guarded([&] {
    const auto& graph = g->puzzle.graph();
    const auto u = flip::parse_config(graph, from);
    const auto v = flip::parse_config(graph, to);
    const auto w = flip::find_witness(graph, u, v, resolve_cap(cap));
    nlohmann::json j = {{"from", u.to_string()}, {"to", v.to_string()}};
    if (w) {
      j["moves"] = w->moves;
      j["length"] = w->moves.size();
    } else {
      j["moves"] = nullptr;
      j["length"] = nullptr;
    }
    *json_out = dup_string(j.dump());
  });
}

flip_status flip_group_order(const flip_graph* g, uint64_t max_elements, uint64_t* out) {
  FLIP_REQUIRE(g && out);
  return guarded([&] {
    *out = flip::group_order(g->puzzle.graph(), max_elements ? max_elements : flip::kDefaultGroupCap);
  });
}

flip_status flip_verify_graph(const flip_graph* g, int cap, char** json_out) {
  FLIP_REQUIRE(g && json_out);
  return guarded([&] {
    *json_out = dup_string(flip::verify_json(flip::verify_graph(g->puzzle.graph(), resolve_cap(cap))).dump());
  });
}

flip_status flip_sweep(int n_max, int jobs, int cap, flip_report_callback cb, void* user, char** summary_json) {
  FLIP_REQUIRE(summary_json);
  *summary_json = nullptr;
  return guarded([&] {
    if (n_max < 2) throw flip::Error(flip::Errc::NBelowTwo, "nmax must be at least 2");
    std::function<void(const flip::VerifyReport&)> emit;
    if (cb) emit = [&](const flip::VerifyReport& r) { cb(flip::verify_json(r).dump().c_str(), user); };
    const auto summary = flip::sweep(n_max, jobs, resolve_cap(cap), emit);
    nlohmann::json failed = nlohmann::json::array();
    for (const auto& r : summary.failed) failed.push_back(flip::verify_json(r));
    *summary_json = dup_string(
        nlohmann::json{{"graphs", summary.graphs}, {"failures", summary.failures}, {"failed", failed}}.dump());
  });
}

flip_status flip_forms_report(const flip_graph* g, int cap, char** json_out) {
  FLIP_REQUIRE(g && json_out);
  return guarded([&] { *json_out = dup_string(flip::forms_report(g->puzzle.graph(), resolve_cap(cap)).dump()); });
}

flip_status flip_api_request(const char* method, const char* target, const char* body, int witness_cap,
                             int* http_status, char** body_out) {
  FLIP_REQUIRE(method && target && http_status && body_out);
  return guarded([&] {
    const auto r = flip::handle_request(method, target, body ? body : "", resolve_cap(witness_cap));
    *http_status = r.status;
    *body_out = dup_string(r.body);
  });
}

}  // extern "C"
