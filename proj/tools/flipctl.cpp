// flipctl: command-line front end for the flipping-puzzle engine.
//
//   flipctl pi       --graph "n=5 attach=1,4"
//   flipctl classify --graph "n=5 attach=1,4" --config 00001 [--config ...]
//   flipctl reach    --graph "n=4 attach=3" --from 1000 --to 0011 [--witness]
//   flipctl solve    --graph "n=4 attach=3" --from 1000 --to 0011
//   flipctl orbits   --graph "n=6 attach=1,5"
//   flipctl verify   --nmax 12 --jobs 4
//   flipctl forms    --graph "n=4 attach=3"
//   flipctl serve    --port 8080 --static-dir ui/dist
//
// JSON on stdout (one document, or JSON lines for verify). Exit status: 0 ok,
// 1 domain error (JSON error object on stdout), 2 usage error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <httplib.h>
#include <json.hpp>

#include "flip/flip.h"

namespace {

using nlohmann::json;

struct DomainError {
  flip_status status;
  std::string message;
};

void check(flip_status s) {
  if (s != FLIP_OK) throw DomainError{s, flip_last_error()};
}

// Owning wrappers over the C handles.
struct Graph {
  flip_graph* handle = nullptr;
  explicit Graph(const std::string& text) { check(flip_graph_parse(text.c_str(), &handle)); }
  Graph(const Graph&) = delete;
  Graph& operator=(const Graph&) = delete;
  ~Graph() { flip_graph_destroy(handle); }
  int n() const { return flip_graph_n(handle); }
};

json take_json(char* raw) {
  json j = json::parse(raw);
  flip_string_free(raw);
  return j;
}

struct Output {
  bool pretty = false;
  void emit(const json& j) const { std::cout << j.dump(pretty ? 2 : -1) << '\n'; }
};

json cmd_pi(const Graph& g) {
  char* out = nullptr;
  check(flip_pi_report(g.handle, &out));
  return take_json(out);
}

json cmd_classify(const Graph& g, const std::vector<std::string>& configs) {
  json all = json::array();
  for (const auto& c : configs) {
    char* out = nullptr;
    check(flip_classify(g.handle, c.c_str(), &out));
    all.push_back(take_json(out));
  }
  return all.size() == 1 ? all[0] : all;
}

std::vector<int> witness_moves(const Graph& g, const std::string& from, const std::string& to, int cap,
                               bool& found) {
  int hit = 0;
  int* moves = nullptr;
  size_t len = 0;
  check(flip_find_witness(g.handle, from.c_str(), to.c_str(), cap, &hit, &moves, &len));
  std::vector<int> out(moves, moves + len);
  flip_moves_free(moves);
  found = hit != 0;
  return out;
}

// Replays moves strictly and confirms the target is reached.
bool replays_to(const Graph& g, std::string cur, const std::vector<int>& moves, const std::string& to) {
  std::vector<char> buf(static_cast<size_t>(g.n()) + 1);
  for (int v : moves) {
    if (flip_apply_move(g.handle, cur.c_str(), v, 1, buf.data(), buf.size()) != FLIP_OK) return false;
    cur = buf.data();
  }
  return cur == to;
}

int effective_cap(int cap) { return cap > 0 ? cap : flip_default_oracle_cap(); }

json cmd_reach(const Graph& g, const std::string& from, const std::string& to, bool want_witness, int cap) {
  int reachable = 0;
  check(flip_reachable(g.handle, from.c_str(), to.c_str(), &reachable));
  json out = {{"reachable", reachable != 0}, {"witness", nullptr}, {"distance", nullptr}};
  if (reachable && want_witness) {
    if (g.n() > effective_cap(cap)) {
      out["notice"] = "witness unavailable: n exceeds the brute-force cap of " + std::to_string(effective_cap(cap));
    } else {
      bool found = false;
      auto moves = witness_moves(g, from, to, cap, found);
      if (!found || !replays_to(g, from, moves, to))
        throw DomainError{FLIP_E_INTERNAL, "classifier and oracle disagree on reachability"};
      out["distance"] = moves.size();
      out["witness"] = std::move(moves);
    }
  }
  return out;
}

json cmd_solve(const Graph& g, const std::string& from, const std::string& to, int cap) {
  char* out = nullptr;
  check(flip_solve(g.handle, from.c_str(), to.c_str(), cap, &out));
  json j = take_json(out);
  if (!j["moves"].is_null() && !replays_to(g, from, j["moves"].get<std::vector<int>>(), to))
    throw DomainError{FLIP_E_INTERNAL, "witness failed strict replay"};
  return j;
}

json cmd_orbits(const Graph& g) {
  char* out = nullptr;
  check(flip_orbits_report(g.handle, &out));
  return take_json(out);
}

json cmd_forms(const Graph& g, int cap) {
  char* out = nullptr;
  check(flip_forms_report(g.handle, cap, &out));
  return take_json(out);
}

void print_line(const char* line, void* user) {
  if (*static_cast<bool*>(user)) std::cout << line << '\n';
}

int cmd_verify(int nmax, int jobs, int cap, bool quiet, const Output& o) {
  bool lines = !quiet;
  char* out = nullptr;
  check(flip_sweep(nmax, jobs, cap, print_line, &lines, &out));
  json summary = take_json(out);
  o.emit(summary);
  return summary["failures"].get<int>() == 0 ? 0 : 1;
}

int cmd_serve(const std::string& host, int port, const std::string& static_dir, int cap) {
  httplib::Server server;
  auto route = [cap](const httplib::Request& req, httplib::Response& res) {
    int status = 500;
    char* body = nullptr;
    if (flip_api_request(req.method.c_str(), req.target.c_str(), req.body.c_str(), cap, &status, &body) != FLIP_OK) {
      res.status = 500;
      res.set_content(json{{"error", {{"code", "Internal"}, {"message", flip_last_error()}}}}.dump(),
                      "application/json");
      return;
    }
    res.status = status;
    res.set_content(body, "application/json");
    flip_string_free(body);
  };
  for (const char* pattern : {"/healthz", "/api/.*"}) {
    server.Get(pattern, route);
    server.Post(pattern, route);
  }
  if (!static_dir.empty() && !server.set_mount_point("/", static_dir)) {
    throw DomainError{FLIP_E_INVALID_ARGUMENT, "static directory not found: " + static_dir};
  }
  std::cerr << "listening on http://" << host << ':' << port << '\n';
  if (!server.listen(host, port)) throw DomainError{FLIP_E_INTERNAL, "could not bind " + host};
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flipping puzzle (lit-only sigma-game) engine"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--pretty", out.pretty, "Indent JSON output");

  std::string graph;
  std::vector<std::string> configs;
  std::string from, to;
  bool witness = false;
  int cap = 0;
  int nmax = 0, jobs = 1;
  bool quiet = false;
  std::string host = "127.0.0.1", static_dir;
  int port = 8080;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph,-g", graph, "Graph: \"n=<int> attach=<j1,j2,...>\" or JSON")->required();
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", cap, "Brute-force cap on n (default 20 or FLIP_ORACLE_CAP)");
  };

  auto* pi = app.add_subcommand("pi", "Pi vectors, Pi_0/Pi_1 split, simple basis and I/J sets");
  add_graph(pi);

  auto* classify = app.add_subcommand("classify", "Orbit label of one or more configurations");
  add_graph(classify);
  classify->add_option("--config,-c", configs, "Bitstring, leftmost = s_1 (repeatable)")->required();

  auto* reach = app.add_subcommand("reach", "Decide whether --to is reachable from --from");
  add_graph(reach);
  reach->add_option("--from", from)->required();
  reach->add_option("--to", to)->required();
  reach->add_flag("--witness", witness, "Also produce a shortest move sequence (n <= cap)");
  add_cap(reach);

  auto* solve = app.add_subcommand("solve", "Shortest move sequence from --from to --to");
  add_graph(solve);
  solve->add_option("--from", from)->required();
  solve->add_option("--to", to)->required();
  add_cap(solve);

  auto* orbits = app.add_subcommand("orbits", "All orbits with sizes, orbit weights, |P| and M(S)");
  add_graph(orbits);

  auto* verify = app.add_subcommand("verify", "Check the classifier against brute force on every small graph");
  verify->add_option("--nmax", nmax, "Largest n to sweep")->required()->check(CLI::Range(2, 30));
  verify->add_option("--jobs,-j", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--quiet,-q", quiet, "Only print the summary");
  add_cap(verify);

  auto* forms = app.add_subcommand("forms", "Adjacency form, quadratic form and transvection orbits");
  add_graph(forms);
  add_cap(forms);

  auto* serve = app.add_subcommand("serve", "Serve the JSON API (and optional static UI files)");
  serve->add_option("--host", host);
  serve->add_option("--port,-p", port)->check(CLI::Range(1, 65535));
  serve->add_option("--static-dir", static_dir, "Directory served under /");
  add_cap(serve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*pi) out.emit(cmd_pi(Graph(graph)));
    else if (*classify) out.emit(cmd_classify(Graph(graph), configs));
    else if (*reach) out.emit(cmd_reach(Graph(graph), from, to, witness, cap));
    else if (*solve) out.emit(cmd_solve(Graph(graph), from, to, cap));
    else if (*orbits) out.emit(cmd_orbits(Graph(graph)));
    else if (*verify) return cmd_verify(nmax, jobs, cap, quiet, out);
    else if (*forms) out.emit(cmd_forms(Graph(graph), cap));
    else if (*serve) return cmd_serve(host, port, static_dir, cap);
  } catch (const DomainError& e) {
    out.emit(json{{"error", {{"code", flip_status_name(e.status)}, {"message", e.message}}}});
    return 1;
  }
  return 0;
}
