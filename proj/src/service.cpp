#include "flip/service.hpp"

#include <map>

#include "flip/report.hpp"

namespace flip {

using nlohmann::json;

namespace {

struct HttpError {
  int status;
  json body;
};

[[noreturn]] void fail(int status, Errc code, const std::string& message) {
  throw HttpError{status, error_json(code, message)};
}

int status_for(Errc code) {
  switch (code) {
    case Errc::NBelowTwo:
    case Errc::EmptyAttach:
    case Errc::AttachOutOfRange: return 422;
    case Errc::IllegalMove: return 409;
    case Errc::CapExceeded: return 413;
    case Errc::InternalRankError: return 500;
    default: return 400;
  }
}

std::string url_decode(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '+') {
      out += ' ';
    } else if (s[i] == '%' && i + 2 < s.size() && std::isxdigit(static_cast<unsigned char>(s[i + 1])) &&
               std::isxdigit(static_cast<unsigned char>(s[i + 2]))) {
      out += static_cast<char>(std::stoi(std::string(s.substr(i + 1, 2)), nullptr, 16));
      i += 2;
    } else {
      out += s[i];
    }
  }
  return out;
}

std::map<std::string, std::string> parse_query(std::string_view q) {
  std::map<std::string, std::string> out;
  while (!q.empty()) {
    const auto amp = q.find('&');
    const std::string pair(q.substr(0, amp));
    const auto eq = pair.find('=');
    if (eq != std::string::npos) out[url_decode(pair.substr(0, eq))] = url_decode(pair.substr(eq + 1));
    if (amp == std::string_view::npos) break;
    q.remove_prefix(amp + 1);
  }
  return out;
}

// Graph errors of any kind are reported as 422.
GraphSpec request_graph(const json& j) {
  try {
    return graph_from_json(j);
  } catch (const Error& e) {
    fail(422, e.code(), e.what());
  }
}

json parse_body(std::string_view body) {
  try {
    json j = json::parse(body);
    if (!j.is_object()) fail(400, Errc::Parse, "request body must be a JSON object");
    return j;
  } catch (const json::exception& e) {
    fail(400, Errc::Parse, std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& body, const char* name) {
  if (!body.contains(name)) fail(400, Errc::Parse, std::string("missing field '") + name + "'");
  return body.at(name);
}

std::string string_field(const json& body, const char* name) {
  const json& f = field(body, name);
  if (!f.is_string()) fail(400, Errc::Parse, std::string("field '") + name + "' must be a string");
  return f.get<std::string>();
}

json get_graph(const std::map<std::string, std::string>& query) {
  std::string text;
  if (auto it = query.find("graph"); it != query.end()) {
    text = it->second;
  } else {
    const auto n = query.find("n");
    if (n == query.end()) fail(400, Errc::Parse, "query needs graph=<spec> or n=<int>&attach=<list>");
    const auto a = query.find("attach");
    text = "n=" + n->second + " attach=" + (a == query.end() ? "" : a->second);
  }
  const Puzzle p(request_graph(text));
  return pi_report(p);
}

json post_classify(const json& body) {
  const Puzzle p(request_graph(field(body, "graph")));
  const Config u = parse_config(p.graph(), string_field(body, "config"));
  return classify_json(p, u);
}

json post_move(const json& body) {
  const GraphSpec g = request_graph(field(body, "graph"));
  const Config u = parse_config(g, string_field(body, "config"));
  const json& v = field(body, "vertex");
  if (!v.is_number_integer()) fail(400, Errc::Parse, "field 'vertex' must be an integer");
  const Config next = apply_move(g, u, v.get<int>(), MoveMode::Strict);
  return {{"config", next.to_string()}, {"vertex", v}};
}

HttpResponse post_reach(const json& body, int cap) {
  const Puzzle p(request_graph(field(body, "graph")));
  const Config from = parse_config(p.graph(), string_field(body, "from"));
  const Config to = parse_config(p.graph(), string_field(body, "to"));
  bool want_witness = true;
  if (body.contains("witness")) {
    if (!body["witness"].is_boolean()) fail(400, Errc::Parse, "field 'witness' must be a boolean");
    want_witness = body["witness"].get<bool>();
  }

  const OrbitLabel a = classify(p, from);
  const OrbitLabel b = classify(p, to);
  json out = {{"reachable", a == b},
              {"from_label", label_json(a)},
              {"to_label", label_json(b)},
              {"witness", nullptr},
              {"distance", nullptr}};
  int status = 200;
  if (a == b && want_witness) {
    if (p.n() > std::min(cap, kHardOracleCap)) {
      status = 413;
      out["notice"] = "witness unavailable: n=" + std::to_string(p.n()) + " exceeds the brute-force cap of " +
                      std::to_string(cap);
    } else {
      const auto w = find_witness(p.graph(), from, to, cap);
      if (!w || !replay_valid(p.graph(), from, *w, to))
        fail(500, Errc::InternalRankError, "classifier and oracle disagree on reachability");
      out["witness"] = w->moves;
      out["distance"] = w->moves.size();
    }
  }
  return {status, out.dump()};
}

}  // namespace

HttpResponse handle_request(std::string_view method, std::string_view target, std::string_view body,
                            int witness_cap) {
  const auto qmark = target.find('?');
  const std::string_view path = target.substr(0, qmark);
  const auto query = parse_query(qmark == std::string_view::npos ? std::string_view{} : target.substr(qmark + 1));

  auto expect = [&](std::string_view m) {
    if (method != m) fail(405, Errc::Parse, "method " + std::string(method) + " not allowed on " + std::string(path));
  };

  try {
    try {
      if (path == "/healthz") {
        expect("GET");
        return {200, json{{"status", "ok"}}.dump()};
      }
      if (path == "/api/graph") {
        expect("GET");
        return {200, get_graph(query).dump()};
      }
      if (path == "/api/classify") {
        expect("POST");
        return {200, post_classify(parse_body(body)).dump()};
      }
      if (path == "/api/move") {
        expect("POST");
        return {200, post_move(parse_body(body)).dump()};
      }
      if (path == "/api/reach") {
        expect("POST");
        return post_reach(parse_body(body), witness_cap);
      }
      fail(404, Errc::Parse, "no route for " + std::string(path));
    } catch (const Error& e) {
      fail(status_for(e.code()), e.code(), e.what());
    }
  } catch (const HttpError& e) {
    return {e.status, e.body.dump()};
  }
}

}  // namespace flip
