#pragma once

// Stateless JSON API behind the HTTP server. Each response depends only on
// the request; the client keeps the session (graph, current config, target,
// move history).
//
//   GET  /healthz
//   GET  /api/graph?n=5&attach=1,4        (or ?graph=n=5%20attach=1,4)
//   POST /api/classify {graph, config}
//   POST /api/move     {graph, config, vertex}
//   POST /api/reach    {graph, from, to, witness?: bool = true}
//
// Status codes: 400 malformed request, 404/405 routing, 409 illegal move,
// 413 witness requested above the brute-force cap (decision still included),
// 422 invalid graph.

#include <string>
#include <string_view>

namespace flip {

struct HttpResponse {
  int status = 200;
  std::string body;  // application/json
};

// `target` is the request path, optionally followed by ?query.
HttpResponse handle_request(std::string_view method, std::string_view target, std::string_view body,
                            int witness_cap);

}  // namespace flip
