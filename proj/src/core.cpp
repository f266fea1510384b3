#include "flip/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <json.hpp>

#include "flip/error.hpp"

namespace flip {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NBelowTwo: return "NBelowTwo";
    case Errc::EmptyAttach: return "EmptyAttach";
    case Errc::AttachOutOfRange: return "AttachOutOfRange";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::IllegalMove: return "IllegalMove";
    case Errc::BadConfig: return "BadConfig";
    case Errc::Parse: return "Parse";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::InternalRankError: return "InternalRankError";
  }
  return "Unknown";
}

GraphSpec validate_graph(int n, std::vector<int> attach) {
  std::sort(attach.begin(), attach.end());
  attach.erase(std::unique(attach.begin(), attach.end()), attach.end());
  if (n < 2) throw Error(Errc::NBelowTwo, "n must be at least 2, got " + std::to_string(n));
  if (attach.empty()) throw Error(Errc::EmptyAttach, "attach set is empty; s_n would be isolated");
  if (attach.front() < 1 || attach.back() > n - 1)
    throw Error(Errc::AttachOutOfRange, "attach entries must lie in [1, " + std::to_string(n - 1) + "]");

  GraphSpec g;
  g.n_ = n;
  g.attach_ = std::move(attach);
  const auto un = static_cast<std::size_t>(n);
  g.masks_.assign(un, BitVec(un));
  for (std::size_t i = 0; i + 2 < un; ++i) {
    g.masks_[i].set(i + 1);
    g.masks_[i + 1].set(i);
  }
  for (int j : g.attach_) {
    g.masks_[static_cast<std::size_t>(j - 1)].set(un - 1);
    g.masks_[un - 1].set(static_cast<std::size_t>(j - 1));
  }
  g.words_.reserve(un);
  for (const BitVec& m : g.masks_) g.words_.push_back(m.word());
  return g;
}

std::string GraphSpec::to_text() const {
  std::string s = "n=" + std::to_string(n_) + " attach=";
  for (std::size_t k = 0; k < attach_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(attach_[k]);
  }
  return s;
}

namespace {

int parse_int(std::string_view tok) {
  int value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end || tok.empty())
    throw Error(Errc::Parse, "expected an integer, got '" + std::string(tok) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

GraphSpec parse_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Parse, std::string("malformed graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("attach") ||
      !j["attach"].is_array())
    throw Error(Errc::Parse, R"(graph JSON must look like {"n": int, "attach": [int, ...]})");
  std::vector<int> attach;
  for (const auto& e : j["attach"]) {
    if (!e.is_number_integer()) throw Error(Errc::Parse, "attach entries must be integers");
    attach.push_back(e.get<int>());
  }
  return validate_graph(j["n"].get<int>(), std::move(attach));
}

}  // namespace

GraphSpec parse_graph(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '{') return parse_graph_json(text);

  std::optional<int> n;
  std::optional<std::vector<int>> attach;
  while (!text.empty()) {
    const auto space = text.find_first_of(" \t");
    std::string_view field = text.substr(0, space);
    text = space == std::string_view::npos ? std::string_view{} : trim(text.substr(space));
    const auto eq = field.find('=');
    if (eq == std::string_view::npos) throw Error(Errc::Parse, "expected key=value, got '" + std::string(field) + "'");
    const auto key = field.substr(0, eq);
    auto value = field.substr(eq + 1);
    if (key == "n") {
      n = parse_int(value);
    } else if (key == "attach") {
      attach.emplace();
      while (!value.empty()) {
        const auto comma = value.find(',');
        attach->push_back(parse_int(value.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        value.remove_prefix(comma + 1);
      }
    } else {
      throw Error(Errc::Parse, "unknown graph field '" + std::string(key) + "'");
    }
  }
  if (!n) throw Error(Errc::Parse, "graph spec is missing n=<int>");
  return validate_graph(*n, attach.value_or(std::vector<int>{}));
}

Config parse_config(const GraphSpec& g, std::string_view text) {
  auto parsed = BitVec::parse(text);
  if (!parsed) throw Error(Errc::BadConfig, "configuration must contain only '0' and '1'");
  if (parsed->size() != static_cast<std::size_t>(g.n()))
    throw Error(Errc::BadConfig, "configuration has length " + std::to_string(parsed->size()) + ", expected " +
                                     std::to_string(g.n()));
  return *std::move(parsed);
}

void check_vertex(const GraphSpec& g, int v) {
  if (v < 1 || v > g.n())
    throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " outside [1, " + std::to_string(g.n()) + "]");
}

std::vector<int> neighbors(const GraphSpec& g, int v) {
  check_vertex(g, v);
  std::vector<int> out;
  for (std::size_t i : g.neighbor_mask(v).ones()) out.push_back(static_cast<int>(i) + 1);
  return out;
}

Config apply_move(const GraphSpec& g, const Config& u, int v, MoveMode mode) {
  check_vertex(g, v);
  if (!u.test(static_cast<std::size_t>(v - 1))) {
    if (mode == MoveMode::Strict)
      throw Error(Errc::IllegalMove, "vertex " + std::to_string(v) + " is white; no move available");
    return u;
  }
  return u ^ g.neighbor_mask(v);
}

MoveMatrix move_matrix(const GraphSpec& g, int v) { return MoveMatrix{v, neighbors(g, v)}; }

BitMatrix MoveMatrix::dense(int n) const {
  BitMatrix m = BitMatrix::identity(static_cast<std::size_t>(n));
  for (int a : column) m.set(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(vertex - 1));
  return m;
}

Config MoveMatrix::apply(const Config& u) const {
  Config out = u;
  if (u.test(static_cast<std::size_t>(vertex - 1)))
    for (int a : column) out.flip(static_cast<std::size_t>(a - 1));
  return out;
}

}  // namespace flip
