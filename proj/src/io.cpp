#include "oriclique/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace oriclique {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view token, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    fail(errc::bad_format, std::string("expected a decimal ") + what + ", got '" +
                               std::string(token) + "'");
  return value;
}

const char* direction_name(Direction d) {
  switch (d) {
    case Direction::forward: return "forward";
    case Direction::backward: return "backward";
    default: return "none";
  }
}

}  // namespace

OrientedGraph parse_ograph(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1, m = -1;
  if (!(in >> n >> m)) fail(errc::bad_format, "missing 'n m' header");
  if (n < 0 || n > OrientedGraph::kMaxVertices)
    fail(errc::bad_format, "order " + std::to_string(n) + " out of range");
  if (m < 0 || m > n * (n - 1)) fail(errc::bad_format, "arc count " + std::to_string(m));
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v))
      fail(errc::bad_format, "arc line " + std::to_string(i + 1) + " missing or malformed");
    arcs.push_back({u, v});
  }
  std::string rest;
  if (in >> rest) fail(errc::bad_format, "trailing data '" + rest + "'");
  return OrientedGraph::build(static_cast<int>(n), arcs);
}

std::string format_ograph(const OrientedGraph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.arc_count()) + "\n";
  for (const Arc& a : g.arcs())
    out += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
  return out;
}

OrientedGraph parse_compact(std::string_view text) {
  const std::string_view body = trim(text);
  const std::size_t colon = body.find(':');
  if (colon == std::string_view::npos) fail(errc::bad_format, "compact form needs 'n:'");
  const int n = parse_int(body.substr(0, colon), "order");
  if (n < 0 || n > OrientedGraph::kMaxVertices)
    fail(errc::bad_format, "order " + std::to_string(n) + " out of range");
  std::vector<Arc> arcs;
  std::string_view rest = body.substr(colon + 1);
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    const std::string_view token =
        comma == std::string_view::npos ? rest : rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (comma != std::string_view::npos && rest.empty())
      fail(errc::bad_format, "trailing comma");
    const std::size_t gt = token.find('>');
    if (gt == std::string_view::npos)
      fail(errc::bad_format, "arc token '" + std::string(token) + "' needs 'u>v'");
    arcs.push_back(
        {parse_int(token.substr(0, gt), "tail"), parse_int(token.substr(gt + 1), "head")});
  }
  return OrientedGraph::build(n, arcs);
}

std::string format_compact(const OrientedGraph& g) {
  std::string out = std::to_string(g.order()) + ":";
  bool first = true;
  for (const Arc& a : g.arcs()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(a.tail) + ">" + std::to_string(a.head);
  }
  return out;
}

OrientedGraph parse_graph(std::string_view text) {
  return trim(text).find(':') != std::string_view::npos ? parse_compact(text)
                                                        : parse_ograph(text);
}

nlohmann::json graph_json(const OrientedGraph& g) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const Arc& a : g.arcs()) arcs.push_back({a.tail, a.head});
  return {{"order", g.order()},
          {"arc_count", g.arc_count()},
          {"arcs", std::move(arcs)},
          {"compact", format_compact(g)}};
}

nlohmann::json certificate_json(const ColouringCertificate& c) {
  nlohmann::json dirs = nlohmann::json::array();
  for (const auto& row : c.directions) {
    nlohmann::json r = nlohmann::json::array();
    for (Direction d : row) r.push_back(direction_name(d));
    dirs.push_back(std::move(r));
  }
  return {{"colours", c.colour_count()}, {"classes", c.classes}, {"directions", std::move(dirs)}};
}

nlohmann::json criticality_json(const CriticalityReport& r) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const ArcCriticality& a : r.per_arc)
    arcs.push_back({{"arc", {a.arc.tail, a.arc.head}},
                    {"chi_without", a.chi_without},
                    {"drop", a.drop}});
  return {{"chi", r.chi}, {"deeply_critical", r.deeply_critical}, {"arcs", std::move(arcs)}};
}

nlohmann::json scan_report_json(const ScanReport& r) {
  return {{"n", r.n},
          {"generated", r.generated},
          {"cliques", r.cliques},
          {"dcoc", r.dcoc},
          {"witnesses", r.witnesses},
          {"elapsed_seconds", r.elapsed_seconds},
          {"parameters", r.parameters},
          {"resumed", r.resumed},
          {"completed", r.completed}};
}

nlohmann::json circulant_scan_json(const CirculantScanResult& r) {
  nlohmann::json classes = nlohmann::json::array();
  for (const CirculantClass& c : r.classes)
    classes.push_back({{"set", c.set}, {"class_size", c.class_size}});
  return {{"n", r.n},
          {"mode", r.mode == ScanMode::pruned ? "pruned" : "exhaustive"},
          {"found", r.found},
          {"classes", std::move(classes)},
          {"leaves", r.leaves},
          {"nodes", r.nodes},
          {"elapsed_seconds", r.elapsed_seconds},
          {"resumed", r.resumed},
          {"completed", r.completed}};
}

}  // namespace oriclique
