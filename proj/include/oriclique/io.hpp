#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "oriclique/circulant.hpp"
#include "oriclique/colouring.hpp"
#include "oriclique/enumeration.hpp"
#include "oriclique/graph.hpp"

namespace oriclique {

// OGRAPH v1: first line "n m", then m lines "u v" (0-based). Arcs may appear
// in any order; duplicates, loops and 2-cycles are rejected. Writers emit
// arcs in lexicographic order.
OrientedGraph parse_ograph(std::string_view text);
std::string format_ograph(const OrientedGraph& g);

// Compact one-line form "n:u>v,u>v,...".
OrientedGraph parse_compact(std::string_view text);
std::string format_compact(const OrientedGraph& g);

/// Auto-detects the two text forms.
OrientedGraph parse_graph(std::string_view text);

nlohmann::json graph_json(const OrientedGraph& g);
nlohmann::json certificate_json(const ColouringCertificate& c);
nlohmann::json criticality_json(const CriticalityReport& r);
nlohmann::json scan_report_json(const ScanReport& r);
nlohmann::json circulant_scan_json(const CirculantScanResult& r);

}  // namespace oriclique
