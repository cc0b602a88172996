#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "c2lab/graph.hpp"

namespace c2lab {

// Text format: "p N M" (edges, vertices) followed by N lines "u v".
// Blank lines and lines starting with '#' or 'c' are ignored.
Graph parse_graph_text(const std::string& text);
std::string format_graph_text(const Graph& g);

// JSON: {"vertices": k, "edges": [[u,v], ...]}, optionally "labels": [...].
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

/// Reads either format; JSON is recognized by a leading '{'.
Graph load_graph_file(const std::string& path);

}  // namespace c2lab
