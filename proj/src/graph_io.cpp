#include "c2lab/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "c2lab/error.hpp"

namespace c2lab {

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int expected_edges = -1;
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#' || first == "c") continue;
    auto fail = [&](const std::string& msg) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + msg);
    };
    if (first == "p") {
      if (expected_edges >= 0) fail("duplicate header");
      if (!(ls >> expected_edges >> vertices) || expected_edges < 0 || vertices < 1)
        fail("expected 'p <edges> <vertices>'");
      continue;
    }
    if (expected_edges < 0) fail("edge line before the 'p N M' header");
    int u = 0;
    int v = 0;
    try {
      u = std::stoi(first);
    } catch (const std::exception&) {
      fail("expected a vertex index, got '" + first + "'");
    }
    if (!(ls >> v)) fail("expected 'u v'");
    std::string extra;
    if (ls >> extra) fail("trailing tokens");
    edges.emplace_back(u, v);
  }
  if (expected_edges < 0) throw Error(ErrorCode::ParseError, "missing 'p N M' header");
  if (static_cast<int>(edges.size()) != expected_edges)
    throw Error(ErrorCode::ParseError, "header announces " + std::to_string(expected_edges) +
                                           " edges, found " + std::to_string(edges.size()));
  try {
    return Graph(vertices, edges);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string format_graph_text(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.edge_count() << ' ' << g.vertex_count() << '\n';
  for (const auto& e : g.edge_list()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    const int vertices = j.at("vertices").get<int>();
    const auto& edges = j.at("edges");
    std::vector<Edge> list;
    std::vector<int> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<int>>();
    if (!labels.empty() && labels.size() != edges.size())
      throw Error(ErrorCode::ParseError, "labels and edges differ in length");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::ParseError, "edge must be [u, v]");
      list.push_back({e[0].get<int>(), e[1].get<int>(), labels.empty() ? static_cast<int>(i) + 1 : labels[i]});
    }
    return Graph::with_labels(vertices, std::move(list));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, e.what());
  }
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  bool positional = true;
  int expect = 1;
  for (const auto& e : g.edge_list()) {
    edges.push_back({e.u, e.v});
    if (e.label != expect++) positional = false;
  }
  nlohmann::json j{{"vertices", g.vertex_count()}, {"edges", edges}};
  if (!positional) {
    std::vector<int> labels;
    for (const auto& e : g.edge_list()) labels.push_back(e.label);
    j["labels"] = labels;
  }
  return j;
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
    return graph_from_json(j);
  }
  return parse_graph_text(text);
}

}  // namespace c2lab
