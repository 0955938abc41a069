#include "gemcraft/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace gemcraft {

using nlohmann::json;

std::string graph_to_json(const ColouredGraph& g) {
  json edges = json::array();
  for (int v = 0; v < g.vertex_count(); ++v)
    for (Colour c = 0; c < kColours; ++c) {
      int w = g.neighbour(v, c);
      if (w != kNone && v < w) edges.push_back({v, w, c});
    }
  json j = {{"format", "gem-v1"}, {"vertices", g.vertex_count()}, {"edges", edges}};
  if (!g.name().empty()) j["name"] = g.name();
  return j.dump() + "\n";
}

ColouredGraph graph_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("JSON syntax: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("top level must be an object");
  if (j.value("format", "") != "gem-v1") throw ParseError("field 'format' must be \"gem-v1\"");
  if (!j.contains("vertices") || !j["vertices"].is_number_integer() || j["vertices"].get<int>() <= 0)
    throw ParseError("field 'vertices' must be a positive integer");
  if (!j.contains("edges") || !j["edges"].is_array()) throw ParseError("field 'edges' must be an array");
  ColouredGraph g(j["vertices"].get<int>(), j.value("name", ""));
  const json& edges = j["edges"];
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const json& e = edges[i];
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer() || !e[2].is_number_integer())
      throw ParseError(where + ": expected [u,v,c] of integers");
    try {
      g.add_edge(e[0].get<int>(), e[1].get<int>(), e[2].get<int>());
    } catch (const StructureError& err) {
      throw ParseError(where + ": " + err.what());
    }
  }
  return g;
}

std::string graph_to_text(const ColouredGraph& g) {
  std::ostringstream os;
  os << "vertices " << g.vertex_count() << "\n";
  for (Colour c = 0; c < kColours; ++c) {
    os << c << ":";
    std::string line;
    for (int v = 0; v < g.vertex_count(); ++v) {
      int w = g.neighbour(v, c);
      if (w == kNone)
        line += "(" + std::to_string(v) + " -)";
      else if (v < w)
        line += "(" + std::to_string(v) + " " + std::to_string(w) + ")";
    }
    if (!line.empty()) os << " " << line;
    os << "\n";
  }
  return os.str();
}

ColouredGraph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::optional<ColouredGraph> g;
  std::array<bool, kColours> seen{};
  auto fail = [&](const std::string& msg) {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    if (!g) {
      std::string kw;
      int n = 0;
      if (!(ls >> kw >> n) || kw != "vertices" || n <= 0) fail("expected 'vertices N'");
      g.emplace(n);
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos) fail("expected 'c: cycles'");
    Colour c = -1;
    try {
      c = std::stoi(line.substr(0, colon));
    } catch (const std::exception&) {
      fail("bad colour label");
    }
    if (c < 0 || c >= kColours) fail("colour out of range");
    if (seen[c]) fail("colour " + std::to_string(c) + " given twice");
    seen[c] = true;
    std::string body = line.substr(colon + 1);
    std::size_t pos = 0;
    while ((pos = body.find('(', pos)) != std::string::npos) {
      auto close = body.find(')', pos);
      if (close == std::string::npos) fail("unclosed cycle");
      std::istringstream cs(body.substr(pos + 1, close - pos - 1));
      std::string a, b, extra;
      if (!(cs >> a >> b) || (cs >> extra)) fail("cycles must have exactly two entries");
      pos = close + 1;
      if (b == "-") {
        if (c != 3) fail("missing edge allowed only for colour 3");
        continue;
      }
      try {
        g->add_edge(std::stoi(a), std::stoi(b), c);
      } catch (const StructureError& e) {
        fail(e.what());
      } catch (const std::exception&) {
        fail("bad vertex index");
      }
    }
  }
  if (!g) throw ParseError("empty input");
  for (Colour c = 0; c < kColours; ++c)
    if (!seen[c]) throw ParseError("colour " + std::to_string(c) + " line missing");
  return *g;
}

ColouredGraph parse_graph(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return graph_from_json(text);
  return graph_from_text(text);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace gemcraft
