#include "pants/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pants/error.hpp"

namespace pants {

using nlohmann::json;

SigmaGraph GraphDocument::sigma_graph() const {
  if (!marked) throw Error(ErrorCode::BadMarkedIndex, "graph has no marked faces");
  return SigmaGraph(map, *marked);
}

GraphDocument parse_graph(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw Error(ErrorCode::ParseError, "expected an object with a \"vertices\" array");
  }
  std::vector<std::vector<Dart>> rotations;
  try {
    for (const auto& rot : doc["vertices"]) rotations.push_back(rot.get<std::vector<Dart>>());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("vertices: ") + e.what());
  }
  GraphDocument out{CombinatorialMap::build(std::move(rotations)), std::nullopt};
  if (doc.contains("marked_faces")) {
    const auto& m = doc["marked_faces"];
    if (!m.is_array() || m.size() != 3) {
      throw Error(ErrorCode::ParseError, "\"marked_faces\" must hold three face ids");
    }
    try {
      out.marked = m.get<std::array<FaceId, 3>>();
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, std::string("marked_faces: ") + e.what());
    }
  }
  return out;
}

GraphDocument read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string graph_json(const CombinatorialMap& map, const std::optional<std::array<FaceId, 3>>& marked) {
  json doc;
  doc["vertices"] = map.rotations();
  if (marked) doc["marked_faces"] = *marked;
  return doc.dump() + "\n";
}

std::string graph_json(const SigmaGraph& g) { return graph_json(g.map(), g.marked()); }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << text;
}

std::string polytope_json(const LaminationPolytope& poly, bool exclude_origin) {
  json doc;
  doc["tau"] = poly.tau.as_array();
  doc["points"] = json::array();
  for (const auto& p : poly.points) {
    if (exclude_origin && p == LaminationType{0, 0, 0}) continue;
    doc["points"].push_back(p);
  }
  return doc.dump() + "\n";
}

std::string loops_json(const std::vector<SimpleLoop>& loops) {
  json doc = json::array();
  for (const auto& loop : loops) doc.push_back(loop.darts);
  return doc.dump();
}

}  // namespace pants
