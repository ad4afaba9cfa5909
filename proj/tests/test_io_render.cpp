#include "doctest.h"

#include <cmath>
#include <regex>

#include "pants/error.hpp"
#include "pants/render.hpp"
#include "support.hpp"

using namespace pants;

namespace {

ErrorCode parse_error(const std::string& text) {
  try {
    parse_graph(text).sigma_graph();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvariantViolated;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("graph JSON round trip") {
  const auto g = testing::data_graph("pillowcase");
  const auto doc = parse_graph(graph_json(g));
  CHECK(doc.map == g.map());
  REQUIRE(doc.marked);
  CHECK(*doc.marked == g.marked());
  CHECK_FALSE(parse_graph(graph_json(g.map())).marked);
}

TEST_CASE("malformed documents") {
  CHECK(parse_error("{") == ErrorCode::ParseError);
  CHECK(parse_error("[]") == ErrorCode::ParseError);
  CHECK(parse_error(R"({"vertices": [[0, "x"]]})") == ErrorCode::ParseError);
  CHECK(parse_error(R"({"vertices": [[0, 2, 4], [1, 5, 3]], "marked_faces": [0, 1]})") == ErrorCode::ParseError);
  CHECK(parse_error(R"({"vertices": [[0, 2, 4], [1, 5, 3]]})") == ErrorCode::BadMarkedIndex);
  CHECK(parse_error(R"({"vertices": [[0, 2, 4], [1, 5, 3]], "marked_faces": [0, 0, 1]})") ==
        ErrorCode::DuplicateMarkedFace);
  CHECK(parse_error(R"({"vertices": [[0, 2, 4], [1, 5, 3]], "marked_faces": [0, 1, 9]})") ==
        ErrorCode::BadFaceIndex);
  CHECK(parse_error(R"({"vertices": [[0, 0], [1]]})") == ErrorCode::MalformedRotation);
  CHECK_THROWS_AS(read_graph("data/missing.json"), Error);
}

TEST_CASE("polytope and loop JSON") {
  const auto poly = enumerate_points(SigmaVector::from_array({1, 1, 1, 1, 1, 1}));
  CHECK(polytope_json(poly) == "{\"points\":[[0,0,0],[0,0,1],[0,1,0],[1,0,0]],\"tau\":[1,1,1,1,1,1]}\n");
  CHECK(polytope_json(poly, true) == "{\"points\":[[0,0,1],[0,1,0],[1,0,0]],\"tau\":[1,1,1,1,1,1]}\n");
  const auto loops = special_family(testing::theta_graph(), 1).loops;
  CHECK(loops_json(loops) == "[[0,5]]");
}

TEST_CASE("layout pins the outer face on the unit circle") {
  const auto g = testing::data_graph("pillowcase");
  const FaceId outer = default_outer_face(g.map());
  const auto pos = tutte_layout(g.map(), outer);
  CHECK(pos.size() == static_cast<std::size_t>(g.map().num_vertices()));
  for (const VertexId v : g.map().face_vertices(outer)) CHECK(std::hypot(pos[v].x, pos[v].y) == doctest::Approx(1.0));
  for (const auto& p : pos) CHECK(std::hypot(p.x, p.y) <= 1.0 + 1e-9);
  CHECK_THROWS_AS(tutte_layout(g.map(), -1), Error);
}

TEST_CASE("theta graph renders two vertices and three edges") {
  const auto svg = render_svg(testing::theta_graph());
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  const auto edges = svg.substr(svg.find("class=\"edges\""));
  CHECK(count(edges.substr(0, edges.find("</g>")), "<path") == 3);
  CHECK(count(svg, "<circle") == 2);
  for (const char* label : {">F1<", ">F2<", ">F3<"}) CHECK(count(svg, label) == 1);
}

TEST_CASE("pillowcase drawing highlights every special loop") {
  const auto g = pillowcase(BlockParams::from_array({1, 1, 1, 1, 1, 1}));
  const auto svg = render_svg(g);
  for (int i = 1; i <= 3; ++i) {
    const std::string tag = "class=\"special F" + std::to_string(i) + "\"";
    REQUIRE(svg.find(tag) != std::string::npos);
    std::size_t edges = 0;
    for (const auto& loop : special_family(g, i).loops) edges += loop.darts.size();
    const auto block = svg.substr(svg.find(tag));
    CHECK(count(block.substr(0, block.find("</g>")), "<path") == edges);
  }
  RenderOptions plain;
  plain.special_loops = false;
  CHECK(render_svg(g, plain).find("special") == std::string::npos);
  CHECK(render_svg(g) == svg);
}
