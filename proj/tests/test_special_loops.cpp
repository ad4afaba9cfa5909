#include "doctest.h"

#include "pants/error.hpp"
#include "support.hpp"

using namespace pants;

namespace {

SigmaVector sv(std::array<int, 6> v) { return SigmaVector::from_array(v); }

}  // namespace

TEST_CASE("sigma of the data graphs") {
  CHECK(sigma_of(testing::theta_graph()) == sv({1, 1, 1, 1, 1, 1}));
  CHECK(sigma_of(testing::data_graph("nested")) == sv({4, 1, 1, 1, 4, 5}));
  CHECK(sigma_of(testing::data_graph("three_circles")) == sv({1, 1, 1, 2, 2, 2}));
  CHECK(sigma_of(testing::data_graph("crossed")) == sv({4, 3, 4, 4, 5, 7}));
}

TEST_CASE("depth vectors") {
  CHECK(depth_vector(testing::data_graph("nested")) == NuVector{{1, 1, 0}});
  CHECK(depth_vector(testing::data_graph("crossed")) == NuVector{{3, 3, 0}});
  CHECK(depth_vector(testing::data_graph("three_circles")) == NuVector{{0, 0, 0}});
}

TEST_CASE("pillowcase sextuple") {
  CHECK(sigma_of(pillowcase(BlockParams::from_array({4, 3, 2, 0, 1, 3}))) == sv({5, 4, 4, 6, 6, 5}));
}

TEST_CASE("nested loops around the first hole agree in both directions") {
  const auto g = testing::data_graph("nested");
  for (int k = 1; k <= 4; ++k) {
    CAPTURE(k);
    CHECK(loop_toward(g, 1, 2, k).same_edges(loop_toward(g, 1, 3, k)));
  }
  const auto family = special_family(g, 1);
  CHECK(family.loops.size() == 4);
  CHECK(special_family(g, 2).loops.size() == 1);
  CHECK(special_family(g, 3).loops.size() == 1);
}

TEST_CASE("loop_toward range") {
  const auto g = testing::data_graph("nested");
  CHECK_THROWS_AS(loop_toward(g, 1, 1, 1), Error);
  CHECK_THROWS_AS(loop_toward(g, 1, 2, 0), Error);
  CHECK_THROWS_AS(loop_toward(g, 1, 2, g.distances()(g.marked(1), g.marked(2)) + 1), Error);
}

TEST_CASE("special loops are disjoint loops of their type") {
  for (const char* name : {"nested", "three_circles", "crossed", "pillowcase"}) {
    CAPTURE(name);
    const auto g = testing::data_graph(name);
    for (int i = 1; i <= 3; ++i) {
      const auto loops = special_family(g, i).loops;
      for (std::size_t a = 0; a < loops.size(); ++a) {
        CHECK(classify_loop(g, loops[a]) == LoopType::Type(i));
        for (std::size_t b = a + 1; b < loops.size(); ++b) CHECK_FALSE(loops[a].shares_vertex(loops[b]));
      }
    }
  }
}

TEST_CASE("at most one family is empty") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = sigma_of(testing::random_sigma_graph(rng, 10));
    CAPTURE(s.str());
    CHECK((s.m(1) == 0) + (s.m(2) == 0) + (s.m(3) == 0) <= 1);
  }
}
