#include "doctest.h"

#include "pants/error.hpp"
#include "support.hpp"

using namespace pants;

namespace {

FamilySpec spec(std::array<int, 3> counts, std::array<int, 3> depths = {}, std::array<bool, 3> caps = {}) {
  FamilySpec s;
  s.counts = counts;
  s.depths = depths;
  s.caps = caps;
  return s;
}

ErrorCode validate_error(const FamilySpec& s) {
  try {
    s.validate();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

SigmaVector sv(std::array<int, 6> v) { return SigmaVector::from_array(v); }

}  // namespace

TEST_CASE("family spec validation") {
  CHECK_NOTHROW(spec({1, 1, 1}).validate());
  CHECK(validate_error(spec({-1, 1, 1})) == ErrorCode::InvariantViolated);
  CHECK(validate_error(spec({0, 0, 2})) == ErrorCode::InvariantViolated);
  CHECK(validate_error(spec({1, 1, 1}, {2, 0, 0})) == ErrorCode::InvariantViolated);
  CHECK(validate_error(spec({2, 2, 2}, {1, 1, 1})) == ErrorCode::OverlappingCrossings);
  CHECK(validate_error(spec({2, 2, 2}, {1, 0, 0}, {false, true, false})) == ErrorCode::InvariantViolated);
  CHECK(validate_error(spec({0, 2, 2}, {}, {true, false, false})) == ErrorCode::InvariantViolated);
  CHECK(spec({4, 3, 4}, {3, 3, 0}).str() == "counts=(4,3,4) p=(3,3,0)");
  CHECK(spec({2, 3, 0}, {}, {true, true, false}).str() == "counts=(2,3,0) p=(0,0,0) caps=12");
}

TEST_CASE("reference drawings") {
  CHECK(sigma_of(family_graph(spec({4, 3, 4}, {3, 3, 0}))) == sv({4, 3, 4, 4, 5, 7}));
  CHECK(sigma_of(family_graph(spec({2, 3, 0}, {}, {true, true, false}))) == sv({2, 3, 0, 3, 2, 5}));
  CHECK(sigma_of(family_graph(spec({0, 7, 6}, {5, 0, 0}))) == sv({2, 7, 6, 8, 6, 7}));
  CHECK(sigma_of(family_graph(spec({4, 1, 1}, {1, 1, 0}))) == sv({4, 1, 1, 1, 4, 5}));
  CHECK(sigma_of(family_graph(spec({1, 1, 1}))) == sv({1, 1, 1, 2, 2, 2}));
}

TEST_CASE("cross-only law") {
  auto s = spec({0, 7, 6}, {5, 0, 0});
  s.law = CrossingLaw::CrossOnly;
  CHECK(s.str() == "counts=(0,7,6) p=(5,0,0) cross-only");
  CHECK(sigma_of(family_graph(s)) == sv({3, 7, 6, 8, 6, 7}));
}

TEST_CASE("crossing families add loops around both") {
  CHECK(sigma_of(family_graph(spec({1, 3, 3}, {3, 0, 0}))) == sv({2, 3, 3, 3, 4, 4}));
}

TEST_CASE("every small family spec gives a sphere with three distinct marked faces") {
  for (const auto& s : testing::family_grid(3)) {
    CAPTURE(s.str());
    const auto g = family_graph(s);
    CHECK(g.map().euler_characteristic() == 2);
    const auto m = g.marked();
    CHECK(m[0] != m[1]);
    CHECK(m[1] != m[2]);
    CHECK(m[0] != m[2]);
    for (int i = 1; i <= 3; ++i) CHECK(sigma_of(g).m(i) >= s.count(i));
  }
}

TEST_CASE("drawing places empty holes at infinity") {
  const auto d = family_drawing(spec({0, 2, 2}, {1, 0, 0}));
  CHECK(d.at_infinity[0]);
  CHECK_FALSE(d.at_infinity[1]);
  const auto g = family_graph(spec({0, 2, 2}, {1, 0, 0}));
  CHECK(g.marked(1) == d.arrangement.build().outer_face());
}
