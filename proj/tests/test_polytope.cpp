#include "doctest.h"

#include <algorithm>

#include "pants/error.hpp"
#include "pants/polytope.hpp"

using namespace pants;

namespace {

SigmaVector sv(std::array<int, 6> v) { return SigmaVector::from_array(v); }

std::vector<SigmaVector> small_taus(int max_mu) {
  std::vector<SigmaVector> out;
  for (int a = 0; a <= max_mu; ++a)
    for (int b = 0; b <= max_mu; ++b)
      for (int c = 0; c <= max_mu; ++c)
        for (int d = 1; d <= 2 * max_mu + 1; ++d)
          for (int e = 1; e <= 2 * max_mu + 1; ++e)
            for (int f = 1; f <= 2 * max_mu + 1; ++f) out.push_back(sv({a, b, c, d, e, f}));
  return out;
}

}  // namespace

TEST_CASE("points of small polytopes") {
  const auto theta = enumerate_points(sv({1, 1, 1, 1, 1, 1}));
  CHECK(theta.points == std::vector<LaminationType>{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  const auto cube = enumerate_points(sv({1, 1, 1, 2, 2, 2}));
  CHECK(cube.points.size() == 8);
  CHECK_FALSE(cube.contains({2, 0, 0}));
  CHECK(enumerate_points(sv({0, 0, 0, 1, 1, 1})).points == std::vector<LaminationType>{{0, 0, 0}});
}

TEST_CASE("points satisfy the inequalities and nothing else does") {
  const auto tau = sv({4, 3, 4, 4, 5, 7});
  const auto poly = enumerate_points(tau);
  CHECK(std::is_sorted(poly.points.begin(), poly.points.end()));
  std::size_t expected = 0;
  for (int x = 0; x <= 6; ++x)
    for (int y = 0; y <= 6; ++y)
      for (int z = 0; z <= 6; ++z) {
        const bool in = x <= 4 && y <= 3 && z <= 4 && y + z <= 4 && x + z <= 5 && x + y <= 7;
        expected += in;
        CHECK(poly.contains({x, y, z}) == in);
      }
  CHECK(poly.points.size() == expected);
}

TEST_CASE("realizability verdicts") {
  CHECK(check_realizable(sv({4, 1, 1, 1, 4, 5})).realizable());
  CHECK(check_realizable(sv({2, 7, 6, 8, 6, 7})).realizable());
  CHECK(check_realizable(sv({4, 3, 4, 4, 5, 7})).realizable());
  const auto bad = check_realizable(sv({0, 0, 0, 1, 1, 1}));
  CHECK(bad.tag == RealizabilityVerdict::Tag::ViolatesT1);
  CHECK(bad.index == 1);
  CHECK(bad.str() == "T1 violated at i=1");
  CHECK(check_realizable(sv({1, 1, 1, 1, 1, 4})).tag == RealizabilityVerdict::Tag::ViolatesT1);
  CHECK(check_realizable(sv({0, 3, 3, 3, 3, 3})).tag == RealizabilityVerdict::Tag::ViolatesT2);
  CHECK_THROWS_AS(check_realizable(sv({1, 1, 1, 0, 1, 1})), Error);
  CHECK_THROWS_AS(check_realizable(sv({-1, 1, 1, 1, 1, 1})), Error);
}

TEST_CASE("nu transform round trip") {
  const auto tau = sv({2, 7, 6, 8, 6, 7});
  const auto nu = nu_transform(tau);
  CHECK(nu == NuVector{{5, 2, 2}});
  CHECK(tau_from_mu_nu(tau.mu, nu) == tau);
}

TEST_CASE("compact nu form agrees with the inequalities") {
  for (const auto& tau : small_taus(3)) {
    CAPTURE(tau.str());
    CHECK(check_realizable(tau).realizable() == nu_conditions_hold(tau.mu, nu_transform(tau)));
  }
}

TEST_CASE("realizability is invariant under relabelling") {
  const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (const auto& tau : small_taus(2)) {
    const bool base = check_realizable(tau).realizable();
    for (const auto& p : perms) {
      SigmaVector q;
      for (int k = 0; k < 3; ++k) {
        q.mu[k] = tau.mu[p[k]];
        q.delta[k] = tau.delta[p[k]];
      }
      CHECK(check_realizable(q).realizable() == base);
    }
  }
}

TEST_CASE("polytopes are downward closed") {
  for (const auto& tau : small_taus(2)) {
    const auto poly = enumerate_points(tau);
    for (const auto& p : poly.points) {
      for (int k = 0; k < 3; ++k) {
        if (p[k] == 0) continue;
        auto q = p;
        --q[k];
        CHECK(poly.contains(q));
      }
    }
  }
}
