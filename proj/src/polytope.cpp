#include "pants/polytope.hpp"

#include <algorithm>

#include "pants/error.hpp"

namespace pants {

bool LaminationPolytope::contains(const LaminationType& p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

LaminationPolytope enumerate_points(const SigmaVector& tau) {
  LaminationPolytope poly{tau, {}};
  const auto [a, b, c] = tau.mu;
  const auto [d, e, f] = tau.delta;
  for (int x = 0; x <= a; ++x) {
    for (int y = 0; y <= b; ++y) {
      for (int z = 0; z <= c; ++z) {
        if (y + z <= d && x + z <= e && x + y <= f) poly.points.push_back({x, y, z});
      }
    }
  }
  return poly;
}

LaminationPolytope lamination_space(const SigmaGraph& g) { return enumerate_points(sigma_of(g)); }

std::string RealizabilityVerdict::str() const {
  switch (tag) {
    case Tag::Realizable: return "realizable";
    case Tag::ViolatesT1: return "T1 violated at i=" + std::to_string(index);
    case Tag::ViolatesT2: return "T2 violated at i=" + std::to_string(index);
  }
  return "";
}

RealizabilityVerdict check_realizable(const SigmaVector& tau) {
  for (int i = 1; i <= 3; ++i) {
    if (tau.m(i) < 0) throw Error(ErrorCode::InvalidTau, "mu_" + std::to_string(i) + " < 0");
    if (tau.d(i) < 1) throw Error(ErrorCode::NonPositiveDelta, "delta_" + std::to_string(i) + " < 1");
  }
  using Tag = RealizabilityVerdict::Tag;
  for (int i = 1; i <= 3; ++i) {
    const int a = tau.m(next_index(i));
    const int b = tau.m(prev_index(i));
    if (std::max(a, b) > tau.d(i) || tau.d(i) > a + b) return {Tag::ViolatesT1, i};
  }
  for (int i = 1; i <= 3; ++i) {
    if (tau.d(next_index(i)) + tau.d(prev_index(i)) > 2 * tau.m(i) + tau.d(i) + 1) {
      return {Tag::ViolatesT2, i};
    }
  }
  return {};
}

NuVector nu_transform(const SigmaVector& tau) {
  NuVector out;
  for (int i = 1; i <= 3; ++i) {
    out.nu[i - 1] = tau.m(next_index(i)) + tau.m(prev_index(i)) - tau.d(i);
  }
  return out;
}

SigmaVector tau_from_mu_nu(const std::array<int, 3>& mu, const NuVector& nu) {
  SigmaVector tau{mu, {}};
  for (int i = 1; i <= 3; ++i) {
    tau.delta[i - 1] = mu[next_index(i) - 1] + mu[prev_index(i) - 1] - nu.n(i);
  }
  return tau;
}

bool nu_conditions_hold(const std::array<int, 3>& mu, const NuVector& nu) {
  for (int i = 1; i <= 3; ++i) {
    const int a = mu[next_index(i) - 1];
    const int b = mu[prev_index(i) - 1];
    const int cap = std::min({a, b, nu.n(next_index(i)) + nu.n(prev_index(i)) + 1});
    if (nu.n(i) < 0 || nu.n(i) > cap) return false;
  }
  return true;
}

}  // namespace pants
