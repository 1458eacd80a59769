// Copyright 2026 The aunital Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aunital/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "aunital/errors.hpp"

namespace aunital {

namespace {

constexpr double kRangeSlack = 1e-12;

double checked_entropy_target(double x, std::size_t d) {
  if (d < 2) {
    throw DimensionError("entropy bounds need d >= 2");
  }
  const double max_s = 2.0 * std::log2(static_cast<double>(d));
  if (!std::isfinite(x) || x < -kRangeSlack || x > max_s + kRangeSlack) {
    throw ArgumentError("entropy " + std::to_string(x) +
                        " outside [0, 2 log2 d] = [0, " +
                        std::to_string(max_s) + "]");
  }
  return std::clamp(x, 0.0, max_s);
}

// diag(q, (1-q)/(d-1), ...) with q = 1 - t (1 - 1/d); entropy rises from 0 at
// t = 0 to log2 d at t = 1.
DensityMatrix spectral_family(double t, std::size_t d, const std::string &name) {
  const double q = 1.0 - t * (1.0 - 1.0 / static_cast<double>(d));
  ComplexMatrix op = ComplexMatrix::Zero(static_cast<Eigen::Index>(d),
                                         static_cast<Eigen::Index>(d));
  op(0, 0) = q;
  for (Eigen::Index k = 1; k < static_cast<Eigen::Index>(d); ++k) {
    op(k, k) = (1.0 - q) / static_cast<double>(d - 1);
  }
  return DensityMatrix(std::move(op), SubsystemLayout::single(name, d));
}

DensityMatrix single_qudit_with_entropy(double s, std::size_t d,
                                        const std::string &name) {
  const double t = bisect_entropy(
      [d, &name](double u) { return spectral_family(u, d, name); }, s);
  return spectral_family(t, d, name);
}

} // namespace

double bisect_entropy(const StateFamily &family, double target, double tol) {
  auto entropy_at = [&](double p) { return von_neumann_entropy(family(p)); };
  const double s0 = entropy_at(0.0);
  const double s1 = entropy_at(1.0);
  if (target < std::min(s0, s1) - tol || target > std::max(s0, s1) + tol) {
    throw RangeError("target entropy " + std::to_string(target) +
                     " outside the family range [" +
                     std::to_string(std::min(s0, s1)) + ", " +
                     std::to_string(std::max(s0, s1)) + "]");
  }
  if (std::abs(s0 - target) <= tol) {
    return 0.0;
  }
  if (std::abs(s1 - target) <= tol) {
    return 1.0;
  }
  const bool increasing = s1 > s0;
  double lo = 0.0;
  double hi = 1.0;
  double best_p = 0.0;
  double best_err = std::abs(s0 - target);
  for (int it = 0; it < kBisectionMaxIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double s = entropy_at(mid);
    const double err = std::abs(s - target);
    if (err < best_err) {
      best_err = err;
      best_p = mid;
    }
    if (err <= tol) {
      return mid;
    }
    if ((s < target) == increasing) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < kBisectionParameterWidth) {
      // Flat region: the bracket is as tight as the parameter allows.
      return best_p;
    }
  }
  if (best_err > tol) {
    throw NumericError("entropy bisection did not reach tolerance (error " +
                       std::to_string(best_err) + ")");
  }
  return best_p;
}

DensityMatrix lower_attainer(double x, std::size_t d) {
  x = checked_entropy_target(x, d);
  const double p =
      bisect_entropy([d](double q) { return isotropic_family(q, d); }, x);
  return isotropic_family(p, d);
}

DensityMatrix upper_attainer(double x, std::size_t d) {
  x = checked_entropy_target(x, d);
  const double log_d = std::log2(static_cast<double>(d));
  if (x <= log_d) {
    const auto sigma_a = single_qudit_with_entropy(x, d, "A");
    return product(sigma_a,
                   DensityMatrix::basis_state(0, SubsystemLayout::single("B", d)));
  }
  const auto sigma_b = single_qudit_with_entropy(x - log_d, d, "B");
  return product(DensityMatrix::maximally_mixed(SubsystemLayout::single("A", d)),
                 sigma_b);
}

BoundsResult cve_bounds(double x, std::size_t d) {
  x = checked_entropy_target(x, d);
  const double log_d = std::log2(static_cast<double>(d));
  return BoundsResult{x, x - log_d, std::min(x, log_d), lower_attainer(x, d),
                      upper_attainer(x, d)};
}

} // namespace aunital
