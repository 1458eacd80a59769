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

#pragma once

#include <functional>

#include "aunital/states.hpp"

namespace aunital {

// Tight bounds on CVE(rho) over two-qudit states with S(rho) = entropy_x:
//   lower = x - log2 d,   upper = min(x, log2 d),
// with states attaining each.
struct BoundsResult {
  double entropy_x;
  double lower;
  double upper;
  DensityMatrix lower_attainer;
  DensityMatrix upper_attainer;
};

using StateFamily = std::function<DensityMatrix(double)>;

inline constexpr double kBisectionTolerance = 1e-7;
inline constexpr int kBisectionMaxIterations = 60;
inline constexpr double kBisectionParameterWidth = 1e-9;

// Parameter p in [0, 1] with |S(family(p)) - target| <= tol, assuming
// S(family(.)) is continuous and monotone. Once the bracket narrows below
// kBisectionParameterWidth the best midpoint is returned even if tol is not
// met. Throws RangeError when the target lies outside
// [S(family(0)), S(family(1))] (in either orientation).
double bisect_entropy(const StateFamily &family, double target,
                      double tol = kBisectionTolerance);

BoundsResult cve_bounds(double x, std::size_t d);

// A state on [A, B] with S = x and CVE = min(x, log2 d): sigma_A (x) |0><0|
// with S(sigma_A) = x below log2 d, and I/d (x) sigma_B with
// S(sigma_B) = x - log2 d above.
DensityMatrix upper_attainer(double x, std::size_t d);

// Isotropic state with S = x; its CVE is x - log2 d.
DensityMatrix lower_attainer(double x, std::size_t d);

} // namespace aunital
