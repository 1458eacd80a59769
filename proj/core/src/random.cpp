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

#include "aunital/random.hpp"

#include <cmath>

#include "aunital/errors.hpp"

namespace aunital {

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng &rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix g(static_cast<Eigen::Index>(rows),
                  static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

ComplexMatrix haar_unitary(std::size_t d, Rng &rng) {
  if (d == 0) {
    throw DimensionError("unitary dimension must be positive");
  }
  const Eigen::MatrixXcd z = ginibre(d, d, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const Complex diag = r(k, k);
    const double mag = std::abs(diag);
    if (mag > 0.0) {
      q.col(k) *= diag / mag;
    }
  }
  return q;
}

ComplexVector haar_vector(std::size_t d, Rng &rng) {
  if (d == 0) {
    throw DimensionError("vector dimension must be positive");
  }
  ComplexVector v = ginibre(d, 1, rng).col(0);
  return v / v.norm();
}

} // namespace aunital
