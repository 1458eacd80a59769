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

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace aunital {

using Complex = std::complex<double>;

// Dense operator storage. Row-major so that the interchange format (row-major
// nested arrays) maps onto the storage directly.
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::VectorXcd;

using LabelList = std::vector<std::string>;

inline constexpr std::size_t kDefaultMaxDimension = 4096;
inline constexpr double kHermitianTolerance = 1e-10;

// Ordered tensor factors of a Hilbert space. The leftmost subsystem is the
// most significant index of the flattened basis.
class SubsystemLayout {
public:
  SubsystemLayout() = default;
  SubsystemLayout(LabelList names, std::vector<std::size_t> dims,
                  std::size_t max_dim = kDefaultMaxDimension);

  // [A, B] with the given dimensions.
  static SubsystemLayout bipartite(std::size_t d_a, std::size_t d_b);
  static SubsystemLayout single(std::string name, std::size_t d);

  const LabelList &names() const noexcept { return names_; }
  const std::vector<std::size_t> &dims() const noexcept { return dims_; }
  std::size_t size() const noexcept { return names_.size(); }
  std::size_t total_dim() const noexcept { return total_; }

  bool contains(const std::string &label) const noexcept;
  std::size_t index_of(const std::string &label) const;
  std::size_t dim_of(const std::string &label) const;
  // Product of the dimensions of the given labels.
  std::size_t dim_of(const LabelList &labels) const;

  // Sub-layout of the given labels, kept in layout order.
  SubsystemLayout select(const LabelList &labels) const;
  SubsystemLayout without(const LabelList &labels) const;
  SubsystemLayout reordered(const LabelList &new_order) const;
  // Concatenation; label collisions throw LabelError.
  SubsystemLayout concat(const SubsystemLayout &other) const;

  // Labels not in `labels`, in layout order.
  LabelList complement(const LabelList &labels) const;

  friend bool operator==(const SubsystemLayout &,
                         const SubsystemLayout &) = default;

private:
  LabelList names_;
  std::vector<std::size_t> dims_;
  std::size_t total_ = 1;
};

std::string to_string(const SubsystemLayout &layout);

ComplexMatrix identity(std::size_t d);

// Kronecker product.
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b,
                     std::size_t max_dim = kDefaultMaxDimension);

ComplexMatrix partial_trace(const ComplexMatrix &m,
                            const SubsystemLayout &layout,
                            const LabelList &traced);

ComplexMatrix partial_transpose(const ComplexMatrix &m,
                                const SubsystemLayout &layout,
                                const LabelList &transposed);

struct HermitianEigen {
  std::vector<double> values; // descending
  ComplexMatrix vectors;      // eigenvectors as columns, same order
};

// Eigendecomposition of a Hermitian matrix. Inputs within `tol_herm` of
// Hermitian (max-abs of m - m^dagger) are symmetrized first; anything further
// off throws ShapeError.
HermitianEigen hermitian_eig(const ComplexMatrix &m,
                             double tol_herm = kHermitianTolerance);

// Reorders tensor factors: the result acts on layout.reordered(new_order).
ComplexMatrix permute_subsystems(const ComplexMatrix &m,
                                 const SubsystemLayout &layout,
                                 const LabelList &new_order);

// Unitary P with P |x_layout> = |x_new_order>, so that
// permute_subsystems(m) == P m P^dagger.
ComplexMatrix permutation_unitary(const SubsystemLayout &layout,
                                  const LabelList &new_order);

// Largest |m - m^dagger| entry.
double hermitian_deviation(const ComplexMatrix &m);
bool all_finite(const ComplexMatrix &m);
// Throws ShapeError when m is not square of the layout's total dimension.
void require_shape(const ComplexMatrix &m, const SubsystemLayout &layout);

} // namespace aunital
