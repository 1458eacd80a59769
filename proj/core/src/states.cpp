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

#include "aunital/states.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "aunital/errors.hpp"
#include "aunital/random.hpp"

namespace aunital {

namespace {

// Eigenvalues of sigma below this are treated as outside its support.
constexpr double kSupportThreshold = 1e-12;

void require_proper_cut(const SubsystemLayout &layout, const LabelList &cut,
                        const char *what) {
  if (cut.empty() || layout.complement(cut).empty()) {
    throw LabelError(std::string(what) +
                     " must be a nonempty proper subset of the layout " +
                     to_string(layout));
  }
}

} // namespace

DensityMatrix::DensityMatrix(ComplexMatrix op, SubsystemLayout layout,
                             StateTolerance tol)
    : op_(std::move(op)), layout_(std::move(layout)) {
  require_shape(op_, layout_);
  if (!all_finite(op_)) {
    throw StateValidationError("density matrix has non-finite entries");
  }
  const double herm = hermitian_deviation(op_);
  if (herm > tol.hermitian) {
    throw StateValidationError("density matrix is not Hermitian (deviation " +
                               std::to_string(herm) + ")");
  }
  op_ = (0.5 * (op_ + op_.adjoint())).eval();
  const double tr = op_.trace().real();
  if (std::abs(tr - 1.0) > tol.trace) {
    throw StateValidationError("density matrix trace is " +
                               std::to_string(tr) + ", expected 1");
  }
  auto eig = hermitian_eig(op_);
  spectrum_ = std::move(eig.values);
  for (double &v : spectrum_) {
    if (v < tol.min_eigenvalue) {
      throw StateValidationError(
          "density matrix has negative eigenvalue " + std::to_string(v));
    }
    if (v < 0.0) {
      v = 0.0;
    }
  }
}

DensityMatrix DensityMatrix::pure(const ComplexVector &psi,
                                  SubsystemLayout layout) {
  if (static_cast<std::size_t>(psi.size()) != layout.total_dim()) {
    throw ShapeError("state vector length does not match layout " +
                     to_string(layout));
  }
  if (std::abs(psi.norm() - 1.0) > 1e-10) {
    throw StateValidationError("state vector is not normalized");
  }
  ComplexMatrix op = psi * psi.adjoint();
  return DensityMatrix(std::move(op), std::move(layout));
}

DensityMatrix DensityMatrix::maximally_mixed(SubsystemLayout layout) {
  const auto d = layout.total_dim();
  ComplexMatrix op = identity(d) / static_cast<double>(d);
  return DensityMatrix(std::move(op), std::move(layout));
}

DensityMatrix DensityMatrix::basis_state(std::size_t k,
                                         SubsystemLayout layout) {
  const auto d = layout.total_dim();
  if (k >= d) {
    throw ArgumentError("basis index " + std::to_string(k) +
                        " out of range for dimension " + std::to_string(d));
  }
  ComplexMatrix op = ComplexMatrix::Zero(static_cast<Eigen::Index>(d),
                                         static_cast<Eigen::Index>(d));
  op(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = 1.0;
  return DensityMatrix(std::move(op), std::move(layout));
}

DensityMatrix product(const DensityMatrix &rho, const DensityMatrix &sigma) {
  auto layout = rho.layout().concat(sigma.layout());
  return DensityMatrix(tensor(rho.matrix(), sigma.matrix()), std::move(layout));
}

DensityMatrix marginal(const DensityMatrix &rho, const LabelList &keep) {
  const auto traced = rho.layout().complement(keep);
  auto layout = rho.layout().select(keep);
  return DensityMatrix(partial_trace(rho.matrix(), rho.layout(), traced),
                       std::move(layout));
}

DensityMatrix reorder(const DensityMatrix &rho, const LabelList &new_order) {
  auto layout = rho.layout().reordered(new_order);
  return DensityMatrix(
      permute_subsystems(rho.matrix(), rho.layout(), new_order),
      std::move(layout));
}

double shannon_entropy(const std::vector<double> &probabilities) {
  double s = 0.0;
  for (double p : probabilities) {
    if (p > 0.0) {
      s -= p * std::log2(p);
    }
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix &rho) {
  return shannon_entropy(rho.spectrum());
}

double conditional_entropy(const DensityMatrix &rho,
                           const LabelList &a_labels) {
  require_proper_cut(rho.layout(), a_labels, "conditioned-on (A) labels");
  const auto b = marginal(rho, rho.layout().complement(a_labels));
  return von_neumann_entropy(rho) - von_neumann_entropy(b);
}

double relative_entropy(const DensityMatrix &rho, const DensityMatrix &sigma) {
  if (rho.layout() != sigma.layout()) {
    throw ShapeError("relative entropy needs states on the same layout");
  }
  const auto eig = hermitian_eig(sigma.matrix());
  double cross = 0.0; // Tr rho log2 sigma
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    const auto v = eig.vectors.col(static_cast<Eigen::Index>(k));
    const double weight = (v.adjoint() * rho.matrix() * v)(0, 0).real();
    if (eig.values[k] <= kSupportThreshold) {
      if (weight > kSupportThreshold) {
        return std::numeric_limits<double>::infinity();
      }
      continue;
    }
    cross += weight * std::log2(eig.values[k]);
  }
  return -von_neumann_entropy(rho) - cross;
}

double negativity(const DensityMatrix &rho, const LabelList &cut) {
  require_proper_cut(rho.layout(), cut, "negativity cut");
  const auto pt = partial_transpose(rho.matrix(), rho.layout(), cut);
  const auto eig = hermitian_eig(pt, 1e-9);
  double neg = 0.0;
  for (double v : eig.values) {
    if (v < 0.0) {
      neg -= v;
    }
  }
  return neg;
}

StateBasis density_basis(std::size_t d) {
  if (d == 0) {
    throw DimensionError("basis dimension must be at least 1");
  }
  const auto layout = SubsystemLayout::single("B", d);
  const auto n = static_cast<Eigen::Index>(d);
  const Complex i_unit(0.0, 1.0);
  StateBasis basis;
  basis.elements.reserve(d * d);
  for (Eigen::Index i = 0; i < n; ++i) {
    basis.elements.push_back(
        DensityMatrix::basis_state(static_cast<std::size_t>(i), layout));
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      ComplexVector v = ComplexVector::Zero(n);
      v(i) = 1.0;
      v(j) = 1.0;
      basis.elements.push_back(DensityMatrix::pure(v / std::sqrt(2.0), layout));
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      ComplexVector v = ComplexVector::Zero(n);
      v(i) = 1.0;
      v(j) = i_unit;
      basis.elements.push_back(DensityMatrix::pure(v / std::sqrt(2.0), layout));
    }
  }
  if (basis_independence(basis) <= 1e-8) {
    throw NumericError("density basis is not linearly independent");
  }
  return basis;
}

double basis_independence(const StateBasis &basis) {
  if (basis.elements.empty()) {
    return 0.0;
  }
  const auto n = basis.elements.front().matrix().size();
  Eigen::MatrixXcd stacked(n, static_cast<Eigen::Index>(basis.elements.size()));
  for (std::size_t k = 0; k < basis.elements.size(); ++k) {
    const auto &m = basis.elements[k].matrix();
    stacked.col(static_cast<Eigen::Index>(k)) =
        Eigen::Map<const Eigen::VectorXcd>(m.data(), n);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked);
  return svd.singularValues().minCoeff();
}

std::vector<ComplexVector> teleportation_vectors(std::size_t d) {
  if (d < 2) {
    throw DimensionError("teleportation basis needs d >= 2");
  }
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<ComplexVector> out;
  out.reserve(d * d);
  for (std::size_t n = 0; n < d; ++n) {
    for (std::size_t m = 0; m < d; ++m) {
      ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(d * d));
      for (std::size_t j = 0; j < d; ++j) {
        const double phase = 2.0 * std::numbers::pi * static_cast<double>(j * n) /
                             static_cast<double>(d);
        v(static_cast<Eigen::Index>(j * d + (j + m) % d)) =
            std::polar(norm, phase);
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<DensityMatrix> teleportation_basis(std::size_t d) {
  const auto layout = SubsystemLayout::bipartite(d, d);
  std::vector<DensityMatrix> out;
  for (const auto &v : teleportation_vectors(d)) {
    out.push_back(DensityMatrix::pure(v, layout));
  }
  return out;
}

ComplexMatrix entropy_maximizing_unitary(const DensityMatrix &rho) {
  const auto &layout = rho.layout();
  if (layout.size() != 2 || layout.dims()[0] != layout.dims()[1]) {
    throw DimensionError("entropy-maximizing unitary needs two subsystems of "
                         "equal dimension, got " +
                         to_string(layout));
  }
  const auto psi = teleportation_vectors(layout.dims()[0]);
  const auto eig = hermitian_eig(rho.matrix());
  const auto n = static_cast<Eigen::Index>(rho.dim());
  ComplexMatrix u = ComplexMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    u += psi[static_cast<std::size_t>(k)] * eig.vectors.col(k).adjoint();
  }
  return u;
}

DensityMatrix conjugate(const DensityMatrix &rho, const ComplexMatrix &u) {
  require_shape(u, rho.layout());
  return DensityMatrix(u * rho.matrix() * u.adjoint(), rho.layout(),
                       kChannelOutputTolerance);
}

DensityMatrix random_state(const SubsystemLayout &layout, std::size_t rank,
                           std::uint64_t seed) {
  const auto d = layout.total_dim();
  if (rank < 1 || rank > d) {
    throw ArgumentError("rank must lie in [1, " + std::to_string(d) +
                        "], got " + std::to_string(rank));
  }
  Rng rng(seed);
  // Columns of g are the ancilla components of a Gaussian vector on
  // layout (x) ancilla; g g^dagger / |g|^2 is its reduced state.
  const ComplexMatrix g = ginibre(d, rank, rng);
  const ComplexMatrix rho = g * g.adjoint() / g.squaredNorm();
  return DensityMatrix(rho, layout);
}

ComplexVector maximally_entangled_vector(std::size_t d) {
  if (d == 0) {
    throw DimensionError("dimension must be positive");
  }
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(d * d));
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) {
    v(static_cast<Eigen::Index>(i * d + i)) = amp;
  }
  return v;
}

DensityMatrix isotropic_family(double p, std::size_t d) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ArgumentError("isotropic parameter must lie in [0, 1], got " +
                        std::to_string(p));
  }
  const auto phi = maximally_entangled_vector(d);
  const auto dd = static_cast<double>(d * d);
  ComplexMatrix op =
      p * (phi * phi.adjoint()) + (1.0 - p) * identity(d * d) / dd;
  return DensityMatrix(std::move(op), SubsystemLayout::bipartite(d, d));
}

} // namespace aunital
