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

#include <cstdint>
#include <vector>

#include "aunital/linalg.hpp"

namespace aunital {

// Acceptance thresholds for DensityMatrix. Eigenvalues in
// [min_eigenvalue, 0) are treated as rounding and clamped to zero.
struct StateTolerance {
  double hermitian = 1e-10;
  double trace = 1e-10;
  double min_eigenvalue = -1e-10;
};

// Looser trace tolerance for channel outputs: channels are accepted with
// trace-preservation error up to 1e-9.
inline constexpr StateTolerance kChannelOutputTolerance{1e-9, 1e-9, -1e-9};

// Hermitian, unit-trace, positive semidefinite operator on a layout.
// The spectrum is computed once at construction.
class DensityMatrix {
public:
  DensityMatrix(ComplexMatrix op, SubsystemLayout layout,
                StateTolerance tol = {});

  // |psi><psi| for a unit vector psi.
  static DensityMatrix pure(const ComplexVector &psi, SubsystemLayout layout);
  static DensityMatrix maximally_mixed(SubsystemLayout layout);
  // |k><k| in the computational basis.
  static DensityMatrix basis_state(std::size_t k, SubsystemLayout layout);

  const ComplexMatrix &matrix() const noexcept { return op_; }
  const SubsystemLayout &layout() const noexcept { return layout_; }
  std::size_t dim() const noexcept { return layout_.total_dim(); }

  // Eigenvalues, descending, with rounding-level negatives clamped to 0.
  const std::vector<double> &spectrum() const noexcept { return spectrum_; }

private:
  ComplexMatrix op_;
  SubsystemLayout layout_;
  std::vector<double> spectrum_;
};

// rho (x) sigma on the concatenated layout.
DensityMatrix product(const DensityMatrix &rho, const DensityMatrix &sigma);

// Reduced state on `keep` (layout order preserved).
DensityMatrix marginal(const DensityMatrix &rho, const LabelList &keep);

// Same state with its tensor factors reordered.
DensityMatrix reorder(const DensityMatrix &rho, const LabelList &new_order);

// -sum p log2 p with 0 log 0 = 0.
double shannon_entropy(const std::vector<double> &probabilities);

// Von Neumann entropy in bits.
double von_neumann_entropy(const DensityMatrix &rho);

// S(rho) - S(rho_B), B being the complement of a_labels.
double conditional_entropy(const DensityMatrix &rho, const LabelList &a_labels);

// Quantum relative entropy in bits; +infinity when the support of rho is not
// contained in the support of sigma.
double relative_entropy(const DensityMatrix &rho, const DensityMatrix &sigma);

// Sum of |negative eigenvalues| of the partial transpose on `cut`.
double negativity(const DensityMatrix &rho, const LabelList &cut);

// d^2 density matrices spanning the Hermitian operators on C^d.
struct StateBasis {
  std::vector<DensityMatrix> elements;
};

StateBasis density_basis(std::size_t d);

// Smallest singular value of the stacked vectorizations of the basis.
double basis_independence(const StateBasis &basis);

// The d^2 maximally entangled vectors
//   |psi_nm> = sum_j exp(2 pi i j n / d) |j> |(j + m) mod d> / sqrt(d),
// ordered with index n * d + m.
std::vector<ComplexVector> teleportation_vectors(std::size_t d);
std::vector<DensityMatrix> teleportation_basis(std::size_t d);

// Unitary U = sum_k |psi_k><gamma_k| sending the eigenbasis {gamma_k} of a
// two-qudit state onto the teleportation basis, so that the rotated state has
// maximally mixed B-marginal.
ComplexMatrix entropy_maximizing_unitary(const DensityMatrix &rho);

// U rho U^dagger on the same layout.
DensityMatrix conjugate(const DensityMatrix &rho, const ComplexMatrix &u);

// Random state of the given rank: a Haar pure state on the layout plus a
// rank-dimensional ancilla, with the ancilla traced out. rank == 1 gives
// Haar-random pure states; rank == dim gives Hilbert-Schmidt random states.
DensityMatrix random_state(const SubsystemLayout &layout, std::size_t rank,
                           std::uint64_t seed);

// |phi+> = sum_i |ii> / sqrt(d).
ComplexVector maximally_entangled_vector(std::size_t d);

// p |phi+><phi+| + (1 - p) I / d^2 on [A, B].
DensityMatrix isotropic_family(double p, std::size_t d);

} // namespace aunital
