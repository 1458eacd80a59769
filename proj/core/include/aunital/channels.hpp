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
#include "aunital/states.hpp"

namespace aunital {

inline constexpr double kChannelTolerance = 1e-9;
// Kraus operators with smaller Frobenius norm are dropped after composition.
inline constexpr double kKrausPruneThreshold = 1e-12;

// N(rho) = sum_i K_i rho K_i^dagger. Each K_i maps in_layout to out_layout.
// Construction checks shapes only; trace preservation is reported by
// validate() so that malformed channels can still be inspected.
class KrausChannel {
public:
  KrausChannel(std::vector<ComplexMatrix> kraus, SubsystemLayout in_layout,
               SubsystemLayout out_layout);

  static KrausChannel identity(const SubsystemLayout &layout);
  static KrausChannel unitary(ComplexMatrix u, const SubsystemLayout &layout);

  const std::vector<ComplexMatrix> &kraus() const noexcept { return kraus_; }
  const SubsystemLayout &in_layout() const noexcept { return in_; }
  const SubsystemLayout &out_layout() const noexcept { return out_; }
  bool is_square() const noexcept { return in_ == out_; }

private:
  std::vector<ComplexMatrix> kraus_;
  SubsystemLayout in_;
  SubsystemLayout out_;
};

struct ChannelValidation {
  bool trace_preserving = false;
  bool completely_positive = false;
  double tp_deviation = 0.0;        // max-abs of sum K^dagger K - I
  double choi_min_eigenvalue = 0.0;
  double tolerance = kChannelTolerance;

  bool valid() const noexcept {
    return trace_preserving && completely_positive;
  }
};

ChannelValidation validate(const KrausChannel &ch,
                           double tol = kChannelTolerance);

DensityMatrix apply(const KrausChannel &ch, const DensityMatrix &rho);

// Linear action on an arbitrary operator of the input space.
ComplexMatrix apply_operator(const KrausChannel &ch, const ComplexMatrix &x);

// Unnormalized Choi operator J = sum_ij |i><j| (x) N(|i><j|), input factor
// first. Construction enforces complete positivity and trace preservation.
class ChoiMatrix {
public:
  ChoiMatrix(ComplexMatrix op, SubsystemLayout in_layout,
             SubsystemLayout out_layout, double tol = kChannelTolerance);

  const ComplexMatrix &matrix() const noexcept { return op_; }
  const SubsystemLayout &in_layout() const noexcept { return in_; }
  const SubsystemLayout &out_layout() const noexcept { return out_; }

private:
  ComplexMatrix op_;
  SubsystemLayout in_;
  SubsystemLayout out_;
};

ChoiMatrix to_choi(const KrausChannel &ch);
DensityMatrix choi_apply(const ChoiMatrix &choi, const DensityMatrix &rho);
// Canonical Kraus operators from the Choi eigendecomposition.
KrausChannel choi_to_kraus(const ChoiMatrix &choi);

// m after n: Kraus set {M_i N_j}.
KrausChannel compose_serial(const KrausChannel &m, const KrausChannel &n,
                            bool prune = true);

// m (x) n on the concatenated layouts (Kronecker order, m's factors first).
KrausChannel tensor_channels(const KrausChannel &m, const KrausChannel &n);

// Same channel with input and output factors reordered.
KrausChannel reorder_channel(const KrausChannel &ch, const LabelList &in_order,
                             const LabelList &out_order);

// id_{A'B'} (x) N on the canonical order [A', A, B', B], where N acts on the
// two-subsystem layout [A, B]. The auxiliary labels are the channel's labels
// with a trailing prime.
KrausChannel extend_with_identity(const KrausChannel &n, std::size_t aux_a_dim,
                                  std::size_t aux_b_dim);

// sum_k w_k N_k via the Kraus set {sqrt(w_k) K_i^(k)}.
KrausChannel convex_mix(const std::vector<KrausChannel> &channels,
                        const std::vector<double> &weights);

// Stinespring sampling: the first d columns of a Haar unitary on
// d * env_dim, cut into env_dim blocks of d rows.
KrausChannel random_channel(const SubsystemLayout &layout, std::size_t env_dim,
                            std::uint64_t seed);

// Uniform-weight mixture of `count` Haar unitaries; always unital.
KrausChannel random_mixed_unitary_channel(const SubsystemLayout &layout,
                                          std::size_t count,
                                          std::uint64_t seed);

} // namespace aunital
