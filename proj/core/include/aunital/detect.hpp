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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aunital/channels.hpp"
#include "aunital/states.hpp"

namespace aunital {

inline constexpr double kDetectionTolerance = 1e-8;
inline constexpr double kAcvennTolerance = 1e-9;
// Minimum conditional-entropy drop counted by the sampling falsifier.
inline constexpr double kCveDecreaseMargin = 1e-8;

struct ProbeDeviation {
  std::size_t probe = 0;
  double deviation = 0.0; // Frobenius norm
};

// Outcome of a probe-based detector. verdict == (max_deviation <=
// tolerance_used); per_probe is sorted by probe index.
struct DetectionReport {
  bool verdict = false;
  double max_deviation = 0.0;
  std::vector<ProbeDeviation> per_probe;
  double tolerance_used = kDetectionTolerance;
};

// Side labelled "A" in a bipartite cut. Two-subsystem layouts use the first
// subsystem; layouts with 2k subsystems use the first k, which matches the
// canonical [A', A, B', B] order of extended channels.
LabelList default_a_side(const SubsystemLayout &layout);

// Probes I_A/d_A (x) beta_i for each beta_i of density_basis(d_B) and
// reports ||tau_i - I_A/d_A (x) Tr_A tau_i||_F for tau_i = N(probe_i).
// The d_B^2 probes are necessary and sufficient by linearity.
DetectionReport is_a_unital(const KrausChannel &ch,
                            double tol = kDetectionTolerance,
                            const LabelList &a_labels = {});

// Mirror of is_a_unital with the roles of A and B exchanged.
DetectionReport is_b_unital(const KrausChannel &ch,
                            double tol = kDetectionTolerance,
                            const LabelList &a_labels = {});

// Single probe: ||N(I/d) - I/d||_F.
DetectionReport is_unital(const KrausChannel &ch,
                          double tol = kDetectionTolerance);

// Conditional entropy stays nonnegative under every global unitary iff
// S(rho) >= log2 d. Needs d_A == d_B.
bool is_acvenn(const DensityMatrix &rho, double tol = kAcvennTolerance,
               const LabelList &a_labels = {});

// The A-unitality probe inputs I_A/d_A (x) beta_i, in layout order.
std::vector<DensityMatrix> a_unital_probes(const SubsystemLayout &layout,
                                           const LabelList &a_labels = {});

struct CveDecrease {
  DensityMatrix state;
  double cve_in = 0.0;
  double cve_out = 0.0;
};

// Searches for rho with CVE(N(rho)) < CVE(rho) - 1e-8. Candidates are the
// maximally mixed state, then the A-unitality probe inputs, then `samples`
// random states of cycling rank. Absence is not a proof of freeness; that
// comes from is_a_unital.
std::optional<CveDecrease> find_cve_decrease(const KrausChannel &ch,
                                             std::size_t samples,
                                             std::uint64_t seed,
                                             const LabelList &a_labels = {});

// Largest CVE drop among the probe inputs I_A/d_A (x) beta_i (each has
// CVE = log2 d_A). Certified: present whenever the channel is not A-unital
// by more than rounding.
std::optional<CveDecrease> probe_cve_decrease(const KrausChannel &ch,
                                              const LabelList &a_labels = {});

// Input sigma_{A'B'} (x) rho_AB with CVE >= 0 that id (x) N maps to CVE < 0.
struct ResourceWitness {
  DensityMatrix input_state;  // on [A', A, B', B]
  DensityMatrix output_state; // (id (x) N)(input_state)
  double input_cve = 0.0;
  double output_cve = 0.0;
  double sigma_parameter = 0.0; // isotropic mixing weight of sigma
  double sigma_cve = 0.0;
  std::string channel_ref;
};

// Builds the witness from a decrease cve_in -> cve_out exhibited on rho:
// sigma is the isotropic state (d' = d) whose CVE is the midpoint of
// [-cve_in, -cve_out], found by bisection.
ResourceWitness build_resource_witness(const KrausChannel &ch,
                                       const DensityMatrix &rho, double cve_in,
                                       double cve_out,
                                       std::string channel_ref = "channel");

} // namespace aunital
