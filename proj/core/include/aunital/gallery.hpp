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

#include <map>
#include <string>
#include <vector>

#include "aunital/channels.hpp"
#include "aunital/states.hpp"

namespace aunital {

inline constexpr std::size_t kGalleryMaxDimension = 8;

// Sw: single Kraus operator U_s = sum_ij |ji><ij| on [A, B].
KrausChannel swap_channel(std::size_t d);

// Tr_A on [A, B] -> [B], Kraus operators <i|_A (x) I_B.
KrausChannel partial_trace_channel(std::size_t d);

// Pr_A on [B] -> [A, B], Kraus operators |i>_A (x) I_B / sqrt(d).
KrausChannel prepare_mixed_channel(std::size_t d);

// Swap-and-prepare: Pr_A o Tr_A o Sw. A-unital and unital, but it creates
// entanglement across A'A|B'B when extended, so it is not separable.
KrausChannel swap_and_prepare(std::size_t d);

// Constant channel rho -> rho_A (x) rho_B with Kraus operators
// sqrt(lambda_k) |t_k><j| over the eigenpairs of the target.
KrausChannel replacement_channel(const DensityMatrix &rho_a,
                                 const DensityMatrix &rho_b);

// The replacement channel preparing |00><00|, Kraus |0><i|_A (x) |0><j|_B.
KrausChannel r0_channel(std::size_t d);

// sum_i (K_i (x) L_i) rho (K_i (x) L_i)^dagger with each K_i unitary.
// Throws ArgumentError unless every K_i is unitary and the products are
// trace preserving within 1e-9.
KrausChannel separable_aunital_family(const std::vector<ComplexMatrix> &unitaries,
                                      const std::vector<ComplexMatrix> &ops,
                                      std::size_t d_a, std::size_t d_b);

// Classical-quantum channel on one qudit: rho -> sum_i <i|rho|i> |0><0|,
// Kraus operators |0><i|.
KrausChannel classical_quantum_channel(std::size_t d,
                                       const std::string &label = "A");

// |phi+><phi+|_{A'A} (x) |00><00|_{B'B} on [A', A, B', B].
DensityMatrix chi_state(std::size_t d);

// |phi+><phi+|_{A'B} (x) I_A/d (x) |0><0|_{B'}, the image of chi under the
// extended swap-and-prepare channel, on [A', A, B', B].
DensityMatrix chi_prime_state(std::size_t d);

// A named gallery channel with the detector verdicts it must reproduce.
struct GalleryEntry {
  std::string name;
  KrausChannel channel;
  std::map<std::string, bool> expected; // "a_unital", "b_unital", "unital"
  bool separable_by_construction = false;
  std::string provenance;
};

std::vector<std::string> gallery_names();
GalleryEntry gallery_entry(const std::string &name, std::size_t d = 2);
std::vector<GalleryEntry> gallery_entries(std::size_t d = 2);

// Detector outputs that disagree with the entry's expectations, as
// human-readable strings; empty when the entry is consistent.
std::vector<std::string> verify_entry(const GalleryEntry &entry);

} // namespace aunital
