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

#include "aunital/gallery.hpp"

#include <cmath>
#include <numbers>

#include "aunital/detect.hpp"
#include "aunital/errors.hpp"

namespace aunital {

namespace {

Eigen::Index as_index(std::size_t n) { return static_cast<Eigen::Index>(n); }

void require_gallery_dim(std::size_t d, std::size_t min_d) {
  if (d < min_d || d > kGalleryMaxDimension) {
    throw DimensionError("gallery dimension must lie in [" +
                         std::to_string(min_d) + ", " +
                         std::to_string(kGalleryMaxDimension) + "], got " +
                         std::to_string(d));
  }
}

ComplexMatrix ket_bra(std::size_t d, std::size_t row, std::size_t col) {
  ComplexMatrix m = ComplexMatrix::Zero(as_index(d), as_index(d));
  m(as_index(row), as_index(col)) = 1.0;
  return m;
}

// Generalized Pauli X^shift Z^clock.
ComplexMatrix weyl(std::size_t d, std::size_t shift, std::size_t clock) {
  ComplexMatrix m = ComplexMatrix::Zero(as_index(d), as_index(d));
  for (std::size_t j = 0; j < d; ++j) {
    const double phase = 2.0 * std::numbers::pi *
                         static_cast<double>(clock * j) /
                         static_cast<double>(d);
    m(as_index((j + shift) % d), as_index(j)) = std::polar(1.0, phase);
  }
  return m;
}

KrausChannel swap_conjugated_sp(std::size_t d) {
  const auto sw = swap_channel(d);
  return compose_serial(sw, compose_serial(swap_and_prepare(d), sw));
}

KrausChannel replacement_mixed(std::size_t d) {
  return replacement_channel(
      DensityMatrix::maximally_mixed(SubsystemLayout::single("A", d)),
      DensityMatrix::basis_state(0, SubsystemLayout::single("B", d)));
}

KrausChannel example_separable_family(std::size_t d) {
  // K_0 = I with L_0 = I / sqrt(2); K_{j+1} = X^j Z with
  // L_{j+1} = |0><j| / sqrt(2). sum L^dagger L = I.
  std::vector<ComplexMatrix> ks{identity(d)};
  std::vector<ComplexMatrix> ls{identity(d) / std::sqrt(2.0)};
  for (std::size_t j = 0; j < d; ++j) {
    ks.push_back(weyl(d, j, 1));
    ls.push_back(ket_bra(d, 0, j) / std::sqrt(2.0));
  }
  return separable_aunital_family(ks, ls, d, d);
}

} // namespace

KrausChannel swap_channel(std::size_t d) {
  require_gallery_dim(d, 1);
  const auto layout = SubsystemLayout::bipartite(d, d);
  ComplexMatrix u = ComplexMatrix::Zero(as_index(d * d), as_index(d * d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      u(as_index(j * d + i), as_index(i * d + j)) = 1.0;
    }
  }
  return KrausChannel::unitary(std::move(u), layout);
}

KrausChannel partial_trace_channel(std::size_t d) {
  require_gallery_dim(d, 1);
  std::vector<ComplexMatrix> kraus;
  for (std::size_t i = 0; i < d; ++i) {
    ComplexMatrix bra = ComplexMatrix::Zero(1, as_index(d));
    bra(0, as_index(i)) = 1.0;
    kraus.push_back(tensor(bra, identity(d)));
  }
  return KrausChannel(std::move(kraus), SubsystemLayout::bipartite(d, d),
                      SubsystemLayout::single("B", d));
}

KrausChannel prepare_mixed_channel(std::size_t d) {
  require_gallery_dim(d, 1);
  std::vector<ComplexMatrix> kraus;
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) {
    ComplexMatrix ket = ComplexMatrix::Zero(as_index(d), 1);
    ket(as_index(i), 0) = s;
    kraus.push_back(tensor(ket, identity(d)));
  }
  return KrausChannel(std::move(kraus), SubsystemLayout::single("B", d),
                      SubsystemLayout::bipartite(d, d));
}

KrausChannel swap_and_prepare(std::size_t d) {
  require_gallery_dim(d, 2);
  return compose_serial(prepare_mixed_channel(d),
                        compose_serial(partial_trace_channel(d),
                                       swap_channel(d)));
}

KrausChannel replacement_channel(const DensityMatrix &rho_a,
                                 const DensityMatrix &rho_b) {
  if (rho_a.layout().size() != 1 || rho_b.layout().size() != 1) {
    throw ArgumentError("replacement target factors must be single-system "
                        "states");
  }
  const auto d_a = rho_a.dim();
  const auto d_b = rho_b.dim();
  const SubsystemLayout layout({rho_a.layout().names()[0],
                                rho_b.layout().names()[0]},
                               {d_a, d_b});
  const ComplexMatrix target = tensor(rho_a.matrix(), rho_b.matrix());
  const auto eig = hermitian_eig(target);
  const auto n = d_a * d_b;
  std::vector<ComplexMatrix> kraus;
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    if (eig.values[k] <= kKrausPruneThreshold) {
      continue;
    }
    const ComplexVector t = std::sqrt(eig.values[k]) * eig.vectors.col(as_index(k));
    for (std::size_t j = 0; j < n; ++j) {
      ComplexMatrix op = ComplexMatrix::Zero(as_index(n), as_index(n));
      op.col(as_index(j)) = t;
      kraus.push_back(std::move(op));
    }
  }
  return KrausChannel(std::move(kraus), layout, layout);
}

KrausChannel r0_channel(std::size_t d) {
  require_gallery_dim(d, 1);
  std::vector<ComplexMatrix> kraus;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      kraus.push_back(tensor(ket_bra(d, 0, i), ket_bra(d, 0, j)));
    }
  }
  const auto layout = SubsystemLayout::bipartite(d, d);
  return KrausChannel(std::move(kraus), layout, layout);
}

KrausChannel separable_aunital_family(const std::vector<ComplexMatrix> &unitaries,
                                      const std::vector<ComplexMatrix> &ops,
                                      std::size_t d_a, std::size_t d_b) {
  if (unitaries.empty() || unitaries.size() != ops.size()) {
    throw ArgumentError("need one B-side operator per A-side unitary");
  }
  const auto layout = SubsystemLayout::bipartite(d_a, d_b);
  std::vector<ComplexMatrix> kraus;
  for (std::size_t i = 0; i < unitaries.size(); ++i) {
    const auto &k = unitaries[i];
    if (k.rows() != as_index(d_a) || k.cols() != as_index(d_a) ||
        ops[i].rows() != as_index(d_b) || ops[i].cols() != as_index(d_b)) {
      throw ShapeError("operator " + std::to_string(i) +
                       " has the wrong shape");
    }
    if ((k.adjoint() * k - identity(d_a)).cwiseAbs().maxCoeff() > 1e-9) {
      throw ArgumentError("A-side operator " + std::to_string(i) +
                          " is not unitary");
    }
    kraus.push_back(tensor(k, ops[i]));
  }
  KrausChannel ch(std::move(kraus), layout, layout);
  if (!validate(ch).trace_preserving) {
    throw ArgumentError("product Kraus operators are not trace preserving");
  }
  return ch;
}

KrausChannel classical_quantum_channel(std::size_t d, const std::string &label) {
  require_gallery_dim(d, 2);
  std::vector<ComplexMatrix> kraus;
  for (std::size_t i = 0; i < d; ++i) {
    kraus.push_back(ket_bra(d, 0, i));
  }
  const auto layout = SubsystemLayout::single(label, d);
  return KrausChannel(std::move(kraus), layout, layout);
}

DensityMatrix chi_state(std::size_t d) {
  require_gallery_dim(d, 2);
  const DensityMatrix phi(
      DensityMatrix::pure(maximally_entangled_vector(d),
                          SubsystemLayout({"A'", "A"}, {d, d})));
  const auto zero = DensityMatrix::basis_state(
      0, SubsystemLayout({"B'", "B"}, {d, d}));
  return product(phi, zero);
}

DensityMatrix chi_prime_state(std::size_t d) {
  require_gallery_dim(d, 2);
  const auto phi = DensityMatrix::pure(maximally_entangled_vector(d),
                                       SubsystemLayout({"A'", "B"}, {d, d}));
  const auto mixed =
      DensityMatrix::maximally_mixed(SubsystemLayout::single("A", d));
  const auto zero =
      DensityMatrix::basis_state(0, SubsystemLayout::single("B'", d));
  return reorder(product(product(phi, mixed), zero), {"A'", "A", "B'", "B"});
}

std::vector<std::string> gallery_names() {
  return {"identity",          "swap",   "sp",     "sp_conjugated", "r0",
          "replacement_mixed", "id_cq",  "cq_id",  "separable_family"};
}

GalleryEntry gallery_entry(const std::string &name, std::size_t d) {
  require_gallery_dim(d, 2);
  auto make = [](std::string n, KrausChannel ch, bool a, bool b, bool u,
                 bool sep, std::string prov) {
    return GalleryEntry{std::move(n),
                        std::move(ch),
                        {{"a_unital", a}, {"b_unital", b}, {"unital", u}},
                        sep,
                        std::move(prov)};
  };
  const auto layout = SubsystemLayout::bipartite(d, d);
  const auto id_a = KrausChannel::identity(SubsystemLayout::single("A", d));
  const auto id_b = KrausChannel::identity(SubsystemLayout::single("B", d));
  if (name == "identity") {
    return make(name, KrausChannel::identity(layout), true, true, true, true,
                "trivially A-unital and separable");
  }
  if (name == "swap") {
    return make(name, swap_channel(d), false, false, true, false,
                "swap unitary U_s");
  }
  if (name == "sp") {
    return make(name, swap_and_prepare(d), true, false, true, false,
                "swap-and-prepare: A-unital, not separable");
  }
  if (name == "sp_conjugated") {
    return make(name, swap_conjugated_sp(d), false, true, true, false,
                "swap-conjugated swap-and-prepare: B-unital, not A-unital");
  }
  if (name == "r0") {
    return make(name, r0_channel(d), false, false, false, true,
                "replacement channel preparing |00><00|: separable, not "
                "A-unital");
  }
  if (name == "replacement_mixed") {
    return make(name, replacement_mixed(d), true, false, false, true,
                "replacement by I/d (x) |0><0|: A-unital but not unital");
  }
  if (name == "id_cq") {
    return make(name, tensor_channels(id_a, classical_quantum_channel(d, "B")),
                true, false, false, true,
                "id_A (x) entanglement-breaking channel: A-unital and "
                "separable");
  }
  if (name == "cq_id") {
    return make(name, tensor_channels(classical_quantum_channel(d, "A"), id_b),
                false, true, false, true,
                "classical-quantum M_A (x) id_B: separable, not A-unital");
  }
  if (name == "separable_family") {
    return make(name, example_separable_family(d), true, false, false, true,
                "sum (K_i (x) L_i) with unitary K_i: A-unital and separable");
  }
  throw ArgumentError("unknown gallery entry '" + name + "'");
}

std::vector<GalleryEntry> gallery_entries(std::size_t d) {
  std::vector<GalleryEntry> out;
  for (const auto &n : gallery_names()) {
    out.push_back(gallery_entry(n, d));
  }
  return out;
}

std::vector<std::string> verify_entry(const GalleryEntry &entry) {
  std::vector<std::string> problems;
  const auto v = validate(entry.channel);
  if (!v.valid()) {
    problems.push_back(entry.name + ": channel is not CPTP (tp deviation " +
                       std::to_string(v.tp_deviation) + ")");
    return problems;
  }
  auto check = [&](const std::string &key, bool actual) {
    auto it = entry.expected.find(key);
    if (it != entry.expected.end() && it->second != actual) {
      problems.push_back(entry.name + ": expected " + key + " = " +
                         (it->second ? "true" : "false") + ", detector says " +
                         (actual ? "true" : "false"));
    }
  };
  check("a_unital", is_a_unital(entry.channel).verdict);
  check("b_unital", is_b_unital(entry.channel).verdict);
  check("unital", is_unital(entry.channel).verdict);
  return problems;
}

} // namespace aunital
