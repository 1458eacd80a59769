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

#include <cmath>

#include <catch2/catch.hpp>

#include "aunital/bounds.hpp"
#include "aunital/detect.hpp"
#include "aunital/errors.hpp"
#include "aunital/gallery.hpp"
#include "aunital/random.hpp"

using namespace aunital;

namespace {

const SubsystemLayout kQubits = SubsystemLayout::bipartite(2, 2);

void check_report_shape(const DetectionReport &r, std::size_t probes) {
  CHECK(r.per_probe.size() == probes);
  CHECK(r.verdict == (r.max_deviation <= r.tolerance_used));
  for (std::size_t k = 0; k < r.per_probe.size(); ++k) {
    CHECK(r.per_probe[k].probe == k);
    CHECK(r.per_probe[k].deviation <= r.max_deviation);
  }
}

// id_A (x) Phi_B with Phi a random qubit channel: A-unital by construction.
KrausChannel a_unital_random(std::size_t d, std::uint64_t seed) {
  const auto phi = random_channel(SubsystemLayout::single("B", d), 2, seed);
  return tensor_channels(KrausChannel::identity(SubsystemLayout::single("A", d)),
                         phi);
}

} // namespace

TEST_CASE("default A side", "[detect]") {
  CHECK(default_a_side(kQubits) == LabelList{"A"});
  CHECK(default_a_side(SubsystemLayout({"A'", "A", "B'", "B"}, {2, 2, 2, 2})) ==
        LabelList{"A'", "A"});
  CHECK_THROWS_AS(default_a_side(SubsystemLayout::single("A", 2)), LabelError);
}

TEST_CASE("is_a_unital on reference channels", "[detect][aunital]") {
  const auto id = is_a_unital(KrausChannel::identity(kQubits));
  CHECK(id.verdict);
  CHECK(id.max_deviation == Approx(0.0).margin(1e-15));
  check_report_shape(id, 4);

  const auto sp = is_a_unital(swap_and_prepare(2));
  CHECK(sp.verdict);
  CHECK(sp.max_deviation < 1e-10);

  const auto r0 = is_a_unital(r0_channel(2));
  CHECK_FALSE(r0.verdict);
  check_report_shape(r0, 4);
  for (const auto &p : r0.per_probe) {
    CHECK(p.deviation > 0.1);
  }

  CHECK_FALSE(is_a_unital(swap_channel(2)).verdict);
  check_report_shape(is_a_unital(swap_and_prepare(3)), 9);
}

TEST_CASE("is_b_unital mirrors is_a_unital", "[detect][bunital]") {
  CHECK(is_b_unital(KrausChannel::identity(kQubits)).verdict);
  for (std::size_t d : {2u, 3u}) {
    const auto sw = swap_channel(d);
    const auto conj = compose_serial(sw, compose_serial(swap_and_prepare(d), sw));
    CHECK(is_b_unital(conj).verdict);
    CHECK_FALSE(is_a_unital(conj).verdict);
    CHECK_FALSE(is_b_unital(swap_and_prepare(d)).verdict);
  }
  const auto m_id = tensor_channels(classical_quantum_channel(2, "A"),
                                    KrausChannel::identity(
                                        SubsystemLayout::single("B", 2)));
  CHECK(is_b_unital(m_id).verdict);
  CHECK_FALSE(is_a_unital(m_id).verdict);
}

TEST_CASE("is_unital", "[detect][unital]") {
  Rng rng(4);
  const auto u = KrausChannel::unitary(haar_unitary(4, rng), kQubits);
  CHECK(is_unital(u).verdict);
  check_report_shape(is_unital(u), 1);
  CHECK_FALSE(is_unital(r0_channel(2)).verdict);
  CHECK(is_unital(swap_and_prepare(2)).verdict);
}

TEST_CASE("detector argument errors", "[detect][errors]") {
  CHECK_THROWS_AS(is_a_unital(partial_trace_channel(2)), UnsupportedError);
  CHECK_THROWS_AS(is_unital(prepare_mixed_channel(2)), UnsupportedError);
  CHECK_THROWS_AS(is_a_unital(KrausChannel::identity(kQubits), 0.0),
                  ArgumentError);
  CHECK_THROWS_AS(is_a_unital(KrausChannel::identity(kQubits), 1e-8, {"C"}),
                  LabelError);
}

TEST_CASE("tolerance is honoured", "[detect]") {
  // Mix a small amount of R0 into the identity: deviation grows linearly.
  const auto ch = convex_mix({KrausChannel::identity(kQubits), r0_channel(2)},
                             {1.0 - 1e-6, 1e-6});
  const auto strict = is_a_unital(ch, 1e-8);
  CHECK_FALSE(strict.verdict);
  const auto loose = is_a_unital(ch, 1e-3);
  CHECK(loose.verdict);
  CHECK(loose.tolerance_used == 1e-3);
  CHECK(strict.max_deviation == Approx(loose.max_deviation));
}

TEST_CASE("detectors on extended channels", "[detect][extend]") {
  const auto ext = extend_with_identity(swap_and_prepare(2), 2, 2);
  CHECK(is_a_unital(ext).verdict);
  CHECK_FALSE(is_a_unital(extend_with_identity(r0_channel(2), 2, 2)).verdict);
  // Parallel concatenation of A'-unital and A-unital channels.
  const auto par = tensor_channels(
      swap_and_prepare(2),
      KrausChannel::identity(SubsystemLayout({"C", "D"}, {2, 2})));
  const auto canon = reorder_channel(par, {"A", "C", "B", "D"},
                                     {"A", "C", "B", "D"});
  CHECK(is_a_unital(canon).verdict);
}

TEST_CASE("A-unital verdict holds beyond the probes", "[detect][property]") {
  Rng rng(2024);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto ch = convex_mix({a_unital_random(2, seed), swap_and_prepare(2)},
                               {0.6, 0.4});
    const auto report = is_a_unital(ch);
    REQUIRE(report.verdict);
    for (int k = 0; k < 100; ++k) {
      const ComplexMatrix g = ginibre(2, 2, rng);
      ComplexMatrix sigma = g * g.adjoint();
      sigma /= sigma.trace();
      const DensityMatrix in(tensor(identity(2) / 2.0, sigma), kQubits);
      const auto out = apply(ch, in);
      const ComplexMatrix ref = tensor(
          identity(2) / 2.0, partial_trace(out.matrix(), kQubits, {"A"}));
      CHECK((out.matrix() - ref).norm() <= 10.0 * report.tolerance_used);
    }
  }
}

TEST_CASE("closure under composition and mixtures", "[detect][property]") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto a = a_unital_random(2, seed);
    const auto b = a_unital_random(2, seed + 50);
    const auto sp = swap_and_prepare(2);
    CHECK(is_a_unital(compose_serial(a, sp)).verdict);
    CHECK(is_a_unital(compose_serial(sp, b)).verdict);
    CHECK(is_a_unital(convex_mix({a, b, sp}, {0.2, 0.3, 0.5})).verdict);
    const auto par = tensor_channels(
        a, KrausChannel::identity(SubsystemLayout({"C", "D"}, {2, 2})));
    CHECK(is_a_unital(reorder_channel(par, {"A", "C", "B", "D"},
                                      {"A", "C", "B", "D"}))
              .verdict);
  }
}

TEST_CASE("is_acvenn", "[detect][acvenn]") {
  CHECK(is_acvenn(DensityMatrix::maximally_mixed(kQubits)));
  CHECK_FALSE(is_acvenn(isotropic_family(1.0, 2)));
  for (std::size_t d : {2u, 3u}) {
    const double logd = std::log2(static_cast<double>(d));
    const double p = bisect_entropy(
        [d](double q) { return isotropic_family(q, d); }, logd, 1e-12);
    const auto boundary = isotropic_family(p, d);
    CHECK(std::abs(von_neumann_entropy(boundary) - logd) < 1e-8);
    CHECK(is_acvenn(boundary, 1e-8));
    CHECK(is_acvenn(isotropic_family(p - 1e-6, d)));
    CHECK_FALSE(is_acvenn(isotropic_family(std::min(1.0, p + 1e-3), d)));
  }
  CHECK_THROWS_AS(
      is_acvenn(DensityMatrix::maximally_mixed(SubsystemLayout::bipartite(2, 3))),
      UnsupportedError);
}

TEST_CASE("find_cve_decrease", "[detect][falsifier]") {
  CHECK_FALSE(find_cve_decrease(KrausChannel::identity(kQubits), 200, 1));
  const auto hit = find_cve_decrease(r0_channel(2), 10, 1);
  REQUIRE(hit);
  CHECK(hit->cve_in == Approx(1.0).margin(1e-12));
  CHECK(hit->cve_out == Approx(0.0).margin(1e-12));
  CHECK((hit->state.matrix() - identity(4) / 4.0).norm() < 1e-15);

  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto ch = a_unital_random(2, seed);
    REQUIRE(is_a_unital(ch).verdict);
    CHECK_FALSE(find_cve_decrease(ch, 500, seed));
  }
  CHECK_FALSE(find_cve_decrease(swap_and_prepare(2), 500, 5));
}

TEST_CASE("probe decrease certifies non-A-unital channels", "[detect][falsifier]") {
  for (std::size_t d : {2u, 3u}) {
    const auto layout = SubsystemLayout::bipartite(d, d);
    const double logd = std::log2(static_cast<double>(d));
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto ch = random_channel(layout, 1 + seed % 3, seed);
      if (is_a_unital(ch).verdict) {
        continue;
      }
      ++checked;
      const auto dec = probe_cve_decrease(ch);
      REQUIRE(dec);
      CHECK(dec->cve_in == Approx(logd).margin(1e-9));
      CHECK(dec->cve_out < logd - 1e-8);
    }
    CHECK(checked > 0);
    CHECK_FALSE(probe_cve_decrease(swap_and_prepare(d)));
  }
}

TEST_CASE("resource witness for R0", "[detect][witness]") {
  const auto rho = DensityMatrix::maximally_mixed(kQubits);
  const auto w = build_resource_witness(r0_channel(2), rho, 1.0, 0.0, "r0");
  CHECK(w.input_cve == Approx(0.5).margin(1e-6));
  CHECK(w.output_cve == Approx(-0.5).margin(1e-6));
  CHECK(w.sigma_cve == Approx(-0.5).margin(1e-6));
  CHECK(w.channel_ref == "r0");
  CHECK(w.input_state.layout().names() == LabelList{"A'", "A", "B'", "B"});
  // Independent re-evaluation of the witness.
  const auto out = apply(extend_with_identity(r0_channel(2), 2, 2), w.input_state);
  CHECK((out.matrix() - w.output_state.matrix()).norm() < 1e-12);
  CHECK(conditional_entropy(w.input_state, {"A'", "A"}) >= -1e-9);
  CHECK(conditional_entropy(out, {"A'", "A"}) < -1e-9);
  CHECK_FALSE(is_acvenn(marginal(out, {"A'", "B'"})));

  CHECK_THROWS_AS(build_resource_witness(r0_channel(2), rho, 1.0, 1.0),
                  ArgumentError);
  CHECK_THROWS_AS(build_resource_witness(r0_channel(2), rho, 0.0, 1.0),
                  ArgumentError);
}

TEST_CASE("witnesses for random non-A-unital channels", "[detect][witness]") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto ch = random_channel(kQubits, 2, seed);
    const auto dec = probe_cve_decrease(ch);
    if (!dec) {
      continue;
    }
    const auto w =
        build_resource_witness(ch, dec->state, dec->cve_in, dec->cve_out);
    CHECK(w.input_cve >= -1e-9);
    CHECK(w.output_cve < -1e-9);
  }
}

TEST_CASE("unital channels do not lower entropy", "[detect][property]") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto ch = random_mixed_unitary_channel(kQubits, 3, seed);
    REQUIRE(is_unital(ch).verdict);
    for (std::uint64_t k = 0; k < 40; ++k) {
      const auto rho = random_state(kQubits, 1 + k % 4, 100 * seed + k);
      CHECK(von_neumann_entropy(apply(ch, rho)) >=
            von_neumann_entropy(rho) - 1e-8);
    }
  }
}
