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

#include "aunital/detect.hpp"

#include <algorithm>
#include <cmath>

#include "aunital/bounds.hpp"
#include "aunital/errors.hpp"
#include "aunital/random.hpp"

namespace aunital {

namespace {

void require_square(const KrausChannel &ch, const char *what) {
  if (!ch.is_square()) {
    throw UnsupportedError(std::string(what) +
                           " needs a channel whose input and output layouts "
                           "coincide");
  }
}

LabelList resolve_a_side(const SubsystemLayout &layout,
                         const LabelList &a_labels) {
  if (a_labels.empty()) {
    return default_a_side(layout);
  }
  if (layout.complement(a_labels).empty()) {
    throw LabelError("A side must be a proper subset of the layout");
  }
  return a_labels;
}

// Sorted into layout order.
LabelList in_layout_order(const SubsystemLayout &layout,
                          const LabelList &labels) {
  return layout.select(labels).names();
}

// Probes I_F/d_F (x) beta_i with F = `fixed`, and measures how far each output
// is from I_F/d_F (x) (its marginal on the rest).
DetectionReport mixed_side_report(const KrausChannel &ch,
                                  const LabelList &fixed_labels, double tol) {
  if (!(tol > 0.0)) {
    throw ArgumentError("tolerance must be positive");
  }
  const auto &layout = ch.in_layout();
  const auto fixed = in_layout_order(layout, fixed_labels);
  const auto rest = layout.complement(fixed);
  LabelList order = fixed;
  order.insert(order.end(), rest.begin(), rest.end());
  const auto grouped = layout.reordered(order);

  const auto d_fixed = layout.dim_of(fixed);
  const auto d_rest = layout.dim_of(rest);
  const ComplexMatrix mixed = identity(d_fixed) / static_cast<double>(d_fixed);

  DetectionReport report;
  report.tolerance_used = tol;
  const auto basis = density_basis(d_rest);
  for (std::size_t i = 0; i < basis.elements.size(); ++i) {
    const ComplexMatrix probe = permute_subsystems(
        tensor(mixed, basis.elements[i].matrix()), grouped, layout.names());
    const ComplexMatrix out = apply_operator(ch, probe);
    const ComplexMatrix out_grouped = permute_subsystems(out, layout, order);
    const ComplexMatrix reduced = partial_trace(out_grouped, grouped, fixed);
    const double dev = (out_grouped - tensor(mixed, reduced)).norm();
    report.per_probe.push_back({i, dev});
    report.max_deviation = std::max(report.max_deviation, dev);
  }
  report.verdict = report.max_deviation <= tol;
  return report;
}

double cve_on(const DensityMatrix &rho, const LabelList &a) {
  return conditional_entropy(rho, a);
}

} // namespace

LabelList default_a_side(const SubsystemLayout &layout) {
  const auto n = layout.size();
  if (n < 2 || n % 2 != 0) {
    throw LabelError("cannot infer a bipartition for layout " +
                     to_string(layout) + "; pass the A-side labels");
  }
  return LabelList(layout.names().begin(),
                   layout.names().begin() + static_cast<std::ptrdiff_t>(n / 2));
}

DetectionReport is_a_unital(const KrausChannel &ch, double tol,
                            const LabelList &a_labels) {
  require_square(ch, "A-unitality detection");
  return mixed_side_report(ch, resolve_a_side(ch.in_layout(), a_labels), tol);
}

DetectionReport is_b_unital(const KrausChannel &ch, double tol,
                            const LabelList &a_labels) {
  require_square(ch, "B-unitality detection");
  const auto a = resolve_a_side(ch.in_layout(), a_labels);
  return mixed_side_report(ch, ch.in_layout().complement(a), tol);
}

DetectionReport is_unital(const KrausChannel &ch, double tol) {
  require_square(ch, "unitality detection");
  if (!(tol > 0.0)) {
    throw ArgumentError("tolerance must be positive");
  }
  const auto d = ch.in_layout().total_dim();
  const ComplexMatrix mixed = identity(d) / static_cast<double>(d);
  DetectionReport report;
  report.tolerance_used = tol;
  report.max_deviation = (apply_operator(ch, mixed) - mixed).norm();
  report.per_probe.push_back({0, report.max_deviation});
  report.verdict = report.max_deviation <= tol;
  return report;
}

bool is_acvenn(const DensityMatrix &rho, double tol,
               const LabelList &a_labels) {
  const auto &layout = rho.layout();
  const auto a = resolve_a_side(layout, a_labels);
  const auto d_a = layout.dim_of(a);
  const auto d_b = layout.dim_of(layout.complement(a));
  if (d_a != d_b) {
    throw UnsupportedError("absolute CVE non-negativity is only characterized "
                           "for d_A == d_B");
  }
  return von_neumann_entropy(rho) >=
         std::log2(static_cast<double>(d_a)) - tol;
}

std::vector<DensityMatrix> a_unital_probes(const SubsystemLayout &layout,
                                           const LabelList &a_labels) {
  const auto a = in_layout_order(layout, resolve_a_side(layout, a_labels));
  const auto rest = layout.complement(a);
  LabelList order = a;
  order.insert(order.end(), rest.begin(), rest.end());
  const auto grouped = layout.reordered(order);
  const auto d_a = layout.dim_of(a);
  const ComplexMatrix mixed = identity(d_a) / static_cast<double>(d_a);
  std::vector<DensityMatrix> probes;
  for (const auto &beta : density_basis(layout.dim_of(rest)).elements) {
    probes.emplace_back(permute_subsystems(tensor(mixed, beta.matrix()),
                                           grouped, layout.names()),
                        layout);
  }
  return probes;
}

std::optional<CveDecrease> probe_cve_decrease(const KrausChannel &ch,
                                              const LabelList &a_labels) {
  require_square(ch, "probe CVE search");
  const auto a = resolve_a_side(ch.in_layout(), a_labels);
  std::optional<CveDecrease> best;
  for (auto &probe : a_unital_probes(ch.in_layout(), a)) {
    const double in = cve_on(probe, a);
    const double out = cve_on(apply(ch, probe), a);
    if (out < in - kCveDecreaseMargin &&
        (!best || in - out > best->cve_in - best->cve_out)) {
      best = CveDecrease{std::move(probe), in, out};
    }
  }
  return best;
}

std::optional<CveDecrease> find_cve_decrease(const KrausChannel &ch,
                                             std::size_t samples,
                                             std::uint64_t seed,
                                             const LabelList &a_labels) {
  require_square(ch, "CVE falsification");
  const auto &layout = ch.in_layout();
  const auto a = resolve_a_side(layout, a_labels);

  auto check = [&](const DensityMatrix &rho) -> std::optional<CveDecrease> {
    const double in = cve_on(rho, a);
    const double out = cve_on(apply(ch, rho), a);
    if (out < in - kCveDecreaseMargin) {
      return CveDecrease{rho, in, out};
    }
    return std::nullopt;
  };

  if (auto hit = check(DensityMatrix::maximally_mixed(layout))) {
    return hit;
  }
  for (const auto &probe : a_unital_probes(layout, a)) {
    if (auto hit = check(probe)) {
      return hit;
    }
  }
  Rng seeds(seed);
  const auto d = layout.total_dim();
  for (std::size_t k = 0; k < samples; ++k) {
    const std::size_t rank = 1 + k % d;
    if (auto hit = check(random_state(layout, rank, seeds()))) {
      return hit;
    }
  }
  return std::nullopt;
}

ResourceWitness build_resource_witness(const KrausChannel &ch,
                                       const DensityMatrix &rho, double cve_in,
                                       double cve_out,
                                       std::string channel_ref) {
  if (!(cve_out < cve_in)) {
    throw ArgumentError("a witness needs cve_out < cve_in");
  }
  require_square(ch, "resource witness construction");
  const auto &layout = ch.in_layout();
  if (layout.size() != 2 || layout.dims()[0] != layout.dims()[1]) {
    throw UnsupportedError("resource witnesses are built for two subsystems "
                           "of equal dimension");
  }
  if (rho.layout() != layout) {
    throw ShapeError("witness state does not live on the channel input");
  }
  const auto d = layout.dims()[0];
  const auto &names = layout.names();
  const std::string a_aux = names[0] + "'";
  const std::string b_aux = names[1] + "'";
  const double log_d = std::log2(static_cast<double>(d));

  // CVE(sigma) = S(R(p)) - log d for the isotropic family.
  const double target_cve = -0.5 * (cve_in + cve_out);
  const double p = bisect_entropy(
      [d](double q) { return isotropic_family(q, d); }, target_cve + log_d);
  const DensityMatrix sigma(isotropic_family(p, d).matrix(),
                            SubsystemLayout({a_aux, b_aux}, {d, d}));

  const LabelList canonical{a_aux, names[0], b_aux, names[1]};
  const LabelList a_side{a_aux, names[0]};
  DensityMatrix input = reorder(product(sigma, rho), canonical);
  DensityMatrix output = apply(extend_with_identity(ch, d, d), input);

  ResourceWitness w{std::move(input), std::move(output), 0.0, 0.0, p,
                    conditional_entropy(sigma, {a_aux}), std::move(channel_ref)};
  w.input_cve = conditional_entropy(w.input_state, a_side);
  w.output_cve = conditional_entropy(w.output_state, a_side);
  if (w.input_cve < -1e-9 || w.output_cve >= -1e-9) {
    throw NumericError("witness verification failed: input CVE " +
                       std::to_string(w.input_cve) + ", output CVE " +
                       std::to_string(w.output_cve));
  }
  return w;
}

} // namespace aunital
