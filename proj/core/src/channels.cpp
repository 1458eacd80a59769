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

#include "aunital/channels.hpp"

#include <cmath>
#include <numeric>

#include "aunital/errors.hpp"
#include "aunital/random.hpp"

namespace aunital {

namespace {

Eigen::Index as_index(std::size_t n) { return static_cast<Eigen::Index>(n); }

// Raw Choi operator; no validation.
ComplexMatrix choi_operator(const KrausChannel &ch) {
  const auto d_in = as_index(ch.in_layout().total_dim());
  const auto d_out = as_index(ch.out_layout().total_dim());
  ComplexMatrix j = ComplexMatrix::Zero(d_in * d_out, d_in * d_out);
  ComplexVector v(d_in * d_out);
  for (const auto &k : ch.kraus()) {
    for (Eigen::Index i = 0; i < d_in; ++i) {
      for (Eigen::Index o = 0; o < d_out; ++o) {
        v(i * d_out + o) = k(o, i);
      }
    }
    j += v * v.adjoint();
  }
  return j;
}

std::string prime(const std::string &label) { return label + "'"; }

} // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus,
                           SubsystemLayout in_layout,
                           SubsystemLayout out_layout)
    : kraus_(std::move(kraus)), in_(std::move(in_layout)),
      out_(std::move(out_layout)) {
  if (kraus_.empty()) {
    throw ShapeError("a channel needs at least one Kraus operator");
  }
  const auto rows = as_index(out_.total_dim());
  const auto cols = as_index(in_.total_dim());
  for (std::size_t k = 0; k < kraus_.size(); ++k) {
    const auto &op = kraus_[k];
    if (op.rows() != rows || op.cols() != cols) {
      throw ShapeError("Kraus operator " + std::to_string(k) + " is " +
                       std::to_string(op.rows()) + "x" +
                       std::to_string(op.cols()) + ", expected " +
                       std::to_string(rows) + "x" + std::to_string(cols));
    }
    if (!all_finite(op)) {
      throw ShapeError("Kraus operator " + std::to_string(k) +
                       " has non-finite entries");
    }
  }
}

KrausChannel KrausChannel::identity(const SubsystemLayout &layout) {
  return KrausChannel({aunital::identity(layout.total_dim())}, layout, layout);
}

KrausChannel KrausChannel::unitary(ComplexMatrix u,
                                   const SubsystemLayout &layout) {
  return KrausChannel({std::move(u)}, layout, layout);
}

ChannelValidation validate(const KrausChannel &ch, double tol) {
  ChannelValidation report;
  report.tolerance = tol;
  const auto d_in = ch.in_layout().total_dim();
  ComplexMatrix sum = ComplexMatrix::Zero(as_index(d_in), as_index(d_in));
  for (const auto &k : ch.kraus()) {
    sum += k.adjoint() * k;
  }
  report.tp_deviation = (sum - identity(d_in)).cwiseAbs().maxCoeff();
  report.trace_preserving = report.tp_deviation <= tol;
  const auto eig = hermitian_eig(choi_operator(ch), 1e-8);
  report.choi_min_eigenvalue = eig.values.back();
  report.completely_positive = report.choi_min_eigenvalue >= -tol;
  return report;
}

ComplexMatrix apply_operator(const KrausChannel &ch, const ComplexMatrix &x) {
  require_shape(x, ch.in_layout());
  const auto d_out = as_index(ch.out_layout().total_dim());
  ComplexMatrix out = ComplexMatrix::Zero(d_out, d_out);
  for (const auto &k : ch.kraus()) {
    out += k * x * k.adjoint();
  }
  return out;
}

DensityMatrix apply(const KrausChannel &ch, const DensityMatrix &rho) {
  if (rho.layout() != ch.in_layout()) {
    throw ShapeError("state layout " + to_string(rho.layout()) +
                     " does not match channel input " +
                     to_string(ch.in_layout()));
  }
  return DensityMatrix(apply_operator(ch, rho.matrix()), ch.out_layout(),
                       kChannelOutputTolerance);
}

ChoiMatrix::ChoiMatrix(ComplexMatrix op, SubsystemLayout in_layout,
                       SubsystemLayout out_layout, double tol)
    : op_(std::move(op)), in_(std::move(in_layout)),
      out_(std::move(out_layout)) {
  const auto d_in = as_index(in_.total_dim());
  const auto d_out = as_index(out_.total_dim());
  if (op_.rows() != d_in * d_out || op_.cols() != d_in * d_out) {
    throw ShapeError("Choi matrix must be " + std::to_string(d_in * d_out) +
                     " square");
  }
  if (!all_finite(op_)) {
    throw ValidationError("Choi matrix has non-finite entries");
  }
  const double herm = hermitian_deviation(op_);
  if (herm > tol) {
    throw ValidationError("Choi matrix is not Hermitian");
  }
  op_ = (0.5 * (op_ + op_.adjoint())).eval();
  const auto eig = hermitian_eig(op_);
  if (eig.values.back() < -tol) {
    throw ValidationError("Choi matrix is not positive semidefinite (min "
                          "eigenvalue " +
                          std::to_string(eig.values.back()) + ")");
  }
  double tp = 0.0;
  for (Eigen::Index i = 0; i < d_in; ++i) {
    for (Eigen::Index j = 0; j < d_in; ++j) {
      const Complex tr = op_.block(i * d_out, j * d_out, d_out, d_out).trace();
      tp = std::max(tp, std::abs(tr - (i == j ? 1.0 : 0.0)));
    }
  }
  if (tp > tol) {
    throw ValidationError("Choi matrix is not trace preserving (deviation " +
                          std::to_string(tp) + ")");
  }
}

ChoiMatrix to_choi(const KrausChannel &ch) {
  return ChoiMatrix(choi_operator(ch), ch.in_layout(), ch.out_layout());
}

DensityMatrix choi_apply(const ChoiMatrix &choi, const DensityMatrix &rho) {
  if (rho.layout() != choi.in_layout()) {
    throw ShapeError("state layout does not match Choi input layout");
  }
  const auto d_in = as_index(choi.in_layout().total_dim());
  const auto d_out = as_index(choi.out_layout().total_dim());
  // N(rho) = sum_ij rho_ij N(|i><j|), and N(|i><j|) is block (i, j) of J.
  ComplexMatrix out = ComplexMatrix::Zero(d_out, d_out);
  for (Eigen::Index i = 0; i < d_in; ++i) {
    for (Eigen::Index j = 0; j < d_in; ++j) {
      out += rho.matrix()(i, j) *
             choi.matrix().block(i * d_out, j * d_out, d_out, d_out);
    }
  }
  return DensityMatrix(std::move(out), choi.out_layout(),
                       kChannelOutputTolerance);
}

KrausChannel choi_to_kraus(const ChoiMatrix &choi) {
  const auto d_in = as_index(choi.in_layout().total_dim());
  const auto d_out = as_index(choi.out_layout().total_dim());
  const auto eig = hermitian_eig(choi.matrix());
  std::vector<ComplexMatrix> kraus;
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    if (eig.values[k] <= kKrausPruneThreshold) {
      continue;
    }
    const double s = std::sqrt(eig.values[k]);
    ComplexMatrix op(d_out, d_in);
    for (Eigen::Index i = 0; i < d_in; ++i) {
      for (Eigen::Index o = 0; o < d_out; ++o) {
        op(o, i) = s * eig.vectors(i * d_out + o, as_index(k));
      }
    }
    kraus.push_back(std::move(op));
  }
  if (kraus.empty()) {
    throw NumericError("Choi matrix has no positive eigenvalues");
  }
  return KrausChannel(std::move(kraus), choi.in_layout(), choi.out_layout());
}

KrausChannel compose_serial(const KrausChannel &m, const KrausChannel &n,
                            bool prune) {
  if (n.out_layout() != m.in_layout()) {
    throw ShapeError("cannot compose: output " + to_string(n.out_layout()) +
                     " does not match input " + to_string(m.in_layout()));
  }
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(m.kraus().size() * n.kraus().size());
  for (const auto &mk : m.kraus()) {
    for (const auto &nk : n.kraus()) {
      ComplexMatrix op = mk * nk;
      if (prune && op.norm() < kKrausPruneThreshold) {
        continue;
      }
      kraus.push_back(std::move(op));
    }
  }
  if (kraus.empty()) {
    throw NumericError("composition annihilates every input");
  }
  return KrausChannel(std::move(kraus), n.in_layout(), m.out_layout());
}

KrausChannel tensor_channels(const KrausChannel &m, const KrausChannel &n) {
  auto in = m.in_layout().concat(n.in_layout());
  auto out = m.out_layout().concat(n.out_layout());
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(m.kraus().size() * n.kraus().size());
  for (const auto &mk : m.kraus()) {
    for (const auto &nk : n.kraus()) {
      kraus.push_back(tensor(mk, nk));
    }
  }
  return KrausChannel(std::move(kraus), std::move(in), std::move(out));
}

KrausChannel reorder_channel(const KrausChannel &ch, const LabelList &in_order,
                             const LabelList &out_order) {
  const auto p_in = permutation_unitary(ch.in_layout(), in_order);
  const auto p_out = permutation_unitary(ch.out_layout(), out_order);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(ch.kraus().size());
  for (const auto &k : ch.kraus()) {
    kraus.push_back(p_out * k * p_in.adjoint());
  }
  return KrausChannel(std::move(kraus), ch.in_layout().reordered(in_order),
                      ch.out_layout().reordered(out_order));
}

KrausChannel extend_with_identity(const KrausChannel &n, std::size_t aux_a_dim,
                                  std::size_t aux_b_dim) {
  if (aux_a_dim < 1 || aux_b_dim < 1) {
    throw DimensionError("auxiliary dimensions must be at least 1");
  }
  if (n.in_layout().size() != 2 || n.out_layout().size() != 2) {
    throw ShapeError("identity extension needs a channel on two subsystems");
  }
  const auto &in = n.in_layout().names();
  const auto &out = n.out_layout().names();
  const SubsystemLayout aux({prime(in[0]), prime(in[1])},
                            {aux_a_dim, aux_b_dim});
  const auto joint = tensor_channels(KrausChannel::identity(aux), n);
  // [A', B', A, B] -> [A', A, B', B]
  return reorder_channel(joint, {prime(in[0]), in[0], prime(in[1]), in[1]},
                         {prime(in[0]), out[0], prime(in[1]), out[1]});
}

KrausChannel convex_mix(const std::vector<KrausChannel> &channels,
                        const std::vector<double> &weights) {
  if (channels.empty() || channels.size() != weights.size()) {
    throw ArgumentError("need one weight per channel");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw ArgumentError("mixture weights must be nonnegative");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw ArgumentError("mixture weights sum to " + std::to_string(total) +
                        ", expected 1");
  }
  std::vector<ComplexMatrix> kraus;
  for (std::size_t c = 0; c < channels.size(); ++c) {
    if (channels[c].in_layout() != channels.front().in_layout() ||
        channels[c].out_layout() != channels.front().out_layout()) {
      throw ShapeError("mixed channels must share layouts");
    }
    if (weights[c] == 0.0) {
      continue;
    }
    const double s = std::sqrt(weights[c]);
    for (const auto &k : channels[c].kraus()) {
      kraus.push_back(s * k);
    }
  }
  return KrausChannel(std::move(kraus), channels.front().in_layout(),
                      channels.front().out_layout());
}

KrausChannel random_channel(const SubsystemLayout &layout, std::size_t env_dim,
                            std::uint64_t seed) {
  if (env_dim < 1) {
    throw DimensionError("environment dimension must be at least 1");
  }
  const auto d = layout.total_dim();
  if (d > kDefaultMaxDimension / env_dim) {
    throw DimensionError("dilation dimension exceeds cap");
  }
  Rng rng(seed);
  const ComplexMatrix u = haar_unitary(d * env_dim, rng);
  const auto n = as_index(d);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(env_dim);
  for (std::size_t e = 0; e < env_dim; ++e) {
    kraus.push_back(u.block(as_index(e) * n, 0, n, n));
  }
  return KrausChannel(std::move(kraus), layout, layout);
}

KrausChannel random_mixed_unitary_channel(const SubsystemLayout &layout,
                                          std::size_t count,
                                          std::uint64_t seed) {
  if (count < 1) {
    throw ArgumentError("need at least one unitary");
  }
  Rng rng(seed);
  const double s = 1.0 / std::sqrt(static_cast<double>(count));
  std::vector<ComplexMatrix> kraus;
  for (std::size_t k = 0; k < count; ++k) {
    kraus.push_back(s * haar_unitary(layout.total_dim(), rng));
  }
  return KrausChannel(std::move(kraus), layout, layout);
}

} // namespace aunital
