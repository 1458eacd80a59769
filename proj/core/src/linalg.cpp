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

#include "aunital/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "aunital/errors.hpp"

namespace aunital {

namespace {

std::vector<std::size_t> strides_of(const std::vector<std::size_t> &dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) {
    strides[k - 1] = strides[k] * dims[k];
  }
  return strides;
}

// Positions (in layout order) of the given labels. Duplicates are an error.
std::vector<std::size_t> positions_of(const SubsystemLayout &layout,
                                      const LabelList &labels) {
  std::set<std::string> seen;
  std::vector<std::size_t> pos;
  pos.reserve(labels.size());
  for (const auto &l : labels) {
    if (!seen.insert(l).second) {
      throw LabelError("duplicate subsystem label '" + l + "'");
    }
    pos.push_back(layout.index_of(l));
  }
  return pos;
}

// Flattened offset of every multi-index over the subsystems `which` (taken
// in the given order), using the full layout's strides.
std::vector<std::size_t> offsets_over(const std::vector<std::size_t> &dims,
                                      const std::vector<std::size_t> &strides,
                                      const std::vector<std::size_t> &which) {
  std::vector<std::size_t> offsets{0};
  for (std::size_t s : which) {
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * dims[s]);
    for (std::size_t base : offsets) {
      for (std::size_t k = 0; k < dims[s]; ++k) {
        next.push_back(base + k * strides[s]);
      }
    }
    offsets = std::move(next);
  }
  return offsets;
}

// For each index of the reordered space, the matching index of the original.
std::vector<std::size_t> permutation_map(const SubsystemLayout &layout,
                                         const LabelList &new_order) {
  if (new_order.size() != layout.size()) {
    throw LabelError("new order has " + std::to_string(new_order.size()) +
                     " labels, layout has " + std::to_string(layout.size()));
  }
  const auto pos = positions_of(layout, new_order);
  const auto strides = strides_of(layout.dims());
  return offsets_over(layout.dims(), strides, pos);
}

} // namespace

SubsystemLayout::SubsystemLayout(LabelList names, std::vector<std::size_t> dims,
                                 std::size_t max_dim)
    : names_(std::move(names)), dims_(std::move(dims)) {
  if (names_.size() != dims_.size()) {
    throw LabelError("layout has " + std::to_string(names_.size()) +
                     " names but " + std::to_string(dims_.size()) + " dims");
  }
  std::set<std::string> seen;
  for (const auto &n : names_) {
    if (n.empty()) {
      throw LabelError("empty subsystem label");
    }
    if (!seen.insert(n).second) {
      throw LabelError("duplicate subsystem label '" + n + "'");
    }
  }
  total_ = 1;
  for (std::size_t d : dims_) {
    if (d == 0) {
      throw DimensionError("subsystem dimension must be positive");
    }
    if (total_ > max_dim / d) {
      throw DimensionError("layout dimension exceeds cap of " +
                           std::to_string(max_dim));
    }
    total_ *= d;
  }
}

SubsystemLayout SubsystemLayout::bipartite(std::size_t d_a, std::size_t d_b) {
  return SubsystemLayout({"A", "B"}, {d_a, d_b});
}

SubsystemLayout SubsystemLayout::single(std::string name, std::size_t d) {
  return SubsystemLayout({std::move(name)}, {d});
}

bool SubsystemLayout::contains(const std::string &label) const noexcept {
  return std::find(names_.begin(), names_.end(), label) != names_.end();
}

std::size_t SubsystemLayout::index_of(const std::string &label) const {
  auto it = std::find(names_.begin(), names_.end(), label);
  if (it == names_.end()) {
    throw LabelError("unknown subsystem label '" + label + "' in layout " +
                     to_string(*this));
  }
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t SubsystemLayout::dim_of(const std::string &label) const {
  return dims_[index_of(label)];
}

std::size_t SubsystemLayout::dim_of(const LabelList &labels) const {
  std::size_t d = 1;
  for (std::size_t p : positions_of(*this, labels)) {
    d *= dims_[p];
  }
  return d;
}

SubsystemLayout SubsystemLayout::select(const LabelList &labels) const {
  auto pos = positions_of(*this, labels);
  std::sort(pos.begin(), pos.end());
  LabelList n;
  std::vector<std::size_t> d;
  for (std::size_t p : pos) {
    n.push_back(names_[p]);
    d.push_back(dims_[p]);
  }
  return SubsystemLayout(std::move(n), std::move(d));
}

SubsystemLayout SubsystemLayout::without(const LabelList &labels) const {
  return select(complement(labels));
}

LabelList SubsystemLayout::complement(const LabelList &labels) const {
  positions_of(*this, labels);
  LabelList rest;
  for (const auto &n : names_) {
    if (std::find(labels.begin(), labels.end(), n) == labels.end()) {
      rest.push_back(n);
    }
  }
  return rest;
}

SubsystemLayout SubsystemLayout::reordered(const LabelList &new_order) const {
  if (new_order.size() != size()) {
    throw LabelError("reordering must list every subsystem exactly once");
  }
  std::vector<std::size_t> d;
  for (std::size_t p : positions_of(*this, new_order)) {
    d.push_back(dims_[p]);
  }
  return SubsystemLayout(new_order, std::move(d));
}

SubsystemLayout SubsystemLayout::concat(const SubsystemLayout &other) const {
  LabelList n = names_;
  n.insert(n.end(), other.names_.begin(), other.names_.end());
  std::vector<std::size_t> d = dims_;
  d.insert(d.end(), other.dims_.begin(), other.dims_.end());
  return SubsystemLayout(std::move(n), std::move(d));
}

std::string to_string(const SubsystemLayout &layout) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < layout.size(); ++k) {
    if (k) {
      os << ", ";
    }
    os << layout.names()[k] << ':' << layout.dims()[k];
  }
  os << ']';
  return os.str();
}

ComplexMatrix identity(std::size_t d) {
  return ComplexMatrix::Identity(static_cast<Eigen::Index>(d),
                                 static_cast<Eigen::Index>(d));
}

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b,
                     std::size_t max_dim) {
  const auto ra = static_cast<std::size_t>(a.rows());
  const auto ca = static_cast<std::size_t>(a.cols());
  const auto rb = static_cast<std::size_t>(b.rows());
  const auto cb = static_cast<std::size_t>(b.cols());
  if ((rb && ra > max_dim / rb) || (cb && ca > max_dim / cb)) {
    throw DimensionError("tensor product dimension exceeds cap of " +
                         std::to_string(max_dim));
  }
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

void require_shape(const ComplexMatrix &m, const SubsystemLayout &layout) {
  const auto d = static_cast<Eigen::Index>(layout.total_dim());
  if (m.rows() != d || m.cols() != d) {
    throw ShapeError("matrix is " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + " but layout " +
                     to_string(layout) + " has dimension " +
                     std::to_string(d));
  }
}

ComplexMatrix partial_trace(const ComplexMatrix &m,
                            const SubsystemLayout &layout,
                            const LabelList &traced) {
  require_shape(m, layout);
  auto traced_pos = positions_of(layout, traced);
  std::sort(traced_pos.begin(), traced_pos.end());
  std::vector<std::size_t> kept_pos;
  for (std::size_t k = 0; k < layout.size(); ++k) {
    if (!std::binary_search(traced_pos.begin(), traced_pos.end(), k)) {
      kept_pos.push_back(k);
    }
  }
  const auto strides = strides_of(layout.dims());
  const auto kept = offsets_over(layout.dims(), strides, kept_pos);
  const auto tr = offsets_over(layout.dims(), strides, traced_pos);

  const auto dk = static_cast<Eigen::Index>(kept.size());
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (Eigen::Index a = 0; a < dk; ++a) {
    for (Eigen::Index b = 0; b < dk; ++b) {
      Complex acc{0.0, 0.0};
      for (std::size_t t : tr) {
        acc += m(static_cast<Eigen::Index>(kept[a] + t),
                 static_cast<Eigen::Index>(kept[b] + t));
      }
      out(a, b) = acc;
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix &m,
                                const SubsystemLayout &layout,
                                const LabelList &transposed) {
  require_shape(m, layout);
  auto t_pos = positions_of(layout, transposed);
  std::sort(t_pos.begin(), t_pos.end());
  std::vector<std::size_t> k_pos;
  for (std::size_t k = 0; k < layout.size(); ++k) {
    if (!std::binary_search(t_pos.begin(), t_pos.end(), k)) {
      k_pos.push_back(k);
    }
  }
  const auto strides = strides_of(layout.dims());
  const auto kept = offsets_over(layout.dims(), strides, k_pos);
  const auto tr = offsets_over(layout.dims(), strides, t_pos);

  // m(k1 + t1, k2 + t2) -> out(k1 + t2, k2 + t1)
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t k1 : kept) {
    for (std::size_t k2 : kept) {
      for (std::size_t t1 : tr) {
        for (std::size_t t2 : tr) {
          out(static_cast<Eigen::Index>(k1 + t2),
              static_cast<Eigen::Index>(k2 + t1)) =
              m(static_cast<Eigen::Index>(k1 + t1),
                static_cast<Eigen::Index>(k2 + t2));
        }
      }
    }
  }
  return out;
}

double hermitian_deviation(const ComplexMatrix &m) {
  if (m.rows() != m.cols()) {
    throw ShapeError("matrix is not square");
  }
  if (m.size() == 0) {
    return 0.0;
  }
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool all_finite(const ComplexMatrix &m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
        return false;
      }
    }
  }
  return true;
}

HermitianEigen hermitian_eig(const ComplexMatrix &m, double tol_herm) {
  if (m.rows() != m.cols()) {
    throw ShapeError("hermitian_eig needs a square matrix");
  }
  if (!all_finite(m)) {
    throw NumericError("matrix has non-finite entries");
  }
  const double dev = hermitian_deviation(m);
  if (dev > tol_herm) {
    throw ShapeError("matrix is not Hermitian (max |m - m^dagger| = " +
                     std::to_string(dev) + ")");
  }
  const Eigen::MatrixXcd sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericError("Hermitian eigensolver did not converge");
  }
  const auto n = sym.rows();
  HermitianEigen out;
  out.values.resize(static_cast<std::size_t>(n));
  out.vectors.resize(n, n);
  // Eigen returns ascending order.
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values[static_cast<std::size_t>(k)] = solver.eigenvalues()(n - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

ComplexMatrix permute_subsystems(const ComplexMatrix &m,
                                 const SubsystemLayout &layout,
                                 const LabelList &new_order) {
  require_shape(m, layout);
  const auto map = permutation_map(layout, new_order);
  const auto d = static_cast<Eigen::Index>(map.size());
  ComplexMatrix out(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      out(i, j) = m(static_cast<Eigen::Index>(map[i]),
                    static_cast<Eigen::Index>(map[j]));
    }
  }
  return out;
}

ComplexMatrix permutation_unitary(const SubsystemLayout &layout,
                                  const LabelList &new_order) {
  const auto map = permutation_map(layout, new_order);
  const auto d = static_cast<Eigen::Index>(map.size());
  ComplexMatrix p = ComplexMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    p(i, static_cast<Eigen::Index>(map[i])) = 1.0;
  }
  return p;
}

} // namespace aunital
