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

#include "aunital/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "aunital/errors.hpp"

namespace aunital {

namespace {

const Json &require_field(const Json &j, const char *key) {
  if (!j.is_object()) {
    throw ParseError("expected a JSON object at top level");
  }
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return *it;
}

std::vector<std::size_t> dims_from_json(const Json &j, const std::string &where) {
  if (!j.is_array() || j.empty()) {
    throw ParseError("field '" + where + "': expected a nonempty array of "
                                         "positive integers");
  }
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto &v = j[k];
    if (!v.is_number_integer() || v.get<long long>() < 1) {
      throw ParseError("field '" + where + "'[" + std::to_string(k) +
                       "]: expected a positive integer");
    }
    dims.push_back(v.get<std::size_t>());
  }
  return dims;
}

LabelList labels_from_json(const Json &j, const std::string &where,
                           std::size_t count) {
  if (!j.is_array() || j.size() != count) {
    throw ParseError("field '" + where + "': expected " +
                     std::to_string(count) + " labels");
  }
  LabelList labels;
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_string()) {
      throw ParseError("field '" + where + "'[" + std::to_string(k) +
                       "]: expected a string");
    }
    labels.push_back(j[k].get<std::string>());
  }
  return labels;
}

Json labels_to_json(const LabelList &labels) {
  Json arr = Json::array();
  for (const auto &l : labels) {
    arr.push_back(l);
  }
  return arr;
}

Json dims_to_json(const std::vector<std::size_t> &dims) {
  Json arr = Json::array();
  for (auto d : dims) {
    arr.push_back(d);
  }
  return arr;
}

SubsystemLayout layout_with(const Json &j, const char *dims_key,
                            const char *labels_key) {
  auto dims = dims_from_json(require_field(j, dims_key), dims_key);
  LabelList labels = default_labels(dims.size());
  if (auto it = j.find(labels_key); it != j.end()) {
    labels = labels_from_json(*it, labels_key, dims.size());
  }
  return SubsystemLayout(std::move(labels), std::move(dims));
}

} // namespace

LabelList default_labels(std::size_t count) {
  LabelList labels;
  for (std::size_t k = 0; k < count; ++k) {
    if (k < 26) {
      labels.emplace_back(1, static_cast<char>('A' + k));
    } else {
      labels.push_back("S" + std::to_string(k));
    }
  }
  return labels;
}

Json matrix_to_json(const ComplexMatrix &m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      row.push_back(Json::array({m(i, k).real(), m(i, k).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json &j, const std::string &where) {
  if (!j.is_array() || j.empty()) {
    throw ParseError("field '" + where + "': expected a nonempty array of rows");
  }
  const auto rows = j.size();
  if (!j[0].is_array() || j[0].empty()) {
    throw ParseError("field '" + where + "'[0]: expected a nonempty row");
  }
  const auto cols = j[0].size();
  ComplexMatrix m(static_cast<Eigen::Index>(rows),
                  static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const auto &row = j[r];
    if (!row.is_array() || row.size() != cols) {
      throw ParseError("field '" + where + "'[" + std::to_string(r) +
                       "]: expected a row of " + std::to_string(cols) +
                       " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const auto &e = row[c];
      const std::string at = "field '" + where + "'[" + std::to_string(r) +
                             "][" + std::to_string(c) + "]";
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
          !e[1].is_number()) {
        throw ParseError(at + ": expected a [re, im] pair of numbers");
      }
      const double re = e[0].get<double>();
      const double im = e[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im)) {
        throw ParseError(at + ": entries must be finite");
      }
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          Complex(re, im);
    }
  }
  return m;
}

Json state_to_json(const DensityMatrix &rho) {
  Json j;
  j["dims"] = dims_to_json(rho.layout().dims());
  j["labels"] = labels_to_json(rho.layout().names());
  j["matrix"] = matrix_to_json(rho.matrix());
  return j;
}

DensityMatrix state_from_json(const Json &j) {
  auto layout = layout_with(j, "dims", "labels");
  auto m = matrix_from_json(require_field(j, "matrix"), "matrix");
  return DensityMatrix(std::move(m), std::move(layout));
}

Json channel_to_json(const KrausChannel &ch) {
  Json j;
  j["kind"] = "kraus";
  j["in_dims"] = dims_to_json(ch.in_layout().dims());
  j["out_dims"] = dims_to_json(ch.out_layout().dims());
  if (ch.in_layout().names() != default_labels(ch.in_layout().size())) {
    j["in_labels"] = labels_to_json(ch.in_layout().names());
  }
  if (ch.out_layout().names() != default_labels(ch.out_layout().size())) {
    j["out_labels"] = labels_to_json(ch.out_layout().names());
  }
  Json ops = Json::array();
  for (const auto &k : ch.kraus()) {
    ops.push_back(matrix_to_json(k));
  }
  j["kraus"] = std::move(ops);
  return j;
}

Json choi_to_json(const ChoiMatrix &choi) {
  Json j;
  j["kind"] = "choi";
  j["in_dims"] = dims_to_json(choi.in_layout().dims());
  j["out_dims"] = dims_to_json(choi.out_layout().dims());
  if (choi.in_layout().names() != default_labels(choi.in_layout().size())) {
    j["in_labels"] = labels_to_json(choi.in_layout().names());
  }
  if (choi.out_layout().names() != default_labels(choi.out_layout().size())) {
    j["out_labels"] = labels_to_json(choi.out_layout().names());
  }
  j["matrix"] = matrix_to_json(choi.matrix());
  return j;
}

KrausChannel channel_from_json(const Json &j) {
  const auto &kind = require_field(j, "kind");
  if (!kind.is_string()) {
    throw ParseError("field 'kind': expected \"kraus\" or \"choi\"");
  }
  auto in = layout_with(j, "in_dims", "in_labels");
  auto out = layout_with(j, "out_dims", "out_labels");
  const auto k = kind.get<std::string>();
  if (k == "kraus") {
    const auto &ops = require_field(j, "kraus");
    if (!ops.is_array() || ops.empty()) {
      throw ParseError("field 'kraus': expected a nonempty array of matrices");
    }
    std::vector<ComplexMatrix> kraus;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      kraus.push_back(
          matrix_from_json(ops[i], "kraus[" + std::to_string(i) + "]"));
    }
    return KrausChannel(std::move(kraus), std::move(in), std::move(out));
  }
  if (k == "choi") {
    auto m = matrix_from_json(require_field(j, "matrix"), "matrix");
    return choi_to_kraus(ChoiMatrix(std::move(m), std::move(in), std::move(out)));
  }
  throw ParseError("field 'kind': unknown channel kind '" + k + "'");
}

Json parse_json(std::string_view text, const std::string &source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(source + ": " + e.what());
  }
}

std::string dump_json(const Json &j) { return j.dump(2) + "\n"; }

std::string read_text_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path &path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error("cannot write '" + path.string() + "'");
  }
  out << text;
  if (!out) {
    throw Error("failed writing '" + path.string() + "'");
  }
}

DensityMatrix load_state(const std::filesystem::path &path) {
  const auto j = parse_json(read_text_file(path), path.string());
  try {
    return state_from_json(j);
  } catch (const ParseError &e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

KrausChannel load_channel(const std::filesystem::path &path) {
  const auto j = parse_json(read_text_file(path), path.string());
  try {
    return channel_from_json(j);
  } catch (const ParseError &e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save_state(const std::filesystem::path &path, const DensityMatrix &rho) {
  write_text_file(path, dump_json(state_to_json(rho)));
}

void save_channel(const std::filesystem::path &path, const KrausChannel &ch) {
  write_text_file(path, dump_json(channel_to_json(ch)));
}

} // namespace aunital
