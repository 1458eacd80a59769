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

// JSON interchange for states and channels.
//
//   state:   {"dims": [..], "labels": [..], "matrix": M}
//   channel: {"kind": "kraus", "in_dims": [..], "out_dims": [..],
//             "kraus": [M, ...]}
//            {"kind": "choi", "in_dims": [..], "out_dims": [..], "matrix": M}
//
// M is a row-major array of rows, each entry a [re, im] pair. Channel files
// may also carry "in_labels"/"out_labels"; they are written only when the
// labels differ from the positional defaults A, B, C, ...

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "aunital/channels.hpp"
#include "aunital/states.hpp"

namespace aunital {

using Json = nlohmann::ordered_json;

LabelList default_labels(std::size_t count);

Json matrix_to_json(const ComplexMatrix &m);
// `where` names the field in diagnostics.
ComplexMatrix matrix_from_json(const Json &j, const std::string &where);

Json state_to_json(const DensityMatrix &rho);
DensityMatrix state_from_json(const Json &j);

Json channel_to_json(const KrausChannel &ch);
Json choi_to_json(const ChoiMatrix &choi);
// Accepts both "kraus" and "choi" kinds; Choi input is validated and
// converted to canonical Kraus form.
KrausChannel channel_from_json(const Json &j);

// Parses text, reporting syntax errors with line and column as ParseError.
Json parse_json(std::string_view text, const std::string &source = "input");
// Two-space indented, trailing newline.
std::string dump_json(const Json &j);

std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view text);

DensityMatrix load_state(const std::filesystem::path &path);
KrausChannel load_channel(const std::filesystem::path &path);
void save_state(const std::filesystem::path &path, const DensityMatrix &rho);
void save_channel(const std::filesystem::path &path, const KrausChannel &ch);

} // namespace aunital
