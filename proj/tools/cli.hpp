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

// Command-line front end. Exit codes: 0 verdict true or command done,
// 1 verdict false, 2 usage, input or validation error.

#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "aunital/gallery.hpp"

namespace aunital::cli {

inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitError = 2;

inline constexpr unsigned long long kDefaultSeed = 42;

enum class Format { human, json };

// Hooks for tests. An empty gallery provider means the built-in entries at
// d = 2 and d = 3.
struct Context {
  std::function<std::vector<GalleryEntry>()> gallery_provider;
};

// args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err, const Context &ctx = {});

// Gallery expectations plus sampled versions of the main properties. Prints one
// line (or JSON record) per check; returns kExitTrue iff all pass.
int selftest(Format format, std::ostream &out, const Context &ctx = {});

} // namespace aunital::cli
