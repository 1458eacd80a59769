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
#include <random>

#include "aunital/linalg.hpp"

namespace aunital {

using Rng = std::mt19937_64;

// Matrix of i.i.d. standard complex Gaussians (real and imaginary parts
// N(0, 1/2)).
ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng &rng);

// Haar-distributed unitary: QR of a Ginibre matrix with the phases of R's
// diagonal divided out.
ComplexMatrix haar_unitary(std::size_t d, Rng &rng);

// Haar-distributed unit vector.
ComplexVector haar_vector(std::size_t d, Rng &rng);

} // namespace aunital
