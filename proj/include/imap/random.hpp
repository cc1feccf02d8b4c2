// Copyright 2026 The inducedmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

#include "imap/hermlin.hpp"

namespace imap {

using Rng = std::mt19937_64;

/// Independent stream seed for (seed, stream) via splitmix64 mixing, so that
/// per-index tasks draw the same numbers regardless of execution order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Entries i.i.d. complex normal with E|z|^2 = 1.
ComplexMatrix gaussian_matrix(Index rows, Index cols, Rng& rng);

/// Uniformly distributed unit vector.
ComplexVector haar_vector(Index dim, Rng& rng);

/// (G + G^dagger) / 2 for Gaussian G.
ComplexMatrix random_hermitian(Index dim, Rng& rng);

}  // namespace imap
