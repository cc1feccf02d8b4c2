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

#include "imap/random.hpp"

#include <cmath>

namespace imap {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

ComplexMatrix gaussian_matrix(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, M_SQRT1_2);
  ComplexMatrix g(rows, cols);
  // Fill row by row so the draw order matches the documented layout.
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = cplx(re, im);
    }
  return g;
}

ComplexVector haar_vector(Index dim, Rng& rng) {
  ComplexVector v = gaussian_matrix(dim, 1, rng);
  return v / v.norm();
}

ComplexMatrix random_hermitian(Index dim, Rng& rng) {
  const ComplexMatrix g = gaussian_matrix(dim, dim, rng);
  return 0.5 * (g + g.adjoint());
}

}  // namespace imap
