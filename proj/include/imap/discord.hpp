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
#include <string>

#include "imap/hermlin.hpp"

namespace imap {

enum class DiscordStatus { VQD, Nonzero, Indeterminate };
std::string to_string(DiscordStatus s);

struct DiscordVerdict {
  DiscordStatus status = DiscordStatus::Indeterminate;
  /// Columns are the candidate measurement basis on A (the verified one when
  /// status is VQD).
  ComplexMatrix basis;
  /// Pinching defect of \c basis.
  double residual = 0.0;
  /// Largest commutator / non-Hermiticity found among the probe operators.
  double probe_defect = 0.0;
};

struct DiscordTolerances {
  double pinching = 1e-9;
  double degeneracy = 1e-8;
  /// Probe operators of a classical-quantum state are Hermitian and commute;
  /// a violation above this level certifies nonzero discord.
  double commutator = 1e-7;
};

/// max-entry norm of sum_k (P_k (x) I) rho (P_k (x) I) - rho, P_k = |b_k><b_k|
/// for the columns b_k of \p basis.
double pinching_defect(const ComplexMatrix& rhoAE, const ComplexMatrix& basis,
                       Index dimA, Index dimE);

/// Decides whether rhoAE is classical-quantum with respect to a projective
/// measurement on A. VQD is only returned on a verified basis.
DiscordVerdict has_vqd(const ComplexMatrix& rhoAE, Index dimA, Index dimE,
                       DiscordTolerances tol = {}, std::uint64_t seed = 0);

}  // namespace imap
