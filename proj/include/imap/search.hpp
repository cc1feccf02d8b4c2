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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "imap/maps.hpp"
#include "imap/states.hpp"

namespace imap {

enum class UnitaryFamily { Haar, Generator };

struct SearchConfig {
  UnitaryFamily family = UnitaryFamily::Haar;
  /// Generator family: trial 0 uses these parameters, later trials add a
  /// seeded Gaussian perturbation of width generator_spread.
  std::vector<double> generator_params;
  double generator_spread = 0.25;
  Index trials = 100;
  Index positivity_budget = 500;
  std::uint64_t seed = 0;
  double cp_tol = 1e-9;
  double positivity_tol = 1e-9;
  double shift_tol = 1e-9;
  /// Reported candidates must have a Choi eigenvalue below this.
  double candidate_threshold = -1e-6;
};

enum class Classification { CP, PositiveNotCpCandidate, NonPositive, Affine };
std::string to_string(Classification c);
std::string to_string(UnitaryFamily f);

struct CandidateReport {
  Index trial = 0;
  std::uint64_t probe_seed = 0;
  JointUnitary unitary;
  double choi_min_eig = 0.0;
  double shift_norm = 0.0;
  PositivityVerdict positivity;
  Classification classification = Classification::CP;
};

JointUnitary haar_unitary(Index dimA, Index dimE, std::uint64_t seed);
inline JointUnitary haar_unitary(Index dim, std::uint64_t seed) {
  return haar_unitary(dim, 1, seed);
}

/// Hermitian matrix from dim^2 reals: the diagonal first, then (re, im) of
/// each upper-triangle entry in row-major order.
ComplexMatrix generator_hermitian(std::span<const double> params, Index dim);

/// exp(i H) for H = generator_hermitian(params, dimA*dimE).
JointUnitary generator_unitary(std::span<const double> params, Index dimA,
                               Index dimE);
inline JointUnitary generator_unitary(std::span<const double> params,
                                      Index dim) {
  return generator_unitary(params, dim, 1);
}

/// Unitary used for a given trial index.
JointUnitary trial_unitary(const SearchConfig& cfg, Index dimA, Index dimE,
                           Index trial);

CandidateReport classify(const SLDecomposition& d, const JointUnitary& u,
                         const SearchConfig& cfg, std::uint64_t probe_seed);
CandidateReport classify(const SeparableEnsemble& e, const JointUnitary& u,
                         const SearchConfig& cfg, std::uint64_t probe_seed);

/// Classifies every trial, in trial order. Trials run in parallel.
std::vector<CandidateReport> scan(const SLDecomposition& d,
                                  const SearchConfig& cfg);
/// Single-threaded reference for scan.
std::vector<CandidateReport> scan_serial(const SLDecomposition& d,
                                         const SearchConfig& cfg);

/// Positive-but-not-CP search. Requires the positivity condition to hold and
/// the state to lack a verified zero-discord basis. Returns candidates sorted
/// by Choi eigenvalue, most negative first.
std::vector<CandidateReport> hunt(const SeparableEnsemble& e,
                                  const SearchConfig& cfg);

/// Recomputes a candidate from scratch and confirms its classification.
bool reverify_candidate(const SLDecomposition& d, const CandidateReport& r,
                        const SearchConfig& cfg);

}  // namespace imap
