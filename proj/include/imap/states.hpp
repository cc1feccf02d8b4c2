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

#include <string>
#include <vector>

#include "imap/hermlin.hpp"

namespace imap {

/// Hermitian, unit-trace, positive semidefinite matrix (all to 1e-9).
class DensityMatrix {
 public:
  static DensityMatrix from(ComplexMatrix m, double tol = kHermTol);

  const ComplexMatrix& mat() const { return mat_; }
  Index dim() const { return mat_.rows(); }

 private:
  explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
  ComplexMatrix mat_;
};

/// Pure-state projector |v><v| / <v|v>.
DensityMatrix pure_state(const ComplexVector& v);

struct EnsembleTerm {
  double p;
  DensityMatrix rhoA;
  DensityMatrix rhoE;
};

/// Convex decomposition rho_AE = sum_i p_i rhoA_i (x) rhoE_i.
class SeparableEnsemble {
 public:
  SeparableEnsemble(Index dimA, Index dimE, std::vector<EnsembleTerm> terms);

  Index dimA() const { return dimA_; }
  Index dimE() const { return dimE_; }
  const std::vector<EnsembleTerm>& terms() const { return terms_; }

 private:
  Index dimA_;
  Index dimE_;
  std::vector<EnsembleTerm> terms_;
};

enum class PairClass { UnitTrace, ZeroBlock, TracelessNonzero };
enum class SlClass { SL, NonSL };

std::string to_string(PairClass c);
std::string to_string(SlClass c);

struct BlockTolerances {
  double trace = 1e-10;
  double zero = 1e-10;
};

/// Block form rho_AE = sum_kl gamma(k,l) |k><l| (x) psi(k,l).
///
/// Traceless nonzero blocks are stored with gamma = 1 and the raw block in
/// psi; only the product gamma * psi is meaningful for those pairs.
struct SLDecomposition {
  Index dimA = 0;
  Index dimE = 0;
  ComplexMatrix gamma;
  std::vector<ComplexMatrix> blocks;  // row-major over (k,l)
  std::vector<PairClass> classes;     // row-major over (k,l)

  const ComplexMatrix& psi(Index k, Index l) const { return blocks[k * dimA + l]; }
  PairClass pair_class(Index k, Index l) const { return classes[k * dimA + l]; }
};

ComplexMatrix assemble(const SeparableEnsemble& e);

SLDecomposition decompose_blocks(const ComplexMatrix& rhoAE, Index dimA,
                                 Index dimE, BlockTolerances tol = {});

/// sum_kl gamma_kl |k><l| (x) psi_kl, zero blocks skipped.
ComplexMatrix reassemble(const SLDecomposition& d);

SlClass classify_sl(const SLDecomposition& d);

/// gamma_kl = sum_i p_i (rhoA_i)_kl.
ComplexMatrix marginal_coefficients(const SeparableEnsemble& e);

struct RescaledSet {
  std::vector<ComplexMatrix> matrices;  // one per ensemble term
  /// true where gamma_kl = 0 and every component entry vanished, so the
  /// ratio was set to 0 by convention.
  Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> zero_convention;
};

RescaledSet rescaled_matrices(const SeparableEnsemble& e,
                              BlockTolerances tol = {});

enum class Route { RescaledPsd, BlockProjector, None };
std::string to_string(Route r);

struct ConditionWitness {
  enum class Kind {
    NegativeRescaled,  // term i, value = min eigenvalue
    Cancellation,      // term i cancels at (k,l)
    NonSL,             // assembled state is not SL
    SupportOverlap,    // terms i, j, value = ||P_i P_j||
  };
  Kind kind;
  int i = -1;
  int j = -1;
  int k = -1;
  int l = -1;
  double value = 0.0;

  std::string describe() const;
};

struct ConditionReport {
  bool holds = false;
  bool rescaled_psd = false;
  bool block_projector = false;
  /// Route (a) could not be evaluated (cancellation or non-SL input).
  bool rescaled_indeterminate = false;
  /// Dimension left to the completing projector (d - sum of support ranks).
  Index completion_rank = 0;
  std::vector<double> rescaled_min_eigs;
  std::vector<ConditionWitness> witnesses;

  /// Routes that hold, or {Route::None}.
  std::vector<Route> routes() const;
};

struct ConditionTolerances {
  double psd = kHermTol;
  double support_cutoff = 1e-9;
  double orthogonality = 1e-9;
  BlockTolerances blocks{};
};

ConditionReport check_condition(const SeparableEnsemble& e,
                                ConditionTolerances tol = {});

/// Orthogonal projector onto the span of eigenvectors with eigenvalue > cutoff.
ComplexMatrix support_projector(const ComplexMatrix& rho, double cutoff);

/// hadamard(rhoPrime, R_i) for every rescaled matrix.
std::vector<ComplexMatrix> component_images(const DensityMatrix& rhoPrime,
                                            const RescaledSet& rs);

}  // namespace imap
