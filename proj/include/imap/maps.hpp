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
#include <string>
#include <vector>

#include "imap/hermlin.hpp"
#include "imap/states.hpp"

namespace imap {

/// U^dagger U = I to 1e-10 on a dimA*dimE space.
class JointUnitary {
 public:
  static JointUnitary from(ComplexMatrix m, Index dimA, Index dimE,
                           double tol = 1e-10);

  const ComplexMatrix& mat() const { return mat_; }
  Index dimA() const { return dimA_; }
  Index dimE() const { return dimE_; }

 private:
  JointUnitary(ComplexMatrix m, Index dimA, Index dimE)
      : mat_(std::move(m)), dimA_(dimA), dimE_(dimE) {}
  ComplexMatrix mat_;
  Index dimA_;
  Index dimE_;
};

/// Affine map rho' -> sum_kl rho'_kl S_kl + shift.
struct InducedMap {
  Index dimA = 0;
  std::vector<ComplexMatrix> images;  // S_kl, row-major over (k,l)
  ComplexMatrix shift;

  const ComplexMatrix& image(Index k, Index l) const { return images[k * dimA + l]; }
};

/// Block (k,l) holds S_kl; the shift is not included.
struct ChoiMatrix {
  ComplexMatrix mat;
};

enum class CpStatus { CP, NotCP, NotCPAffine };
std::string to_string(CpStatus s);

struct CpVerdict {
  CpStatus status = CpStatus::NotCP;
  double min_eig = 0.0;
  double shift_norm = 0.0;
};

enum class PositivityStatus { NoViolationFound, Violated };
std::string to_string(PositivityStatus s);

struct PositivityVerdict {
  PositivityStatus status = PositivityStatus::NoViolationFound;
  /// Smallest output eigenvalue seen over all probed inputs.
  double min_eig = 0.0;
  /// Input reaching min_eig; a certified density matrix.
  std::optional<DensityMatrix> witness;
};

struct ProbeOptions {
  Index budget = 500;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int refine_iterations = 200;
  double initial_step = 0.5;
  double min_step = 1e-12;
};

ComplexMatrix evolve_partial(const ComplexMatrix& op, const JointUnitary& u);

InducedMap induce(const SLDecomposition& d, const JointUnitary& u);

/// Linear part only.
ComplexMatrix apply_linear(const InducedMap& m, const ComplexMatrix& rhoPrime);
ComplexMatrix apply(const InducedMap& m, const ComplexMatrix& rhoPrime);
ComplexMatrix apply(const InducedMap& m, const DensityMatrix& rhoPrime);

ChoiMatrix choi(const InducedMap& m);

double shift_norm(const InducedMap& m);

CpVerdict is_cp(const InducedMap& m, double tol = 1e-9);

/// Minimal eigenvalue of apply(m, |v><v|) for a unit vector v.
double output_min_eig(const InducedMap& m, const ComplexVector& v);

/// Haar-random pure inputs followed by local descent on the worst one.
/// Sampling runs in parallel; per-sample seeds make the result independent
/// of the thread count.
PositivityVerdict probe_positivity(const InducedMap& m, ProbeOptions opt = {});
/// Single-threaded reference for probe_positivity.
PositivityVerdict probe_positivity_serial(const InducedMap& m,
                                          ProbeOptions opt = {});

/// Kraus operators of the linear part, K_j(a,k) = sqrt(l_j) v_j(k*d + a).
std::vector<ComplexMatrix> kraus_from_choi(const ChoiMatrix& c,
                                           double tol = 1e-9);

ComplexMatrix apply_kraus(const std::vector<ComplexMatrix>& kraus,
                          const ComplexMatrix& rho);

}  // namespace imap
