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

#include <complex>

#include <Eigen/Dense>

namespace imap {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

inline constexpr double kHermTol = 1e-9;
inline constexpr Index kMaxRows = 4096;

enum class Side { A, E };

struct Spectrum {
  Eigen::VectorXd eigenvalues;  // ascending
  ComplexMatrix eigenvectors;   // columns
};

/// Outcome of a positivity test. The minimal eigenvalue is always filled in
/// so callers can apply their own threshold.
struct PsdVerdict {
  bool psd = false;
  double min_eig = 0.0;
};

ComplexMatrix dagger(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double hermiticity_defect(const ComplexMatrix& m);
bool all_finite(const ComplexMatrix& m);

/// Throws Validation unless \p m is non-empty and every entry is finite.
void require_finite(const ComplexMatrix& m, const char* what);

/// Kronecker product: entry (i*rb+k, j*cb+l) = a(i,j) * b(k,l).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b,
                     Index max_rows = kMaxRows);

/// Trace over one factor of a (dimA*dimE)-square operator. Side::E keeps the
/// first factor, Side::A keeps the second.
ComplexMatrix partial_trace(const ComplexMatrix& m, Index dimA, Index dimE,
                            Side traced);

Spectrum hermitian_eigen(const ComplexMatrix& m, double tol = kHermTol);

PsdVerdict is_psd(const ComplexMatrix& m, double tol = kHermTol,
                  double herm_tol = kHermTol);

ComplexMatrix hadamard(const ComplexMatrix& a, const ComplexMatrix& b);

/// |k><l| in dimension dim.
ComplexMatrix matrix_unit(Index dim, Index k, Index l);

/// Largest singular value.
double operator_norm(const ComplexMatrix& m);

}  // namespace imap
