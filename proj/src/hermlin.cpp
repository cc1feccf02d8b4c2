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

#include "imap/hermlin.hpp"

#include <cmath>
#include <sstream>

#include "imap/error.hpp"

namespace imap {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Size: return "SIZE";
    case ErrorKind::Shape: return "SHAPE";
    case ErrorKind::Hermiticity: return "HERMITICITY";
    case ErrorKind::Validation: return "VALIDATION";
    case ErrorKind::Cancellation: return "CANCELLATION";
    case ErrorKind::NonSL: return "NON_SL";
    case ErrorKind::NotPsd: return "NOT_PSD";
    case ErrorKind::PreconditionTheorem: return "PRECONDITION_THEOREM";
    case ErrorKind::PreconditionVqd: return "PRECONDITION_VQD";
    case ErrorKind::Io: return "IO";
  }
  return "UNKNOWN";
}

ComplexMatrix dagger(const ComplexMatrix& m) { return m.adjoint(); }

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::Shape, "max_abs_diff: shape mismatch");
  }
  return max_abs(a - b);
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  return max_abs(m - m.adjoint());
}

bool all_finite(const ComplexMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
        return false;
  return true;
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (m.rows() < 1 || m.cols() < 1) {
    throw Error(ErrorKind::Validation, std::string(what) + ": empty matrix");
  }
  if (!all_finite(m)) {
    throw Error(ErrorKind::Validation,
                std::string(what) + ": non-finite entry");
  }
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b,
                     Index max_rows) {
  const Index rows = a.rows() * b.rows();
  const Index cols = a.cols() * b.cols();
  if (rows > max_rows || cols > max_rows) {
    std::ostringstream os;
    os << "tensor: result " << rows << "x" << cols << " exceeds limit "
       << max_rows;
    throw Error(ErrorKind::Size, os.str());
  }
  ComplexMatrix out(rows, cols);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Index dimA, Index dimE,
                            Side traced) {
  if (dimA < 1 || dimE < 1 || m.rows() != m.cols() ||
      m.rows() != dimA * dimE) {
    std::ostringstream os;
    os << "partial_trace: " << m.rows() << "x" << m.cols()
       << " is not square of size " << dimA << "*" << dimE;
    throw Error(ErrorKind::Shape, os.str());
  }
  if (traced == Side::E) {
    ComplexMatrix out(dimA, dimA);
    for (Index k = 0; k < dimA; ++k)
      for (Index l = 0; l < dimA; ++l)
        out(k, l) = m.block(k * dimE, l * dimE, dimE, dimE).trace();
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dimE, dimE);
  for (Index k = 0; k < dimA; ++k)
    out += m.block(k * dimE, k * dimE, dimE, dimE);
  return out;
}

Spectrum hermitian_eigen(const ComplexMatrix& m, double tol) {
  require_finite(m, "hermitian_eigen");
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::Shape, "hermitian_eigen: matrix is not square");
  }
  const double dev = hermiticity_defect(m);
  if (dev > tol) {
    std::ostringstream os;
    os << "hermitian_eigen: max |m - m^dagger| = " << dev
       << " exceeds tolerance " << tol;
    throw Error(ErrorKind::Hermiticity, os.str());
  }
  // Symmetrize so the solver sees an exactly Hermitian input.
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::Validation, "hermitian_eigen: solver failed");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

PsdVerdict is_psd(const ComplexMatrix& m, double tol, double herm_tol) {
  const Spectrum s = hermitian_eigen(m, herm_tol);
  const double lo = s.eigenvalues(0);
  return {lo >= -tol, lo};
}

ComplexMatrix hadamard(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::Shape, "hadamard: shape mismatch");
  }
  return a.cwiseProduct(b);
}

ComplexMatrix matrix_unit(Index dim, Index k, Index l) {
  ComplexMatrix u = ComplexMatrix::Zero(dim, dim);
  u(k, l) = 1.0;
  return u;
}

double operator_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

}  // namespace imap
