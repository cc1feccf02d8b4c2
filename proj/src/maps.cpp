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

#include "imap/maps.hpp"

#include <cmath>
#include <sstream>

#include "imap/error.hpp"
#include "imap/random.hpp"

namespace imap {

std::string to_string(CpStatus s) {
  switch (s) {
    case CpStatus::CP: return "CP";
    case CpStatus::NotCP: return "NOT_CP";
    case CpStatus::NotCPAffine: return "NOT_CP_AFFINE";
  }
  return "?";
}

std::string to_string(PositivityStatus s) {
  return s == PositivityStatus::Violated ? "VIOLATED" : "NO_VIOLATION_FOUND";
}

JointUnitary JointUnitary::from(ComplexMatrix m, Index dimA, Index dimE,
                                double tol) {
  require_finite(m, "unitary");
  if (dimA < 1 || dimE < 1 || m.rows() != dimA * dimE ||
      m.cols() != dimA * dimE) {
    std::ostringstream os;
    os << "unitary: " << m.rows() << "x" << m.cols()
       << " does not match dimensions " << dimA << "*" << dimE;
    throw Error(ErrorKind::Shape, os.str());
  }
  const double defect =
      max_abs(m.adjoint() * m - ComplexMatrix::Identity(m.rows(), m.cols()));
  if (defect > tol) {
    std::ostringstream os;
    os << "unitary: max |U^dagger U - I| = " << defect;
    throw Error(ErrorKind::Validation, os.str());
  }
  return JointUnitary(std::move(m), dimA, dimE);
}

ComplexMatrix evolve_partial(const ComplexMatrix& op, const JointUnitary& u) {
  return partial_trace(u.mat() * op * u.mat().adjoint(), u.dimA(), u.dimE(),
                       Side::E);
}

InducedMap induce(const SLDecomposition& d, const JointUnitary& u) {
  if (d.dimA != u.dimA() || d.dimE != u.dimE()) {
    throw Error(ErrorKind::Shape, "induce: state and unitary dimensions differ");
  }
  const Index n = d.dimA;
  InducedMap m;
  m.dimA = n;
  m.shift = ComplexMatrix::Zero(n, n);
  m.images.reserve(n * n);
  for (Index k = 0; k < n; ++k) {
    for (Index l = 0; l < n; ++l) {
      switch (d.pair_class(k, l)) {
        case PairClass::UnitTrace:
          m.images.push_back(
              evolve_partial(tensor(matrix_unit(n, k, l), d.psi(k, l)), u));
          break;
        case PairClass::TracelessNonzero:
          m.images.push_back(ComplexMatrix::Zero(n, n));
          m.shift += d.gamma(k, l) *
                     evolve_partial(tensor(matrix_unit(n, k, l), d.psi(k, l)), u);
          break;
        case PairClass::ZeroBlock:
          m.images.push_back(ComplexMatrix::Zero(n, n));
          break;
      }
    }
  }
  return m;
}

ComplexMatrix apply_linear(const InducedMap& m, const ComplexMatrix& rhoPrime) {
  if (rhoPrime.rows() != m.dimA || rhoPrime.cols() != m.dimA) {
    throw Error(ErrorKind::Shape, "apply: input dimension does not match map");
  }
  ComplexMatrix out = ComplexMatrix::Zero(m.dimA, m.dimA);
  for (Index k = 0; k < m.dimA; ++k)
    for (Index l = 0; l < m.dimA; ++l)
      if (rhoPrime(k, l) != cplx(0.0)) out += rhoPrime(k, l) * m.image(k, l);
  return out;
}

ComplexMatrix apply(const InducedMap& m, const ComplexMatrix& rhoPrime) {
  return apply_linear(m, rhoPrime) + m.shift;
}

ComplexMatrix apply(const InducedMap& m, const DensityMatrix& rhoPrime) {
  return imap::apply(m, rhoPrime.mat());
}

ChoiMatrix choi(const InducedMap& m) {
  const Index n = m.dimA;
  ChoiMatrix c{ComplexMatrix::Zero(n * n, n * n)};
  for (Index k = 0; k < n; ++k)
    for (Index l = 0; l < n; ++l) c.mat.block(k * n, l * n, n, n) = m.image(k, l);
  return c;
}

double shift_norm(const InducedMap& m) { return max_abs(m.shift); }

CpVerdict is_cp(const InducedMap& m, double tol) {
  CpVerdict v;
  v.min_eig = is_psd(choi(m).mat, tol).min_eig;
  v.shift_norm = shift_norm(m);
  if (v.shift_norm > tol) {
    v.status = CpStatus::NotCPAffine;
  } else {
    v.status = v.min_eig >= -tol ? CpStatus::CP : CpStatus::NotCP;
  }
  return v;
}

double output_min_eig(const InducedMap& m, const ComplexVector& v) {
  const ComplexMatrix out = imap::apply(m, ComplexMatrix(v * v.adjoint()));
  return hermitian_eigen(out, 1e-8).eigenvalues(0);
}

namespace {

ComplexVector sample_input(const InducedMap& m, std::uint64_t seed, Index i) {
  Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
  return haar_vector(m.dimA, rng);
}

Index worst_index(const std::vector<double>& eigs) {
  Index best = 0;
  for (Index i = 1; i < static_cast<Index>(eigs.size()); ++i)
    if (eigs[i] < eigs[best]) best = i;
  return best;
}

PositivityVerdict refine(const InducedMap& m, const ProbeOptions& opt,
                         ComplexVector v, double value) {
  Rng rng(derive_seed(~opt.seed, 0));
  double step = opt.initial_step;
  // Random directions fail often near a minimum; shrink only after a run of misses.
  const int patience = 4 * static_cast<int>(m.dimA);
  int misses = 0;
  for (int it = 0; it < opt.refine_iterations && step > opt.min_step; ++it) {
    ComplexVector trial = v + step * ComplexVector(gaussian_matrix(m.dimA, 1, rng));
    trial.normalize();
    const double e = output_min_eig(m, trial);
    if (e < value) {
      v = trial;
      value = e;
      misses = 0;
    } else if (++misses >= patience) {
      step *= 0.5;
      misses = 0;
    }
  }
  PositivityVerdict out;
  out.witness = pure_state(v);
  // Re-evaluate on the certified density matrix, not the raw vector.
  out.min_eig = hermitian_eigen(imap::apply(m, *out.witness), 1e-8).eigenvalues(0);
  out.status = out.min_eig < -opt.tol ? PositivityStatus::Violated
                                      : PositivityStatus::NoViolationFound;
  return out;
}

void check_budget(const ProbeOptions& opt) {
  if (opt.budget < 1) {
    throw Error(ErrorKind::Validation, "probe_positivity: budget must be >= 1");
  }
}

}  // namespace

PositivityVerdict probe_positivity_serial(const InducedMap& m,
                                          ProbeOptions opt) {
  check_budget(opt);
  std::vector<double> eigs(opt.budget);
  for (Index i = 0; i < opt.budget; ++i)
    eigs[i] = output_min_eig(m, sample_input(m, opt.seed, i));
  const Index w = worst_index(eigs);
  return refine(m, opt, sample_input(m, opt.seed, w), eigs[w]);
}

PositivityVerdict probe_positivity(const InducedMap& m, ProbeOptions opt) {
  check_budget(opt);
  std::vector<double> eigs(opt.budget);
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < opt.budget; ++i)
    eigs[i] = output_min_eig(m, sample_input(m, opt.seed, i));
  const Index w = worst_index(eigs);
  return refine(m, opt, sample_input(m, opt.seed, w), eigs[w]);
}

std::vector<ComplexMatrix> kraus_from_choi(const ChoiMatrix& c, double tol) {
  const Index n2 = c.mat.rows();
  const Index n = static_cast<Index>(std::lround(std::sqrt(double(n2))));
  if (n * n != n2 || c.mat.cols() != n2) {
    throw Error(ErrorKind::Shape, "kraus_from_choi: Choi matrix is not d^2 x d^2");
  }
  const Spectrum s = hermitian_eigen(c.mat);
  if (s.eigenvalues(0) < -tol) {
    std::ostringstream os;
    os << "kraus_from_choi: Choi matrix has eigenvalue " << s.eigenvalues(0);
    throw Error(ErrorKind::NotPsd, os.str());
  }
  std::vector<ComplexMatrix> kraus;
  for (Index j = n2 - 1; j >= 0; --j) {
    const double lambda = s.eigenvalues(j);
    if (lambda <= tol) break;
    ComplexMatrix k(n, n);
    for (Index col = 0; col < n; ++col)
      for (Index row = 0; row < n; ++row)
        k(row, col) = std::sqrt(lambda) * s.eigenvectors(col * n + row, j);
    kraus.push_back(std::move(k));
  }
  return kraus;
}

ComplexMatrix apply_kraus(const std::vector<ComplexMatrix>& kraus,
                          const ComplexMatrix& rho) {
  ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
  for (const ComplexMatrix& k : kraus) out += k * rho * k.adjoint();
  return out;
}

}  // namespace imap
