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

#include "imap/repro.hpp"

#include <cmath>
#include <sstream>

namespace imap {

namespace fixtures {

ComplexMatrix bell_state() {
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = v(3) = M_SQRT1_2;
  return v * v.adjoint();
}

JointUnitary cnot() {
  ComplexMatrix u = ComplexMatrix::Zero(4, 4);
  u(0, 0) = u(1, 1) = 1.0;
  u(2, 3) = u(3, 2) = 1.0;
  return JointUnitary::from(u, 2, 2);
}

SeparableEnsemble example_4xf(double p1) {
  ComplexVector plus = ComplexVector::Zero(4);
  plus(0) = plus(1) = M_SQRT1_2;
  ComplexVector minus = ComplexVector::Zero(4);
  minus(2) = M_SQRT1_2;
  minus(3) = -M_SQRT1_2;
  std::vector<EnsembleTerm> terms;
  terms.push_back({p1, pure_state(plus), pure_state(ComplexVector::Unit(2, 0))});
  terms.push_back({1.0 - p1, pure_state(minus), pure_state(ComplexVector::Unit(2, 1))});
  return SeparableEnsemble(4, 2, std::move(terms));
}

SeparableEnsemble vqd_2x2() {
  ComplexMatrix e2(2, 2);
  e2 << 0.7, cplx(0.1, 0.2), cplx(0.1, -0.2), 0.3;
  std::vector<EnsembleTerm> terms;
  terms.push_back({0.4, pure_state(ComplexVector::Unit(2, 0)),
                   pure_state(ComplexVector::Unit(2, 0))});
  terms.push_back({0.6, pure_state(ComplexVector::Unit(2, 1)),
                   DensityMatrix::from(e2)});
  return SeparableEnsemble(2, 2, std::move(terms));
}

SeparableEnsemble overlapping_2x2() {
  ComplexVector plus(2);
  plus << M_SQRT1_2, M_SQRT1_2;
  std::vector<EnsembleTerm> terms;
  terms.push_back({0.5, pure_state(plus), pure_state(ComplexVector::Unit(2, 0))});
  terms.push_back({0.5, pure_state(ComplexVector::Unit(2, 0)),
                   pure_state(ComplexVector::Unit(2, 1))});
  return SeparableEnsemble(2, 2, std::move(terms));
}

}  // namespace fixtures

bool ReproResult::pass() const {
  for (const ReproCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

ReproCheck near(std::string name, double got, double want, double tol) {
  std::ostringstream os;
  os.precision(12);
  os << "got " << got << ", expected " << want << " (tol " << tol << ")";
  return {std::move(name), std::abs(got - want) <= tol, os.str()};
}

}  // namespace

ReproResult repro_example_4xf(double p1) {
  const double p2 = 1.0 - p1;
  const SeparableEnsemble e = fixtures::example_4xf(p1);
  const RescaledSet rs = rescaled_matrices(e);

  ComplexMatrix want1 = ComplexMatrix::Zero(4, 4);
  want1.block(0, 0, 2, 2).setConstant(1.0 / p1);
  ComplexMatrix want2 = ComplexMatrix::Zero(4, 4);
  want2.block(2, 2, 2, 2).setConstant(1.0 / p2);

  ReproResult r;
  r.matrices = rs.matrices;
  r.labels = {"rescaled_1", "rescaled_2"};
  r.checks.push_back(near("rescaled_1 entries", max_abs_diff(rs.matrices[0], want1), 0.0, 1e-12));
  r.checks.push_back(near("rescaled_2 entries", max_abs_diff(rs.matrices[1], want2), 0.0, 1e-12));
  for (std::size_t i = 0; i < 2; ++i) {
    const double lo = is_psd(rs.matrices[i]).min_eig;
    std::ostringstream os;
    os << "min eigenvalue " << lo;
    r.checks.push_back({"rescaled_" + std::to_string(i + 1) + " PSD", lo >= -1e-12, os.str()});
  }
  return r;
}

ReproResult repro_bell_cnot() {
  const SLDecomposition d = decompose_blocks(fixtures::bell_state(), 2, 2);
  const InducedMap m = induce(d, fixtures::cnot());
  const ComplexMatrix input = matrix_unit(2, 0, 0);
  const ComplexMatrix out = imap::apply(m, input);

  ComplexMatrix published(2, 2);
  published << 0.5, 0.5, 0.5, 0.0;
  const double lo = hermitian_eigen(out).eigenvalues(0);

  ReproResult r;
  r.matrices = {input, apply_linear(m, input), m.shift, out};
  r.labels = {"input", "linear_part", "shift", "output"};
  r.checks.push_back(near("output entries vs 1/2[[1,1],[1,0]]",
                          max_abs_diff(out, published), 0.0, 1e-12));
  r.checks.push_back(near("output min eigenvalue", lo, (1.0 - std::sqrt(5.0)) / 4.0, 1e-10));

  // The map evaluated on the actual initial marginal must reproduce the
  // directly evolved state.
  const ComplexMatrix rhoA0 = partial_trace(fixtures::bell_state(), 2, 2, Side::E);
  const ComplexMatrix direct = evolve_partial(fixtures::bell_state(), fixtures::cnot());
  std::ostringstream os;
  os.precision(12);
  os << "trace(output) = " << out.trace().real() << ", min eigenvalue = " << lo
     << ", |S[rho_A(0)] - Tr_E[U rho U^dagger]|_max = "
     << max_abs_diff(imap::apply(m, rhoA0), direct);
  r.notes.push_back(os.str());
  return r;
}

}  // namespace imap
