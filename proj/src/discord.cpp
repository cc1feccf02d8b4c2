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

#include "imap/discord.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "imap/error.hpp"
#include "imap/random.hpp"
#include "imap/states.hpp"

namespace imap {

std::string to_string(DiscordStatus s) {
  switch (s) {
    case DiscordStatus::VQD: return "VQD";
    case DiscordStatus::Nonzero: return "NONZERO";
    case DiscordStatus::Indeterminate: return "INDETERMINATE";
  }
  return "?";
}

double pinching_defect(const ComplexMatrix& rhoAE, const ComplexMatrix& basis,
                       Index dimA, Index dimE) {
  if (basis.rows() != dimA || basis.cols() != dimA ||
      rhoAE.rows() != dimA * dimE || rhoAE.cols() != dimA * dimE) {
    throw Error(ErrorKind::Shape, "pinching_defect: dimension mismatch");
  }
  const double unitarity =
      max_abs(basis.adjoint() * basis - ComplexMatrix::Identity(dimA, dimA));
  if (unitarity > 1e-10) {
    std::ostringstream os;
    os << "pinching_defect: basis is not unitary (defect " << unitarity << ")";
    throw Error(ErrorKind::Validation, os.str());
  }
  const ComplexMatrix idE = ComplexMatrix::Identity(dimE, dimE);
  ComplexMatrix pinched = ComplexMatrix::Zero(rhoAE.rows(), rhoAE.cols());
  for (Index k = 0; k < dimA; ++k) {
    const ComplexMatrix proj =
        tensor(basis.col(k) * basis.col(k).adjoint(), idE);
    pinched += proj * rhoAE * proj;
  }
  return max_abs(pinched - rhoAE);
}

namespace {

bool nondegenerate(const Eigen::VectorXd& ev, double gap) {
  for (Index i = 1; i < ev.size(); ++i)
    if (ev(i) - ev(i - 1) <= gap) return false;
  return true;
}

// Tr_E[rho (I (x) G)]
ComplexMatrix probe(const ComplexMatrix& rho, const ComplexMatrix& g,
                    Index dimA, Index dimE) {
  return partial_trace(
      rho * tensor(ComplexMatrix::Identity(dimA, dimA), g), dimA, dimE,
      Side::E);
}

double commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return max_abs(a * b - b * a);
}

}  // namespace

DiscordVerdict has_vqd(const ComplexMatrix& rhoAE, Index dimA, Index dimE,
                       DiscordTolerances tol, std::uint64_t seed) {
  if (dimA < 1 || dimE < 1 || rhoAE.rows() != dimA * dimE) {
    throw Error(ErrorKind::Shape, "has_vqd: size is not dimA*dimE");
  }
  DensityMatrix::from(rhoAE);

  const ComplexMatrix rhoA = partial_trace(rhoAE, dimA, dimE, Side::E);
  const Spectrum marginal = hermitian_eigen(rhoA);

  DiscordVerdict out;
  out.basis = marginal.eigenvectors;
  out.residual = pinching_defect(rhoAE, out.basis, dimA, dimE);

  if (nondegenerate(marginal.eigenvalues, tol.degeneracy)) {
    // The classical basis, if any, must diagonalize rho_A, and a
    // nondegenerate rho_A fixes it up to phases.
    out.status = out.residual <= tol.pinching ? DiscordStatus::VQD
                                              : DiscordStatus::Nonzero;
    return out;
  }
  if (out.residual <= tol.pinching) {
    out.status = DiscordStatus::VQD;
    return out;
  }

  std::array<ComplexMatrix, 2> probes;
  for (std::size_t j = 0; j < probes.size(); ++j) {
    Rng rng(derive_seed(seed, j));
    ComplexMatrix g = random_hermitian(dimE, rng);
    g /= std::max(operator_norm(g), 1e-300);
    probes[j] = probe(rhoAE, g, dimA, dimE);
  }
  double defect = std::max(hermiticity_defect(probes[0]),
                           hermiticity_defect(probes[1]));
  defect = std::max(defect, commutator(probes[0], probes[1]));
  defect = std::max(defect, commutator(probes[0], rhoA));
  defect = std::max(defect, commutator(probes[1], rhoA));
  out.probe_defect = defect;
  if (defect > tol.commutator) {
    out.status = DiscordStatus::Nonzero;
    return out;
  }

  // Generic combination of the commuting family; its eigenbasis refines every
  // degeneracy the probes can resolve.
  Rng rng(derive_seed(seed, 2));
  std::uniform_real_distribution<double> coeff(0.5, 1.5);
  const double c0 = coeff(rng);
  const double c1 = coeff(rng);
  const ComplexMatrix combo =
      rhoA + c0 * 0.5 * (probes[0] + probes[0].adjoint()) +
      c1 * 0.5 * (probes[1] + probes[1].adjoint());
  const ComplexMatrix candidate = hermitian_eigen(combo, 1e-6).eigenvectors;
  const double residual = pinching_defect(rhoAE, candidate, dimA, dimE);
  if (residual <= tol.pinching) {
    out.status = DiscordStatus::VQD;
    out.basis = candidate;
    out.residual = residual;
  } else {
    out.status = DiscordStatus::Indeterminate;
  }
  return out;
}

}  // namespace imap
