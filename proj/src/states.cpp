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

#include "imap/states.hpp"

#include <cmath>
#include <optional>
#include <sstream>

#include "imap/error.hpp"

namespace imap {

DensityMatrix DensityMatrix::from(ComplexMatrix m, double tol) {
  require_finite(m, "density matrix");
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::Validation, "density matrix: not square");
  }
  const double herm = hermiticity_defect(m);
  if (herm > tol) {
    std::ostringstream os;
    os << "density matrix: not Hermitian (max deviation " << herm << ")";
    throw Error(ErrorKind::Validation, os.str());
  }
  const cplx tr = m.trace();
  if (std::abs(tr - cplx(1.0)) > tol) {
    std::ostringstream os;
    os << "density matrix: trace " << tr.real() << " != 1";
    throw Error(ErrorKind::Validation, os.str());
  }
  const PsdVerdict v = is_psd(m, tol, tol);
  if (!v.psd) {
    std::ostringstream os;
    os << "density matrix: negative eigenvalue " << v.min_eig;
    throw Error(ErrorKind::Validation, os.str());
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix pure_state(const ComplexVector& v) {
  const double n = v.norm();
  if (!(n > 0.0)) throw Error(ErrorKind::Validation, "pure_state: zero vector");
  const ComplexVector u = v / n;
  return DensityMatrix::from(u * u.adjoint());
}

SeparableEnsemble::SeparableEnsemble(Index dimA, Index dimE,
                                     std::vector<EnsembleTerm> terms)
    : dimA_(dimA), dimE_(dimE), terms_(std::move(terms)) {
  if (dimA_ < 1 || dimE_ < 1) {
    throw Error(ErrorKind::Validation, "ensemble: dimensions must be >= 1");
  }
  if (terms_.empty()) {
    throw Error(ErrorKind::Validation, "ensemble: no terms");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const EnsembleTerm& t = terms_[i];
    if (!std::isfinite(t.p) || t.p < 0.0) {
      throw Error(ErrorKind::Validation,
                  "ensemble: term " + std::to_string(i) + " has invalid weight");
    }
    if (t.rhoA.dim() != dimA_ || t.rhoE.dim() != dimE_) {
      throw Error(ErrorKind::Shape, "ensemble: term " + std::to_string(i) +
                                        " has mismatched dimensions");
    }
    total += t.p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    std::ostringstream os;
    os << "ensemble: weights sum to " << total;
    throw Error(ErrorKind::Validation, os.str());
  }
}

std::string to_string(PairClass c) {
  switch (c) {
    case PairClass::UnitTrace: return "UNIT_TRACE";
    case PairClass::ZeroBlock: return "ZERO_BLOCK";
    case PairClass::TracelessNonzero: return "TRACELESS_NONZERO";
  }
  return "?";
}

std::string to_string(SlClass c) { return c == SlClass::SL ? "SL" : "NON_SL"; }

std::string to_string(Route r) {
  switch (r) {
    case Route::RescaledPsd: return "RESCALED_PSD";
    case Route::BlockProjector: return "BLOCK_PROJECTOR";
    case Route::None: return "NONE";
  }
  return "?";
}

ComplexMatrix assemble(const SeparableEnsemble& e) {
  const Index n = e.dimA() * e.dimE();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (const EnsembleTerm& t : e.terms())
    out += t.p * tensor(t.rhoA.mat(), t.rhoE.mat());
  return out;
}

SLDecomposition decompose_blocks(const ComplexMatrix& rhoAE, Index dimA,
                                 Index dimE, BlockTolerances tol) {
  if (dimA < 1 || dimE < 1 || rhoAE.rows() != dimA * dimE) {
    throw Error(ErrorKind::Shape, "decompose_blocks: size is not dimA*dimE");
  }
  DensityMatrix::from(rhoAE);

  SLDecomposition d;
  d.dimA = dimA;
  d.dimE = dimE;
  d.gamma = ComplexMatrix::Zero(dimA, dimA);
  d.blocks.reserve(dimA * dimA);
  d.classes.reserve(dimA * dimA);
  for (Index k = 0; k < dimA; ++k) {
    for (Index l = 0; l < dimA; ++l) {
      ComplexMatrix raw = rhoAE.block(k * dimE, l * dimE, dimE, dimE);
      const cplx tr = raw.trace();
      if (std::abs(tr) > tol.trace) {
        d.gamma(k, l) = tr;
        d.blocks.push_back(raw / tr);
        d.classes.push_back(PairClass::UnitTrace);
      } else if (max_abs(raw) > tol.zero) {
        d.gamma(k, l) = 1.0;
        d.blocks.push_back(std::move(raw));
        d.classes.push_back(PairClass::TracelessNonzero);
      } else {
        d.blocks.push_back(ComplexMatrix::Zero(dimE, dimE));
        d.classes.push_back(PairClass::ZeroBlock);
      }
    }
  }
  return d;
}

ComplexMatrix reassemble(const SLDecomposition& d) {
  const Index n = d.dimA * d.dimE;
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Index k = 0; k < d.dimA; ++k)
    for (Index l = 0; l < d.dimA; ++l)
      if (d.pair_class(k, l) != PairClass::ZeroBlock)
        out.block(k * d.dimE, l * d.dimE, d.dimE, d.dimE) =
            d.gamma(k, l) * d.psi(k, l);
  return out;
}

SlClass classify_sl(const SLDecomposition& d) {
  for (PairClass c : d.classes)
    if (c == PairClass::TracelessNonzero) return SlClass::NonSL;
  return SlClass::SL;
}

ComplexMatrix marginal_coefficients(const SeparableEnsemble& e) {
  ComplexMatrix g = ComplexMatrix::Zero(e.dimA(), e.dimA());
  for (const EnsembleTerm& t : e.terms()) g += t.p * t.rhoA.mat();
  return g;
}

namespace {

struct RescaleAttempt {
  std::optional<RescaledSet> set;
  std::optional<ConditionWitness> failure;
};

RescaleAttempt try_rescale(const SeparableEnsemble& e, BlockTolerances tol) {
  const SLDecomposition d =
      decompose_blocks(assemble(e), e.dimA(), e.dimE(), tol);
  if (classify_sl(d) != SlClass::SL) {
    return {std::nullopt, ConditionWitness{ConditionWitness::Kind::NonSL}};
  }

  const Index n = e.dimA();
  const ComplexMatrix gamma = marginal_coefficients(e);
  RescaledSet rs;
  rs.zero_convention.setConstant(n, n, false);
  for (std::size_t i = 0; i < e.terms().size(); ++i) {
    const EnsembleTerm& t = e.terms()[i];
    const ComplexMatrix& comp = t.rhoA.mat();
    ComplexMatrix r = ComplexMatrix::Zero(n, n);
    for (Index k = 0; k < n; ++k) {
      for (Index l = 0; l < n; ++l) {
        if (std::abs(gamma(k, l)) > tol.trace) {
          r(k, l) = comp(k, l) / gamma(k, l);
          continue;
        }
        rs.zero_convention(k, l) = true;
        // A zero-weight term never reaches the marginal, so its entries
        // cannot cancel anything.
        if (t.p > 0.0 && std::abs(comp(k, l)) > tol.zero) {
          ConditionWitness w{ConditionWitness::Kind::Cancellation};
          w.i = static_cast<int>(i);
          w.k = static_cast<int>(k);
          w.l = static_cast<int>(l);
          w.value = std::abs(comp(k, l));
          return {std::nullopt, w};
        }
      }
    }
    rs.matrices.push_back(std::move(r));
  }
  return {std::move(rs), std::nullopt};
}

}  // namespace

RescaledSet rescaled_matrices(const SeparableEnsemble& e, BlockTolerances tol) {
  RescaleAttempt attempt = try_rescale(e, tol);
  if (attempt.set) return std::move(*attempt.set);
  const ConditionWitness& w = *attempt.failure;
  if (w.kind == ConditionWitness::Kind::NonSL) {
    throw Error(ErrorKind::NonSL, "rescaled_matrices: assembled state is not SL");
  }
  throw Error(ErrorKind::Cancellation, "rescaled_matrices: " + w.describe());
}

std::string ConditionWitness::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::NegativeRescaled:
      os << "rescaled matrix " << i << " has min eigenvalue " << value;
      break;
    case Kind::Cancellation:
      os << "term " << i << " entry (" << k << "," << l << ") = " << value
         << " cancels in the marginal";
      break;
    case Kind::NonSL:
      os << "assembled state is not in the SL class";
      break;
    case Kind::SupportOverlap:
      os << "supports of terms " << i << " and " << j
         << " overlap (||P_i P_j|| = " << value << ")";
      break;
  }
  return os.str();
}

std::vector<Route> ConditionReport::routes() const {
  std::vector<Route> out;
  if (rescaled_psd) out.push_back(Route::RescaledPsd);
  if (block_projector) out.push_back(Route::BlockProjector);
  if (out.empty()) out.push_back(Route::None);
  return out;
}

ComplexMatrix support_projector(const ComplexMatrix& rho, double cutoff) {
  const Spectrum s = hermitian_eigen(rho);
  ComplexMatrix p = ComplexMatrix::Zero(rho.rows(), rho.cols());
  for (Index c = 0; c < s.eigenvalues.size(); ++c) {
    if (s.eigenvalues(c) > cutoff) {
      p += s.eigenvectors.col(c) * s.eigenvectors.col(c).adjoint();
    }
  }
  return p;
}

ConditionReport check_condition(const SeparableEnsemble& e,
                                ConditionTolerances tol) {
  ConditionReport rep;
  const auto& terms = e.terms();

  RescaleAttempt attempt = try_rescale(e, tol.blocks);
  if (attempt.set) {
    rep.rescaled_psd = true;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const PsdVerdict v = is_psd(attempt.set->matrices[i], tol.psd);
      rep.rescaled_min_eigs.push_back(v.min_eig);
      if (terms[i].p > 0.0 && !v.psd) {
        rep.rescaled_psd = false;
        ConditionWitness w{ConditionWitness::Kind::NegativeRescaled};
        w.i = static_cast<int>(i);
        w.value = v.min_eig;
        rep.witnesses.push_back(w);
      }
    }
  } else {
    rep.rescaled_indeterminate = true;
    rep.witnesses.push_back(*attempt.failure);
  }

  // Route (b): pairwise orthogonal supports. Any orthogonal family can be
  // completed to a resolution of the identity by enlarging one projector,
  // so completeness is reported but never fails the route.
  std::vector<ComplexMatrix> supports;
  std::vector<int> owner;
  Index rank_total = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].p <= 0.0) continue;
    supports.push_back(support_projector(terms[i].rhoA.mat(), tol.support_cutoff));
    owner.push_back(static_cast<int>(i));
    rank_total += static_cast<Index>(std::lround(supports.back().trace().real()));
  }
  rep.block_projector = true;
  for (std::size_t a = 0; a < supports.size(); ++a) {
    for (std::size_t b = a + 1; b < supports.size(); ++b) {
      const double overlap = operator_norm(supports[a] * supports[b]);
      if (overlap > tol.orthogonality) {
        rep.block_projector = false;
        ConditionWitness w{ConditionWitness::Kind::SupportOverlap};
        w.i = owner[a];
        w.j = owner[b];
        w.value = overlap;
        rep.witnesses.push_back(w);
      }
    }
  }
  rep.completion_rank = rep.block_projector ? e.dimA() - rank_total : 0;

  rep.holds = rep.rescaled_psd || rep.block_projector;
  return rep;
}

std::vector<ComplexMatrix> component_images(const DensityMatrix& rhoPrime,
                                            const RescaledSet& rs) {
  std::vector<ComplexMatrix> out;
  out.reserve(rs.matrices.size());
  for (const ComplexMatrix& r : rs.matrices) out.push_back(hadamard(rhoPrime.mat(), r));
  return out;
}

}  // namespace imap
