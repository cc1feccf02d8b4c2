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

#include "imap/search.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "imap/discord.hpp"
#include "imap/error.hpp"
#include "imap/random.hpp"

namespace imap {

std::string to_string(Classification c) {
  switch (c) {
    case Classification::CP: return "CP";
    case Classification::PositiveNotCpCandidate: return "POSITIVE_NOT_CP_CANDIDATE";
    case Classification::NonPositive: return "NON_POSITIVE";
    case Classification::Affine: return "AFFINE";
  }
  return "?";
}

std::string to_string(UnitaryFamily f) {
  return f == UnitaryFamily::Haar ? "HAAR" : "GENERATOR";
}

JointUnitary haar_unitary(Index dimA, Index dimE, std::uint64_t seed) {
  const Index n = dimA * dimE;
  if (dimA < 1 || dimE < 1) {
    throw Error(ErrorKind::Validation, "haar_unitary: dimension must be >= 1");
  }
  Rng rng(seed);
  const ComplexMatrix z = gaussian_matrix(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return JointUnitary::from(std::move(q), dimA, dimE);
}

ComplexMatrix generator_hermitian(std::span<const double> params, Index dim) {
  if (dim < 1 || static_cast<Index>(params.size()) != dim * dim) {
    throw Error(ErrorKind::Shape, "generator: expected dim^2 = " +
                                      std::to_string(dim * dim) +
                                      " parameters, got " +
                                      std::to_string(params.size()));
  }
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  std::size_t p = 0;
  for (Index i = 0; i < dim; ++i) h(i, i) = params[p++];
  for (Index i = 0; i < dim; ++i) {
    for (Index j = i + 1; j < dim; ++j) {
      const cplx v(params[p], params[p + 1]);
      p += 2;
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

JointUnitary generator_unitary(std::span<const double> params, Index dimA,
                               Index dimE) {
  const Spectrum s = hermitian_eigen(generator_hermitian(params, dimA * dimE));
  const Eigen::VectorXcd phases =
      (cplx(0.0, 1.0) * s.eigenvalues.cast<cplx>()).array().exp();
  ComplexMatrix u =
      s.eigenvectors * phases.asDiagonal() * s.eigenvectors.adjoint();
  return JointUnitary::from(std::move(u), dimA, dimE);
}

JointUnitary trial_unitary(const SearchConfig& cfg, Index dimA, Index dimE,
                           Index trial) {
  const std::uint64_t seed = derive_seed(cfg.seed, 2 * std::uint64_t(trial));
  if (cfg.family == UnitaryFamily::Haar) return haar_unitary(dimA, dimE, seed);

  std::vector<double> params = cfg.generator_params;
  if (trial > 0) {
    Rng rng(seed);
    std::normal_distribution<double> normal(0.0, cfg.generator_spread);
    for (double& x : params) x += normal(rng);
  }
  return generator_unitary(params, dimA, dimE);
}

CandidateReport classify(const SLDecomposition& d, const JointUnitary& u,
                         const SearchConfig& cfg, std::uint64_t probe_seed) {
  const InducedMap m = induce(d, u);
  const CpVerdict cp = is_cp(m, cfg.cp_tol);

  ProbeOptions opt;
  opt.budget = cfg.positivity_budget;
  opt.seed = probe_seed;
  opt.tol = cfg.positivity_tol;

  CandidateReport r{.trial = 0,
                    .probe_seed = probe_seed,
                    .unitary = u,
                    .choi_min_eig = cp.min_eig,
                    .shift_norm = cp.shift_norm,
                    .positivity = probe_positivity_serial(m, opt)};
  if (r.positivity.status == PositivityStatus::Violated) {
    r.classification = Classification::NonPositive;
  } else if (r.shift_norm > cfg.shift_tol) {
    r.classification = Classification::Affine;
  } else if (r.choi_min_eig >= -cfg.cp_tol) {
    r.classification = Classification::CP;
  } else {
    r.classification = Classification::PositiveNotCpCandidate;
  }
  return r;
}

CandidateReport classify(const SeparableEnsemble& e, const JointUnitary& u,
                         const SearchConfig& cfg, std::uint64_t probe_seed) {
  return classify(decompose_blocks(assemble(e), e.dimA(), e.dimE()), u, cfg,
                  probe_seed);
}

namespace {

void check_config(const SearchConfig& cfg) {
  if (cfg.trials < 1 || cfg.positivity_budget < 1) {
    throw Error(ErrorKind::Validation, "search: trials and budget must be >= 1");
  }
}

CandidateReport run_trial(const SLDecomposition& d, const SearchConfig& cfg,
                          Index t) {
  CandidateReport r =
      classify(d, trial_unitary(cfg, d.dimA, d.dimE, t), cfg,
               derive_seed(cfg.seed, 2 * std::uint64_t(t) + 1));
  r.trial = t;
  return r;
}

std::vector<CandidateReport> collect(std::vector<std::optional<CandidateReport>>& slots) {
  std::vector<CandidateReport> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace

std::vector<CandidateReport> scan_serial(const SLDecomposition& d,
                                         const SearchConfig& cfg) {
  check_config(cfg);
  std::vector<CandidateReport> out;
  out.reserve(cfg.trials);
  for (Index t = 0; t < cfg.trials; ++t) out.push_back(run_trial(d, cfg, t));
  return out;
}

std::vector<CandidateReport> scan(const SLDecomposition& d,
                                  const SearchConfig& cfg) {
  check_config(cfg);
  std::vector<std::optional<CandidateReport>> slots(cfg.trials);
#pragma omp parallel for schedule(dynamic)
  for (Index t = 0; t < cfg.trials; ++t) slots[t] = run_trial(d, cfg, t);
  return collect(slots);
}

std::vector<CandidateReport> hunt(const SeparableEnsemble& e,
                                  const SearchConfig& cfg) {
  check_config(cfg);
  const ConditionReport cond = check_condition(e);
  if (!cond.holds) {
    std::string why = "hunt: positivity condition does not hold";
    if (!cond.witnesses.empty()) why += " (" + cond.witnesses.front().describe() + ")";
    throw Error(ErrorKind::PreconditionTheorem, why);
  }
  const ComplexMatrix rho = assemble(e);
  const DiscordVerdict vqd = has_vqd(rho, e.dimA(), e.dimE(), {}, cfg.seed);
  if (vqd.status == DiscordStatus::VQD) {
    throw Error(ErrorKind::PreconditionVqd,
                "hunt: initial state has vanishing discord (pinching residual " +
                    std::to_string(vqd.residual) + ")");
  }

  std::vector<CandidateReport> all = scan(decompose_blocks(rho, e.dimA(), e.dimE()), cfg);
  std::vector<CandidateReport> hits;
  for (CandidateReport& r : all) {
    if (r.classification == Classification::PositiveNotCpCandidate &&
        r.choi_min_eig < cfg.candidate_threshold) {
      hits.push_back(std::move(r));
    }
  }
  std::stable_sort(hits.begin(), hits.end(),
                   [](const CandidateReport& a, const CandidateReport& b) {
                     return a.choi_min_eig < b.choi_min_eig;
                   });
  return hits;
}

bool reverify_candidate(const SLDecomposition& d, const CandidateReport& r,
                        const SearchConfig& cfg) {
  const CandidateReport again = classify(d, r.unitary, cfg, r.probe_seed);
  return again.classification == r.classification &&
         again.choi_min_eig == r.choi_min_eig &&
         (r.classification != Classification::PositiveNotCpCandidate ||
          again.choi_min_eig < cfg.candidate_threshold);
}

}  // namespace imap
