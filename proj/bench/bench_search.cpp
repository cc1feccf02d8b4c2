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

// Parallel kernels against their serial references: positivity probe and
// trial scan. Usage: imap_bench [trials] [budget]

#include <omp.h>

#include <cstdio>
#include <cstdlib>

#include "imap/maps.hpp"
#include "imap/random.hpp"
#include "imap/repro.hpp"
#include "imap/search.hpp"

using namespace imap;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const double t0 = omp_get_wtime();
    f();
    best = std::min(best, omp_get_wtime() - t0);
  }
  return best;
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-28s serial %9.4fs  parallel %9.4fs  speedup %5.2fx\n", name, serial, parallel,
              serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  const Index trials = argc > 1 ? std::atol(argv[1]) : 200;
  const Index budget = argc > 2 ? std::atol(argv[2]) : 500;
  std::printf("threads %d, trials %ld, budget %ld\n", omp_get_max_threads(), static_cast<long>(trials),
              static_cast<long>(budget));

  const SeparableEnsemble e = fixtures::example_4xf(0.5);
  const SLDecomposition d = decompose_blocks(assemble(e), 4, 2);

  const InducedMap m = induce(d, haar_unitary(4, 2, 1));
  const ProbeOptions opt{.budget = budget * 20, .seed = 1};
  PositivityVerdict a, b;
  const double ps = best_of(3, [&] { a = probe_positivity_serial(m, opt); });
  const double pp = best_of(3, [&] { b = probe_positivity(m, opt); });
  row("probe_positivity", ps, pp);

  const SearchConfig cfg{.trials = trials, .positivity_budget = budget, .seed = 2};
  std::vector<CandidateReport> s, p;
  const double ss = best_of(1, [&] { s = scan_serial(d, cfg); });
  const double sp = best_of(1, [&] { p = scan(d, cfg); });
  row("scan", ss, sp);

  bool same = a.min_eig == b.min_eig && s.size() == p.size();
  for (std::size_t i = 0; same && i < s.size(); ++i) same = s[i].choi_min_eig == p[i].choi_min_eig;
  std::printf("results identical: %s\n", same ? "yes" : "NO");
  return same ? 0 : 1;
}
