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

#include "imap/maps.hpp"
#include "imap/states.hpp"

namespace imap {

namespace fixtures {

/// |Phi+><Phi+| with |Phi+> = (|00> + |11>)/sqrt(2).
ComplexMatrix bell_state();

/// Control on A, target on E.
JointUnitary cnot();

/// Two-term 4 (x) f ensemble: |+><+| on the {0,1} block with rhoE = |0><0|,
/// |-><-| on the {2,3} block with rhoE = |1><1| (f = 2), weights p1, 1 - p1.
SeparableEnsemble example_4xf(double p1);

/// Orthogonal rank-one components |k><k| with distinct environment states.
SeparableEnsemble vqd_2x2();

/// |+><+| and |0><0| components: supports overlap.
SeparableEnsemble overlapping_2x2();

}  // namespace fixtures

struct ReproCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ReproResult {
  std::vector<ComplexMatrix> matrices;  // regenerated fixture matrices
  std::vector<std::string> labels;
  std::vector<ReproCheck> checks;
  /// Informational lines that do not affect pass().
  std::vector<std::string> notes;

  bool pass() const;
};

/// Rescaled matrices of example_4xf(p1): entries 1/p1 on the upper block and
/// 1/p2 on the lower block, both PSD.
ReproResult repro_example_4xf(double p1);

/// Bell state evolved by CNOT and applied to |0><0|. Checked against the
/// published output 1/2 [[1,1],[1,0]] and its eigenvalue (1 - sqrt 5)/4.
ReproResult repro_bell_cnot();

}  // namespace imap
