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

#include <filesystem>

#include <json.hpp>

#include "imap/hermlin.hpp"
#include "imap/states.hpp"

namespace imap::io {

using json = nlohmann::json;

/// {"rows": r, "cols": c, "data": [[re, im], ...]} in row-major order.
json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

/// {"dimA": d, "dimE": f, "terms": [{"p": w, "rhoA": M, "rhoE": M}, ...]}
json ensemble_to_json(const SeparableEnsemble& e);
SeparableEnsemble ensemble_from_json(const json& j);

bool is_ensemble_json(const json& j);

json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const json& j);

}  // namespace imap::io
