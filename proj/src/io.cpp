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

#include "imap/io.hpp"

#include <cmath>
#include <fstream>

#include "imap/error.hpp"

namespace imap::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorKind::Io, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

Index count_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw Error(ErrorKind::Io, std::string("field '") + key +
                                   "' must be a positive integer");
  }
  return static_cast<Index>(v.get<long long>());
}

double finite_number(const json& v, const char* what) {
  if (!v.is_number()) {
    throw Error(ErrorKind::Io, std::string(what) + ": expected a number");
  }
  const double x = v.get<double>();
  if (!std::isfinite(x)) {
    throw Error(ErrorKind::Validation, std::string(what) + ": not finite");
  }
  return x;
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json data = json::array();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      data.push_back({m(i, j).real(), m(i, j).imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  const Index rows = count_field(j, "rows");
  const Index cols = count_field(j, "cols");
  const json& data = field(j, "data");
  if (!data.is_array() || static_cast<Index>(data.size()) != rows * cols) {
    throw Error(ErrorKind::Io, "matrix: data length must equal rows*cols");
  }
  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index c = 0; c < cols; ++c) {
      const json& z = data[i * cols + c];
      if (!z.is_array() || z.size() != 2) {
        throw Error(ErrorKind::Io, "matrix: entries must be [re, im] pairs");
      }
      m(i, c) = cplx(finite_number(z[0], "matrix entry"),
                     finite_number(z[1], "matrix entry"));
    }
  }
  return m;
}

json ensemble_to_json(const SeparableEnsemble& e) {
  json terms = json::array();
  for (const EnsembleTerm& t : e.terms()) {
    terms.push_back({{"p", t.p},
                     {"rhoA", matrix_to_json(t.rhoA.mat())},
                     {"rhoE", matrix_to_json(t.rhoE.mat())}});
  }
  return {{"dimA", e.dimA()}, {"dimE", e.dimE()}, {"terms", std::move(terms)}};
}

SeparableEnsemble ensemble_from_json(const json& j) {
  const Index dimA = count_field(j, "dimA");
  const Index dimE = count_field(j, "dimE");
  const json& terms = field(j, "terms");
  if (!terms.is_array() || terms.empty()) {
    throw Error(ErrorKind::Io, "ensemble: 'terms' must be a non-empty array");
  }
  std::vector<EnsembleTerm> out;
  for (const json& t : terms) {
    const double p = finite_number(field(t, "p"), "weight");
    ComplexMatrix a = matrix_from_json(field(t, "rhoA"));
    ComplexMatrix b = matrix_from_json(field(t, "rhoE"));
    if (a.rows() != dimA || b.rows() != dimE) {
      throw Error(ErrorKind::Shape, "ensemble: term dimensions do not match dimA/dimE");
    }
    out.push_back({p, DensityMatrix::from(std::move(a)),
                   DensityMatrix::from(std::move(b))});
  }
  return SeparableEnsemble(dimA, dimE, std::move(out));
}

bool is_ensemble_json(const json& j) { return j.is_object() && j.contains("terms"); }

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::Io, path.string() + ": " + ex.what());
  }
}

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

}  // namespace imap::io
