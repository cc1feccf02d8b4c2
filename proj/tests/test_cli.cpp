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

#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "imap/io.hpp"
#include "imap/repro.hpp"
#include "imap/search.hpp"
#include "test_support.hpp"

using namespace imap;
using namespace imap::testing;
using imap::io::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string put(const std::string& name, const json& j) {
  const auto dir = std::filesystem::temp_directory_path() / "imap_cli_tests";
  std::filesystem::create_directories(dir);
  const auto p = dir / name;
  io::write_json(p, j);
  return p.string();
}

std::string put_matrix(const std::string& name, const ComplexMatrix& m) {
  return put(name, io::matrix_to_json(m));
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("check") {
  const Run a = run({"check", put("4xf.json", io::ensemble_to_json(fixtures::example_4xf(0.5)))});
  CHECK(a.code == cli::kOk);
  const json j = a.parsed();
  CHECK(j["condition"]["holds"] == true);
  CHECK(j["vqd"]["status"] == "VQD");
  CHECK(j["sl_class"] == "SL");
  CHECK(j["config"].contains("seed"));

  CHECK(run({"check", put("vqd.json", io::ensemble_to_json(fixtures::vqd_2x2()))}).code == cli::kOk);
  const Run bad = run({"check", put("overlap.json", io::ensemble_to_json(fixtures::overlapping_2x2()))});
  CHECK(bad.code == cli::kConditionFails);
  CHECK(bad.parsed()["condition"]["holds"] == false);
}

TEST_CASE("induce on the Bell state") {
  const std::string state = put_matrix("bell.json", fixtures::bell_state());
  const std::string u = put_matrix("cnot.json", fixtures::cnot().mat());
  const std::string in = put_matrix("zero.json", matrix_unit(2, 0, 0));
  const auto choi_path = std::filesystem::temp_directory_path() / "imap_cli_tests" / "choi.json";
  const Run r = run({"induce", state, u, in, "--dim-a", "2", "--choi", choi_path.string()});
  REQUIRE(r.code == cli::kOk);
  const json j = r.parsed();
  ComplexMatrix want(2, 2);
  want << 1.0, 0.5, 0.5, 0.0;
  CHECK(max_abs_diff(io::matrix_from_json(j["output"]), want) < 1e-12);
  CHECK(j["output_min_eig"].get<double>() == doctest::Approx((1.0 - std::sqrt(2.0)) / 2.0));
  CHECK(j["classification"] == "NON_POSITIVE");
  CHECK(j["sl_class"] == "NON_SL");
  CHECK(j["positivity"]["status"] == "VIOLATED");
  const ComplexMatrix c = io::matrix_from_json(io::read_json(choi_path));
  CHECK(c.rows() == 4);
  CHECK(max_abs_diff(c.block(0, 0, 2, 2), matrix_unit(2, 0, 0)) < 1e-12);

  // Without --dim-a a bare matrix is ambiguous.
  CHECK(run({"induce", state, u}).code == cli::kUsage);
}

TEST_CASE("induce leaves a product state's input untouched under the identity") {
  Rng rng(1);
  const SeparableEnsemble e(2, 3, {{1.0, random_density(2, rng), random_density(3, rng)}});
  const ComplexMatrix in = random_density(2, rng).mat();
  const Run r = run({"induce", put("prod.json", io::ensemble_to_json(e)),
                     put_matrix("id6.json", ComplexMatrix::Identity(6, 6)), put_matrix("in2.json", in)});
  REQUIRE(r.code == cli::kOk);
  const json j = r.parsed();
  CHECK(max_abs_diff(io::matrix_from_json(j["output"]), in) < 1e-12);
  CHECK(j["cp"] == "CP");
  CHECK(j["classification"] == "CP");
}

TEST_CASE("induce on the block example with a Haar unitary") {
  Rng rng(2);
  const auto out_path = std::filesystem::temp_directory_path() / "imap_cli_tests" / "out.json";
  const Run r = run({"induce", put("4xf.json", io::ensemble_to_json(fixtures::example_4xf(0.7))),
                     put_matrix("haar8.json", haar_unitary(4, 2, 77).mat()),
                     put_matrix("in4.json", random_density(4, rng).mat()), "--out", out_path.string(),
                     "--budget", "100"});
  REQUIRE(r.code == cli::kOk);
  const json j = r.parsed();
  CHECK(j["output_trace"].get<double>() == doctest::Approx(1.0));
  CHECK(j["output_min_eig"].get<double>() >= -1e-9);
  CHECK(j["config"]["budget"] == 100);
  CHECK(io::matrix_from_json(io::read_json(out_path)) == io::matrix_from_json(j["output"]));
}

TEST_CASE("discord") {
  const Run bell = run({"discord", put_matrix("bell.json", fixtures::bell_state()), "--dim-a", "2"});
  CHECK(bell.code == cli::kOk);
  CHECK(bell.parsed()["status"] == "NONZERO");
  const Run vqd = run({"discord", put("vqd.json", io::ensemble_to_json(fixtures::vqd_2x2()))});
  CHECK(vqd.code == cli::kOk);
  CHECK(vqd.parsed()["status"] == "VQD");
}

TEST_CASE("hunt reports preconditions") {
  const Run v = run({"hunt", put("vqd.json", io::ensemble_to_json(fixtures::vqd_2x2())), "--trials", "3"});
  CHECK(v.code == cli::kConditionFails);
  CHECK(v.parsed()["error"] == "PRECONDITION_VQD");
  const Run o =
      run({"hunt", put("overlap.json", io::ensemble_to_json(fixtures::overlapping_2x2())), "--trials", "3"});
  CHECK(o.code == cli::kConditionFails);
  CHECK(o.parsed()["error"] == "PRECONDITION_THEOREM");
  CHECK(o.parsed()["config"]["trials"] == 3);
}

TEST_CASE("repro") {
  const Run ok = run({"repro", "example-4xf", "--p1", "0.25"});
  CHECK(ok.code == cli::kOk);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(run({"repro", "nosuch"}).code == cli::kUsage);
}

TEST_CASE("errors map to exit codes") {
  const std::string state = put_matrix("bell.json", fixtures::bell_state());
  CHECK(run({"induce", state, put_matrix("id3.json", ComplexMatrix::Identity(3, 3)), "--dim-a", "2"}).code ==
        cli::kDimension);
  CHECK(run({"induce", state, put_matrix("cnot.json", fixtures::cnot().mat()),
             put_matrix("in3.json", ComplexMatrix::Identity(3, 3) / 3.0), "--dim-a", "2"})
            .code == cli::kDimension);
  CHECK(run({"check", "/nonexistent/file.json"}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}

}  // TEST_SUITE
