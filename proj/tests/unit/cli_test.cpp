// Copyright 2026 The rankone Authors. All rights reserved.
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

#include "rankone/cli/app.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "rankone/staralg.hpp"
#include "test_util.hpp"

namespace rankone::cli {
namespace {

const std::filesystem::path kData = RANKONE_TEST_DATA;

struct Invocation {
  int code = 0;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "rankone");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (kData / name).string(); }

RatFunc load(const char* name) { return ratfunc_from_json(load_json_arg(data(name), kData), ToleranceConfig{}); }

// Collects every object carrying num/den coefficient arrays.
void collect_functions(const Json& j, std::vector<const Json*>& out) {
  if (j.is_object()) {
    if (j.contains("num") && j.contains("den")) out.push_back(&j);
    for (const auto& [k, v] : j.items()) collect_functions(v, out);
  } else if (j.is_array()) {
    for (const auto& v : j) collect_functions(v, out);
  }
}

TEST(CliSimilar, PositiveExample) {
  const auto res = invoke({"similar", "--phi", data("phi1.json"), "--r", data("r05.json"), "--s", data("zero.json")});
  ASSERT_EQ(res.code, kOk) << res.err;
  const Json j = Json::parse(res.out);
  EXPECT_EQ(j.at("verdict"), "YES");
  const RatFunc t = ratfunc_from_json(j.at("witness"), ToleranceConfig{});
  const RatFunc want = RatFunc::from_num_den(Poly{-0.5}, Poly{1.0, -0.5}, ToleranceConfig{});
  EXPECT_TRUE(testing::CoeffsNear(t, want, 1e-12));
  EXPECT_LT(j.at("residual").get<double>(), 1e-8);
  EXPECT_TRUE(j.at("tolerances").contains("sigma_svd"));
}

TEST(CliSimilar, NegativeExampleShowsLocalTable) {
  const auto res = invoke({"similar", "--phi", data("phiz.json"), "--r", data("neg1.json"), "--s", data("zero.json")});
  ASSERT_EQ(res.code, kOk) << res.err;
  const Json j = Json::parse(res.out);
  EXPECT_EQ(j.at("verdict"), "NO");
  ASSERT_EQ(j.at("cond_b").size(), 1u);
  const Json& row = j.at("cond_b")[0];
  EXPECT_EQ(row.at("order"), 1);
  EXPECT_EQ(row.at("ord_r"), 1);
  EXPECT_EQ(row.at("ord_s"), 0);
  EXPECT_TRUE(j.at("witness").is_null());
}

TEST(CliSimilar, PoleInDiscIsValidationError) {
  const auto res = invoke({"similar", "--phi", data("phi1.json"), "--r", data("bad.json"), "--s", data("zero.json")});
  EXPECT_EQ(res.code, kValidation);
  EXPECT_NE(res.err.find("0.5"), std::string::npos) << res.err;
  EXPECT_TRUE(res.out.empty());
}

TEST(CliSimilar, BoundaryAmbiguousExitCode) {
  const auto res = invoke({"similar", "--phi", data("phi1.json"), "--r", data("one.json"), "--s", R"({"num":[[0,1]],"den":[[1,0]]})"});
  EXPECT_EQ(res.code, kBoundaryAmbiguous);
  EXPECT_EQ(Json::parse(res.out).at("verdict"), "BOUNDARY_AMBIGUOUS");
}

TEST(CliErrors, ZeroPhi) {
  const auto res = invoke({"times", "--phi", data("zero.json"), "--r", data("one.json"), "--s", data("one.json")});
  EXPECT_EQ(res.code, kValidation);
}

TEST(CliErrors, MissingArgument) {
  EXPECT_EQ(invoke({"similar", "--phi", data("phi1.json"), "--r", data("one.json")}).code, kValidation);
}

TEST(CliErrors, MalformedJson) {
  EXPECT_EQ(invoke({"times", "--phi", "{\"num\": [", "--r", data("one.json"), "--s", data("one.json")}).code, kValidation);
}

TEST(CliErrors, UnsoundTruncation) {
  // r = 1/(1 - z/1.001) has an eigenvalue at 1.001/2.001 with slowly decaying
  // eigenvector.
  const std::string r = R"({"poles":[{"at":[1.001,0],"coeffs":[[-1.001,0]]}]})";
  const auto res = invoke({"oracle", "--phi", data("phi1.json"), "--r", r, "--w", "0.50024987506", "--side", "forward", "--N", "64"});
  EXPECT_EQ(res.code, kTruncationUnsound) << res.err;
}

TEST(CliErrors, ToleranceOverrideMustBePositive) {
  EXPECT_EQ(invoke({"times", "--phi", data("phi1.json"), "--r", data("one.json"), "--s", data("one.json"), "--tol-sigma-svd", "-1"}).code, kValidation);
}

TEST(CliTimes, MatchesLibrary) {
  const auto res = invoke({"times", "--phi", data("phiz2.json"), "--r", data("rmix.json"), "--s", data("two.json")});
  ASSERT_EQ(res.code, kOk) << res.err;
  const auto ctx = PhiContext::build(load("phiz2.json"));
  const RatFunc want = times(ctx, load("rmix.json"), load("two.json"));
  const RatFunc got = ratfunc_from_json(Json::parse(res.out).at("result"), ToleranceConfig{});
  EXPECT_TRUE(testing::CoeffsNear(got, want, 1e-12));
}

TEST(CliInvert, BoundaryIsExitThree) {
  const auto res = invoke({"invert", "--phi", data("phi1.json"), "--t", data("one.json")});
  EXPECT_EQ(res.code, kBoundaryAmbiguous);
}

TEST(CliInvert, InverseRoundTrip) {
  const auto res = invoke({"invert", "--phi", data("phiz.json"), "--t", data("one.json")});
  ASSERT_EQ(res.code, kOk) << res.err;
  const Json j = Json::parse(res.out);
  EXPECT_TRUE(j.at("invertible").get<bool>());
  const RatFunc t = ratfunc_from_json(j.at("inverse"), ToleranceConfig{});
  EXPECT_TRUE(testing::CoeffsNear(t, RatFunc::constant(-0.5), 1e-12));
}

TEST(CliReports, PrintedFunctionsRoundTrip) {
  const std::vector<std::vector<std::string>> jobs = {
      {"analyze", "--phi", data("phiz2.json"), "--r", data("rmix.json")},
      {"similar", "--phi", data("phiz.json"), "--r", data("rmix.json"), "--s", data("rmix.json")},
      {"circle", "--phi", data("phiz.json"), "--r", data("rmix.json"), "--s", data("r05.json")},
      {"invert", "--phi", data("phiz2.json"), "--t", data("r05.json")},
  };
  const ToleranceConfig tol;
  for (const auto& args : jobs) {
    const auto res = invoke(args);
    ASSERT_EQ(res.code, kOk) << args[0] << ": " << res.err;
    const Json report = Json::parse(res.out);
    std::vector<const Json*> fs;
    collect_functions(report, fs);
    ASSERT_FALSE(fs.empty());
    for (const Json* f : fs) {
      // Both encodings in the report describe the same function, and
      // printing the parsed function reproduces it.
      const RatFunc from_poles = ratfunc_from_json(*f, tol);
      Json nd = Json::object();
      nd["num"] = f->at("num");
      nd["den"] = f->at("den");
      const RatFunc from_nd = ratfunc_from_json(nd, tol);
      EXPECT_TRUE(testing::CoeffsNear(from_poles, from_nd, 1e-12)) << args[0];
      const RatFunc again = ratfunc_from_json(ratfunc_to_json(from_poles), tol);
      EXPECT_TRUE(testing::CoeffsNear(again, from_poles, 1e-12)) << args[0];
    }
  }
}

TEST(CliReports, Deterministic) {
  const std::vector<std::string> args = {"analyze", "--phi", data("phiz2.json"), "--r", data("rmix.json")};
  const auto a = invoke(args), b = invoke(args);
  EXPECT_EQ(a.out, b.out);
  const std::vector<std::string> o = {"oracle", "--phi", data("phiz.json"), "--r", data("rmix.json"), "--k", "2"};
  EXPECT_EQ(invoke(o).out, invoke(o).out);
}

TEST(CliReports, PrettyAndText) {
  const auto pretty = invoke({"times", "--phi", data("phi1.json"), "--r", data("one.json"), "--s", data("one.json"), "--pretty"});
  ASSERT_EQ(pretty.code, kOk);
  EXPECT_NE(pretty.out.find('\n'), pretty.out.size() - 1);
  EXPECT_TRUE(Json::parse(pretty.out).at("result").contains("text"));
  const auto text = invoke({"similar", "--phi", data("phi1.json"), "--r", data("r05.json"), "--s", data("zero.json"), "--format", "text"});
  ASSERT_EQ(text.code, kOk);
  EXPECT_NE(text.out.find("verdict: YES"), std::string::npos);
}

TEST(CliOracle, AgreesAtEigenvalue) {
  const auto res = invoke({"oracle", "--phi", data("phi1.json"), "--r", data("two.json"), "--w", "0.5", "--k", "2"});
  ASSERT_EQ(res.code, kOk) << res.err;
  const Json j = Json::parse(res.out);
  EXPECT_TRUE(j.at("all_agree").get<bool>());
  bool saw_forward = false;
  for (const auto& row : j.at("rows")) {
    if (row.at("side") != "forward") continue;
    saw_forward = true;
    EXPECT_EQ(row.at("kernel_dim"), 1);
    EXPECT_EQ(row.at("formula"), 1);
  }
  EXPECT_TRUE(saw_forward);
}

TEST(CliMatrix, JsonExport) {
  const auto res = invoke({"matrix", "--phi", data("phiz.json"), "--r", data("one.json"), "--N", "8"});
  ASSERT_EQ(res.code, kOk) << res.err;
  const Json j = Json::parse(res.out);
  const Json& k = j.at("K_r");
  EXPECT_EQ(k.at("dimension"), 8);
  EXPECT_EQ(k.at("entries").size(), 8u);
  // K_1 = -e0 e0^T for phi = z
  EXPECT_DOUBLE_EQ(k.at("entries")[0][0][0].get<double>(), -1.0);
  EXPECT_TRUE(j.contains("U_r"));
  EXPECT_TRUE(j.contains("K_toeplitz"));
}

TEST(CliMatrix, CsvExportToFile) {
  const auto path = std::filesystem::temp_directory_path() / "rankone_cli_test_matrix.csv";
  const auto res = invoke({"matrix", "--phi", data("phi1.json"), "--r", data("two.json"), "--N", "4", "--which", "U_r", "--format", "csv", "--output", path.string()});
  ASSERT_EQ(res.code, kOk) << res.err;
  std::ifstream in(path);
  std::string first, header, row0;
  std::getline(in, first);
  EXPECT_NE(first.find("matrix=U_r"), std::string::npos) << first;
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_GE(lines.size(), 6u);
  EXPECT_NE(lines[0].find("dimension=4"), std::string::npos);
  EXPECT_EQ(lines[1].rfind("re_0,im_0", 0), 0u);
  // U_r = shift + 2 e0 e0^T
  EXPECT_EQ(lines[2].rfind("2,0,1,0,0,0,0,0", 0), 0u) << lines[2];
  std::filesystem::remove(path);
}

TEST(CliBatch, RunsJobsAndReportsWorstExit) {
  const auto dir = std::filesystem::temp_directory_path() / "rankone_cli_test_batch";
  std::filesystem::create_directories(dir);
  const Json manifest = Json::parse(R"({"jobs": [
    {"command": "similar", "phi": {"num": [[1, 0]], "den": [[1, 0]]}, "r": {"num": [[0.5, 0]], "den": [[1, 0]]}, "s": {"num": [[0, 0]], "den": [[1, 0]]}},
    {"command": "times", "phi": {"num": [[0, 0], [1, 0]], "den": [[1, 0]]}, "r": {"num": [[1, 0]], "den": [[1, 0]]}, "s": {"num": [[1, 0]], "den": [[1, 0]]}},
    {"command": "similar", "phi": {"num": [[1, 0]], "den": [[1, 0]]}, "r": {"num": [[1, 0]], "den": [[-0.5, 0], [1, 0]]}, "s": {"num": [[0, 0]], "den": [[1, 0]]}}
  ]})");
  const auto path = dir / "manifest.json";
  std::ofstream(path) << manifest.dump();
  const auto res = invoke({"--batch", path.string()});
  EXPECT_EQ(res.code, kValidation);
  const Json j = Json::parse(res.out);
  ASSERT_EQ(j.at("jobs").size(), 3u);
  EXPECT_EQ(j.at("jobs")[0].at("exit_code"), 0);
  EXPECT_EQ(j.at("jobs")[0].at("report").at("verdict"), "YES");
  EXPECT_EQ(j.at("jobs")[1].at("exit_code"), 0);
  EXPECT_EQ(j.at("jobs")[2].at("exit_code"), kValidation);
  // The batch result matches the single-job run.
  const auto single = invoke({"times", "--phi", R"({"num":[[0,0],[1,0]],"den":[[1,0]]})", "--r", data("one.json"), "--s", data("one.json")});
  EXPECT_EQ(j.at("jobs")[1].at("report"), Json::parse(single.out));
  std::filesystem::remove_all(dir);
}

TEST(CliParsing, ComplexArgument) {
  EXPECT_EQ(parse_complex("0.5"), Complex(0.5, 0.0));
  EXPECT_EQ(parse_complex("0.5,-0.25"), Complex(0.5, -0.25));
  EXPECT_THROW(parse_complex("x"), std::exception);
}

}  // namespace
}  // namespace rankone::cli
