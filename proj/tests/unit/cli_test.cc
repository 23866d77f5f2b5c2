// Copyright 2026 The lingopt Authors
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

#include "cli.h"

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "golden.h"
#include "lingopt/codebook.h"
#include "lingopt/record_io.h"

namespace lingopt::cli {
namespace {

using lingopt::testing::golden_diff;
using lingopt::testing::golden_path;
using lingopt::testing::read_file;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "lingopt_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

struct GoldenCase {
  const char* file;
  std::vector<std::string> args;
};

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, MatchesFile) {
  const auto& c = GetParam();
  const Result r = run_cli(c.args);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto diffs = golden_diff(r.out, read_file(golden_path(c.file)));
  for (const auto& d : diffs) ADD_FAILURE() << c.file << ": " << d;
  if (!diffs.empty()) std::cerr << r.out;
}

INSTANTIATE_TEST_SUITE_P(
    Fixtures, Golden,
    ::testing::Values(
        GoldenCase{"solve_pr_case_solop_hma.txt",
                   {"solve", "pr", "--codebook", "paper-hma", "--problem",
                    "case-solop"}},
        GoldenCase{"solve_pr_case_solop_ia.txt",
                   {"solve", "pr", "--codebook", "paper-ia", "--problem",
                    "case-solop"}},
        GoldenCase{"solve_pr_case_molop_hma.txt",
                   {"solve", "pr", "--codebook", "paper-hma", "--problem",
                    "case-molop"}},
        GoldenCase{"solve_pr_case_molop_ia.txt",
                   {"solve", "pr", "--codebook", "paper-ia", "--problem",
                    "case-molop"}},
        GoldenCase{"solve_two_tuple_case_solop.txt",
                   {"solve", "two-tuple", "--problem", "case-solop"}},
        GoldenCase{"solve_two_tuple_case_molop.txt",
                   {"solve", "two-tuple", "--problem", "case-molop"}},
        GoldenCase{"codebook_show_paper_hma.txt",
                   {"codebook", "show", "--codebook", "paper-hma"}},
        GoldenCase{"codebook_show_paper_ia.txt",
                   {"codebook", "show", "--codebook", "paper-ia"}},
        GoldenCase{"solve_tsukamoto_sm_solop.txt",
                   {"solve", "tsukamoto", "--problem", "sm-solop"}},
        GoldenCase{"solve_tsukamoto_sm_molop.txt",
                   {"solve", "tsukamoto", "--problem", "sm-molop"}}),
    [](const auto& info) {
      std::string n = info.param.file;
      n = n.substr(0, n.find('.'));
      return n;
    });

TEST(Cli, RepeatedRunsAreIdentical) {
  const std::vector<std::string> args = {"solve", "pr", "--codebook",
                                         "paper-ia", "--problem", "case-molop"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

TEST(Cli, CsvFormat) {
  const Result r = run_cli({"solve", "pr", "--codebook", "paper-hma",
                            "--problem", "case-solop", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("SS1,overall,"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"solve", "pr"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"solve", "tsukamoto", "--problem", "case-solop"}).code,
            kExitUsage);
  EXPECT_EQ(run_cli({"solve", "pr", "--problem", "sm-solop"}).code,
            kExitUsage);
  EXPECT_EQ(run_cli({"solve", "pr", "--problem", "case-solop", "--format",
                     "xml"})
                .code,
            kExitUsage);
  EXPECT_EQ(run_cli({"codebook", "sample"}).code, kExitUsage);
}

TEST(Cli, DataErrors) {
  const Result r = run_cli({"solve", "pr", "--codebook", "/no/such/codebook",
                            "--problem", "case-solop"});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
  EXPECT_EQ(run_cli({"codebook", "show", "--codebook", "nope"}).code,
            kExitData);
}

TEST(Cli, EngineErrors) {
  const auto path = scratch("nofire.prob");
  write_text_file(path.string(), R"(lingopt-problem 1
objective o max
rule r if=[VP, VP] then=[A]
alternative x input=[VG, VG]
)");
  const Result r = run_cli({"solve", "pr", "--codebook", "paper-hma",
                            "--problem", path.string()});
  EXPECT_EQ(r.code, kExitEngine) << r.err;

  const auto drift = scratch("drift.prob");
  write_text_file(drift.string(), R"(lingopt-problem 1
terms [VP, P, A, G]
objective o max
rule r1 if=[A, A] then=[A]
rule r2 if=[P, A] then=[G]
alternative x input=[A, A]
)");
  const Result w = run_cli({"solve", "two-tuple", "--problem", drift.string()});
  EXPECT_EQ(w.code, 0);
  EXPECT_NE(w.err.find("warning:"), std::string::npos);
  EXPECT_EQ(run_cli({"solve", "two-tuple", "--problem", drift.string(),
                     "--strict-scale"})
                .code,
            kExitEngine);
}

TEST(ExportFou, CodebookHasTenPolygons) {
  const Result r = run_cli({"export-fou", "--codebook", "paper-hma"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto polys = parse_polygons(r.out, "stdout");
  ASSERT_EQ(polys.size(), 10u);
  EXPECT_EQ(polys[0].name, "VP");
  EXPECT_EQ(polys[0].curve, "UMF");
  EXPECT_EQ(polys[1].curve, "LMF");
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "VP,UMF,0.0000,0.0000,0.0000,1.0000,2.0400,1.0000,3.8400,0.0000");
}

TEST(ExportFou, FirstSynthesizedConsequent) {
  const Result r = run_cli({"export-fou", "--codebook", "paper-hma",
                            "--problem", "case-solop", "--items",
                            "consequents"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto polys = parse_polygons(r.out, "stdout");
  ASSERT_EQ(polys.size(), 8u);
  const auto& umf = polys[0];
  ASSERT_EQ(umf.vertices.size(), 4u);
  const double want[4][2] = {{0.46, 0}, {1.2, 1}, {5.03, 1}, {6.71, 0}};
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(umf.vertices[i].first, want[i][0], 0.05);
    EXPECT_DOUBLE_EQ(umf.vertices[i].second, want[i][1]);
  }
}

TEST(ExportFou, OutputsAreTraced) {
  const Result r = run_cli({"export-fou", "--codebook", "paper-hma",
                            "--problem", "case-molop", "--items", "outputs"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_polygons(r.out, "stdout").size(), 16u);
  EXPECT_EQ(run_cli({"export-fou", "--items", "outputs"}).code, kExitUsage);
}

TEST(ExportFou, ReimportKeepsCentroids) {
  const auto verts = scratch("hma.csv");
  const auto cbfile = scratch("hma.cb");
  ASSERT_EQ(run_cli({"export-fou", "--codebook", "paper-hma", "--out",
                     verts.string()})
                .code,
            0);
  const Result r = run_cli({"codebook", "import", "--vertices", verts.string(),
                            "--encoder", "HMA", "--out", cbfile.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const Codebook a = load_codebook("paper-hma");
  const Codebook b = load_codebook(cbfile.string());
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a.words()[i].name(), b.words()[i].name());
    EXPECT_DOUBLE_EQ(a.computed_centroid(i).cl, b.computed_centroid(i).cl);
    EXPECT_DOUBLE_EQ(a.computed_centroid(i).cr, b.computed_centroid(i).cr);
  }
}

TEST(CodebookSample, SeedDeterminesOutput) {
  const auto a = run_cli({"codebook", "sample", "--seed", "7"});
  const auto b = run_cli({"codebook", "sample", "--seed", "7"});
  const auto c = run_cli({"codebook", "sample", "--seed", "8"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  const auto p = run_cli({"codebook", "sample", "--seed", "7", "--word", "P",
                          "--n", "5"});
  ASSERT_EQ(p.code, 0) << p.err;
  const auto sets = parse_data_intervals(p.out, "stdout");
  ASSERT_EQ(sets.size(), 1u);
  EXPECT_EQ(sets[0].pairs.size(), 5u);
  EXPECT_EQ(run_cli({"codebook", "sample", "--seed", "7", "--word", "Q"}).code,
            kExitData);
}

}  // namespace
}  // namespace lingopt::cli
