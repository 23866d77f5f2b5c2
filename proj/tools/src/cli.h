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

// Command-line front end. Everything except main() lives here so tests can
// drive the tool in process.

#ifndef LINGOPT_TOOLS_CLI_H_
#define LINGOPT_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lingopt/codebook.h"
#include "lingopt/perceptual_reasoning.h"
#include "lingopt/problem.h"
#include "lingopt/tsukamoto.h"
#include "lingopt/two_tuple.h"

namespace lingopt::cli {

enum class Format { kTable, kCsv };

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitData = 3,
  kExitEngine = 4,
};

struct ReportHeader {
  std::string problem;
  std::string codebook;  // reference as given on the command line
  std::string encoder;
};

std::string render_pr(const ReportHeader& header, const ProblemBundle& problem,
                      const PrReport& report, const PrOptions& options,
                      Format format);
std::string render_two_tuple(const ReportHeader& header,
                             const ProblemBundle& problem,
                             const OrdinalTermSet& terms,
                             const TwoTupleReport& report, Format format);
std::string render_tsukamoto(const TsukamotoProblem& problem,
                             const OptimizeOptions& options,
                             const OptimizeResult& result, Format format);
std::string render_codebook(const Codebook& codebook, Format format);

// One polygon: name, curve ("UMF" or "LMF") and vertices in plotting order.
struct FouPolygon {
  std::string name;
  std::string curve;
  std::vector<std::pair<double, double>> vertices;
};

// Word trapezoids always export four vertices.
std::vector<FouPolygon> word_polygons(const IT2Word& w);
// Polygons traced from the alpha-cut curves, with repeated and collinear
// vertices removed.
std::vector<FouPolygon> curve_polygons(const std::string& name,
                                       const AlphaCutFou& curves);

// Rows "name,curve,x1,mu1,x2,mu2,..." with 4 decimals.
std::string format_polygons(const std::vector<FouPolygon>& polygons);
std::vector<FouPolygon> parse_polygons(std::string_view text,
                                       std::string_view source);
// Rebuilds words from four-vertex UMF/LMF polygon pairs.
std::vector<IT2Word> words_from_polygons(const std::vector<FouPolygon>& polygons);

// Runs the tool; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lingopt::cli

#endif  // LINGOPT_TOOLS_CLI_H_
