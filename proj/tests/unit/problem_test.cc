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

#include "lingopt/problem.h"

#include <string>

#include <gtest/gtest.h>

#include "lingopt/codebook.h"
#include "lingopt/errors.h"
#include "lingopt/similarity.h"

namespace lingopt {
namespace {

constexpr const char* kSmall = R"(lingopt-problem 1
name tiny
codebook paper-hma
variables [x1, x2]
objective score max
rule r1 if=[VP, VG] then=[A]
rule r2 if=[G, G] then=[auto]
alternative one input=[VP, VG] rules=[r1]
alternative two input=[G, G]
)";

TEST(Problem, ParsesAllRecords) {
  const auto p = parse_problem(kSmall, "tiny.prob");
  EXPECT_EQ(p.name, "tiny");
  EXPECT_EQ(p.codebook, "paper-hma");
  EXPECT_EQ(p.variables.size(), 2u);
  EXPECT_EQ(p.rules.rules().size(), 2u);
  EXPECT_EQ(p.rank, std::vector<std::string>{"score"});
  ASSERT_EQ(p.alternatives.size(), 2u);
  EXPECT_EQ(p.rules_for(p.alternatives[0]).rules().size(), 1u);
  EXPECT_EQ(p.rules_for(p.alternatives[1]).rules().size(), 2u);
}

TEST(Problem, FormatRoundTrip) {
  const auto p = parse_problem(kSmall, "tiny.prob");
  const auto q = parse_problem(format_problem(p), "again");
  EXPECT_EQ(format_problem(q), format_problem(p));
  EXPECT_EQ(q.rules.at("r2").consequents[0].kind,
            ConsequentRef::Kind::kSynthesized);
}

TEST(Problem, FixturesRoundTrip) {
  for (const char* id : {"case-solop", "case-molop"}) {
    const auto p = load_problem(id);
    EXPECT_EQ(format_problem(parse_problem(format_problem(p), id)),
              format_problem(p));
  }
}

TEST(Problem, CaseMolopRankOrder) {
  const auto p = load_problem("case-molop");
  EXPECT_EQ(p.rank, (std::vector<std::string>{"elective", "core"}));
  EXPECT_EQ(p.objective_index("elective"), 1u);
  EXPECT_THROW(p.objective_index("nope"), LookupError);
  EXPECT_EQ(p.terms.size(), 5u);
}

TEST(Problem, ErrorsCarryLocation) {
  const std::string bad = std::string(kSmall) + "alternative three input=[G]\n";
  try {
    parse_problem(bad, "tiny.prob");
    FAIL();
  } catch (const LoadError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("tiny.prob"), std::string::npos) << msg;
    EXPECT_NE(msg.find("three"), std::string::npos) << msg;
  }
  EXPECT_THROW(parse_problem("lingopt-problem 2\n", "v"), LoadError);
  EXPECT_THROW(parse_problem("nonsense\n", "v"), LoadError);
  EXPECT_THROW(parse_problem(std::string(kSmall) + "objective z sideways\n", "v"),
               LoadError);
  EXPECT_THROW(parse_problem(std::string(kSmall) + "rank missing\n", "v"),
               LoadError);
  EXPECT_THROW(load_problem("/no/such/problem/file"), LoadError);
}

TEST(SolveProblem, SolopRankingBothCodebooks) {
  const auto p = load_problem("case-solop");
  for (const char* cb : {"paper-hma", "paper-ia"}) {
    const auto r = solve_problem(p, load_codebook(cb));
    EXPECT_EQ(format_ranking(r.ranking), "SS2 > SS3 > SS4 > SS1") << cb;
  }
}

TEST(SolveProblem, MolopRankingBothCodebooks) {
  const auto p = load_problem("case-molop");
  for (const char* cb : {"paper-hma", "paper-ia"}) {
    const auto r = solve_problem(p, load_codebook(cb));
    EXPECT_EQ(format_ranking(r.ranking), "SS2 > SS4 > SS1 > SS3") << cb;
  }
}

TEST(SolveProblem, MinDirectionReverses) {
  std::string text = kSmall;
  text.replace(text.find("score max"), 9, "score min");
  const auto p = parse_problem(text, "min");
  const auto r = solve_problem(p, load_codebook("paper-hma"));
  // "one" yields A, "two" yields G; minimizing puts A first.
  EXPECT_EQ(format_ranking(r.ranking), "one > two");
}

}  // namespace
}  // namespace lingopt
