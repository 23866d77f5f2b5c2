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

// Problem bundles: a rule base, the alternatives to evaluate against it and
// the objective priority used to rank them.
//
//   lingopt-problem 1
//   name "students"
//   codebook paper-hma
//   variables [SB1, SB2, SB3]
//   terms [VP, P, A, G, VG]
//   objective core max
//   rank core
//   rule R1 if=[VP, P, A] then=[auto]
//   alternative SS1 input=[VP, P, A] rules=[R1]
//
// `rules=` is optional; without it an alternative fires the whole rule base.

#ifndef LINGOPT_PROBLEM_H_
#define LINGOPT_PROBLEM_H_

#include <string>
#include <string_view>
#include <vector>

#include "lingopt/codebook.h"
#include "lingopt/perceptual_reasoning.h"

namespace lingopt {

struct Alternative {
  std::string label;
  std::vector<std::string> input;
  std::vector<std::string> rules;  // empty: all rules
};

struct ProblemBundle {
  std::string name;
  std::string codebook;  // default codebook reference, may be empty
  std::vector<std::string> variables;
  // Ordinal term order for the 2-tuple engine; may be empty.
  std::vector<std::string> terms;
  RuleBase rules;
  std::vector<Alternative> alternatives;
  // Objective names, highest priority first. Defaults to declaration order.
  std::vector<std::string> rank;

  // Rule base an alternative is evaluated against.
  RuleBase rules_for(const Alternative& alt) const;
  std::size_t objective_index(std::string_view name) const;
};

// `source` is a file path or a fixture id ("case-solop", "case-molop").
ProblemBundle load_problem(std::string_view source);
ProblemBundle parse_problem(std::string_view text, std::string_view source);
std::string format_problem(const ProblemBundle& problem);

struct AlternativeResult {
  std::string label;
  std::vector<PrOutput> outputs;  // one per objective
};

struct PrReport {
  std::vector<AlternativeResult> alternatives;
  std::vector<std::string> ranking;
};

// Ranks by the first `rank` objective, breaking ties with the second.
// Direction follows the primary objective.
PrReport solve_problem(const ProblemBundle& problem, const Codebook& codebook,
                       const PrOptions& options = {});

}  // namespace lingopt

#endif  // LINGOPT_PROBLEM_H_
