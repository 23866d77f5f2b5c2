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

// 2-tuple linguistic model: an ordinal term plus a symbolic translation in
// [-0.5, 0.5) encodes a real aggregate beta = index + alpha.

#ifndef LINGOPT_TWO_TUPLE_H_
#define LINGOPT_TWO_TUPLE_H_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lingopt/fuzzy.h"
#include "lingopt/problem.h"
#include "lingopt/similarity.h"

namespace lingopt {

// Terms are numbered from 1.
class OrdinalTermSet {
 public:
  // Throws DomainError on an empty list or duplicate labels.
  static OrdinalTermSet Create(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t index) const;
  // Throws LookupError.
  std::size_t index_of(std::string_view label) const;
  std::span<const std::string> labels() const { return labels_; }

 private:
  std::vector<std::string> labels_;
};

struct TwoTuple {
  std::size_t index = 1;
  double alpha = 0.0;

  double beta() const { return static_cast<double>(index) + alpha; }
};

inline constexpr double kBetaTolerance = 1e-9;

// Round half up. Throws OutOfRangeError unless 0.5 <= beta < g + 0.5.
TwoTuple to_two_tuple(double beta, const OrdinalTermSet& terms);

// Mean of the indices. Throws DomainError on an empty list.
TwoTuple solop_aggregate(std::span<const std::size_t> indices,
                         const OrdinalTermSet& terms);

struct TwoTupleRule {
  std::vector<std::size_t> antecedents;
  std::vector<double> consequents;  // one per objective, term-index units
};

struct TwoTupleMolop {
  std::vector<double> firings;  // product of antecedent indices, per rule
  std::vector<double> betas;    // per objective
  std::vector<TwoTuple> outputs;
};

// Throws DomainError on empty or inconsistent rules.
TwoTupleMolop molop_solve(std::span<const TwoTupleRule> rules,
                          const OrdinalTermSet& terms);

// Orders by beta; betas within kBetaTolerance compare equivalent.
std::weak_ordering compare(const TwoTuple& a, const TwoTuple& b);

// "(P, 0.2)": alpha rounded to 2 decimals, trailing zeros dropped.
std::string format(const TwoTuple& t, const OrdinalTermSet& terms);

struct OverflowReport {
  double left = 0.0;   // protrusion past the scale minimum
  double right = 0.0;  // protrusion past the scale maximum
  bool overflows() const { return left > kShapeTolerance || right > kShapeTolerance; }
};

// Terms are symmetric triangles centred at evenly spaced points spanning the
// scale. Shifting term i by alpha spacings can push its triangle past the
// scale end further than the untranslated end terms reach; that excess is
// reported. half_width <= 0 means one spacing.
OverflowReport overflow_check(const TwoTuple& t, const OrdinalTermSet& terms,
                              double half_width = 0.0,
                              const Interval& scale = kDefaultScale);

struct TwoTupleRankItem {
  std::string label;
  std::vector<TwoTuple> keys;  // highest priority first
};

// Lexicographic by keys; fully tied items keep input order.
std::vector<std::string> rank_two_tuples(
    std::span<const TwoTupleRankItem> items,
    RankDirection direction = RankDirection::kDescending);

struct TwoTupleOutcome {
  std::string objective;
  double beta = 0.0;
  TwoTuple value;
  OverflowReport overflow;
};

struct TwoTupleAlternativeResult {
  std::string label;
  std::vector<double> firings;
  std::vector<TwoTupleOutcome> outputs;  // one per objective
};

struct TwoTupleReport {
  std::vector<TwoTupleAlternativeResult> alternatives;
  std::vector<std::string> ranking;
  std::vector<std::string> warnings;
};

// Runs a problem bundle through the 2-tuple model. Word consequents map to
// their term index; "auto" is the mean antecedent index and "auto-word" that
// mean rounded to a term. With strict_scale, an overflowing output throws
// OutOfRangeError instead of producing a warning.
TwoTupleReport solve_problem_two_tuple(const ProblemBundle& problem,
                                       const OrdinalTermSet& terms,
                                       bool strict_scale = false);

}  // namespace lingopt

#endif  // LINGOPT_TWO_TUPLE_H_
