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

// Tsukamoto inference with monotone consequents, and a grid search over the
// crisp objectives it produces.

#ifndef LINGOPT_TSUKAMOTO_H_
#define LINGOPT_TSUKAMOTO_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lingopt/fuzzy.h"
#include "lingopt/perceptual_reasoning.h"

namespace lingopt {

// Strictly monotone piecewise-linear membership function. Inputs outside the
// domain are clamped to it.
class MonotoneMf {
 public:
  static MonotoneMf Increasing(Interval domain = {0.0, 1.0});
  static MonotoneMf Decreasing(Interval domain = {0.0, 1.0});
  // Breakpoints with strictly increasing x and strictly monotone, [0, 1]
  // valued mu. Throws DomainError otherwise.
  static MonotoneMf FromSamples(std::vector<double> x, std::vector<double> mu);

  double operator()(double x) const;
  // The x with membership mu. Throws DomainError outside the range.
  double inverse(double mu) const;
  bool increasing() const { return mu_.back() > mu_.front(); }
  Interval domain() const { return {x_.front(), x_.back()}; }
  Interval range() const;

 private:
  std::vector<double> x_;
  std::vector<double> mu_;
};

struct TsukamotoRule {
  std::vector<MonotoneMf> antecedents;  // one per variable
  std::vector<MonotoneMf> consequents;  // one per objective
};

struct TsukamotoEvaluation {
  std::vector<double> firings;          // per rule
  std::vector<std::vector<double>> rule_outputs;  // [rule][objective]
  std::vector<double> outputs;          // per objective
};

class TsukamotoSystem {
 public:
  // Throws DomainError on empty or inconsistent rules, or a direction count
  // that differs from the objective count.
  static TsukamotoSystem Create(std::vector<TsukamotoRule> rules,
                                std::vector<Direction> directions);

  std::size_t variable_count() const { return rules_.front().antecedents.size(); }
  std::size_t objective_count() const { return directions_.size(); }
  std::span<const TsukamotoRule> rules() const { return rules_; }
  std::span<const Direction> directions() const { return directions_; }

  // Product t-norm firing, inverted consequents, firing-weighted mean.
  // Throws DomainError on a size mismatch, NoRuleFiredError when every
  // firing is zero.
  TsukamotoEvaluation evaluate(std::span<const double> y) const;
  std::vector<double> crisp_output(std::span<const double> y) const {
    return evaluate(y).outputs;
  }

 private:
  std::vector<TsukamotoRule> rules_;
  std::vector<Direction> directions_;
};

struct OptimizeOptions {
  double step = 1e-3;
  double tolerance = 1e-9;
  // Rescale each objective to [0, 1] over the feasible grid before taking
  // the max-min compromise.
  bool normalize = false;
};

struct GridPoint {
  std::vector<double> y;
  std::vector<double> values;  // per objective
};

struct OptimizeResult {
  double best = 0.0;  // best value (one objective) or compromise score
  std::vector<GridPoint> optima;  // grid order
  std::size_t evaluated = 0;
  std::size_t skipped = 0;  // grid points where no rule fired
};

// Exhaustive search over sum(y) = total, 0 <= y_i <= 1. The first n - 1
// coordinates walk the grid k * step; the last one closes the sum. A single
// objective is optimized in its direction; several objectives maximize the
// smallest of them (min objectives negated). Every point within tolerance of
// the best is returned. Throws DomainError when no grid point is feasible.
OptimizeResult optimize(const TsukamotoSystem& system, double total,
                        const OptimizeOptions& options = {});

struct TsukamotoProblem {
  std::string name;
  TsukamotoSystem system;
  double total = 0.0;  // right-hand side of sum(y) = total
};

// "sm-solop" (one min objective, y1 + y2 = 1/2) or "sm-molop" (two max
// objectives, y1 + y2 = 3/4). Throws LookupError.
TsukamotoProblem tsukamoto_fixture(std::string_view id);
std::vector<std::string_view> tsukamoto_fixture_ids();

}  // namespace lingopt

#endif  // LINGOPT_TSUKAMOTO_H_
