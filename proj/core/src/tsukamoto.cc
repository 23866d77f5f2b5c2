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

#include "lingopt/tsukamoto.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>

#include <fmt/format.h>

#include "lingopt/errors.h"

namespace lingopt {
namespace {

// Linear interpolation on breakpoints `from` (monotone) into `to`.
double interpolate(const std::vector<double>& from, const std::vector<double>& to,
                   double v) {
  const bool up = from.back() > from.front();
  std::size_t j = 0;
  while (j + 2 < from.size() && (up ? from[j + 1] < v : from[j + 1] > v)) ++j;
  const double t = (v - from[j]) / (from[j + 1] - from[j]);
  return to[j] + t * (to[j + 1] - to[j]);
}

}  // namespace

MonotoneMf MonotoneMf::Increasing(Interval domain) {
  return FromSamples({domain.lo, domain.hi}, {0.0, 1.0});
}

MonotoneMf MonotoneMf::Decreasing(Interval domain) {
  return FromSamples({domain.lo, domain.hi}, {1.0, 0.0});
}

MonotoneMf MonotoneMf::FromSamples(std::vector<double> x,
                                   std::vector<double> mu) {
  if (x.size() < 2 || x.size() != mu.size()) {
    throw DomainError("monotone MF needs at least 2 (x, mu) breakpoints");
  }
  const bool up = mu[1] > mu[0];
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(mu[i] >= 0.0 && mu[i] <= 1.0)) {
      throw DomainError(fmt::format("membership {} outside [0, 1]", mu[i]));
    }
    if (i == 0) continue;
    if (!(x[i] > x[i - 1])) {
      throw DomainError("monotone MF breakpoints must strictly increase in x");
    }
    if (up ? !(mu[i] > mu[i - 1]) : !(mu[i] < mu[i - 1])) {
      throw DomainError(
          "membership function is not strictly monotone, so it has no inverse");
    }
  }
  MonotoneMf out;
  out.x_ = std::move(x);
  out.mu_ = std::move(mu);
  return out;
}

Interval MonotoneMf::range() const {
  return {std::min(mu_.front(), mu_.back()), std::max(mu_.front(), mu_.back())};
}

double MonotoneMf::operator()(double x) const {
  return interpolate(x_, mu_, std::clamp(x, x_.front(), x_.back()));
}

double MonotoneMf::inverse(double mu) const {
  if (!range().contains(mu, 1e-12)) {
    throw DomainError(fmt::format("membership {} outside the range [{}, {}]",
                                  mu, range().lo, range().hi));
  }
  return interpolate(mu_, x_, std::clamp(mu, range().lo, range().hi));
}

TsukamotoSystem TsukamotoSystem::Create(std::vector<TsukamotoRule> rules,
                                        std::vector<Direction> directions) {
  if (rules.empty()) throw DomainError("no rules");
  if (directions.empty()) throw DomainError("no objectives");
  const std::size_t n = rules.front().antecedents.size();
  if (n == 0) throw DomainError("rules need at least one antecedent");
  for (const auto& r : rules) {
    if (r.antecedents.size() != n) {
      throw DomainError("rules disagree on the number of variables");
    }
    if (r.consequents.size() != directions.size()) {
      throw DomainError(fmt::format("rule has {} consequents for {} objectives",
                                    r.consequents.size(), directions.size()));
    }
  }
  TsukamotoSystem out;
  out.rules_ = std::move(rules);
  out.directions_ = std::move(directions);
  return out;
}

TsukamotoEvaluation TsukamotoSystem::evaluate(std::span<const double> y) const {
  if (y.size() != variable_count()) {
    throw DomainError(fmt::format("expected {} variables, got {}",
                                  variable_count(), y.size()));
  }
  TsukamotoEvaluation ev;
  ev.outputs.assign(objective_count(), 0.0);
  double total = 0.0;
  for (const auto& r : rules_) {
    double a = 1.0;
    for (std::size_t j = 0; j < y.size(); ++j) a *= r.antecedents[j](y[j]);
    ev.firings.push_back(a);
    std::vector<double> out;
    for (const auto& c : r.consequents) out.push_back(c.inverse(a));
    for (std::size_t k = 0; k < out.size(); ++k) ev.outputs[k] += a * out[k];
    ev.rule_outputs.push_back(std::move(out));
    total += a;
  }
  if (total <= 0.0) throw NoRuleFiredError("no rule fired");
  for (double& v : ev.outputs) v /= total;
  return ev;
}

OptimizeResult optimize(const TsukamotoSystem& system, double total,
                        const OptimizeOptions& options) {
  if (!(options.step > 0.0 && options.step <= 1.0)) {
    throw DomainError("grid step must be in (0, 1]");
  }
  const auto m = static_cast<std::size_t>(std::llround(1.0 / options.step));
  const std::size_t n = system.variable_count();
  const double eps = 1e-12;

  OptimizeResult result;
  std::vector<GridPoint> points;
  std::vector<double> y(n, 0.0);
  const std::function<void(std::size_t, double)> walk = [&](std::size_t j,
                                                            double used) {
    if (j + 1 == n) {
      const double last = total - used;
      if (last < -eps || last > 1.0 + eps) return;
      y[j] = std::clamp(last, 0.0, 1.0);
      try {
        points.push_back({y, system.crisp_output(y)});
        ++result.evaluated;
      } catch (const NoRuleFiredError&) {
        ++result.skipped;
      }
      return;
    }
    for (std::size_t k = 0; k <= m; ++k) {
      y[j] = static_cast<double>(k) / static_cast<double>(m);
      if (used + y[j] > total + eps) break;
      walk(j + 1, used + y[j]);
    }
  };
  walk(0, 0.0);
  if (points.empty()) {
    throw DomainError(fmt::format(
        "no feasible grid point with sum(y) = {} and step {}", total,
        options.step));
  }

  const auto dirs = system.directions();
  const std::size_t q = dirs.size();
  std::vector<double> lo(q, std::numeric_limits<double>::infinity());
  std::vector<double> hi(q, -std::numeric_limits<double>::infinity());
  for (const auto& p : points) {
    for (std::size_t k = 0; k < q; ++k) {
      lo[k] = std::min(lo[k], p.values[k]);
      hi[k] = std::max(hi[k], p.values[k]);
    }
  }
  // Larger score is better.
  const auto score = [&](const GridPoint& p) {
    if (q == 1) {
      return dirs[0] == Direction::kMax ? p.values[0] : -p.values[0];
    }
    double s = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < q; ++k) {
      double v = p.values[k];
      if (options.normalize) {
        v = hi[k] > lo[k] ? (v - lo[k]) / (hi[k] - lo[k]) : 1.0;
        if (dirs[k] == Direction::kMin) v = 1.0 - v;
      } else if (dirs[k] == Direction::kMin) {
        v = -v;
      }
      s = std::min(s, v);
    }
    return s;
  };
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& p : points) best = std::max(best, score(p));
  for (auto& p : points) {
    if (score(p) >= best - options.tolerance) result.optima.push_back(std::move(p));
  }
  result.best = (q == 1 && dirs[0] == Direction::kMin) ? -best : best;
  return result;
}

TsukamotoProblem tsukamoto_fixture(std::string_view id) {
  const MonotoneMf small = MonotoneMf::Decreasing();
  const MonotoneMf big = MonotoneMf::Increasing();
  if (id == "sm-solop") {
    return {std::string(id),
            TsukamotoSystem::Create({{{small, small}, {small}},
                                     {{small, big}, {big}}},
                                    {Direction::kMin}),
            0.5};
  }
  if (id == "sm-molop") {
    return {std::string(id),
            TsukamotoSystem::Create({{{small, small}, {small, big}},
                                     {{small, big}, {big, small}}},
                                    {Direction::kMax, Direction::kMax}),
            0.75};
  }
  throw LookupError(fmt::format("no Tsukamoto fixture named '{}'", id));
}

std::vector<std::string_view> tsukamoto_fixture_ids() {
  return {"sm-solop", "sm-molop"};
}

}  // namespace lingopt
