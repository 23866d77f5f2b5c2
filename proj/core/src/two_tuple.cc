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

#include "lingopt/two_tuple.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include <fmt/format.h>

#include "lingopt/errors.h"

namespace lingopt {

OrdinalTermSet OrdinalTermSet::Create(std::vector<std::string> labels) {
  if (labels.empty()) throw DomainError("term set is empty");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (labels[i] == labels[j]) {
        throw DomainError(fmt::format("duplicate term '{}'", labels[i]));
      }
    }
  }
  OrdinalTermSet out;
  out.labels_ = std::move(labels);
  return out;
}

const std::string& OrdinalTermSet::label(std::size_t index) const {
  if (index < 1 || index > labels_.size()) {
    throw OutOfRangeError(
        fmt::format("term index {} outside 1..{}", index, labels_.size()));
  }
  return labels_[index - 1];
}

std::size_t OrdinalTermSet::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i + 1;
  }
  throw LookupError(fmt::format("'{}' is not in the term set", label));
}

TwoTuple to_two_tuple(double beta, const OrdinalTermSet& terms) {
  const double g = static_cast<double>(terms.size());
  if (!(beta >= 0.5 && beta < g + 0.5)) {
    throw OutOfRangeError(fmt::format(
        "beta {} is outside [0.5, {}), no term can represent it", beta,
        g + 0.5));
  }
  const double r = std::floor(beta + 0.5);
  return {static_cast<std::size_t>(r), beta - r};
}

TwoTuple solop_aggregate(std::span<const std::size_t> indices,
                         const OrdinalTermSet& terms) {
  if (indices.empty()) throw DomainError("nothing to aggregate");
  double sum = 0.0;
  for (std::size_t i : indices) {
    terms.label(i);
    sum += static_cast<double>(i);
  }
  return to_two_tuple(sum / static_cast<double>(indices.size()), terms);
}

TwoTupleMolop molop_solve(std::span<const TwoTupleRule> rules,
                          const OrdinalTermSet& terms) {
  if (rules.empty()) throw DomainError("no rules");
  const std::size_t q = rules.front().consequents.size();
  if (q == 0) throw DomainError("rules have no consequents");
  TwoTupleMolop out;
  double total = 0.0;
  for (const auto& r : rules) {
    if (r.consequents.size() != q) {
      throw DomainError("rules disagree on the number of objectives");
    }
    double f = 1.0;
    for (std::size_t i : r.antecedents) {
      terms.label(i);
      f *= static_cast<double>(i);
    }
    out.firings.push_back(f);
    total += f;
  }
  if (total <= 0.0) throw NoRuleFiredError("no rule fired");
  for (std::size_t k = 0; k < q; ++k) {
    double num = 0.0;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      num += out.firings[i] * rules[i].consequents[k];
    }
    out.betas.push_back(num / total);
    out.outputs.push_back(to_two_tuple(out.betas.back(), terms));
  }
  return out;
}

std::weak_ordering compare(const TwoTuple& a, const TwoTuple& b) {
  const double d = a.beta() - b.beta();
  if (std::abs(d) <= kBetaTolerance) return std::weak_ordering::equivalent;
  return d < 0 ? std::weak_ordering::less : std::weak_ordering::greater;
}

std::string format(const TwoTuple& t, const OrdinalTermSet& terms) {
  std::string a = fmt::format("{:.2f}", t.alpha);
  while (a.back() == '0') a.pop_back();
  if (a.back() == '.') a.pop_back();
  if (a == "-0") a = "0";
  return fmt::format("({}, {})", terms.label(t.index), a);
}

OverflowReport overflow_check(const TwoTuple& t, const OrdinalTermSet& terms,
                              double half_width, const Interval& scale) {
  terms.label(t.index);
  const double g = static_cast<double>(terms.size());
  const double spacing = g > 1 ? scale.width() / (g - 1) : scale.width();
  const double hw = half_width > 0 ? half_width : spacing;
  const double centre =
      scale.lo + static_cast<double>(t.index - 1) * spacing;
  const double shifted = centre + t.alpha * spacing;
  OverflowReport out;
  out.right = std::max(0.0, shifted + hw - std::max(scale.hi, centre + hw));
  out.left = std::max(0.0, std::min(scale.lo, centre - hw) - (shifted - hw));
  return out;
}

std::vector<std::string> rank_two_tuples(
    std::span<const TwoTupleRankItem> items, RankDirection direction) {
  std::vector<const TwoTupleRankItem*> order;
  for (const auto& it : items) order.push_back(&it);
  std::stable_sort(order.begin(), order.end(),
                   [&](const TwoTupleRankItem* a, const TwoTupleRankItem* b) {
                     const std::size_t n = std::min(a->keys.size(), b->keys.size());
                     for (std::size_t k = 0; k < n; ++k) {
                       const auto c = compare(a->keys[k], b->keys[k]);
                       if (c == 0) continue;
                       return direction == RankDirection::kDescending ? c > 0
                                                                      : c < 0;
                     }
                     return false;
                   });
  std::vector<std::string> out;
  for (const auto* it : order) out.push_back(it->label);
  return out;
}

TwoTupleReport solve_problem_two_tuple(const ProblemBundle& problem,
                                       const OrdinalTermSet& terms,
                                       bool strict_scale) {
  const auto objectives = problem.rules.objectives();
  TwoTupleReport report;
  for (const auto& alt : problem.alternatives) {
    for (const auto& w : alt.input) terms.index_of(w);
    const RuleBase rb = problem.rules_for(alt);
    std::vector<TwoTupleRule> rules;
    for (const Rule& r : rb.rules()) {
      TwoTupleRule tr;
      for (const auto& a : r.antecedents) tr.antecedents.push_back(terms.index_of(a));
      const double mean =
          std::accumulate(tr.antecedents.begin(), tr.antecedents.end(), 0.0) /
          static_cast<double>(tr.antecedents.size());
      for (const auto& c : r.consequents) {
        switch (c.kind) {
          case ConsequentRef::Kind::kWord:
            tr.consequents.push_back(static_cast<double>(terms.index_of(c.word)));
            break;
          case ConsequentRef::Kind::kSynthesized:
            tr.consequents.push_back(mean);
            break;
          case ConsequentRef::Kind::kSynthesizedWord:
            tr.consequents.push_back(
                static_cast<double>(to_two_tuple(mean, terms).index));
            break;
        }
      }
      rules.push_back(std::move(tr));
    }
    const TwoTupleMolop m = molop_solve(rules, terms);
    TwoTupleAlternativeResult res{alt.label, m.firings, {}};
    for (std::size_t k = 0; k < objectives.size(); ++k) {
      TwoTupleOutcome o{objectives[k].name, m.betas[k], m.outputs[k],
                        overflow_check(m.outputs[k], terms)};
      if (o.overflow.overflows()) {
        const std::string msg = fmt::format(
            "{} {}: {} reaches past the scale (left {:.4f}, right {:.4f})",
            alt.label, o.objective, format(o.value, terms), o.overflow.left,
            o.overflow.right);
        if (strict_scale) throw OutOfRangeError(msg);
        report.warnings.push_back(msg);
      }
      res.outputs.push_back(std::move(o));
    }
    report.alternatives.push_back(std::move(res));
  }
  std::vector<TwoTupleRankItem> items;
  for (const auto& a : report.alternatives) {
    TwoTupleRankItem item{a.label, {}};
    for (const auto& name : problem.rank) {
      item.keys.push_back(a.outputs[problem.objective_index(name)].value);
    }
    items.push_back(std::move(item));
  }
  const std::size_t primary = problem.objective_index(problem.rank.front());
  report.ranking = rank_two_tuples(
      items, objectives[primary].direction == Direction::kMax
                 ? RankDirection::kDescending
                 : RankDirection::kAscending);
  return report;
}

}  // namespace lingopt
