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

#include "lingopt/perceptual_reasoning.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include <fmt/format.h>

#include "lingopt/errors.h"

namespace lingopt {
namespace {

struct Weighted {
  double v;
  Interval f;
};

// min (or max) of sum(v_i f_i) / sum(f_i) over f_i in [lo_i, hi_i]. The
// optimum puts every f_i at a bound, with a single switch point in v order:
// for the min, small values take hi and large values take lo.
double extreme_average(std::vector<Weighted>& items, bool minimize) {
  std::sort(items.begin(), items.end(),
            [](const Weighted& a, const Weighted& b) { return a.v < b.v; });
  const std::size_t n = items.size();
  // prefix sums over the first k items with "head" weights, suffix with
  // "tail" weights.
  std::vector<double> head_num(n + 1, 0.0), head_den(n + 1, 0.0);
  std::vector<double> tail_num(n + 1, 0.0), tail_den(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = minimize ? items[i].f.hi : items[i].f.lo;
    head_num[i + 1] = head_num[i] + items[i].v * w;
    head_den[i + 1] = head_den[i] + w;
  }
  for (std::size_t i = n; i-- > 0;) {
    const double w = minimize ? items[i].f.lo : items[i].f.hi;
    tail_num[i] = tail_num[i + 1] + items[i].v * w;
    tail_den[i] = tail_den[i + 1] + w;
  }
  double best = minimize ? std::numeric_limits<double>::infinity()
                         : -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k <= n; ++k) {
    const double den = head_den[k] + tail_den[k];
    if (den <= 0.0) continue;
    const double y = (head_num[k] + tail_num[k]) / den;
    best = minimize ? std::min(best, y) : std::max(best, y);
  }
  return best;
}

// Largest alpha on a piecewise-linear edge at which the cut still reaches x.
// `edge` is nondecreasing in alpha for a left edge; right edges are passed
// negated together with -x.
double edge_alpha(const std::vector<double>& alpha,
                  const std::vector<double>& edge, double x) {
  if (x < edge.front()) return 0.0;
  std::size_t j = 0;
  while (j + 1 < edge.size() && edge[j + 1] <= x) ++j;
  if (j + 1 == edge.size()) return alpha.back();
  const double run = edge[j + 1] - edge[j];
  if (run <= 0.0) return alpha[j];
  return alpha[j] + (x - edge[j]) / run * (alpha[j + 1] - alpha[j]);
}

double cut_membership(const std::vector<double>& alpha,
                      const std::vector<double>& left,
                      const std::vector<double>& right, double x) {
  if (alpha.empty() || x < left.front() || x > right.front()) return 0.0;
  std::vector<double> neg(right.size());
  std::transform(right.begin(), right.end(), neg.begin(),
                 [](double v) { return -v; });
  return std::min(edge_alpha(alpha, left, x), edge_alpha(alpha, neg, -x));
}

IT2Word resolve_word(const std::string& name, const Codebook& codebook,
                     std::string_view rule) {
  const IT2Word* w = codebook.find(name);
  if (w == nullptr) {
    throw LookupError(
        fmt::format("rule '{}': word '{}' is not in the codebook", rule, name));
  }
  return *w;
}

}  // namespace

std::string_view to_string(Direction d) {
  return d == Direction::kMax ? "max" : "min";
}

ConsequentRef ConsequentRef::Parse(std::string_view token) {
  if (token.empty()) throw DomainError("empty consequent");
  if (token == "auto") return {Kind::kSynthesized, {}};
  if (token == "auto-word") return {Kind::kSynthesizedWord, {}};
  return {Kind::kWord, std::string(token)};
}

std::string ConsequentRef::to_string() const {
  switch (kind) {
    case Kind::kSynthesized:
      return "auto";
    case Kind::kSynthesizedWord:
      return "auto-word";
    case Kind::kWord:
      break;
  }
  return word;
}

RuleBase RuleBase::Create(std::vector<Objective> objectives,
                          std::vector<Rule> rules) {
  if (objectives.empty()) throw DomainError("rule base has no objectives");
  if (rules.empty()) throw DomainError("rule base has no rules");
  const std::size_t p = rules.front().antecedents.size();
  if (p == 0) throw DomainError("rules need at least one antecedent");
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Rule& r = rules[i];
    if (r.label.empty()) throw DomainError("rule with empty label");
    if (r.antecedents.size() != p) {
      throw DomainError(fmt::format(
          "rule '{}' has {} antecedents, expected {}", r.label,
          r.antecedents.size(), p));
    }
    if (r.consequents.size() != objectives.size()) {
      throw DomainError(fmt::format(
          "rule '{}' has {} consequents for {} objectives", r.label,
          r.consequents.size(), objectives.size()));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (rules[j].label == r.label) {
        throw DomainError(fmt::format("duplicate rule label '{}'", r.label));
      }
    }
  }
  RuleBase out;
  out.objectives_ = std::move(objectives);
  out.rules_ = std::move(rules);
  return out;
}

const Rule& RuleBase::at(std::string_view label) const {
  for (const auto& r : rules_) {
    if (r.label == label) return r;
  }
  throw LookupError(fmt::format("no rule labelled '{}'", label));
}

RuleBase RuleBase::subset(std::span<const std::string> labels) const {
  std::vector<Rule> picked;
  picked.reserve(labels.size());
  for (const auto& l : labels) picked.push_back(at(l));
  return Create(objectives_, std::move(picked));
}

void RuleBase::validate(const Codebook& codebook) const {
  for (const auto& r : rules_) {
    for (const auto& a : r.antecedents) resolve_word(a, codebook, r.label);
    for (const auto& c : r.consequents) {
      if (c.kind == ConsequentRef::Kind::kWord) {
        resolve_word(c.word, codebook, r.label);
      }
    }
  }
}

FiringLevel FiringLevel::Checked(double lo, double hi) {
  if (!(lo >= 0.0 && lo <= hi && hi <= 1.0)) {
    throw DomainError(
        fmt::format("firing interval [{}, {}] is not inside [0, 1]", lo, hi));
  }
  return {{lo, hi}};
}

Interval AlphaCutFou::envelope(double x) const {
  const double upper = cut_membership(upper_alpha, y_ll, y_rr, x);
  const double lower = cut_membership(lower_alpha, y_lr, y_rl, x);
  return {std::min(lower, upper), upper};
}

FouSamples AlphaCutFou::sample(const Discretization& grid) const {
  return sample_envelope([this](double x) { return envelope(x); }, grid);
}

IT2Word AlphaCutFou::to_word(std::string name) const {
  const Trapezoid umf(y_ll.front(), y_ll.back(), y_rr.back(), y_rr.front());
  double a = std::max(y_lr.front(), umf.a());
  double d = std::min(y_rl.front(), umf.d());
  // Keep the LMF edges inside the UMF edges at alpha = height; both edges
  // are lines, so containment at the two ends is enough.
  double b = std::max(y_lr.back(), umf.a() + height * (umf.b() - umf.a()));
  double c = std::min(y_rl.back(), umf.d() - height * (umf.d() - umf.c()));
  if (b > c) b = c = 0.5 * (b + c);
  a = std::min(a, b);
  d = std::max(d, c);
  return IT2Word(std::move(name), umf, Trapezoid(a, b, c, d, height));
}

FiringLevel fire(const Rule& rule, std::span<const std::string> input,
                 const Codebook& codebook, const Discretization& grid) {
  if (input.size() != rule.antecedents.size()) {
    throw DomainError(fmt::format(
        "rule '{}' has {} antecedents but the input has {} words", rule.label,
        rule.antecedents.size(), input.size()));
  }
  double f = 1.0;
  for (std::size_t j = 0; j < input.size(); ++j) {
    const IT2Word& x = codebook.at(input[j]);
    const IT2Word a = resolve_word(rule.antecedents[j], codebook, rule.label);
    f = std::min(f, jaccard(x, a, grid));
  }
  return FiringLevel::Scalar(f);
}

AlphaCutFou lwa(std::span<const IT2Word> consequents,
                std::span<const FiringLevel> firings, std::size_t levels) {
  if (consequents.size() != firings.size()) {
    throw DomainError(fmt::format("{} consequents but {} firing levels",
                                  consequents.size(), firings.size()));
  }
  if (consequents.empty()) throw DomainError("LWA needs at least one term");
  if (levels < 2) throw DomainError("LWA needs at least 2 alpha levels");

  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < firings.size(); ++i) {
    const Interval& f = firings[i].interval;
    if (!(f.lo >= 0.0 && f.lo <= f.hi && f.hi <= 1.0)) {
      throw DomainError(fmt::format(
          "firing interval [{}, {}] is not inside [0, 1]", f.lo, f.hi));
    }
    if (firings[i].fired()) active.push_back(i);
  }
  if (active.empty()) throw NoRuleFiredError("no rule fired");

  AlphaCutFou out;
  out.height = 1.0;
  for (std::size_t i : active) {
    out.height = std::min(out.height, consequents[i].lmf().height());
  }

  std::vector<Weighted> lo_items(active.size()), hi_items(active.size());
  const auto fill = [&](double alpha, bool lower) {
    for (std::size_t k = 0; k < active.size(); ++k) {
      const IT2Word& w = consequents[active[k]];
      const Interval cut =
          alpha_cut(lower ? w.lmf() : w.umf(), std::min(alpha, lower ? w.lmf().height() : 1.0));
      lo_items[k] = {cut.lo, firings[active[k]].interval};
      hi_items[k] = {cut.hi, firings[active[k]].interval};
    }
  };

  for (std::size_t j = 0; j < levels; ++j) {
    const double t = static_cast<double>(j) / static_cast<double>(levels - 1);
    fill(t, false);
    out.upper_alpha.push_back(t);
    out.y_ll.push_back(extreme_average(lo_items, true));
    out.y_rr.push_back(extreme_average(hi_items, false));

    const double s = t * out.height;
    fill(s, true);
    out.lower_alpha.push_back(s);
    out.y_lr.push_back(extreme_average(lo_items, false));
    out.y_rl.push_back(extreme_average(hi_items, true));
  }

  // Cuts must nest; remove floating-point wobble.
  for (std::size_t j = 1; j < levels; ++j) {
    out.y_ll[j] = std::max(out.y_ll[j], out.y_ll[j - 1]);
    out.y_rr[j] = std::min(out.y_rr[j], out.y_rr[j - 1]);
    out.y_lr[j] = std::max(out.y_lr[j], out.y_lr[j - 1]);
    out.y_rl[j] = std::min(out.y_rl[j], out.y_rl[j - 1]);
  }
  for (std::size_t j = 0; j < levels; ++j) {
    out.y_rr[j] = std::max(out.y_rr[j], out.y_ll[j]);
    out.y_lr[j] = std::max(out.y_lr[j], out.y_ll.front());
    out.y_rl[j] = std::min(out.y_rl[j], out.y_rr.front());
    if (out.y_lr[j] > out.y_rl[j]) {
      out.y_lr[j] = out.y_rl[j] = 0.5 * (out.y_lr[j] + out.y_rl[j]);
    }
  }
  return out;
}

Decoded decode(const FouSamples& fou, const Codebook& codebook) {
  Decoded out;
  double best = -1.0;
  for (const IT2Word& w : codebook.words()) {
    const double s = jaccard(fou, sample(w, fou.grid));
    if (s > best + kDecodeTieTolerance) {
      out = {w.name(), s, false};
      best = s;
    } else if (s >= best - kDecodeTieTolerance) {
      out = {w.name(), s, true};
      best = std::max(best, s);
    }
  }
  return out;
}

Decoded decode(const IT2Word& fou, const Codebook& codebook,
               const Discretization& grid) {
  return decode(sample(fou, grid), codebook);
}

SynthesizedConsequent synthesize_consequent(
    std::span<const IT2Word> antecedents, const Codebook& codebook,
    const PrOptions& options) {
  const std::vector<FiringLevel> ones(antecedents.size(),
                                      FiringLevel::Scalar(1.0));
  const AlphaCutFou curves = lwa(antecedents, ones, options.alpha_levels);
  const FouSamples s = curves.sample(codebook.grid(options.grid_points));
  std::string name = "auto(";
  for (std::size_t i = 0; i < antecedents.size(); ++i) {
    if (i > 0) name += ",";
    name += antecedents[i].name();
  }
  name += ")";
  const Centroid c = centroid_ekm(s);
  return {curves.to_word(std::move(name)).with_centroid(c), c,
          decode(s, codebook)};
}

ConsequentTable resolve_consequents(const RuleBase& rules,
                                    const Codebook& codebook,
                                    const PrOptions& options) {
  ConsequentTable table;
  for (const Rule& r : rules.rules()) {
    std::vector<IT2Word> row;
    std::vector<IT2Word> antecedents;
    for (const auto& c : r.consequents) {
      if (c.kind == ConsequentRef::Kind::kWord) {
        row.push_back(resolve_word(c.word, codebook, r.label));
        continue;
      }
      if (antecedents.empty()) {
        for (const auto& a : r.antecedents) {
          antecedents.push_back(resolve_word(a, codebook, r.label));
        }
      }
      const auto syn = synthesize_consequent(antecedents, codebook, options);
      row.push_back(c.kind == ConsequentRef::Kind::kSynthesized
                        ? syn.fou
                        : codebook.at(syn.decoded.word));
    }
    table.push_back(std::move(row));
  }
  return table;
}

PrOutput solve_solop(const RuleBase& rules, std::span<const std::string> input,
                     const Codebook& codebook, const PrOptions& options) {
  if (rules.objective_count() != 1) {
    throw DomainError(fmt::format(
        "single-objective solve needs 1 objective, the rule base has {}",
        rules.objective_count()));
  }
  return solve_molop(rules, input, codebook, options).front();
}

std::vector<PrOutput> solve_molop(const RuleBase& rules,
                                  std::span<const std::string> input,
                                  const Codebook& codebook,
                                  const PrOptions& options) {
  return solve_molop(rules, resolve_consequents(rules, codebook, options),
                     input, codebook, options);
}

std::vector<PrOutput> solve_molop(const RuleBase& rules,
                                  const ConsequentTable& consequents,
                                  std::span<const std::string> input,
                                  const Codebook& codebook,
                                  const PrOptions& options) {
  if (consequents.size() != rules.rules().size()) {
    throw DomainError("consequent table does not match the rule base");
  }
  const Discretization grid = codebook.grid(options.grid_points);
  std::vector<FiringLevel> firings;
  for (const Rule& r : rules.rules()) {
    firings.push_back(fire(r, input, codebook, grid));
  }
  std::vector<PrOutput> out;
  for (std::size_t k = 0; k < rules.objective_count(); ++k) {
    std::vector<IT2Word> column;
    for (const auto& row : consequents) {
      if (row.size() != rules.objective_count()) {
        throw DomainError("consequent table does not match the rule base");
      }
      column.push_back(row[k]);
    }
    PrOutput o;
    o.objective = rules.objectives()[k].name;
    o.curves = lwa(column, firings, options.alpha_levels);
    const FouSamples s = o.curves.sample(grid);
    o.centroid = centroid_ekm(s);
    o.fou = o.curves.to_word(o.objective).with_centroid(o.centroid);
    o.decoded = decode(s, codebook);
    o.shape = classify_fou(o.fou, codebook.scale());
    o.firings = firings;
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace lingopt
