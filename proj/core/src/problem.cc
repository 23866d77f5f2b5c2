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

#include <algorithm>
#include <optional>
#include <utility>

#include <fmt/format.h>

#include "lingopt/errors.h"
#include "lingopt/fixtures.h"
#include "lingopt/record_io.h"

namespace lingopt {
namespace {

constexpr std::string_view kProblemMagic = "lingopt-problem";

std::string name_list(const std::vector<std::string>& v) {
  return fmt::format("[{}]", fmt::join(v, ", "));
}

}  // namespace

RuleBase ProblemBundle::rules_for(const Alternative& alt) const {
  if (alt.rules.empty()) return rules;
  return rules.subset(alt.rules);
}

std::size_t ProblemBundle::objective_index(std::string_view name) const {
  const auto objs = rules.objectives();
  for (std::size_t k = 0; k < objs.size(); ++k) {
    if (objs[k].name == name) return k;
  }
  throw LookupError(fmt::format("no objective named '{}'", name));
}

ProblemBundle parse_problem(std::string_view text, std::string_view source) {
  const auto records = parse_records(text, source);
  if (records.empty() || records.front().keyword != kProblemMagic) {
    throw LoadError(std::string(source),
                    fmt::format("expected '{} 1' header", kProblemMagic));
  }
  if (records.front().arg_text(0) != "1") {
    records.front().fail("unsupported format version");
  }
  ProblemBundle p;
  std::vector<Objective> objectives;
  std::vector<Rule> rules;
  const Record* last = &records.front();
  for (std::size_t i = 1; i < records.size(); ++i) {
    const Record& r = records[i];
    last = &r;
    if (r.keyword == "name") {
      p.name = r.arg_text(0);
    } else if (r.keyword == "codebook") {
      p.codebook = r.arg_text(0);
    } else if (r.keyword == "variables") {
      p.variables = r.arg_names(0);
    } else if (r.keyword == "terms") {
      p.terms = r.arg_names(0);
    } else if (r.keyword == "objective") {
      const std::string dir = r.arg_text(1);
      if (dir != "max" && dir != "min") r.fail("direction must be max or min");
      objectives.push_back(
          {r.arg_text(0), dir == "max" ? Direction::kMax : Direction::kMin});
    } else if (r.keyword == "rank") {
      p.rank.clear();
      for (std::size_t k = 0; k < r.args.size(); ++k) {
        p.rank.push_back(r.arg_text(k));
      }
    } else if (r.keyword == "rule") {
      r.expect_fields({"if", "then"});
      Rule rule{r.arg_text(0), r.names("if"), {}};
      try {
        for (const auto& t : r.names("then")) {
          rule.consequents.push_back(ConsequentRef::Parse(t));
        }
      } catch (const DomainError& e) {
        r.fail(e.what());
      }
      rules.push_back(std::move(rule));
    } else if (r.keyword == "alternative") {
      r.expect_fields({"input", "rules"});
      Alternative alt{r.arg_text(0), r.names("input"), {}};
      if (r.has("rules")) alt.rules = r.names("rules");
      p.alternatives.push_back(std::move(alt));
    } else {
      r.fail("unknown record");
    }
  }
  try {
    p.rules = RuleBase::Create(std::move(objectives), std::move(rules));
    if (!p.variables.empty() &&
        p.variables.size() != p.rules.antecedent_count()) {
      throw DomainError(fmt::format("{} variables but rules have {} antecedents",
                                    p.variables.size(),
                                    p.rules.antecedent_count()));
    }
    if (p.alternatives.empty()) throw DomainError("no alternatives");
    for (const auto& alt : p.alternatives) {
      if (alt.input.size() != p.rules.antecedent_count()) {
        throw DomainError(fmt::format(
            "alternative '{}' has {} inputs, rules have {} antecedents",
            alt.label, alt.input.size(), p.rules.antecedent_count()));
      }
      for (const auto& l : alt.rules) p.rules.at(l);
    }
    if (p.rank.empty()) {
      for (const auto& o : p.rules.objectives()) p.rank.push_back(o.name);
    }
    for (const auto& n : p.rank) p.objective_index(n);
  } catch (const DataError& e) {
    throw LoadError(std::string(source), last->line, e.what());
  }
  return p;
}

ProblemBundle load_problem(std::string_view source) {
  if (auto text = fixture_text(source);
      text && (source == "case-solop" || source == "case-molop")) {
    return parse_problem(*text, source);
  }
  const std::string path(source);
  return parse_problem(read_text_file(path), path);
}

std::string format_problem(const ProblemBundle& p) {
  std::string out = fmt::format("{} 1\n", kProblemMagic);
  if (!p.name.empty()) out += fmt::format("name \"{}\"\n", p.name);
  if (!p.codebook.empty()) out += fmt::format("codebook {}\n", p.codebook);
  if (!p.variables.empty()) {
    out += fmt::format("variables {}\n", name_list(p.variables));
  }
  if (!p.terms.empty()) out += fmt::format("terms {}\n", name_list(p.terms));
  for (const auto& o : p.rules.objectives()) {
    out += fmt::format("objective {} {}\n", o.name, to_string(o.direction));
  }
  out += fmt::format("rank {}\n", fmt::join(p.rank, " "));
  for (const auto& r : p.rules.rules()) {
    std::vector<std::string> then;
    for (const auto& c : r.consequents) then.push_back(c.to_string());
    out += fmt::format("rule {} if={} then={}\n", r.label,
                       name_list(r.antecedents), name_list(then));
  }
  for (const auto& a : p.alternatives) {
    out += fmt::format("alternative {} input={}", a.label, name_list(a.input));
    if (!a.rules.empty()) out += fmt::format(" rules={}", name_list(a.rules));
    out += "\n";
  }
  return out;
}

PrReport solve_problem(const ProblemBundle& problem, const Codebook& codebook,
                       const PrOptions& options) {
  problem.rules.validate(codebook);
  const ConsequentTable table =
      resolve_consequents(problem.rules, codebook, options);
  PrReport report;
  for (const auto& alt : problem.alternatives) {
    ConsequentTable picked;
    const std::vector<std::string> labels = [&] {
      if (!alt.rules.empty()) return alt.rules;
      std::vector<std::string> all;
      for (const auto& r : problem.rules.rules()) all.push_back(r.label);
      return all;
    }();
    const auto all_rules = problem.rules.rules();
    for (const auto& l : labels) {
      const auto it = std::find_if(all_rules.begin(), all_rules.end(),
                                   [&](const Rule& r) { return r.label == l; });
      picked.push_back(table[static_cast<std::size_t>(it - all_rules.begin())]);
    }
    report.alternatives.push_back(
        {alt.label, solve_molop(problem.rules_for(alt), picked, alt.input,
                                codebook, options)});
  }
  const std::size_t primary = problem.objective_index(problem.rank.front());
  const std::optional<std::size_t> secondary =
      problem.rank.size() > 1
          ? std::optional(problem.objective_index(problem.rank[1]))
          : std::nullopt;
  std::vector<RankItem> items;
  for (const auto& a : report.alternatives) {
    RankItem item{a.label, a.outputs[primary].centroid, std::nullopt};
    if (secondary) item.tiebreak = a.outputs[*secondary].centroid;
    items.push_back(std::move(item));
  }
  const auto dir = problem.rules.objectives()[primary].direction == Direction::kMax
                       ? RankDirection::kDescending
                       : RankDirection::kAscending;
  report.ranking = rank_by_centroid(items, dir);
  return report;
}

}  // namespace lingopt
