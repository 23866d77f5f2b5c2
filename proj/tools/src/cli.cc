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

#include <algorithm>
#include <memory>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "lingopt/errors.h"
#include "lingopt/fixtures.h"
#include "lingopt/record_io.h"

namespace lingopt::cli {
namespace {

struct SolveArgs {
  std::string engine;
  std::string codebook;
  std::string problem;
  std::size_t levels = kDefaultAlphaLevels;
  std::size_t grid = Discretization::kDefaultPoints;
  std::string format = "table";
  bool strict_scale = false;
  double step = 1e-3;
  bool normalize = false;
};

struct ExportArgs {
  std::string codebook;
  std::string problem;
  std::string items = "codebook";
  std::size_t levels = kDefaultAlphaLevels;
  std::size_t grid = Discretization::kDefaultPoints;
  std::string out = "-";
};

struct SampleArgs {
  std::string spec = "paper-endpoints";
  std::size_t n = kDefaultSampleCount;
  std::uint64_t seed = 0;
  std::vector<std::string> words;
  std::string out = "-";
};

struct ShowArgs {
  std::string codebook;
  std::string format = "table";
};

struct ImportArgs {
  std::string vertices;
  std::string encoder = "imported";
  std::string out = "-";
};

Format parse_format(const std::string& f) {
  return f == "csv" ? Format::kCsv : Format::kTable;
}

bool is_tsukamoto_id(std::string_view id) {
  const auto ids = tsukamoto_fixture_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

Codebook open_codebook(const std::string& flag, const ProblemBundle* problem,
                       std::string* ref, std::ostream& err) {
  *ref = !flag.empty() ? flag : (problem != nullptr ? problem->codebook : "");
  if (ref->empty()) {
    throw UsageError("no codebook: pass --codebook or name one in the problem");
  }
  std::vector<std::string> warnings;
  Codebook cb = load_codebook(*ref, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  return cb;
}

ProblemBundle open_word_problem(const std::string& ref,
                                std::string_view engine) {
  if (is_tsukamoto_id(ref)) {
    throw UsageError(fmt::format(
        "engine '{}' needs a word-based problem; '{}' is a crisp Tsukamoto "
        "system",
        engine, ref));
  }
  return load_problem(ref);
}

void solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const Format format = parse_format(a.format);
  if (a.engine == "tsukamoto") {
    if (!is_tsukamoto_id(a.problem)) {
      throw UsageError(fmt::format(
          "engine 'tsukamoto' needs a crisp system ({}); '{}' is not one",
          fmt::join(tsukamoto_fixture_ids(), ", "), a.problem));
    }
    const TsukamotoProblem p = tsukamoto_fixture(a.problem);
    OptimizeOptions opts;
    opts.step = a.step;
    opts.normalize = a.normalize;
    out << render_tsukamoto(p, opts, optimize(p.system, p.total, opts), format);
    return;
  }
  const ProblemBundle problem = open_word_problem(a.problem, a.engine);
  ReportHeader header{problem.name.empty() ? a.problem : problem.name, {}, {}};
  if (a.engine == "pr") {
    const Codebook cb = open_codebook(a.codebook, &problem, &header.codebook, err);
    header.encoder = cb.encoder_tag();
    PrOptions opts{a.levels, a.grid};
    out << render_pr(header, problem, solve_problem(problem, cb, opts), opts,
                     format);
    return;
  }
  std::vector<std::string> labels = problem.terms;
  if (labels.empty()) {
    const Codebook cb = open_codebook(a.codebook, &problem, &header.codebook, err);
    header.encoder = cb.encoder_tag();
    for (const auto& w : cb.words()) labels.push_back(w.name());
  }
  const OrdinalTermSet terms = OrdinalTermSet::Create(labels);
  const TwoTupleReport report =
      solve_problem_two_tuple(problem, terms, a.strict_scale);
  for (const auto& w : report.warnings) err << "warning: " << w << "\n";
  out << render_two_tuple(header, problem, terms, report, format);
}

void export_fou(const ExportArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<FouPolygon> polys;
  std::string ref;
  if (a.items == "codebook") {
    const Codebook cb = open_codebook(a.codebook, nullptr, &ref, err);
    for (const auto& w : cb.words()) {
      for (auto& p : word_polygons(w)) polys.push_back(std::move(p));
    }
  } else {
    if (a.problem.empty()) {
      throw UsageError(fmt::format("--items {} needs --problem", a.items));
    }
    const ProblemBundle problem = open_word_problem(a.problem, "pr");
    const Codebook cb = open_codebook(a.codebook, &problem, &ref, err);
    const PrOptions opts{a.levels, a.grid};
    if (a.items == "consequents") {
      const ConsequentTable table = resolve_consequents(problem.rules, cb, opts);
      const auto rules = problem.rules.rules();
      const auto objs = problem.rules.objectives();
      for (std::size_t r = 0; r < table.size(); ++r) {
        for (std::size_t k = 0; k < objs.size(); ++k) {
          const auto name = fmt::format("{}/{}", rules[r].label, objs[k].name);
          for (auto& p : word_polygons(table[r][k].with_name(name))) {
            polys.push_back(std::move(p));
          }
        }
      }
    } else {
      const PrReport report = solve_problem(problem, cb, opts);
      for (const auto& alt : report.alternatives) {
        for (const auto& o : alt.outputs) {
          for (auto& p : curve_polygons(
                   fmt::format("{}/{}", alt.label, o.objective), o.curves)) {
            polys.push_back(std::move(p));
          }
        }
      }
    }
  }
  emit(a.out, format_polygons(polys), out);
}

void sample(const SampleArgs& a, std::ostream& out) {
  const EndpointSet specs = load_endpoints(a.spec);
  std::vector<DataIntervalSet> sets;
  for (std::size_t i = 0; i < specs.specs.size(); ++i) {
    const EndpointSpec& s = specs.specs[i];
    if (!a.words.empty() &&
        std::find(a.words.begin(), a.words.end(), s.word) == a.words.end()) {
      continue;
    }
    sets.push_back(sample_person_fou(s, a.n, a.seed + i, specs.scale));
  }
  for (const auto& w : a.words) {
    if (std::none_of(sets.begin(), sets.end(),
                     [&](const DataIntervalSet& d) { return d.word == w; })) {
      throw LookupError(fmt::format("'{}' has no endpoint spec", w));
    }
  }
  emit(a.out, format_data_intervals(sets), out);
}

void import_fou(const ImportArgs& a, std::ostream& out, std::ostream& err) {
  const auto polys = parse_polygons(read_text_file(a.vertices), a.vertices);
  std::vector<std::string> warnings;
  const Codebook cb = Codebook::Create(kDefaultScale, words_from_polygons(polys),
                                       {a.encoder, std::nullopt, std::nullopt},
                                       &warnings);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  emit(a.out, format_codebook(cb), out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Linguistic optimization with perceptual reasoning", "lingopt"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Run an engine on a problem");
  solve_cmd->add_option("engine", solve_args.engine, "pr, two-tuple or tsukamoto")
      ->required()
      ->check(CLI::IsMember({"pr", "two-tuple", "tsukamoto"}));
  solve_cmd->add_option("--codebook", solve_args.codebook,
                        "Codebook file or fixture id");
  solve_cmd->add_option("--problem", solve_args.problem,
                        "Problem file or fixture id")
      ->required();
  solve_cmd->add_option("--levels", solve_args.levels, "Alpha levels")
      ->check(CLI::Range(2, 100000));
  solve_cmd->add_option("--grid", solve_args.grid, "Discretization points")
      ->check(CLI::Range(3, 1000000));
  solve_cmd->add_option("--format", solve_args.format)
      ->check(CLI::IsMember({"table", "csv"}));
  solve_cmd->add_flag("--strict-scale", solve_args.strict_scale,
                      "Treat 2-tuple overflow as an error");
  solve_cmd->add_option("--step", solve_args.step, "Tsukamoto grid step");
  solve_cmd->add_flag("--normalize", solve_args.normalize,
                      "Normalize objectives before the max-min compromise");

  ExportArgs export_args;
  auto* export_cmd =
      app.add_subcommand("export-fou", "Write FOU polygons as CSV rows");
  export_cmd->add_option("--codebook", export_args.codebook);
  export_cmd->add_option("--problem", export_args.problem);
  export_cmd->add_option("--items", export_args.items)
      ->check(CLI::IsMember({"codebook", "consequents", "outputs"}));
  export_cmd->add_option("--levels", export_args.levels)
      ->check(CLI::Range(2, 100000));
  export_cmd->add_option("--grid", export_args.grid)
      ->check(CLI::Range(3, 1000000));
  export_cmd->add_option("--out", export_args.out, "Output path, - for stdout");

  auto* codebook_cmd = app.add_subcommand("codebook", "Codebook utilities");
  codebook_cmd->require_subcommand(1);
  SampleArgs sample_args;
  auto* sample_cmd = codebook_cmd->add_subcommand(
      "sample", "Draw data intervals from endpoint intervals");
  sample_cmd->add_option("--spec", sample_args.spec,
                         "Endpoint file or fixture id");
  sample_cmd->add_option("--n", sample_args.n, "Intervals per word")
      ->check(CLI::PositiveNumber);
  sample_cmd->add_option("--seed", sample_args.seed,
                         "Base seed; word i uses seed + i")
      ->required();
  sample_cmd->add_option("--word", sample_args.words, "Restrict to these words");
  sample_cmd->add_option("--out", sample_args.out);
  ShowArgs show_args;
  auto* show_cmd = codebook_cmd->add_subcommand("show", "Print a codebook");
  show_cmd->add_option("--codebook", show_args.codebook)->required();
  show_cmd->add_option("--format", show_args.format)
      ->check(CLI::IsMember({"table", "csv"}));
  ImportArgs import_args;
  auto* import_cmd = codebook_cmd->add_subcommand(
      "import", "Build a codebook from exported FOU polygons");
  import_cmd->add_option("--vertices", import_args.vertices)->required();
  import_cmd->add_option("--encoder", import_args.encoder);
  import_cmd->add_option("--out", import_args.out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) {
      solve(solve_args, out, err);
    } else if (export_cmd->parsed()) {
      export_fou(export_args, out, err);
    } else if (sample_cmd->parsed()) {
      sample(sample_args, out);
    } else if (show_cmd->parsed()) {
      std::string ref;
      out << render_codebook(open_codebook(show_args.codebook, nullptr, &ref, err),
                             parse_format(show_args.format));
    } else if (import_cmd->parsed()) {
      import_fou(import_args, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedOperation& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const EngineError& e) {
    err << "error: " << e.what() << "\n";
    return kExitEngine;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace lingopt::cli
