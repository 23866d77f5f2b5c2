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

#include <cmath>
#include <string>
#include <utility>

#include <fmt/format.h>

#include "cli.h"
#include "lingopt/errors.h"
#include "lingopt/record_io.h"

namespace lingopt::cli {
namespace {

std::string fixed(double v, int decimals) {
  std::string s = fmt::format("{:.{}f}", v, decimals);
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') {
    s.erase(0, 1);
  }
  return s;
}

std::string shape_name(FouShape s) { return std::string(to_string(s)); }

void header_lines(std::string& out, const ReportHeader& h,
                  std::string_view engine) {
  out += fmt::format("problem   {}\n", h.problem);
  if (!h.codebook.empty()) {
    out += fmt::format("codebook  {} ({})\n", h.codebook, h.encoder);
  }
  out += fmt::format("engine    {}\n", engine);
}

// Drops repeated vertices and interior points of straight runs.
std::vector<std::pair<double, double>> simplify(
    std::vector<std::pair<double, double>> pts) {
  std::vector<std::pair<double, double>> out;
  for (const auto& p : pts) {
    if (!out.empty() && std::abs(out.back().first - p.first) < 1e-12 &&
        std::abs(out.back().second - p.second) < 1e-12) {
      continue;
    }
    while (out.size() >= 2) {
      const auto& a = out[out.size() - 2];
      const auto& b = out.back();
      const double cross = (b.first - a.first) * (p.second - a.second) -
                           (b.second - a.second) * (p.first - a.first);
      if (std::abs(cross) > 1e-9) break;
      out.pop_back();
    }
    out.push_back(p);
  }
  return out;
}

std::vector<std::pair<double, double>> trace(const std::vector<double>& alpha,
                                             const std::vector<double>& left,
                                             const std::vector<double>& right) {
  std::vector<std::pair<double, double>> pts;
  for (std::size_t j = 0; j < alpha.size(); ++j) pts.push_back({left[j], alpha[j]});
  for (std::size_t j = alpha.size(); j-- > 0;) pts.push_back({right[j], alpha[j]});
  return simplify(std::move(pts));
}

}  // namespace

std::string render_pr(const ReportHeader& header, const ProblemBundle& problem,
                      const PrReport& report, const PrOptions& options,
                      Format format) {
  std::string out;
  if (format == Format::kCsv) {
    out += "alternative,objective,umf_a,umf_b,umf_c,umf_d,lmf_a,lmf_b,lmf_c,"
           "lmf_d,lmf_h,cl,cr,mean,word,similarity,tie,shape\n";
    for (const auto& alt : report.alternatives) {
      for (const auto& o : alt.outputs) {
        const Trapezoid& u = o.fou.umf();
        const Trapezoid& l = o.fou.lmf();
        out += fmt::format(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            alt.label, o.objective, fixed(u.a(), 6), fixed(u.b(), 6),
            fixed(u.c(), 6), fixed(u.d(), 6), fixed(l.a(), 6), fixed(l.b(), 6),
            fixed(l.c(), 6), fixed(l.d(), 6), fixed(l.height(), 6),
            fixed(o.centroid.cl, 6), fixed(o.centroid.cr, 6),
            fixed(o.centroid.mean, 6), o.decoded.word,
            fixed(o.decoded.similarity, 6), o.decoded.tie_broken ? "yes" : "no",
            shape_name(o.shape));
      }
    }
    out += fmt::format("ranking,{}\n", fmt::join(report.ranking, ","));
    return out;
  }

  header_lines(out, header,
               fmt::format("pr alpha-levels={} grid={}", options.alpha_levels,
                           options.grid_points));
  out += "\n";
  out += fmt::format(
      "{:<12}{:<12}{:>7}{:>7}{:>7}{:>7}  {:>7}{:>7}{:>7}{:>7}{:>6}  "
      "{:>6}{:>6}{:>6}  {:<6}{:<5}{}\n",
      "alternative", "objective", "umf_a", "umf_b", "umf_c", "umf_d", "lmf_a",
      "lmf_b", "lmf_c", "lmf_d", "h", "cl", "cr", "mean", "word", "tie",
      "shape");
  for (const auto& alt : report.alternatives) {
    for (const auto& o : alt.outputs) {
      const Trapezoid& u = o.fou.umf();
      const Trapezoid& l = o.fou.lmf();
      out += fmt::format(
          "{:<12}{:<12}{:>7}{:>7}{:>7}{:>7}  {:>7}{:>7}{:>7}{:>7}{:>6}  "
          "{:>6}{:>6}{:>6}  {:<6}{:<5}{}\n",
          alt.label, o.objective, fixed(u.a(), 2), fixed(u.b(), 2),
          fixed(u.c(), 2), fixed(u.d(), 2), fixed(l.a(), 2), fixed(l.b(), 2),
          fixed(l.c(), 2), fixed(l.d(), 2), fixed(l.height(), 2),
          fixed(o.centroid.cl, 2), fixed(o.centroid.cr, 2),
          fixed(o.centroid.mean, 2), o.decoded.word,
          o.decoded.tie_broken ? "yes" : "no", shape_name(o.shape));
    }
  }
  out += "\n";
  for (std::size_t i = 0; i < report.alternatives.size(); ++i) {
    const auto& alt = report.alternatives[i];
    const RuleBase rb = problem.rules_for(problem.alternatives[i]);
    std::vector<std::string> parts;
    const auto& firings = alt.outputs.front().firings;
    for (std::size_t r = 0; r < firings.size(); ++r) {
      const Interval& f = firings[r].interval;
      parts.push_back(
          f.lo == f.hi
              ? fmt::format("{}={}", rb.rules()[r].label, fixed(f.hi, 2))
              : fmt::format("{}=[{},{}]", rb.rules()[r].label, fixed(f.lo, 2),
                            fixed(f.hi, 2)));
    }
    out += fmt::format("firing    {:<6}{}\n", alt.label, fmt::join(parts, " "));
  }
  out += fmt::format("\nranking   {}\n", format_ranking(report.ranking));
  return out;
}

std::string render_two_tuple(const ReportHeader& header,
                             const ProblemBundle& problem,
                             const OrdinalTermSet& terms,
                             const TwoTupleReport& report, Format format) {
  std::string out;
  const auto overflow_text = [](const OverflowReport& r) {
    if (!r.overflows()) return std::string("-");
    return fmt::format("left={},right={}", fixed(r.left, 2), fixed(r.right, 2));
  };
  if (format == Format::kCsv) {
    out += "alternative,objective,beta,term,alpha,overflow_left,overflow_right\n";
    for (const auto& alt : report.alternatives) {
      for (const auto& o : alt.outputs) {
        out += fmt::format("{},{},{},{},{},{},{}\n", alt.label, o.objective,
                           fixed(o.beta, 6), terms.label(o.value.index),
                           fixed(o.value.alpha, 6), fixed(o.overflow.left, 6),
                           fixed(o.overflow.right, 6));
      }
    }
    out += fmt::format("ranking,{}\n", fmt::join(report.ranking, ","));
    return out;
  }
  header_lines(out, header,
               fmt::format("two-tuple terms={}", fmt::join(terms.labels(), ",")));
  out += "\n";
  out += fmt::format("{:<12}{:<12}{:>7}  {:<12}{}\n", "alternative",
                     "objective", "beta", "2-tuple", "overflow");
  for (const auto& alt : report.alternatives) {
    for (const auto& o : alt.outputs) {
      out += fmt::format("{:<12}{:<12}{:>7}  {:<12}{}\n", alt.label,
                         o.objective, fixed(o.beta, 2), lingopt::format(o.value, terms),
                         overflow_text(o.overflow));
    }
  }
  out += "\n";
  for (std::size_t i = 0; i < report.alternatives.size(); ++i) {
    const auto& alt = report.alternatives[i];
    const RuleBase rb = problem.rules_for(problem.alternatives[i]);
    std::vector<std::string> parts;
    for (std::size_t r = 0; r < alt.firings.size(); ++r) {
      parts.push_back(fmt::format("{}={}", rb.rules()[r].label,
                                  format_number(alt.firings[r])));
    }
    out += fmt::format("firing    {:<6}{}\n", alt.label, fmt::join(parts, " "));
  }
  for (const auto& w : report.warnings) out += fmt::format("warning   {}\n", w);
  out += fmt::format("\nranking   {}\n", format_ranking(report.ranking));
  return out;
}

std::string render_tsukamoto(const TsukamotoProblem& problem,
                             const OptimizeOptions& options,
                             const OptimizeResult& result, Format format) {
  const auto& sys = problem.system;
  std::string out;
  if (format == Format::kCsv) {
    std::vector<std::string> cols;
    for (std::size_t j = 0; j < sys.variable_count(); ++j) {
      cols.push_back(fmt::format("y{}", j + 1));
    }
    for (std::size_t k = 0; k < sys.objective_count(); ++k) {
      cols.push_back(fmt::format("f{}", k + 1));
    }
    out += fmt::format("{}\n", fmt::join(cols, ","));
    for (const auto& p : result.optima) {
      std::vector<std::string> v;
      for (double y : p.y) v.push_back(fixed(y, 6));
      for (double f : p.values) v.push_back(fixed(f, 6));
      out += fmt::format("{}\n", fmt::join(v, ","));
    }
    return out;
  }
  std::vector<std::string> dirs;
  for (Direction d : sys.directions()) dirs.emplace_back(to_string(d));
  out += fmt::format("problem   {}\n", problem.name);
  out += fmt::format("engine    tsukamoto step={} normalize={}\n",
                     format_number(options.step),
                     options.normalize ? "yes" : "no");
  out += fmt::format("objective {}\n", fmt::join(dirs, " "));
  out += fmt::format("subject   sum(y)={}, 0<=y<=1\n",
                     format_number(problem.total));
  out += fmt::format("grid      evaluated={} skipped={}\n", result.evaluated,
                     result.skipped);
  out += fmt::format("best      {}\n\n", fixed(result.best, 6));
  std::string head;
  for (std::size_t j = 0; j < sys.variable_count(); ++j) {
    head += fmt::format("{:>10}", fmt::format("y{}", j + 1));
  }
  for (std::size_t k = 0; k < sys.objective_count(); ++k) {
    head += fmt::format("{:>10}", fmt::format("f{}", k + 1));
  }
  out += fmt::format("optimum{}\n", head);
  for (const auto& p : result.optima) {
    std::string row;
    for (double y : p.y) row += fmt::format("{:>10}", fixed(y, 4));
    for (double f : p.values) row += fmt::format("{:>10}", fixed(f, 6));
    out += fmt::format("optimum{}\n", row);
  }
  return out;
}

std::string render_codebook(const Codebook& codebook, Format format) {
  std::string out;
  if (format == Format::kCsv) {
    out += "word,label,umf_a,umf_b,umf_c,umf_d,lmf_a,lmf_b,lmf_c,lmf_d,lmf_h,"
           "cl,cr,mean,computed_cl,computed_cr,computed_mean,shape\n";
  } else {
    out += fmt::format("codebook  encoder={} scale=[{}, {}]\n\n",
                       codebook.encoder_tag().empty() ? "-" : codebook.encoder_tag(),
                       format_number(codebook.scale().lo),
                       format_number(codebook.scale().hi));
    out += fmt::format(
        "{:<6}{:>7}{:>7}{:>7}{:>7}  {:>7}{:>7}{:>7}{:>7}{:>6}  {:>6}{:>6}{:>6}"
        "  {:>7}{:>7}{:>7}  {}\n",
        "word", "umf_a", "umf_b", "umf_c", "umf_d", "lmf_a", "lmf_b", "lmf_c",
        "lmf_d", "h", "cl", "cr", "mean", "c_cl", "c_cr", "c_mean", "shape");
  }
  for (std::size_t i = 0; i < codebook.size(); ++i) {
    const IT2Word& w = codebook.words()[i];
    const Trapezoid& u = w.umf();
    const Trapezoid& l = w.lmf();
    const Centroid& c = *w.centroid();
    const Centroid& r = codebook.computed_centroid(i);
    const auto shape = shape_name(classify_fou(w, codebook.scale()));
    if (format == Format::kCsv) {
      out += fmt::format(
          "{},\"{}\",{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
          w.name(), w.label(), format_number(u.a()), format_number(u.b()),
          format_number(u.c()), format_number(u.d()), format_number(l.a()),
          format_number(l.b()), format_number(l.c()), format_number(l.d()),
          format_number(l.height()), format_number(c.cl), format_number(c.cr),
          format_number(c.mean), fixed(r.cl, 6), fixed(r.cr, 6),
          fixed(r.mean, 6), shape);
    } else {
      out += fmt::format(
          "{:<6}{:>7}{:>7}{:>7}{:>7}  {:>7}{:>7}{:>7}{:>7}{:>6}  {:>6}{:>6}{:>6}"
          "  {:>7}{:>7}{:>7}  {}\n",
          w.name(), fixed(u.a(), 2), fixed(u.b(), 2), fixed(u.c(), 2),
          fixed(u.d(), 2), fixed(l.a(), 2), fixed(l.b(), 2), fixed(l.c(), 2),
          fixed(l.d(), 2), fixed(l.height(), 2), fixed(c.cl, 2),
          fixed(c.cr, 2), fixed(c.mean, 2), fixed(r.cl, 3), fixed(r.cr, 3),
          fixed(r.mean, 3), shape);
    }
  }
  return out;
}

std::vector<FouPolygon> word_polygons(const IT2Word& w) {
  std::vector<FouPolygon> out;
  for (const auto& [curve, t] :
       {std::pair{"UMF", w.umf()}, std::pair{"LMF", w.lmf()}}) {
    out.push_back({w.name(),
                   curve,
                   {{t.a(), 0.0}, {t.b(), t.height()}, {t.c(), t.height()},
                    {t.d(), 0.0}}});
  }
  return out;
}

std::vector<FouPolygon> curve_polygons(const std::string& name,
                                       const AlphaCutFou& curves) {
  return {
      {name, "UMF", trace(curves.upper_alpha, curves.y_ll, curves.y_rr)},
      {name, "LMF", trace(curves.lower_alpha, curves.y_lr, curves.y_rl)},
  };
}

std::string format_polygons(const std::vector<FouPolygon>& polygons) {
  std::string out;
  for (const auto& p : polygons) {
    out += fmt::format("{},{}", p.name, p.curve);
    for (const auto& [x, mu] : p.vertices) {
      out += fmt::format(",{},{}", fixed(x, 4), fixed(mu, 4));
    }
    out += "\n";
  }
  return out;
}

std::vector<FouPolygon> parse_polygons(std::string_view text,
                                       std::string_view source) {
  std::vector<FouPolygon> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      cells.emplace_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (cells.size() < 4 || cells.size() % 2 != 0) {
      throw LoadError(std::string(source), line_no,
                      "expected name,curve followed by x,mu pairs");
    }
    FouPolygon p{cells[0], cells[1], {}};
    if (p.curve != "UMF" && p.curve != "LMF") {
      throw LoadError(std::string(source), line_no, "curve must be UMF or LMF");
    }
    for (std::size_t i = 2; i < cells.size(); i += 2) {
      try {
        p.vertices.push_back({std::stod(cells[i]), std::stod(cells[i + 1])});
      } catch (const std::exception&) {
        throw LoadError(std::string(source), line_no,
                        fmt::format("bad number near '{}'", cells[i]));
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<IT2Word> words_from_polygons(
    const std::vector<FouPolygon>& polygons) {
  std::vector<IT2Word> out;
  const auto trapezoid = [](const FouPolygon& p) {
    if (p.vertices.size() != 4) {
      throw DomainError(fmt::format("{} {}: a trapezoid needs 4 vertices, got {}",
                                    p.name, p.curve, p.vertices.size()));
    }
    const auto& v = p.vertices;
    return Trapezoid(v[0].first, v[1].first, v[2].first, v[3].first,
                     v[1].second);
  };
  for (std::size_t i = 0; i < polygons.size(); ++i) {
    const FouPolygon& u = polygons[i];
    if (u.curve != "UMF" || i + 1 >= polygons.size() ||
        polygons[i + 1].curve != "LMF" || polygons[i + 1].name != u.name) {
      throw DomainError(
          fmt::format("'{}': expected a UMF row followed by its LMF row", u.name));
    }
    out.emplace_back(u.name, trapezoid(u), trapezoid(polygons[i + 1]));
    ++i;
  }
  return out;
}

}  // namespace lingopt::cli
