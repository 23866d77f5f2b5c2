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

#include "properties.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "generators.h"
#include "lingopt/errors.h"
#include "lingopt/perceptual_reasoning.h"
#include "lingopt/similarity.h"
#include "lingopt/two_tuple.h"
#include "oracles.h"

namespace lingopt::testing {
namespace {

constexpr std::size_t kMaxReported = 5;

double word_distance(const IT2Word& a, const IT2Word& b) {
  const double v[] = {
      a.umf().a() - b.umf().a(), a.umf().b() - b.umf().b(),
      a.umf().c() - b.umf().c(), a.umf().d() - b.umf().d(),
      a.lmf().a() - b.lmf().a(), a.lmf().b() - b.lmf().b(),
      a.lmf().c() - b.lmf().c(), a.lmf().d() - b.lmf().d(),
      a.lmf().height() - b.lmf().height()};
  double worst = 0.0;
  for (double d : v) worst = std::max(worst, std::abs(d));
  return worst;
}

std::vector<FiringLevel> random_firings(Gen& g, std::size_t n) {
  std::vector<FiringLevel> f;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.coin(0.5)) {
      f.push_back(FiringLevel::Scalar(g.uniform(0.0, 1.0)));
    } else {
      double lo = g.uniform(0.0, 1.0), hi = g.uniform(0.0, 1.0);
      if (lo > hi) std::swap(lo, hi);
      f.push_back(FiringLevel::Checked(lo, hi));
    }
  }
  // At least one rule must fire.
  if (std::none_of(f.begin(), f.end(),
                   [](const FiringLevel& x) { return x.fired(); })) {
    f.front() = FiringLevel::Scalar(1.0);
  }
  return f;
}

}  // namespace

void PropertyResult::fail(std::string what) {
  if (failures.size() < kMaxReported) failures.push_back(std::move(what));
}

PropertyResult check_alpha_cut_nesting(std::uint64_t seed, std::size_t n) {
  Gen g(seed);
  PropertyResult r;
  for (std::size_t i = 0; i < n; ++i, ++r.cases) {
    const Trapezoid t = g.trapezoid();
    double a1 = g.uniform(0.0, t.height());
    double a2 = g.uniform(0.0, t.height());
    if (a1 > a2) std::swap(a1, a2);
    const Interval c1 = alpha_cut(t, a1);
    const Interval c2 = alpha_cut(t, a2);
    if (!c1.contains(c2, 1e-12) || c2.lo > c2.hi + 1e-12) {
      r.fail(fmt::format("case {}: cut at {} not inside cut at {}", i, a2, a1));
    }
    const Interval o = alpha_cut_oracle(trap_of(t), a2);
    const double err = std::max(std::abs(o.lo - c2.lo), std::abs(o.hi - c2.hi));
    r.worst = std::max(r.worst, err);
    if (err > 1e-9) r.fail(fmt::format("case {}: oracle differs by {}", i, err));
  }
  return r;
}

PropertyResult check_jaccard_axioms(std::uint64_t seed, std::size_t n) {
  Gen g(seed);
  PropertyResult r;
  const Discretization grid;
  for (std::size_t i = 0; i < n; ++i, ++r.cases) {
    const IT2Word a = g.word("a");
    const IT2Word b = g.word("b");
    const double ab = jaccard(a, b, grid);
    const double ba = jaccard(b, a, grid);
    const double aa = jaccard(a, a, grid);
    const double err = std::max(std::abs(ab - ba), std::abs(aa - 1.0));
    r.worst = std::max(r.worst, err);
    if (err > 1e-12) r.fail(fmt::format("case {}: asymmetry or self != 1", i));
    if (ab < 0.0 || ab > 1.0) r.fail(fmt::format("case {}: value {}", i, ab));
  }
  return r;
}

PropertyResult check_lwa_idempotence(std::uint64_t seed, std::size_t n) {
  Gen g(seed);
  PropertyResult r;
  for (std::size_t i = 0; i < n; ++i, ++r.cases) {
    const IT2Word w = g.word("w");
    const std::size_t m = 1 + g.index(5);
    const std::vector<IT2Word> same(m, w);
    const auto f = random_firings(g, m);
    const double err = word_distance(lwa(same, f, 21).to_word(), w);
    r.worst = std::max(r.worst, err);
    if (err > 1e-9) r.fail(fmt::format("case {}: off by {}", i, err));
  }
  return r;
}

PropertyResult check_lwa_containment(std::uint64_t seed, std::size_t n) {
  Gen g(seed);
  PropertyResult r;
  for (std::size_t i = 0; i < n; ++i, ++r.cases) {
    const std::size_t m = 1 + g.index(6);
    std::vector<IT2Word> cs;
    for (std::size_t k = 0; k < m; ++k) cs.push_back(g.word("c"));
    const auto f = random_firings(g, m);
    const AlphaCutFou out = lwa(cs, f, 21);
    const IT2Word w = out.to_word();
    const double lo = std::min(out.y_ll.front(), w.umf().a());
    const double hi = std::max(out.y_rr.front(), w.umf().d());
    const double err = std::max({0.0, kDefaultScale.lo - lo, hi - kDefaultScale.hi});
    r.worst = std::max(r.worst, err);
    if (err > 1e-12) {
      r.fail(fmt::format("case {}: support [{}, {}] leaves the scale", i, lo, hi));
    }
  }
  return r;
}

PropertyResult check_ekm_oracle(std::uint64_t seed, std::size_t n,
                                std::size_t points) {
  Gen g(seed);
  PropertyResult r;
  const Discretization grid(kDefaultScale, points);
  for (std::size_t i = 0; i < n; ++i, ++r.cases) {
    const IT2Word w = g.word("w");
    const Centroid c = centroid_ekm(w, grid);
    const Centroid o =
        switch_point_centroid(envelope_of(w, 0.0, 10.0, points));
    const double err = std::max(std::abs(c.cl - o.cl), std::abs(c.cr - o.cr));
    r.worst = std::max(r.worst, err);
    if (err > 1e-9) r.fail(fmt::format("case {}: off by {}", i, err));
  }
  return r;
}

PropertyResult check_two_tuple_round_trip(std::size_t n) {
  const OrdinalTermSet terms = OrdinalTermSet::Create({"VP", "P", "A", "G", "VG"});
  PropertyResult r;
  const double g = static_cast<double>(terms.size());
  for (std::size_t i = 0; i < n; ++i, ++r.cases) {
    // Evenly spaced over [0.5, g + 0.5).
    const double beta = 0.5 + g * static_cast<double>(i) / static_cast<double>(n);
    const auto index = static_cast<std::size_t>(std::floor(beta + 0.5));
    const double alpha = beta - static_cast<double>(index);
    const TwoTuple t = to_two_tuple(static_cast<double>(index) + alpha, terms);
    const double err = std::abs(t.alpha - alpha);
    r.worst = std::max(r.worst, err);
    if (t.index != index || err > 1e-12 || t.alpha < -0.5 || t.alpha >= 0.5) {
      r.fail(fmt::format("beta {}: got ({}, {})", beta, t.index, t.alpha));
    }
  }
  return r;
}

}  // namespace lingopt::testing
