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

#include "lingopt/fuzzy.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

#include <fmt/format.h>

#include "lingopt/errors.h"

namespace lingopt {

Interval Interval::Checked(double lo, double hi) {
  if (!(lo <= hi)) {
    throw DomainError(fmt::format("interval [{}, {}] has lo > hi", lo, hi));
  }
  return {lo, hi};
}

Trapezoid::Trapezoid(double a, double b, double c, double d, double h)
    : a_(a), b_(b), c_(c), d_(d), h_(h) {
  if (!(a <= b && b <= c && c <= d)) {
    throw DomainError(fmt::format(
        "trapezoid vertices ({}, {}, {}, {}) are not ordered", a, b, c, d));
  }
  if (!(h > 0.0 && h <= 1.0)) {
    throw DomainError(fmt::format("trapezoid height {} not in (0, 1]", h));
  }
}

double Trapezoid::membership(double x) const {
  if (x < a_ || x > d_) return 0.0;
  if (x < b_) return h_ * (x - a_) / (b_ - a_);
  if (x <= c_) return h_;
  return h_ * (d_ - x) / (d_ - c_);
}

Interval alpha_cut(const Trapezoid& t, double alpha) {
  if (!(alpha >= 0.0) || alpha > t.height() + 1e-12) {
    throw DomainError(fmt::format("alpha {} outside [0, {}]", alpha,
                                  t.height()));
  }
  const double s = std::min(alpha / t.height(), 1.0);
  return {t.a() + s * (t.b() - t.a()), t.d() - s * (t.d() - t.c())};
}

IT2Word::IT2Word(std::string name, Trapezoid umf, Trapezoid lmf,
                 std::optional<Centroid> centroid, std::string label)
    : name_(std::move(name)),
      label_(std::move(label)),
      umf_(umf),
      lmf_(lmf),
      centroid_(centroid) {
  const auto fail = [&](std::string_view field, const std::string& what) {
    throw DomainError(
        fmt::format("word '{}' field {}: {}", name_, field, what));
  };
  if (std::abs(umf_.height() - 1.0) > kShapeTolerance) {
    fail("umf", fmt::format("height {} must be 1", umf_.height()));
  }
  if (lmf_.a() < umf_.a() - kShapeTolerance ||
      lmf_.d() > umf_.d() + kShapeTolerance) {
    fail("lmf", "support is not inside the UMF support");
  }
  // Both functions are piecewise linear with breakpoints at the vertices, so
  // checking the union of vertices is exhaustive.
  const std::array<double, 8> xs = {umf_.a(), umf_.b(), umf_.c(), umf_.d(),
                                    lmf_.a(), lmf_.b(), lmf_.c(), lmf_.d()};
  for (double x : xs) {
    if (lmf_.membership(x) > umf_.membership(x) + kShapeTolerance) {
      fail("lmf", fmt::format("exceeds the UMF at x = {}", x));
    }
  }
  if (centroid_ && !(centroid_->cl <= centroid_->cr + kShapeTolerance)) {
    fail("centroid", "cl > cr");
  }
}

IT2Word IT2Word::with_centroid(const Centroid& c) const {
  IT2Word copy = *this;
  copy.centroid_ = c;
  return copy;
}

IT2Word IT2Word::with_name(std::string name) const {
  IT2Word copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

std::string_view to_string(FouShape shape) {
  switch (shape) {
    case FouShape::kInterior:
      return "interior";
    case FouShape::kLeftShoulder:
      return "left-shoulder";
    case FouShape::kRightShoulder:
      return "right-shoulder";
  }
  return "unknown";
}

FouShape classify_fou(const IT2Word& w, const Interval& scale) {
  const auto at = [](double v, double target) {
    return std::abs(v - target) <= kShapeTolerance;
  };
  const Trapezoid& u = w.umf();
  const Trapezoid& l = w.lmf();
  const bool full_lmf = at(l.height(), 1.0);
  if (full_lmf && at(u.a(), scale.lo) && at(u.b(), scale.lo) &&
      at(l.a(), scale.lo) && at(l.b(), scale.lo)) {
    return FouShape::kLeftShoulder;
  }
  if (full_lmf && at(u.c(), scale.hi) && at(u.d(), scale.hi) &&
      at(l.c(), scale.hi) && at(l.d(), scale.hi)) {
    return FouShape::kRightShoulder;
  }
  return FouShape::kInterior;
}

Interval membership_envelope(const IT2Word& w, double x) {
  const double upper = w.umf().membership(x);
  const double lower = std::min(w.lmf().membership(x), upper);
  return {lower, upper};
}

}  // namespace lingopt
