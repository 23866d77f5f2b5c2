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

// Interval type-2 fuzzy sets with trapezoidal upper and lower membership
// functions, the shared vocabulary of every inference engine in lingopt.

#ifndef LINGOPT_FUZZY_H_
#define LINGOPT_FUZZY_H_

#include <optional>
#include <string>
#include <string_view>

namespace lingopt {

// Tolerance used when comparing fixture coordinates (printed with two
// decimals) against scale ends and shape constraints.
inline constexpr double kShapeTolerance = 1e-9;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  // Throws DomainError unless lo <= hi.
  static Interval Checked(double lo, double hi);

  double width() const { return hi - lo; }
  double midpoint() const { return 0.5 * (lo + hi); }
  bool contains(double x, double tol = 0.0) const {
    return x >= lo - tol && x <= hi + tol;
  }
  bool contains(const Interval& other, double tol = 0.0) const {
    return other.lo >= lo - tol && other.hi <= hi + tol;
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

inline constexpr Interval kDefaultScale{0.0, 10.0};

// Four-vertex type-1 membership function with height h: zero outside [a, d],
// rising linearly on [a, b], flat at h on [b, c], falling on [c, d].
// Degenerate edges (a == b or c == d) are allowed.
class Trapezoid {
 public:
  Trapezoid() = default;
  // Throws DomainError unless a <= b <= c <= d and 0 < h <= 1.
  Trapezoid(double a, double b, double c, double d, double h = 1.0);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }
  double height() const { return h_; }

  double membership(double x) const;
  Interval support() const { return {a_, d_}; }
  Interval core() const { return {b_, c_}; }

  friend bool operator==(const Trapezoid&, const Trapezoid&) = default;

 private:
  double a_ = 0.0;
  double b_ = 0.0;
  double c_ = 0.0;
  double d_ = 0.0;
  double h_ = 1.0;
};

// [a + (alpha/h)(b - a), d - (alpha/h)(d - c)] for 0 <= alpha <= h.
// Throws DomainError naming alpha when it is outside [0, h].
Interval alpha_cut(const Trapezoid& t, double alpha);

// Centroid of an IT2 set: interval [cl, cr] and its midpoint.
struct Centroid {
  double cl = 0.0;
  double cr = 0.0;
  double mean = 0.0;

  static Centroid FromBounds(double cl, double cr) {
    return {cl, cr, 0.5 * (cl + cr)};
  }
};

// A named interval type-2 word model. The UMF always has height 1; the LMF
// lies under it everywhere.
class IT2Word {
 public:
  IT2Word() = default;
  // Validates UMF height == 1 and LMF containment. Throws DomainError with
  // the word name and the offending field.
  IT2Word(std::string name, Trapezoid umf, Trapezoid lmf,
          std::optional<Centroid> centroid = std::nullopt,
          std::string label = {});

  const std::string& name() const { return name_; }
  // Human-readable label ("Very Poor"); falls back to the name.
  const std::string& label() const { return label_.empty() ? name_ : label_; }
  const std::string& raw_label() const { return label_; }
  const Trapezoid& umf() const { return umf_; }
  const Trapezoid& lmf() const { return lmf_; }
  const std::optional<Centroid>& centroid() const { return centroid_; }

  IT2Word with_centroid(const Centroid& c) const;
  IT2Word with_name(std::string name) const;

 private:
  std::string name_;
  std::string label_;
  Trapezoid umf_;
  Trapezoid lmf_;
  std::optional<Centroid> centroid_;
};

enum class FouShape { kInterior, kLeftShoulder, kRightShoulder };

std::string_view to_string(FouShape shape);

FouShape classify_fou(const IT2Word& w, const Interval& scale = kDefaultScale);

// [lmf(x), umf(x)].
Interval membership_envelope(const IT2Word& w, double x);

}  // namespace lingopt

#endif  // LINGOPT_FUZZY_H_
