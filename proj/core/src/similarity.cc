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

#include "lingopt/similarity.h"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "lingopt/errors.h"

namespace lingopt {

Discretization::Discretization(Interval domain, std::size_t points)
    : domain_(domain), points_(points) {
  if (points_ < 3) {
    throw DomainError(fmt::format("discretization needs >= 3 points, got {}",
                                  points_));
  }
  if (!(domain_.lo < domain_.hi)) {
    throw DomainError(fmt::format("discretization domain [{}, {}] is empty",
                                  domain_.lo, domain_.hi));
  }
}

double Discretization::x(std::size_t i) const {
  if (i + 1 == points_) return domain_.hi;
  return domain_.lo + domain_.width() * static_cast<double>(i) /
                          static_cast<double>(points_ - 1);
}

FouSamples sample_envelope(const std::function<Interval(double)>& envelope,
                           const Discretization& grid) {
  FouSamples s{grid, {}, {}, {}};
  const std::size_t n = grid.points();
  s.x.resize(n);
  s.lower.resize(n);
  s.upper.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.x[i] = grid.x(i);
    const Interval m = envelope(s.x[i]);
    s.lower[i] = m.lo;
    s.upper[i] = m.hi;
  }
  return s;
}

FouSamples sample(const IT2Word& w, const Discretization& grid) {
  return sample_envelope(
      [&w](double x) { return membership_envelope(w, x); }, grid);
}

double jaccard(const FouSamples& a, const FouSamples& b) {
  if (!(a.grid == b.grid)) {
    throw DomainError("jaccard: operands sampled on different grids");
  }
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < a.x.size(); ++i) {
    num += std::min(a.upper[i], b.upper[i]) + std::min(a.lower[i], b.lower[i]);
    den += std::max(a.upper[i], b.upper[i]) + std::max(a.lower[i], b.lower[i]);
  }
  if (den <= 0.0) {
    throw DegenerateWordError("jaccard: both sets are empty on the grid");
  }
  return num / den;
}

double jaccard(const IT2Word& a, const IT2Word& b, const Discretization& grid) {
  for (const IT2Word* w : {&a, &b}) {
    if (!grid.domain().contains(w->umf().support(), kShapeTolerance)) {
      throw DomainError(fmt::format(
          "jaccard: word '{}' leaves the scale [{}, {}]", w->name(),
          grid.domain().lo, grid.domain().hi));
    }
  }
  return jaccard(sample(a, grid), sample(b, grid));
}

namespace {

// One side of the enhanced Karnik-Mendel iteration on the support points.
// For the left endpoint the weights are upper to the left of the switch point
// and lower to its right; the right endpoint mirrors that.
double ekm_endpoint(std::span<const double> x, std::span<const double> lo,
                    std::span<const double> up, bool left) {
  const std::size_t n = x.size();
  if (n == 1) return x[0];

  const auto weight = [&](std::size_t i, std::size_t k) {
    // k counts the points (1-based switch) that take the "left" weight.
    const bool before = i < k;
    return (before == left) ? up[i] : lo[i];
  };
  const auto evaluate = [&](std::size_t k) {
    double a = 0.0;
    double b = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double w = weight(i, k);
      a += x[i] * w;
      b += w;
    }
    return std::pair{a, b};
  };
  // Switch index k in [1, n-1]: points [0, k) are on the left.
  const auto locate = [&](double y) {
    const auto it = std::upper_bound(x.begin(), x.end(), y);
    std::size_t k = static_cast<std::size_t>(it - x.begin());
    return std::clamp<std::size_t>(k, 1, n - 1);
  };

  const double ratio = left ? 2.4 : 1.7;
  std::size_t k = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::lround(static_cast<double>(n) / ratio)), 1,
      n - 1);
  auto [a, b] = evaluate(k);
  if (b <= 0.0) {
    throw DegenerateWordError("centroid: zero membership mass");
  }
  double y = a / b;

  for (std::size_t iter = 0; iter <= n; ++iter) {
    const std::size_t next = locate(y);
    if (next == k) break;
    const std::size_t from = std::min(k, next);
    const std::size_t to = std::max(k, next);
    // Moving the switch right turns points [from, to) to the left weight.
    const double sign = (next > k) == left ? 1.0 : -1.0;
    for (std::size_t i = from; i < to; ++i) {
      const double delta = up[i] - lo[i];
      a += sign * x[i] * delta;
      b += sign * delta;
    }
    k = next;
    y = a / b;
  }
  // Re-evaluate at the final switch point to drop accumulated rounding.
  const auto [fa, fb] = evaluate(k);
  return fa / fb;
}

}  // namespace

Centroid centroid_ekm(const FouSamples& fou) {
  // Points with zero upper membership carry no mass for any embedded set.
  std::vector<double> x;
  std::vector<double> lo;
  std::vector<double> up;
  for (std::size_t i = 0; i < fou.x.size(); ++i) {
    if (fou.upper[i] > 0.0) {
      x.push_back(fou.x[i]);
      lo.push_back(std::min(fou.lower[i], fou.upper[i]));
      up.push_back(fou.upper[i]);
    }
  }
  if (x.empty()) {
    throw DegenerateWordError("centroid: membership is zero on the grid");
  }
  const double cl = ekm_endpoint(x, lo, up, /*left=*/true);
  const double cr = ekm_endpoint(x, lo, up, /*left=*/false);
  return Centroid::FromBounds(std::min(cl, cr), std::max(cl, cr));
}

Centroid centroid_ekm(const IT2Word& w, const Discretization& grid) {
  return centroid_ekm(sample(w, grid));
}

std::vector<std::string> rank_by_centroid(std::span<const RankItem> items,
                                          RankDirection direction,
                                          double tie_tolerance) {
  const double sign = direction == RankDirection::kDescending ? 1.0 : -1.0;
  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) {
    return sign * items[i].primary.mean > sign * items[j].primary.mean;
  });

  // Within each run of tied primary means, order by the tiebreak.
  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t end = start + 1;
    while (end < order.size() &&
           std::abs(items[order[end]].primary.mean -
                    items[order[start]].primary.mean) <= tie_tolerance) {
      ++end;
    }
    std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(start),
                     order.begin() + static_cast<std::ptrdiff_t>(end),
                     [&](auto i, auto j) {
                       const auto& ti = items[i].tiebreak;
                       const auto& tj = items[j].tiebreak;
                       if (!ti || !tj) return ti.has_value() && !tj;
                       return sign * ti->mean > sign * tj->mean;
                     });
    start = end;
  }

  std::vector<std::string> out;
  out.reserve(order.size());
  for (auto i : order) out.push_back(items[i].label);
  return out;
}

std::string format_ranking(std::span<const std::string> labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += " > ";
    out += labels[i];
  }
  return out;
}

}  // namespace lingopt
