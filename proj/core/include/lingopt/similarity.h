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

// Jaccard similarity between IT2 sets, centroid type reduction with the
// enhanced Karnik-Mendel iteration, and centroid-based ranking.
//
// All computations run on a uniform grid over the codebook scale. A FOU is
// reduced to its sampled envelope (lower and upper membership per grid point)
// first, so words and inferred outputs share one code path.

#ifndef LINGOPT_SIMILARITY_H_
#define LINGOPT_SIMILARITY_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lingopt/fuzzy.h"

namespace lingopt {

class Discretization {
 public:
  static constexpr std::size_t kDefaultPoints = 1001;

  Discretization() : Discretization(kDefaultScale, kDefaultPoints) {}
  // Throws DomainError if points < 3 or the domain is empty.
  Discretization(Interval domain, std::size_t points = kDefaultPoints);

  const Interval& domain() const { return domain_; }
  std::size_t points() const { return points_; }
  double spacing() const {
    return domain_.width() / static_cast<double>(points_ - 1);
  }
  double x(std::size_t i) const;

  friend bool operator==(const Discretization&,
                         const Discretization&) = default;

 private:
  Interval domain_;
  std::size_t points_;
};

struct FouSamples {
  Discretization grid;
  std::vector<double> x;
  std::vector<double> lower;
  std::vector<double> upper;
};

// Samples an arbitrary envelope function x -> [lower, upper].
FouSamples sample_envelope(const std::function<Interval(double)>& envelope,
                           const Discretization& grid);
FouSamples sample(const IT2Word& w, const Discretization& grid);

// sum(min upper) + sum(min lower) over sum(max upper) + sum(max lower).
// Throws DomainError when the grids differ, DegenerateWordError when both
// sets are empty on the grid.
double jaccard(const FouSamples& a, const FouSamples& b);
// Throws DomainError when either word leaves the grid's domain.
double jaccard(const IT2Word& a, const IT2Word& b, const Discretization& grid);

// Throws DegenerateWordError when the upper membership is zero everywhere.
Centroid centroid_ekm(const FouSamples& fou);
Centroid centroid_ekm(const IT2Word& w, const Discretization& grid);

enum class RankDirection { kDescending, kAscending };

struct RankItem {
  std::string label;
  Centroid primary;
  std::optional<Centroid> tiebreak;
};

// Means closer than this are treated as tied.
inline constexpr double kRankTieTolerance = 1e-9;

// Orders labels by primary.mean (descending for max objectives). Ties on the
// primary mean fall back to tiebreak.mean in the same direction; items
// without a tiebreak come after those with one; remaining ties keep input
// order.
std::vector<std::string> rank_by_centroid(
    std::span<const RankItem> items,
    RankDirection direction = RankDirection::kDescending,
    double tie_tolerance = kRankTieTolerance);

// "SS2 > SS3 > SS4 > SS1".
std::string format_ranking(std::span<const std::string> labels);

}  // namespace lingopt

#endif  // LINGOPT_SIMILARITY_H_
