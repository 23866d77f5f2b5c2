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

// Seeded random instances for the property suites.

#ifndef LINGOPT_TESTS_SUPPORT_GENERATORS_H_
#define LINGOPT_TESTS_SUPPORT_GENERATORS_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lingopt/codebook.h"
#include "lingopt/fuzzy.h"

namespace lingopt::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  std::size_t index(std::size_t n);  // in [0, n)
  bool coin(double p = 0.5) { return uniform(0.0, 1.0) < p; }

  Trapezoid trapezoid(const Interval& scale = kDefaultScale);
  // Valid IT2 word on the scale; occasionally a shoulder or a type-1 word.
  IT2Word word(const std::string& name, const Interval& scale = kDefaultScale);
  // Words sorted by centroid mean and renamed W0, W1, ...
  Codebook codebook(std::size_t n, const Interval& scale = kDefaultScale);

 private:
  std::mt19937_64 rng_;
};

}  // namespace lingopt::testing

#endif  // LINGOPT_TESTS_SUPPORT_GENERATORS_H_
