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

#include "lingopt/fixtures.h"

#include <array>
#include <utility>

namespace lingopt {
namespace {

constexpr std::string_view kPaperHma = R"(lingopt-codebook 1
scale [0, 10]
encoder HMA
word VP label="Very Poor" umf=[0, 0, 2.04, 3.84] lmf=[0, 0, 2.04, 3.04, 1] centroid=[1.29, 1.52, 1.41]
word P label="Poor" umf=[0, 0, 4.53, 5.92] lmf=[0, 0, 4.53, 5.65, 1] centroid=[2.56, 2.63, 2.6]
word A label="Average" umf=[1.14, 2.99, 7.03, 8.94] lmf=[1.85, 2.99, 7.03, 8.22, 1] centroid=[4.83, 5.22, 5.02]
word G label="Good" umf=[3.5, 5.46, 10, 10] lmf=[4.23, 5.46, 10, 10, 1] centroid=[7.2, 7.4, 7.3]
word VG label="Very Good" umf=[6.44, 7.96, 10, 10] lmf=[6.82, 7.96, 10, 10, 1] centroid=[8.56, 8.67, 8.61]
)";

constexpr std::string_view kPaperIa = R"(lingopt-codebook 1
scale [0, 10]
encoder IA
word VP label="Very Poor" umf=[0, 0, 0.27, 3.91] lmf=[0, 0, 0.18, 2.63, 1] centroid=[0.88, 1.34, 1.11]
word P label="Poor" umf=[0, 0, 0.94, 7.16] lmf=[0, 0, 0.43, 5.8, 1] centroid=[1.93, 2.48, 2.2]
word A label="Average" umf=[0.79, 4.6, 5.39, 9.15] lmf=[2, 4.99, 4.99, 7.91, 0.88] centroid=[4.43, 5.52, 4.97]
word G label="Good" umf=[2.87, 9.06, 10, 10] lmf=[4.1, 9.58, 10, 10, 1] centroid=[7.53, 8.04, 7.79]
word VG label="Very Good" umf=[6.13, 9.73, 10, 10] lmf=[7.34, 9.81, 10, 10, 1] centroid=[8.67, 9.11, 8.89]
)";

constexpr std::string_view kPaperEndpoints = R"(lingopt-endpoints 1
scale [0, 10]
endpoints VP left=[0, 0] right=[2, 3]
endpoints P left=[0, 0.5] right=[4.5, 5.5]
endpoints A left=[2, 3] right=[7, 8]
endpoints G left=[4.5, 5.5] right=[9.5, 10]
endpoints VG left=[7, 8] right=[10, 10]
)";

// Mid-semester core grades; each student is evaluated against the rule
// built from their own grades.
constexpr std::string_view kCaseSolop = R"(lingopt-problem 1
name "student ranking, core subjects"
codebook paper-hma
variables [SB1, SB2, SB3, SB4, SB5]
terms [VP, P, A, G, VG]
objective overall max
rank overall
rule R1 if=[VP, P, A, A, P] then=[auto]
rule R2 if=[G, VG, A, A, A] then=[auto]
rule R3 if=[G, G, G, P, A] then=[auto]
rule R4 if=[P, A, G, A, G] then=[auto]
alternative SS1 input=[VP, P, A, A, P] rules=[R1]
alternative SS2 input=[G, VG, A, A, A] rules=[R2]
alternative SS3 input=[G, G, G, P, A] rules=[R3]
alternative SS4 input=[P, A, G, A, G] rules=[R4]
)";

// Core and elective grades from both tests. Each student fires the rule
// from their mid-semester grades and the one from their end-semester grades.
constexpr std::string_view kCaseMolop = R"(lingopt-problem 1
name "student ranking, core and elective subjects"
codebook paper-hma
variables [SB1, SB2, SB3, SB4, SB5, ES1, ES2]
terms [VP, P, A, G, VG]
objective core max
objective elective max
rank elective core
rule SS1-MST if=[VP, P, A, A, P, P, A] then=[P, A]
rule SS1-EST if=[VP, P, VP, P, A, A, A] then=[P, A]
rule SS2-MST if=[G, VG, A, A, A, VG, A] then=[G, G]
rule SS2-EST if=[G, G, G, A, A, VG, VG] then=[G, VG]
rule SS3-MST if=[G, G, G, P, A, P, A] then=[A, A]
rule SS3-EST if=[G, G, VG, A, A, P, P] then=[G, P]
rule SS4-MST if=[P, A, G, A, G, A, A] then=[A, A]
rule SS4-EST if=[A, A, G, P, P, P, A] then=[A, A]
alternative SS1 input=[VP, P, A, A, P, P, A] rules=[SS1-MST, SS1-EST]
alternative SS2 input=[G, VG, A, A, A, VG, A] rules=[SS2-MST, SS2-EST]
alternative SS3 input=[G, G, G, P, A, P, A] rules=[SS3-MST, SS3-EST]
alternative SS4 input=[P, A, G, A, G, A, A] rules=[SS4-MST, SS4-EST]
)";

constexpr std::array<std::pair<std::string_view, std::string_view>, 5>
    kFixtures{{
        {"paper-hma", kPaperHma},
        {"paper-ia", kPaperIa},
        {"paper-endpoints", kPaperEndpoints},
        {"case-solop", kCaseSolop},
        {"case-molop", kCaseMolop},
    }};

}  // namespace

std::optional<std::string_view> fixture_text(std::string_view id) {
  for (const auto& [name, text] : kFixtures) {
    if (name == id) return text;
  }
  return std::nullopt;
}

std::vector<std::string_view> fixture_ids() {
  std::vector<std::string_view> out;
  for (const auto& f : kFixtures) out.push_back(f.first);
  return out;
}

}  // namespace lingopt
