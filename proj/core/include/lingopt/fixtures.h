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

// Embedded data files: the case-study codebooks, endpoint intervals and
// problem bundles. Each is stored in the same text format the loaders accept
// from disk.

#ifndef LINGOPT_FIXTURES_H_
#define LINGOPT_FIXTURES_H_

#include <optional>
#include <string_view>
#include <vector>

namespace lingopt {

std::optional<std::string_view> fixture_text(std::string_view id);
std::vector<std::string_view> fixture_ids();

}  // namespace lingopt

#endif  // LINGOPT_FIXTURES_H_
