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

// Word vocabulary: Person-FOU data-interval sampling, codebook files and the
// pluggable interval-to-FOU encoder seam.

#ifndef LINGOPT_CODEBOOK_H_
#define LINGOPT_CODEBOOK_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lingopt/fuzzy.h"
#include "lingopt/similarity.h"

namespace lingopt {

inline constexpr std::string_view kGeneratorName = "mt19937_64";
inline constexpr std::size_t kDefaultSampleCount = 50;
inline constexpr int kMaxResampleAttempts = 1000;
// Stored centroids may differ from recomputation by this much before a
// warning is raised (fixtures print two decimals).
inline constexpr double kCentroidWarnTolerance = 0.05;

// Intervals an expert gives for the left and right end of a word.
struct EndpointSpec {
  std::string word;
  Interval left;
  Interval right;

  // Throws SpecError on reversed bounds, bounds outside the scale, or
  // left.lo > right.hi.
  void validate(const Interval& scale = kDefaultScale) const;
};

struct DataInterval {
  double left = 0.0;
  double right = 0.0;
};

struct DataIntervalSet {
  std::string word;
  std::vector<DataInterval> pairs;
  std::string generator{kGeneratorName};
  std::uint64_t seed = 0;
};

// Draws n (L, R) pairs uniformly and independently from spec.left x
// spec.right. A pair with L > R is redrawn, at most kMaxResampleAttempts
// times per pair, then SpecError. Deterministic in (spec, n, seed).
DataIntervalSet sample_person_fou(const EndpointSpec& spec,
                                  std::size_t n = kDefaultSampleCount,
                                  std::uint64_t seed = 0,
                                  const Interval& scale = kDefaultScale);

struct EndpointSet {
  Interval scale = kDefaultScale;
  std::vector<EndpointSpec> specs;
};

// Accepts a file path or the embedded fixture id "paper-endpoints".
EndpointSet load_endpoints(std::string_view path_or_fixture);
EndpointSet parse_endpoints(std::string_view text, std::string_view source);

std::string format_data_intervals(std::span<const DataIntervalSet> sets);
std::vector<DataIntervalSet> parse_data_intervals(std::string_view text,
                                                  std::string_view source);

class Codebook {
 public:
  struct Provenance {
    std::string encoder_tag;              // "HMA", "IA" or an encoder name
    std::optional<std::string> generator;  // RNG used for data intervals
    std::optional<std::uint64_t> seed;
  };

  // Enforces: unique names, every word inside the scale, centroid means
  // nondecreasing in word order. Words without a stored centroid get the
  // recomputed one; stored centroids that disagree with recomputation by
  // more than kCentroidWarnTolerance produce a warning.
  static Codebook Create(Interval scale, std::vector<IT2Word> words,
                         Provenance provenance,
                         std::vector<std::string>* warnings = nullptr);

  const Interval& scale() const { return scale_; }
  std::span<const IT2Word> words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  const Provenance& provenance() const { return provenance_; }
  const std::string& encoder_tag() const { return provenance_.encoder_tag; }

  // Throws LookupError for unknown names.
  const IT2Word& at(std::string_view name) const;
  const IT2Word* find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;

  // Centroid recomputed on the default grid, independent of stored values.
  const Centroid& computed_centroid(std::size_t i) const {
    return computed_[i];
  }

  Discretization grid(std::size_t points = Discretization::kDefaultPoints)
      const {
    return Discretization(scale_, points);
  }

 private:
  Interval scale_;
  std::vector<IT2Word> words_;
  std::vector<Centroid> computed_;
  Provenance provenance_;
};

// `source` is a file path or one of the fixture ids "paper-hma", "paper-ia".
Codebook load_codebook(std::string_view source,
                       std::vector<std::string>* warnings = nullptr);
Codebook parse_codebook(std::string_view text, std::string_view source,
                        std::vector<std::string>* warnings = nullptr);
std::string format_codebook(const Codebook& codebook);
void save_codebook(const Codebook& codebook, const std::string& path);

// Turns the data intervals of one word into an IT2 word model (HMA, EIA and
// IA belong here). Implementations must be stateless or internally
// synchronized.
class WordEncoder {
 public:
  virtual ~WordEncoder() = default;
  virtual std::string name() const = 0;
  virtual IT2Word encode(const DataIntervalSet& data,
                         const Interval& scale) const = 0;
};

inline constexpr std::string_view kPassthroughEncoder = "fixture-passthrough";

// Name -> encoder table. A default-constructed registry holds only the
// "fixture-passthrough" encoder, which refuses to run and points callers at
// the shipped fixture codebooks.
class EncoderRegistry {
 public:
  EncoderRegistry();

  // Replaces any encoder with the same name.
  void add(std::shared_ptr<const WordEncoder> encoder);
  const WordEncoder* find(std::string_view name) const;
  std::vector<std::string> names() const;

 private:
  std::vector<std::shared_ptr<const WordEncoder>> encoders_;
};

// Throws UnsupportedOperation when `encoder` is not registered.
IT2Word encode_word(const DataIntervalSet& data, std::string_view encoder,
                    const EncoderRegistry& registry,
                    const Interval& scale = kDefaultScale);

}  // namespace lingopt

#endif  // LINGOPT_CODEBOOK_H_
