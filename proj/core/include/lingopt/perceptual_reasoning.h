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

// Perceptual reasoning over IT2 word models.
//
// A rule fires with the minimum, over its antecedent slots, of the Jaccard
// similarity between the input word and the antecedent word. Fired rules are
// aggregated per objective with the linguistic weighted average (LWA),
// computed level by level on alpha-cuts: the UMF of the result comes from the
// consequents' UMF cuts over alpha in [0, 1], the LMF from their LMF cuts over
// alpha in [0, h] with h the smallest LMF height among fired consequents.
// Each endpoint is the min or max of sum(v_i f_i) / sum(f_i) over firing
// intervals f_i, found by a switch-point search.

#ifndef LINGOPT_PERCEPTUAL_REASONING_H_
#define LINGOPT_PERCEPTUAL_REASONING_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lingopt/codebook.h"
#include "lingopt/fuzzy.h"
#include "lingopt/similarity.h"

namespace lingopt {

enum class Direction { kMax, kMin };

std::string_view to_string(Direction d);

struct Objective {
  std::string name;
  Direction direction = Direction::kMax;
};

// Right-hand side of a rule for one objective: a codebook word, or a word
// model synthesized from the rule's own antecedents.
struct ConsequentRef {
  enum class Kind {
    kWord,
    kSynthesized,      // "auto": equal-weight LWA of the antecedents
    kSynthesizedWord,  // "auto-word": that LWA decoded to a codebook word
  };
  Kind kind = Kind::kWord;
  std::string word;

  static ConsequentRef Parse(std::string_view token);
  std::string to_string() const;
};

struct Rule {
  std::string label;
  std::vector<std::string> antecedents;
  std::vector<ConsequentRef> consequents;  // one per objective
};

class RuleBase {
 public:
  // Throws DomainError if empty, if rules disagree on antecedent count, if a
  // rule's consequent count differs from the objective count, or on
  // duplicate labels.
  static RuleBase Create(std::vector<Objective> objectives,
                         std::vector<Rule> rules);

  std::span<const Objective> objectives() const { return objectives_; }
  std::span<const Rule> rules() const { return rules_; }
  std::size_t antecedent_count() const { return rules_.front().antecedents.size(); }
  std::size_t objective_count() const { return objectives_.size(); }

  const Rule& at(std::string_view label) const;
  // Rules named in `labels`, in that order. Throws LookupError.
  RuleBase subset(std::span<const std::string> labels) const;
  // Throws LookupError naming the rule when a word is not in the codebook.
  void validate(const Codebook& codebook) const;

 private:
  std::vector<Objective> objectives_;
  std::vector<Rule> rules_;
};

struct FiringLevel {
  Interval interval;

  static FiringLevel Scalar(double f) { return {{f, f}}; }
  // Throws DomainError unless 0 <= lo <= hi <= 1.
  static FiringLevel Checked(double lo, double hi);
  bool fired() const { return interval.hi > 0.0; }
  bool is_scalar() const { return interval.lo == interval.hi; }
};

inline constexpr std::size_t kDefaultAlphaLevels = 101;

// An IT2 set given by its alpha-cut endpoint curves, as produced by the LWA.
// upper_alpha spans [0, 1] and indexes the UMF curves y_ll/y_rr; lower_alpha
// spans [0, height] and indexes the LMF curves y_lr/y_rl.
struct AlphaCutFou {
  std::vector<double> upper_alpha;
  std::vector<double> y_ll;
  std::vector<double> y_rr;
  std::vector<double> lower_alpha;
  std::vector<double> y_lr;
  std::vector<double> y_rl;
  double height = 1.0;

  Interval envelope(double x) const;
  FouSamples sample(const Discretization& grid) const;
  // Trapezoid summary from the bottom and top cuts. Exact when every firing
  // is scalar, since the curves are then linear in alpha.
  IT2Word to_word(std::string name = {}) const;
};

struct PrOptions {
  std::size_t alpha_levels = kDefaultAlphaLevels;
  std::size_t grid_points = Discretization::kDefaultPoints;
};

inline constexpr double kDecodeTieTolerance = 1e-9;

struct Decoded {
  std::string word;
  double similarity = 0.0;
  // True when the runner-up matched within kDecodeTieTolerance and the
  // higher-index word was chosen.
  bool tie_broken = false;
};

struct PrOutput {
  std::string objective;
  AlphaCutFou curves;
  IT2Word fou;
  Centroid centroid;
  Decoded decoded;
  FouShape shape = FouShape::kInterior;
  std::vector<FiringLevel> firings;  // one per rule, in rule-base order
};

struct SynthesizedConsequent {
  IT2Word fou;
  Centroid centroid;
  Decoded decoded;
};

// consequents[rule][objective]
using ConsequentTable = std::vector<std::vector<IT2Word>>;

// Minimum over slots of the Jaccard similarity, as a scalar interval.
// Throws DomainError on length mismatch, LookupError on unknown words.
FiringLevel fire(const Rule& rule, std::span<const std::string> input,
                 const Codebook& codebook, const Discretization& grid);

// Throws DomainError on mismatched or empty inputs or levels < 2,
// NoRuleFiredError when every firing is zero.
AlphaCutFou lwa(std::span<const IT2Word> consequents,
                std::span<const FiringLevel> firings,
                std::size_t levels = kDefaultAlphaLevels);

// Argmax of Jaccard similarity over the codebook; ties go to the
// higher-index word.
Decoded decode(const FouSamples& fou, const Codebook& codebook);
Decoded decode(const IT2Word& fou, const Codebook& codebook,
               const Discretization& grid);

// Equal-weight LWA of the antecedent words, its centroid and nearest word.
SynthesizedConsequent synthesize_consequent(
    std::span<const IT2Word> antecedents, const Codebook& codebook,
    const PrOptions& options = {});

ConsequentTable resolve_consequents(const RuleBase& rules,
                                    const Codebook& codebook,
                                    const PrOptions& options = {});

// Single objective. Throws DomainError when the rule base has q != 1.
PrOutput solve_solop(const RuleBase& rules, std::span<const std::string> input,
                     const Codebook& codebook, const PrOptions& options = {});

// One output per objective; firing levels are shared across objectives.
std::vector<PrOutput> solve_molop(const RuleBase& rules,
                                  std::span<const std::string> input,
                                  const Codebook& codebook,
                                  const PrOptions& options = {});
std::vector<PrOutput> solve_molop(const RuleBase& rules,
                                  const ConsequentTable& consequents,
                                  std::span<const std::string> input,
                                  const Codebook& codebook,
                                  const PrOptions& options = {});

}  // namespace lingopt

#endif  // LINGOPT_PERCEPTUAL_REASONING_H_
