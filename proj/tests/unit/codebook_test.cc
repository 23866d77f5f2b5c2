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

#include "lingopt/codebook.h"

#include <algorithm>
#include <array>
#include <filesystem>
#include <string>

#include <gtest/gtest.h>

#include "lingopt/errors.h"
#include "lingopt/record_io.h"

namespace lingopt {
namespace {

struct Row {
  const char* name;
  std::array<double, 4> umf;
  std::array<double, 5> lmf;
  std::array<double, 3> centroid;
};

// Tables as printed, two decimals.
constexpr std::array<Row, 5> kHma{{
    {"VP", {0, 0, 2.04, 3.84}, {0, 0, 2.04, 3.04, 1}, {1.29, 1.52, 1.41}},
    {"P", {0, 0, 4.53, 5.92}, {0, 0, 4.53, 5.65, 1}, {2.56, 2.63, 2.6}},
    {"A", {1.14, 2.99, 7.03, 8.94}, {1.85, 2.99, 7.03, 8.22, 1}, {4.83, 5.22, 5.02}},
    {"G", {3.5, 5.46, 10, 10}, {4.23, 5.46, 10, 10, 1}, {7.2, 7.4, 7.3}},
    {"VG", {6.44, 7.96, 10, 10}, {6.82, 7.96, 10, 10, 1}, {8.56, 8.67, 8.61}},
}};
constexpr std::array<Row, 5> kIa{{
    {"VP", {0, 0, 0.27, 3.91}, {0, 0, 0.18, 2.63, 1}, {0.88, 1.34, 1.11}},
    {"P", {0, 0, 0.94, 7.16}, {0, 0, 0.43, 5.8, 1}, {1.93, 2.48, 2.2}},
    {"A", {0.79, 4.6, 5.39, 9.15}, {2, 4.99, 4.99, 7.91, 0.88}, {4.43, 5.52, 4.97}},
    {"G", {2.87, 9.06, 10, 10}, {4.1, 9.58, 10, 10, 1}, {7.53, 8.04, 7.79}},
    {"VG", {6.13, 9.73, 10, 10}, {7.34, 9.81, 10, 10, 1}, {8.67, 9.11, 8.89}},
}};

void expect_fixture(const char* id, const std::array<Row, 5>& rows) {
  const Codebook cb = load_codebook(id);
  ASSERT_EQ(cb.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[i];
    const IT2Word& w = cb.words()[i];
    SCOPED_TRACE(std::string(id) + " " + r.name);
    EXPECT_EQ(w.name(), r.name);
    EXPECT_EQ(w.umf().a(), r.umf[0]);
    EXPECT_EQ(w.umf().b(), r.umf[1]);
    EXPECT_EQ(w.umf().c(), r.umf[2]);
    EXPECT_EQ(w.umf().d(), r.umf[3]);
    EXPECT_EQ(w.lmf().a(), r.lmf[0]);
    EXPECT_EQ(w.lmf().b(), r.lmf[1]);
    EXPECT_EQ(w.lmf().c(), r.lmf[2]);
    EXPECT_EQ(w.lmf().d(), r.lmf[3]);
    EXPECT_EQ(w.lmf().height(), r.lmf[4]);
    ASSERT_TRUE(w.centroid().has_value());
    EXPECT_EQ(w.centroid()->cl, r.centroid[0]);
    EXPECT_EQ(w.centroid()->cr, r.centroid[1]);
    EXPECT_EQ(w.centroid()->mean, r.centroid[2]);
    const Centroid& c = cb.computed_centroid(i);
    EXPECT_NEAR(c.cl, r.centroid[0], 0.05);
    EXPECT_NEAR(c.cr, r.centroid[1], 0.05);
    EXPECT_NEAR(c.mean, r.centroid[2], 0.05);
  }
}

TEST(FixtureCodebook, HmaMatchesTable) { expect_fixture("paper-hma", kHma); }
TEST(FixtureCodebook, IaMatchesTable) { expect_fixture("paper-ia", kIa); }

TEST(FixtureCodebook, MeansStrictlyIncrease) {
  for (const char* id : {"paper-hma", "paper-ia"}) {
    const Codebook cb = load_codebook(id);
    for (std::size_t i = 1; i < cb.size(); ++i) {
      EXPECT_LT(cb.words()[i - 1].centroid()->mean, cb.words()[i].centroid()->mean);
      EXPECT_LT(cb.computed_centroid(i - 1).mean, cb.computed_centroid(i).mean);
    }
  }
}

TEST(FixtureCodebook, NoCentroidWarnings) {
  std::vector<std::string> warnings;
  load_codebook("paper-hma", &warnings);
  load_codebook("paper-ia", &warnings);
  EXPECT_TRUE(warnings.empty());
}

TEST(FixtureCodebook, Provenance) {
  const Codebook cb = load_codebook("paper-ia");
  EXPECT_EQ(cb.encoder_tag(), "IA");
  EXPECT_EQ(cb.at("A").label(), "Average");
  EXPECT_EQ(cb.index_of("G"), 3u);
  EXPECT_THROW(cb.at("Excellent"), LookupError);
  EXPECT_EQ(cb.find("Excellent"), nullptr);
}

constexpr std::string_view kSmallCodebook = R"(lingopt-codebook 1
scale [0, 10]
encoder test
word L umf=[0, 0, 2, 4] lmf=[0, 0, 1, 3, 1]
word M umf=[2, 4, 6, 8] lmf=[3, 4.5, 5.5, 7, 0.8] centroid=[4, 6, 5]
)";

TEST(ParseCodebook, FillsMissingCentroid) {
  const Codebook cb = parse_codebook(kSmallCodebook, "small");
  ASSERT_TRUE(cb.at("L").centroid().has_value());
  EXPECT_NEAR(cb.at("L").centroid()->mean, cb.computed_centroid(0).mean, 0);
  EXPECT_EQ(cb.at("M").centroid()->cl, 4.0);
}

TEST(ParseCodebook, WarnsOnStoredCentroidMismatch) {
  std::vector<std::string> warnings;
  parse_codebook(kSmallCodebook, "small", &warnings);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("M"), std::string::npos);
}

TEST(ParseCodebook, LmfAboveUmfIsLoadError) {
  const std::string text = R"(lingopt-codebook 1
word BAD umf=[2, 4, 6, 8] lmf=[1, 4, 6, 8, 1]
)";
  try {
    parse_codebook(text, "bad.cb");
    FAIL();
  } catch (const LoadError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("bad.cb:2"), std::string::npos) << what;
    EXPECT_NE(what.find("BAD"), std::string::npos) << what;
    EXPECT_NE(what.find("lmf"), std::string::npos) << what;
  }
}

TEST(ParseCodebook, Rejections) {
  EXPECT_THROW(parse_codebook("word A umf=[0,1,2,3] lmf=[0,1,2,3,1]\n", "x"),
               LoadError);
  EXPECT_THROW(parse_codebook("lingopt-codebook 2\n", "x"), LoadError);
  EXPECT_THROW(parse_codebook("lingopt-codebook 1\nfrobnicate 3\n", "x"),
               LoadError);
  EXPECT_THROW(parse_codebook(R"(lingopt-codebook 1
word A umf=[0, 1, 2, 3] lmf=[0, 1, 2, 3, 1]
word A umf=[0, 1, 2, 3] lmf=[0, 1, 2, 3, 1]
)", "x"), LoadError);
  EXPECT_THROW(parse_codebook(R"(lingopt-codebook 1
word HI umf=[6, 7, 8, 9] lmf=[6, 7, 8, 9, 1]
word LO umf=[0, 1, 2, 3] lmf=[0, 1, 2, 3, 1]
)", "x"), LoadError);
  EXPECT_THROW(parse_codebook(R"(lingopt-codebook 1
word OUT umf=[6, 7, 8, 12] lmf=[6, 7, 8, 9, 1]
)", "x"), LoadError);
  EXPECT_THROW(load_codebook("/nonexistent/file.cb"), LoadError);
}

TEST(ParseCodebook, RoundTrip) {
  const Codebook cb = load_codebook("paper-ia");
  const Codebook back = parse_codebook(format_codebook(cb), "rt");
  EXPECT_EQ(format_codebook(back), format_codebook(cb));
  for (std::size_t i = 0; i < cb.size(); ++i) {
    EXPECT_EQ(back.words()[i].umf(), cb.words()[i].umf());
    EXPECT_EQ(back.words()[i].lmf(), cb.words()[i].lmf());
    EXPECT_EQ(back.words()[i].label(), cb.words()[i].label());
  }
}

TEST(ParseCodebook, KeepsGeneratorAndSeed) {
  const Codebook cb = parse_codebook(R"(lingopt-codebook 1
encoder HMA
generator mt19937_64
seed 18446744073709551615
word A umf=[0, 1, 2, 3] lmf=[0, 1, 2, 3, 1]
)", "x");
  EXPECT_EQ(cb.provenance().generator, "mt19937_64");
  EXPECT_EQ(cb.provenance().seed, 18446744073709551615ull);
  EXPECT_NE(format_codebook(cb).find("seed 18446744073709551615"),
            std::string::npos);
}

TEST(SamplePersonFou, VeryPoorHasPinnedLeftEnd) {
  const EndpointSet set = load_endpoints("paper-endpoints");
  const auto it = std::find_if(set.specs.begin(), set.specs.end(),
                               [](const EndpointSpec& s) { return s.word == "VP"; });
  ASSERT_NE(it, set.specs.end());
  const DataIntervalSet d = sample_person_fou(*it, 50, 7);
  ASSERT_EQ(d.pairs.size(), 50u);
  EXPECT_EQ(d.seed, 7u);
  EXPECT_EQ(d.generator, "mt19937_64");
  for (const auto& p : d.pairs) {
    EXPECT_EQ(p.left, 0.0);
    EXPECT_GE(p.right, 2.0);
    EXPECT_LE(p.right, 3.0);
  }
}

TEST(SamplePersonFou, DegeneratePoint) {
  const DataIntervalSet d = sample_person_fou({"X", {5, 5}, {5, 5}}, 20, 1);
  for (const auto& p : d.pairs) {
    EXPECT_EQ(p.left, 5.0);
    EXPECT_EQ(p.right, 5.0);
  }
}

TEST(SamplePersonFou, UniformMean) {
  const DataIntervalSet d = sample_person_fou({"A", {2, 3}, {7, 8}}, 100000, 11);
  double sum = 0.0;
  for (const auto& p : d.pairs) sum += p.left;
  EXPECT_NEAR(sum / 1e5, 2.5, 0.01);
}

TEST(SamplePersonFou, OverlappingSpecsResample) {
  const DataIntervalSet d = sample_person_fou({"O", {0, 6}, {4, 10}}, 2000, 3);
  ASSERT_EQ(d.pairs.size(), 2000u);
  for (const auto& p : d.pairs) EXPECT_LE(p.left, p.right);
}

TEST(SamplePersonFou, Errors) {
  EXPECT_THROW(sample_person_fou({"X", {6, 7}, {1, 2}}, 5, 1), SpecError);
  EXPECT_THROW(sample_person_fou({"X", {3, 2}, {4, 5}}, 5, 1), SpecError);
  EXPECT_THROW(sample_person_fou({"X", {0, 1}, {4, 11}}, 5, 1), SpecError);
  EXPECT_THROW(sample_person_fou({"X", {0, 1}, {4, 5}}, 0, 1), SpecError);
}

TEST(SamplePersonFou, DeterministicBytes) {
  const EndpointSpec spec{"G", {4.5, 5.5}, {9.5, 10}};
  const std::vector<DataIntervalSet> a{sample_person_fou(spec, 50, 99)};
  const std::vector<DataIntervalSet> b{sample_person_fou(spec, 50, 99)};
  const std::vector<DataIntervalSet> c{sample_person_fou(spec, 50, 100)};
  EXPECT_EQ(format_data_intervals(a), format_data_intervals(b));
  EXPECT_NE(format_data_intervals(a), format_data_intervals(c));
}

TEST(DataIntervals, RoundTrip) {
  const std::vector<DataIntervalSet> sets{
      sample_person_fou({"P", {0, 0.5}, {4.5, 5.5}}, 10, 5),
      sample_person_fou({"A", {2, 3}, {7, 8}}, 10, 6)};
  const auto back = parse_data_intervals(format_data_intervals(sets), "rt");
  ASSERT_EQ(back.size(), 2u);
  for (std::size_t s = 0; s < 2; ++s) {
    EXPECT_EQ(back[s].word, sets[s].word);
    EXPECT_EQ(back[s].seed, sets[s].seed);
    ASSERT_EQ(back[s].pairs.size(), sets[s].pairs.size());
    for (std::size_t i = 0; i < sets[s].pairs.size(); ++i) {
      EXPECT_EQ(back[s].pairs[i].left, sets[s].pairs[i].left);
      EXPECT_EQ(back[s].pairs[i].right, sets[s].pairs[i].right);
    }
  }
}

TEST(Endpoints, ParseErrorsCarryLine) {
  try {
    parse_endpoints("lingopt-endpoints 1\nendpoints X left=[5, 6] right=[1, 2]\n",
                    "e.txt");
    FAIL();
  } catch (const LoadError& e) {
    EXPECT_NE(std::string(e.what()).find("e.txt:2"), std::string::npos);
  }
}

class FixedEncoder final : public WordEncoder {
 public:
  std::string name() const override { return "fixed"; }
  IT2Word encode(const DataIntervalSet& data, const Interval&) const override {
    return IT2Word(data.word, Trapezoid(1, 2, 3, 4), Trapezoid(1.5, 2, 3, 3.5, 0.7));
  }
};

// UMF support is the hull of the data intervals; LMF collapses to its centre.
class HullEncoder final : public WordEncoder {
 public:
  std::string name() const override { return "hull"; }
  IT2Word encode(const DataIntervalSet& data, const Interval&) const override {
    double lo = data.pairs.front().left, hi = data.pairs.front().right;
    for (const auto& p : data.pairs) {
      lo = std::min(lo, p.left);
      hi = std::max(hi, p.right);
    }
    const double m = 0.5 * (lo + hi);
    return IT2Word(data.word, Trapezoid(lo, m, m, hi), Trapezoid(m, m, m, m, 0.5));
  }
};

TEST(EncodeWord, PassthroughRefuses) {
  const EncoderRegistry reg;
  const auto data = sample_person_fou({"P", {0, 0.5}, {4.5, 5.5}}, 5, 7);
  EXPECT_THROW(encode_word(data, kPassthroughEncoder, reg), UnsupportedOperation);
  EXPECT_THROW(encode_word(data, "HMA", reg), UnsupportedOperation);
}

TEST(EncodeWord, RegisteredEncoderRoundTrips) {
  EncoderRegistry reg;
  reg.add(std::make_shared<FixedEncoder>());
  const auto data = sample_person_fou({"Q", {0, 0.5}, {4.5, 5.5}}, 5, 7);
  const IT2Word w = encode_word(data, "fixed", reg);
  const Codebook cb = Codebook::Create(kDefaultScale, {w}, {"fixed", std::string(kGeneratorName), 7});
  const auto path = (std::filesystem::temp_directory_path() / "lingopt_rt.cb").string();
  save_codebook(cb, path);
  const Codebook back = load_codebook(path);
  std::filesystem::remove(path);
  EXPECT_EQ(back.at("Q").umf(), w.umf());
  EXPECT_EQ(back.at("Q").lmf(), w.lmf());
  EXPECT_EQ(back.provenance().seed, 7u);
}

TEST(EncodeWord, HullStubStaysInsideSpec) {
  EncoderRegistry reg;
  reg.add(std::make_shared<HullEncoder>());
  const auto data = sample_person_fou({"P", {0, 0.5}, {4.5, 5.5}}, 50, 7);
  const IT2Word w = encode_word(data, "hull", reg);
  EXPECT_GE(w.umf().a(), 0.0);
  EXPECT_LE(w.umf().d(), 5.5);
  EXPECT_EQ(reg.names().size(), 2u);
}

}  // namespace
}  // namespace lingopt
