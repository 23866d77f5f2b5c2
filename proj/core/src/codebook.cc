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
#include <charconv>
#include <cmath>
#include <random>
#include <string>
#include <system_error>
#include <utility>

#include <fmt/format.h>

#include "lingopt/errors.h"
#include "lingopt/fixtures.h"
#include "lingopt/record_io.h"

namespace lingopt {
namespace {

constexpr std::string_view kCodebookMagic = "lingopt-codebook";
constexpr std::string_view kEndpointsMagic = "lingopt-endpoints";
constexpr std::string_view kIntervalsMagic = "lingopt-intervals";

// Uniform draw in [lo, hi] from the top 53 bits; identical on every
// platform, unlike std::uniform_real_distribution.
double draw(std::mt19937_64& rng, const Interval& range) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return range.lo + u * (range.hi - range.lo);
}

Interval interval_field(const Record& r, std::string_view key) {
  const auto v = r.numbers(key);
  if (v.size() != 2) r.fail(fmt::format("'{}' needs 2 numbers", key));
  if (v[0] > v[1]) r.fail(fmt::format("'{}' has lo > hi", key));
  return {v[0], v[1]};
}

Interval scale_arg(const Record& r) {
  const auto v = r.arg_numbers(0);
  if (v.size() != 2 || !(v[0] < v[1])) r.fail("scale must be [lo, hi]");
  return {v[0], v[1]};
}

void expect_magic(const std::vector<Record>& records, std::string_view magic,
                  std::string_view source) {
  if (records.empty() || records.front().keyword != magic) {
    throw LoadError(std::string(source),
                    fmt::format("expected '{} 1' header", magic));
  }
  if (records.front().arg_text(0) != "1") {
    records.front().fail("unsupported format version");
  }
}

std::string list(std::initializer_list<double> v) {
  std::string out = "[";
  bool first = true;
  for (double x : v) {
    if (!first) out += ", ";
    out += format_number(x);
    first = false;
  }
  return out + "]";
}

class PassthroughEncoder final : public WordEncoder {
 public:
  std::string name() const override { return std::string(kPassthroughEncoder); }
  IT2Word encode(const DataIntervalSet& data, const Interval&) const override {
    throw UnsupportedOperation(fmt::format(
        "encoder '{}' cannot build a word model for '{}': interval-to-FOU "
        "encoding (HMA/EIA/IA) is not implemented; load the fixture codebooks "
        "'paper-hma' or 'paper-ia', or register an external encoder",
        kPassthroughEncoder, data.word));
  }
};

}  // namespace

void EndpointSpec::validate(const Interval& scale) const {
  const auto fail = [&](const std::string& what) {
    throw SpecError(fmt::format("endpoint spec '{}': {}", word, what));
  };
  if (left.lo > left.hi) fail("left interval has lo > hi");
  if (right.lo > right.hi) fail("right interval has lo > hi");
  if (!scale.contains(left, kShapeTolerance) ||
      !scale.contains(right, kShapeTolerance)) {
    fail(fmt::format("bounds outside the scale [{}, {}]", scale.lo, scale.hi));
  }
  if (left.lo > right.hi) fail("left.lo > right.hi, no valid data interval");
}

DataIntervalSet sample_person_fou(const EndpointSpec& spec, std::size_t n,
                                  std::uint64_t seed, const Interval& scale) {
  if (n < 1) throw SpecError("sample count must be >= 1");
  spec.validate(scale);
  std::mt19937_64 rng(seed);
  DataIntervalSet out;
  out.word = spec.word;
  out.seed = seed;
  out.pairs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    int attempts = 0;
    for (;;) {
      const double l = draw(rng, spec.left);
      const double r = draw(rng, spec.right);
      if (l <= r) {
        out.pairs.push_back({l, r});
        break;
      }
      if (++attempts >= kMaxResampleAttempts) {
        throw SpecError(fmt::format(
            "endpoint spec '{}': no L <= R pair after {} attempts", spec.word,
            kMaxResampleAttempts));
      }
    }
  }
  return out;
}

EndpointSet parse_endpoints(std::string_view text, std::string_view source) {
  const auto records = parse_records(text, source);
  expect_magic(records, kEndpointsMagic, source);
  EndpointSet out;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const Record& r = records[i];
    if (r.keyword == "scale") {
      out.scale = scale_arg(r);
    } else if (r.keyword == "endpoints") {
      r.expect_fields({"left", "right"});
      EndpointSpec spec{r.arg_text(0), interval_field(r, "left"),
                        interval_field(r, "right")};
      try {
        spec.validate(out.scale);
      } catch (const SpecError& e) {
        r.fail(e.what());
      }
      out.specs.push_back(std::move(spec));
    } else {
      r.fail("unknown record");
    }
  }
  return out;
}

EndpointSet load_endpoints(std::string_view path_or_fixture) {
  if (path_or_fixture == "paper-endpoints") {
    return parse_endpoints(*fixture_text(path_or_fixture), path_or_fixture);
  }
  const std::string path(path_or_fixture);
  return parse_endpoints(read_text_file(path), path);
}

std::string format_data_intervals(std::span<const DataIntervalSet> sets) {
  std::string out = fmt::format("{} 1\n", kIntervalsMagic);
  for (const auto& set : sets) {
    out += fmt::format("word {} generator={} seed={} n={}\n", set.word,
                       set.generator, set.seed, set.pairs.size());
    for (const auto& p : set.pairs) {
      out += fmt::format("interval {} {}\n", format_number(p.left),
                         format_number(p.right));
    }
  }
  return out;
}

std::vector<DataIntervalSet> parse_data_intervals(std::string_view text,
                                                  std::string_view source) {
  const auto records = parse_records(text, source);
  expect_magic(records, kIntervalsMagic, source);
  std::vector<DataIntervalSet> out;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const Record& r = records[i];
    if (r.keyword == "word") {
      r.expect_fields({"generator", "seed", "n"});
      DataIntervalSet set;
      set.word = r.arg_text(0);
      set.generator = r.text("generator");
      set.seed = r.unsigned_integer("seed");
      out.push_back(std::move(set));
    } else if (r.keyword == "interval") {
      if (out.empty()) r.fail("interval before any word record");
      const double left = r.arg_number(0);
      const double right = r.arg_number(1);
      if (left > right) r.fail("L > R");
      out.back().pairs.push_back({left, right});
    } else {
      r.fail("unknown record");
    }
  }
  return out;
}

Codebook Codebook::Create(Interval scale, std::vector<IT2Word> words,
                          Provenance provenance,
                          std::vector<std::string>* warnings) {
  if (words.empty()) throw DomainError("codebook has no words");
  Codebook cb;
  cb.scale_ = scale;
  cb.provenance_ = std::move(provenance);
  const Discretization grid(scale);
  for (std::size_t i = 0; i < words.size(); ++i) {
    const IT2Word& w = words[i];
    for (std::size_t j = 0; j < i; ++j) {
      if (words[j].name() == w.name()) {
        throw DomainError(
            fmt::format("codebook word '{}' field name: duplicate", w.name()));
      }
    }
    if (!scale.contains(w.umf().support(), kShapeTolerance)) {
      throw DomainError(fmt::format(
          "codebook word '{}' field umf: support leaves the scale [{}, {}]",
          w.name(), scale.lo, scale.hi));
    }
    const Centroid c = centroid_ekm(w, grid);
    if (i > 0 && c.mean < cb.computed_.back().mean - kShapeTolerance) {
      throw DomainError(fmt::format(
          "codebook word '{}' field centroid: mean {:.4f} is below the "
          "previous word's {:.4f}; words must be ordered by centroid",
          w.name(), c.mean, cb.computed_.back().mean));
    }
    cb.computed_.push_back(c);
    if (!w.centroid()) {
      cb.words_.push_back(w.with_centroid(c));
      continue;
    }
    const Centroid& s = *w.centroid();
    const double worst = std::max({std::abs(s.cl - c.cl), std::abs(s.cr - c.cr),
                                   std::abs(s.mean - c.mean)});
    if (worst > kCentroidWarnTolerance && warnings != nullptr) {
      warnings->push_back(fmt::format(
          "word '{}': stored centroid [{}, {}] mean {} differs from "
          "recomputed [{:.4f}, {:.4f}] mean {:.4f}",
          w.name(), s.cl, s.cr, s.mean, c.cl, c.cr, c.mean));
    }
    cb.words_.push_back(w);
  }
  return cb;
}

const IT2Word* Codebook::find(std::string_view name) const {
  for (const auto& w : words_) {
    if (w.name() == name) return &w;
  }
  return nullptr;
}

const IT2Word& Codebook::at(std::string_view name) const {
  const IT2Word* w = find(name);
  if (w == nullptr) {
    throw LookupError(fmt::format("unknown word '{}' in codebook", name));
  }
  return *w;
}

std::size_t Codebook::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i].name() == name) return i;
  }
  throw LookupError(fmt::format("unknown word '{}' in codebook", name));
}

Codebook parse_codebook(std::string_view text, std::string_view source,
                        std::vector<std::string>* warnings) {
  const auto records = parse_records(text, source);
  expect_magic(records, kCodebookMagic, source);
  Interval scale = kDefaultScale;
  Codebook::Provenance prov;
  std::vector<IT2Word> words;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const Record& r = records[i];
    if (r.keyword == "scale") {
      scale = scale_arg(r);
    } else if (r.keyword == "encoder") {
      prov.encoder_tag = r.arg_text(0);
    } else if (r.keyword == "generator") {
      prov.generator = r.arg_text(0);
    } else if (r.keyword == "seed") {
      const std::string s = r.arg_text(0);
      std::uint64_t seed = 0;
      const auto res = std::from_chars(s.data(), s.data() + s.size(), seed);
      if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        r.fail("seed must be an unsigned integer");
      }
      prov.seed = seed;
    } else if (r.keyword == "word") {
      r.expect_fields({"label", "umf", "lmf", "centroid"});
      const std::string name = r.arg_text(0);
      const auto umf = r.numbers("umf");
      const auto lmf = r.numbers("lmf");
      if (umf.size() != 4) r.fail(fmt::format("word '{}' field umf: needs 4 numbers", name));
      if (lmf.size() != 5) r.fail(fmt::format("word '{}' field lmf: needs 5 numbers", name));
      std::optional<Centroid> centroid;
      if (r.has("centroid")) {
        const auto c = r.numbers("centroid");
        if (c.size() != 3) r.fail(fmt::format("word '{}' field centroid: needs 3 numbers", name));
        centroid = Centroid{c[0], c[1], c[2]};
      }
      try {
        words.emplace_back(name, Trapezoid(umf[0], umf[1], umf[2], umf[3]),
                           Trapezoid(lmf[0], lmf[1], lmf[2], lmf[3], lmf[4]),
                           centroid, r.has("label") ? r.text("label") : "");
      } catch (const DomainError& e) {
        r.fail(fmt::format("word '{}': {}", name, e.what()));
      }
    } else {
      r.fail("unknown record");
    }
  }
  try {
    return Codebook::Create(scale, std::move(words), std::move(prov), warnings);
  } catch (const DomainError& e) {
    throw LoadError(std::string(source), e.what());
  }
}

Codebook load_codebook(std::string_view source,
                       std::vector<std::string>* warnings) {
  if (source == "paper-hma" || source == "paper-ia") {
    return parse_codebook(*fixture_text(source), source, warnings);
  }
  const std::string path(source);
  return parse_codebook(read_text_file(path), path, warnings);
}

std::string format_codebook(const Codebook& codebook) {
  const auto& prov = codebook.provenance();
  std::string out = fmt::format("{} 1\n", kCodebookMagic);
  out += fmt::format("scale {}\n",
                     list({codebook.scale().lo, codebook.scale().hi}));
  if (!prov.encoder_tag.empty()) {
    out += fmt::format("encoder {}\n", prov.encoder_tag);
  }
  if (prov.generator) out += fmt::format("generator {}\n", *prov.generator);
  if (prov.seed) out += fmt::format("seed {}\n", *prov.seed);
  for (const auto& w : codebook.words()) {
    const Trapezoid& u = w.umf();
    const Trapezoid& l = w.lmf();
    out += fmt::format("word {}", w.name());
    if (!w.raw_label().empty()) out += fmt::format(" label=\"{}\"", w.raw_label());
    out += fmt::format(" umf={} lmf={}", list({u.a(), u.b(), u.c(), u.d()}),
                       list({l.a(), l.b(), l.c(), l.d(), l.height()}));
    if (w.centroid()) {
      const Centroid& c = *w.centroid();
      out += fmt::format(" centroid={}", list({c.cl, c.cr, c.mean}));
    }
    out += "\n";
  }
  return out;
}

void save_codebook(const Codebook& codebook, const std::string& path) {
  write_text_file(path, format_codebook(codebook));
}

EncoderRegistry::EncoderRegistry() {
  encoders_.push_back(std::make_shared<PassthroughEncoder>());
}

void EncoderRegistry::add(std::shared_ptr<const WordEncoder> encoder) {
  if (!encoder) throw UsageError("null encoder");
  const std::string name = encoder->name();
  std::erase_if(encoders_, [&](const auto& e) { return e->name() == name; });
  encoders_.push_back(std::move(encoder));
}

const WordEncoder* EncoderRegistry::find(std::string_view name) const {
  for (const auto& e : encoders_) {
    if (e->name() == name) return e.get();
  }
  return nullptr;
}

std::vector<std::string> EncoderRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& e : encoders_) out.push_back(e->name());
  return out;
}

IT2Word encode_word(const DataIntervalSet& data, std::string_view encoder,
                    const EncoderRegistry& registry, const Interval& scale) {
  const WordEncoder* e = registry.find(encoder);
  if (e == nullptr) {
    throw UnsupportedOperation(fmt::format(
        "no word encoder named '{}' is registered; interval-to-FOU encoding "
        "(HMA/EIA/IA) is out of scope, use the fixture codebooks or register "
        "an encoder",
        encoder));
  }
  return e->encode(data, scale);
}

}  // namespace lingopt
