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

#include "lingopt/record_io.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>

#include <fmt/format.h>

#include "lingopt/errors.h"

namespace lingopt {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

bool is_bare_char(char c) {
  return !is_space(c) && c != '"' && c != '[' && c != ']' && c != '=' &&
         c != '#' && c != ',';
}

class LineScanner {
 public:
  LineScanner(std::string_view line, const std::string& source, int number)
      : line_(line), source_(source), number_(number) {}

  void skip_space() {
    while (pos_ < line_.size() && is_space(line_[pos_])) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= line_.size() || line_[pos_] == '#';
  }
  char peek() const { return pos_ < line_.size() ? line_[pos_] : '\0'; }

  std::string bare() {
    const std::size_t start = pos_;
    while (pos_ < line_.size() && is_bare_char(line_[pos_])) ++pos_;
    if (pos_ == start) {
      fail(fmt::format("unexpected character '{}'", peek()));
    }
    return std::string(line_.substr(start, pos_ - start));
  }

  std::string quoted() {
    ++pos_;  // opening quote
    const std::size_t start = pos_;
    while (pos_ < line_.size() && line_[pos_] != '"') ++pos_;
    if (pos_ >= line_.size()) fail("unterminated string");
    std::string out(line_.substr(start, pos_ - start));
    ++pos_;
    return out;
  }

  RecordValue value() {
    RecordValue v;
    if (peek() == '"') {
      v.kind = RecordValue::Kind::kQuoted;
      v.text = quoted();
    } else if (peek() == '[') {
      v.kind = RecordValue::Kind::kList;
      ++pos_;
      for (;;) {
        skip_space();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        if (peek() == ']') {
          ++pos_;
          break;
        }
        if (pos_ >= line_.size()) fail("unterminated list");
        v.items.push_back(peek() == '"' ? quoted() : bare());
      }
    } else {
      v.text = bare();
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw LoadError(source_, number_, what);
  }

  std::size_t pos_ = 0;

 private:
  std::string_view line_;
  const std::string& source_;
  int number_;
};

double to_number(std::string_view s, const Record& r, std::string_view what) {
  double v = 0.0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) {
    r.fail(fmt::format("{}: '{}' is not a number", what, s));
  }
  return v;
}

}  // namespace

const RecordValue* Record::find(std::string_view key) const {
  for (const auto& [k, v] : fields) {
    if (k == key) return &v;
  }
  return nullptr;
}

void Record::fail(const std::string& what) const {
  throw LoadError(source, line, fmt::format("{}: {}", keyword, what));
}

void Record::expect_fields(
    std::initializer_list<std::string_view> allowed) const {
  for (const auto& [k, v] : fields) {
    bool ok = false;
    for (auto a : allowed) ok = ok || (a == k);
    if (!ok) fail(fmt::format("unknown field '{}'", k));
  }
}

std::string Record::text(std::string_view key) const {
  const RecordValue* v = find(key);
  if (v == nullptr) fail(fmt::format("missing field '{}'", key));
  if (v->kind == RecordValue::Kind::kList) {
    fail(fmt::format("field '{}' must not be a list", key));
  }
  return v->text;
}

double Record::number(std::string_view key) const {
  return to_number(text(key), *this, key);
}

std::uint64_t Record::unsigned_integer(std::string_view key) const {
  const std::string s = text(key);
  std::uint64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    fail(fmt::format("field '{}': '{}' is not an unsigned integer", key, s));
  }
  return v;
}

std::vector<double> Record::numbers(std::string_view key) const {
  std::vector<double> out;
  for (const auto& item : names(key)) out.push_back(to_number(item, *this, key));
  return out;
}

std::vector<std::string> Record::names(std::string_view key) const {
  const RecordValue* v = find(key);
  if (v == nullptr) fail(fmt::format("missing field '{}'", key));
  if (v->kind != RecordValue::Kind::kList) {
    fail(fmt::format("field '{}' must be a list", key));
  }
  return v->items;
}

std::string Record::arg_text(std::size_t i) const {
  if (i >= args.size()) fail(fmt::format("missing argument {}", i + 1));
  if (args[i].kind == RecordValue::Kind::kList) {
    fail(fmt::format("argument {} must not be a list", i + 1));
  }
  return args[i].text;
}

double Record::arg_number(std::size_t i) const {
  return to_number(arg_text(i), *this, fmt::format("argument {}", i + 1));
}

std::vector<std::string> Record::arg_names(std::size_t i) const {
  if (i >= args.size()) fail(fmt::format("missing argument {}", i + 1));
  if (args[i].kind != RecordValue::Kind::kList) {
    fail(fmt::format("argument {} must be a list", i + 1));
  }
  return args[i].items;
}

std::vector<double> Record::arg_numbers(std::size_t i) const {
  std::vector<double> out;
  for (const auto& item : arg_names(i)) {
    out.push_back(to_number(item, *this, fmt::format("argument {}", i + 1)));
  }
  return out;
}

std::vector<Record> parse_records(std::string_view text,
                                  std::string_view source) {
  const std::string src(source);
  std::vector<Record> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    ++number;
    start = end + 1;

    LineScanner scan(line, src, number);
    if (scan.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    Record rec;
    rec.source = src;
    rec.line = number;
    rec.keyword = scan.bare();
    while (!scan.at_end()) {
      if (scan.peek() == '"' || scan.peek() == '[') {
        rec.args.push_back(scan.value());
        continue;
      }
      std::string token = scan.bare();
      if (scan.peek() == '=') {
        ++scan.pos_;
        rec.fields.emplace_back(std::move(token), scan.value());
      } else {
        rec.args.push_back({RecordValue::Kind::kBare, std::move(token), {}});
      }
    }
    out.push_back(std::move(rec));
    if (end == text.size()) break;
  }
  return out;
}

std::string format_number(double v) {
  if (v == 0.0) return "0";  // folds -0
  return fmt::format("{}", v);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError(fmt::format("{}: cannot open for writing", path));
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw DataError(fmt::format("{}: write failed", path));
}

}  // namespace lingopt
