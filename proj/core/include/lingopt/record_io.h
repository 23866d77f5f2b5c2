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

// Line-oriented record format shared by the codebook, problem, endpoint and
// data-interval files.
//
//   file    := { line }
//   line    := [ record ] [ "#" comment ] "\n"
//   record  := keyword { WS ( field | value ) }
//   field   := key "=" value
//   value   := bare | quoted | list
//   bare    := any run of characters without WS, '"', '[', ']', '=' or '#'
//   quoted  := '"' { any character except '"' } '"'
//   list    := "[" [ item { ("," | WS) item } ] "]"
//   item    := bare | quoted
//
// Example:
//   word VP label="Very Poor" umf=[0, 0, 2.04, 3.84] lmf=[0, 0, 2.04, 3.04, 1]

#ifndef LINGOPT_RECORD_IO_H_
#define LINGOPT_RECORD_IO_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lingopt {

struct RecordValue {
  enum class Kind { kBare, kQuoted, kList };
  Kind kind = Kind::kBare;
  std::string text;                // bare or quoted content
  std::vector<std::string> items;  // list content
};

class Record {
 public:
  std::string source;
  int line = 0;
  std::string keyword;
  std::vector<RecordValue> args;
  std::vector<std::pair<std::string, RecordValue>> fields;

  const RecordValue* find(std::string_view key) const;
  bool has(std::string_view key) const { return find(key) != nullptr; }

  // Typed accessors; every failure throws LoadError with source and line.
  std::string text(std::string_view key) const;
  double number(std::string_view key) const;
  std::vector<double> numbers(std::string_view key) const;
  std::vector<std::string> names(std::string_view key) const;
  std::uint64_t unsigned_integer(std::string_view key) const;

  std::string arg_text(std::size_t i) const;
  double arg_number(std::size_t i) const;
  std::vector<double> arg_numbers(std::size_t i) const;
  std::vector<std::string> arg_names(std::size_t i) const;

  [[noreturn]] void fail(const std::string& what) const;

  // Rejects fields not in `allowed`.
  void expect_fields(std::initializer_list<std::string_view> allowed) const;
};

std::vector<Record> parse_records(std::string_view text,
                                  std::string_view source);

// Shortest decimal representation that round-trips.
std::string format_number(double v);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

}  // namespace lingopt

#endif  // LINGOPT_RECORD_IO_H_
