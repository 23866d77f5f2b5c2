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

#ifndef LINGOPT_ERRORS_H_
#define LINGOPT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace lingopt {

// Base of every exception thrown by the library. The CLI maps the concrete
// subclasses onto exit codes, so new failure modes should derive from one of
// the groups below rather than from Error directly.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Data and invariant failures (exit code 3).
class DataError : public Error {
 public:
  using Error::Error;
};

class DomainError : public DataError {
 public:
  using DataError::DataError;
};

class SpecError : public DataError {
 public:
  using DataError::DataError;
};

class LoadError : public DataError {
 public:
  LoadError(const std::string& source, int line, const std::string& what);
  LoadError(const std::string& source, const std::string& what);
};

class LookupError : public DataError {
 public:
  using DataError::DataError;
};

class DegenerateWordError : public DataError {
 public:
  using DataError::DataError;
};

// Engine failures (exit code 4).
class EngineError : public Error {
 public:
  using Error::Error;
};

class NoRuleFiredError : public EngineError {
 public:
  using EngineError::EngineError;
};

class OutOfRangeError : public EngineError {
 public:
  using EngineError::EngineError;
};

// Requested an operation this build does not provide, e.g. a word encoder
// that was never registered.
class UnsupportedOperation : public Error {
 public:
  using Error::Error;
};

// Caller combined arguments that cannot work together (exit code 2).
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace lingopt

#endif  // LINGOPT_ERRORS_H_
