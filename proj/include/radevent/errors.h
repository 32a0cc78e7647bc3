// Copyright 2026 The radevent Authors.
//
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

#ifndef RADEVENT_ERRORS_H_
#define RADEVENT_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace radevent {

// Base class for every failure raised by the library. The CLI maps these to
// exit codes; library callers can catch the specific subclasses.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed standoff line or malformed JSON. Line is 1-based, 0 if unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string &message, std::size_t line = 0)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// An E or A line referring to an id that was never defined.
class ReferenceError : public Error {
 public:
  ReferenceError(const std::string &message, std::string missing_id)
      : Error(message), missing_id_(std::move(missing_id)) {}
  const std::string &missing_id() const { return missing_id_; }

 private:
  std::string missing_id_;
};

// Span offsets outside the text, or a surface string that does not match the
// text at the declared offsets.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

// A schema configuration that breaks one of the schema rules.
class SchemaError : public Error {
 public:
  SchemaError(const std::string &rule, const std::string &message)
      : Error(rule + ": " + message), rule_(rule) {}
  const std::string &rule() const { return rule_; }

 private:
  std::string rule_;
};

// Refusal to serialize or convert a document that violates an invariant.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Reference and prediction corpora that do not cover the same documents.
class PairingError : public Error {
 public:
  using Error::Error;
};

// Out-of-range argument to an operation (zero replicates, bad ratios, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// File system failures.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace radevent

#endif  // RADEVENT_ERRORS_H_
