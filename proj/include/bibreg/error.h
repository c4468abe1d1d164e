// Copyright 2026 The bibreg Authors.
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

#ifndef BIBREG_ERROR_H_
#define BIBREG_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bibreg {

enum class ErrorKind {
  kParse,
  kValidation,
  kReferential,
  kData,
  kContract,
  kComputation,
  kUsage,
  kDiff,
  kIo,
};

std::string_view ErrorKindName(ErrorKind kind);

// Every failure raised by the library. The kind drives CLI exit handling and
// lets tests assert on the category without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

enum class Severity { kWarning, kError };

struct Diagnostic {
  Severity severity = Severity::kError;
  ErrorKind kind = ErrorKind::kValidation;
  std::string location;  // "file:line" or empty
  std::string message;

  std::string ToString() const;
};

// Collects warnings and hard errors while loading so that `validate` can
// report many problems at once.
class Diagnostics {
 public:
  void Warn(ErrorKind kind, std::string location, std::string message);
  void Fail(ErrorKind kind, std::string location, std::string message);

  bool has_errors() const { return error_count_ > 0; }
  size_t error_count() const { return error_count_; }
  size_t warning_count() const { return entries_.size() - error_count_; }
  const std::vector<Diagnostic> &entries() const { return entries_; }

  // Throws the first recorded error, if any.
  void ThrowIfFailed() const;

  void Append(const Diagnostics &other);

 private:
  std::vector<Diagnostic> entries_;
  size_t error_count_ = 0;
};

}  // namespace bibreg

#endif  // BIBREG_ERROR_H_
