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

#include "bibreg/error.h"

namespace bibreg {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "parse error";
    case ErrorKind::kValidation: return "validation error";
    case ErrorKind::kReferential: return "referential error";
    case ErrorKind::kData: return "data error";
    case ErrorKind::kContract: return "contract violation";
    case ErrorKind::kComputation: return "computation error";
    case ErrorKind::kUsage: return "usage error";
    case ErrorKind::kDiff: return "diff error";
    case ErrorKind::kIo: return "i/o error";
  }
  return "error";
}

std::string Diagnostic::ToString() const {
  std::string out = severity == Severity::kError ? "error" : "warning";
  out += " (";
  out += ErrorKindName(kind);
  out += ")";
  if (!location.empty()) out += " at " + location;
  out += ": " + message;
  return out;
}

void Diagnostics::Warn(ErrorKind kind, std::string location,
                       std::string message) {
  entries_.push_back(
      {Severity::kWarning, kind, std::move(location), std::move(message)});
}

void Diagnostics::Fail(ErrorKind kind, std::string location,
                       std::string message) {
  entries_.push_back(
      {Severity::kError, kind, std::move(location), std::move(message)});
  ++error_count_;
}

void Diagnostics::ThrowIfFailed() const {
  for (const Diagnostic &d : entries_) {
    if (d.severity != Severity::kError) continue;
    std::string what = d.location.empty() ? d.message
                                          : d.location + ": " + d.message;
    throw Error(d.kind, what);
  }
}

void Diagnostics::Append(const Diagnostics &other) {
  entries_.insert(entries_.end(), other.entries_.begin(),
                  other.entries_.end());
  error_count_ += other.error_count_;
}

}  // namespace bibreg
