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

#ifndef BIBREG_CSV_H_
#define BIBREG_CSV_H_

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace bibreg {

// Minimal RFC 4180 support: comma-separated, double-quoted fields with ""
// escapes, fields may span lines when quoted.
class CsvReader {
 public:
  explicit CsvReader(std::istream &in) : in_(in) {}

  // Reads the next record. Returns false at end of input. `line` receives the
  // 1-based physical line number where the record started. Throws Error
  // (kParse) on an unterminated quote.
  bool Next(std::vector<std::string> *fields, size_t *line);

 private:
  std::istream &in_;
  size_t line_ = 0;
};

// Quotes a field only when it contains a comma, quote or newline.
std::string CsvEscape(std::string_view field);

std::string CsvLine(const std::vector<std::string> &fields);

}  // namespace bibreg

#endif  // BIBREG_CSV_H_
