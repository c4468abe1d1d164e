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

#include "bibreg/csv.h"

#include "bibreg/error.h"

namespace bibreg {

bool CsvReader::Next(std::vector<std::string> *fields, size_t *line) {
  fields->clear();
  std::string physical;
  while (true) {
    if (!std::getline(in_, physical)) return false;
    ++line_;
    if (!physical.empty() && physical.back() == '\r') physical.pop_back();
    if (!physical.empty()) break;  // blank lines between records are skipped
  }
  *line = line_;

  std::string field;
  bool quoted = false;
  size_t i = 0;
  while (true) {
    if (i >= physical.size()) {
      if (!quoted) break;
      // Quoted field continues on the next physical line.
      if (!std::getline(in_, physical)) {
        throw Error(ErrorKind::kParse, "line " + std::to_string(*line) +
                                           ": unterminated quoted field");
      }
      ++line_;
      if (!physical.empty() && physical.back() == '\r') physical.pop_back();
      field.push_back('\n');
      i = 0;
      continue;
    }
    char c = physical[i++];
    if (quoted) {
      if (c == '"') {
        if (i < physical.size() && physical[i] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields->push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields->push_back(std::move(field));
  return true;
}

std::string CsvEscape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string CsvLine(const std::vector<std::string> &fields) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += CsvEscape(fields[i]);
  }
  out.push_back('\n');
  return out;
}

}  // namespace bibreg
