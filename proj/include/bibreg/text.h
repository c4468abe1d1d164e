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

#ifndef BIBREG_TEXT_H_
#define BIBREG_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace bibreg {

// Compatibility decomposition, diacritic stripping, case folding, punctuation
// to space and whitespace collapse. Deterministic and idempotent. Used for
// every name comparison in ingest and resolve.
std::string NormalizeName(std::string_view raw);

// Uppercase ASCII letters only ("m.r." -> "MR"). Returns empty when the input
// has no letters.
std::string NormalizeInitials(std::string_view raw);

// Splits on a single-character separator, keeping empty fields.
std::vector<std::string> Split(std::string_view text, char separator);

std::string_view Trim(std::string_view text);

// Maps a code such as "ING-INF/01" or "Emilia Romagna" onto a file-name-safe
// stem: anything outside [A-Za-z0-9._-] becomes '_'.
std::string FileStem(std::string_view code);

}  // namespace bibreg

#endif  // BIBREG_TEXT_H_
