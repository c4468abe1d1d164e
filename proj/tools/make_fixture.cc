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

// Writes the synthetic electronics corpus used by the examples and tests.
//
//   make_fixture [output-dir]     (default: data/electronics)

#include <exception>
#include <iostream>

#include "support/fixtures.h"

int main(int argc, char **argv) {
  const char *dir = argc > 1 ? argv[1] : "data/electronics";
  try {
    bibreg::fixtures::WriteElectronicsCorpus(dir);
  } catch (const std::exception &e) {
    std::cerr << "make_fixture: " << e.what() << '\n';
    return 1;
  }
  std::cerr << "wrote " << dir << '\n';
  return 0;
}
