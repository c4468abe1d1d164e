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

#ifndef BIBREG_CONFIG_H_
#define BIBREG_CONFIG_H_

#include <istream>
#include <map>
#include <string>
#include <vector>

#include "bibreg/aggregate.h"
#include "bibreg/collab.h"
#include "bibreg/model.h"
#include "bibreg/resolve.h"

namespace bibreg {

// Effective settings of one run. Loaded from a flat `key = value` file;
// command-line flags override individual keys.
struct RunConfig {
  std::string publications;
  std::string organizations;
  std::string roster;
  std::string taxonomy;
  YearWindow window;
  std::vector<std::string> regions = ItalianRegions();
  std::vector<std::string> udas;  // empty: every UDA of the taxonomy
  AmbiguityPolicy ambiguity = AmbiguityPolicy::kStrict;
  SdsRegionSplit sds_region_split = SdsRegionSplit::kPerRegion;
  double quadrant_share_threshold = 0.5;
  AggregationNaPolicy aggregation_na = AggregationNaPolicy::kCoerceZero;
  std::map<std::string, double> capacity;  // SDS -> multiplier, default 1
  std::string out_dir = "out";
};

// Sets one key. Relative paths are resolved against `base_dir`. Throws
// Error(kUsage) for unknown keys or bad values.
void SetConfigValue(RunConfig *config, const std::string &key,
                    const std::string &value, const std::string &base_dir);

RunConfig ParseConfig(std::istream &in, const std::string &source,
                      const std::string &base_dir);
RunConfig LoadConfig(const std::string &path);

// Checks cross-field invariants (threshold in (0,1), positive multipliers,
// input paths present). Throws Error(kUsage).
void ValidateConfig(const RunConfig &config);

// Every key except `out`, one per line, defaults applied. Parsing the result
// reproduces the config (apart from out_dir).
std::string SerializeConfig(const RunConfig &config);

YearWindow ParseWindow(const std::string &text);

}  // namespace bibreg

#endif  // BIBREG_CONFIG_H_
