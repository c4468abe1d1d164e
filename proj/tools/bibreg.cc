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

// Command-line driver for the collaboration indicator pipeline.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bibreg/config.h"
#include "bibreg/error.h"
#include "bibreg/pipeline.h"

namespace {

struct GlobalFlags {
  std::string config;
  std::optional<std::string> out;
  std::optional<std::string> window;
  std::optional<std::string> ambiguity;
  std::optional<std::string> share_threshold;
};

bibreg::RunConfig EffectiveConfig(const GlobalFlags &flags) {
  bibreg::RunConfig config;
  if (!flags.config.empty()) config = bibreg::LoadConfig(flags.config);
  const std::string cwd = std::filesystem::current_path().string();
  if (flags.out) bibreg::SetConfigValue(&config, "out", *flags.out, cwd);
  if (flags.window) bibreg::SetConfigValue(&config, "window", *flags.window, cwd);
  if (flags.ambiguity) {
    bibreg::SetConfigValue(&config, "ambiguity", *flags.ambiguity, cwd);
  }
  if (flags.share_threshold) {
    bibreg::SetConfigValue(&config, "quadrant_share_threshold",
                           *flags.share_threshold, cwd);
  }
  return config;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Regional university-industry collaboration indicators"};
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_option("--config", flags.config, "Key-value configuration file");
  app.add_option("--out", flags.out, "Output directory");
  app.add_option("--window", flags.window, "Year window y0:y1");
  app.add_option("--ambiguity", flags.ambiguity, "strict or all");
  app.add_option("--share-threshold", flags.share_threshold,
                 "Market-share divider of the quadrant plot, in (0,1)");

  auto *validate = app.add_subcommand("validate", "Ingest and resolve only");
  auto *analyze = app.add_subcommand("analyze", "Compute every table and figure");
  auto *sector = app.add_subcommand("sector", "Tables and figure of one SDS");
  std::string sds;
  sector->add_option("--sds", sds, "SDS code")->required();
  auto *region = app.add_subcommand("region", "Statistics of one region");
  std::string region_name;
  region->add_option("--name", region_name, "Region name")->required();
  auto *diff = app.add_subcommand("diff", "Compare two analyze outputs");
  std::string t0, t1;
  diff->add_option("--t0", t0, "Earlier snapshot directory")->required();
  diff->add_option("--t1", t1, "Later snapshot directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*diff) {
      return bibreg::CmdDiff(t0, t1, flags.out.value_or("out"), std::cerr);
    }
    bibreg::RunConfig config = EffectiveConfig(flags);
    if (*validate) return bibreg::CmdValidate(config, std::cerr);
    if (*analyze) return bibreg::CmdAnalyze(config, std::cerr);
    if (*sector) return bibreg::CmdSector(config, sds, std::cerr);
    if (*region) return bibreg::CmdRegion(config, region_name, std::cerr);
  } catch (const bibreg::Error &e) {
    std::cerr << "bibreg: " << bibreg::ErrorKindName(e.kind()) << ": "
              << e.what() << '\n';
    return 1;
  }
  return 1;
}
