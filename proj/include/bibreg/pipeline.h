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

#ifndef BIBREG_PIPELINE_H_
#define BIBREG_PIPELINE_H_

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "bibreg/aggregate.h"
#include "bibreg/collab.h"
#include "bibreg/config.h"
#include "bibreg/error.h"
#include "bibreg/indicators.h"
#include "bibreg/ingest.h"
#include "bibreg/snapshot.h"

namespace bibreg {

struct LoadReport {
  PublicationLoadStats publications;
  size_t dropped_unresolvable = 0;
  size_t retained_after_filter = 0;
  size_t ue_events = 0;
  size_t sds_events = 0;
  size_t warnings = 0;
  size_t errors = 0;

  std::string ToString() const;
};

// Output of ingest + resolve. `diagnostics` holds every warning and error.
struct ValidationResult {
  Registries registries;
  std::vector<std::string> regions;  // display order
  std::vector<ResolvedPublication> resolved;
  LoadReport report;
  Diagnostics diagnostics;
};

// Never throws for data problems; they land in `diagnostics`. Missing input
// files raise Error(kIo).
ValidationResult RunValidation(const RunConfig &config);

struct Analysis {
  std::vector<std::string> regions;  // display order
  SectorTaxonomy taxonomy;           // restricted to the configured UDAs
  std::vector<ResolvedPublication> retained;
  EventStore events;
  CorpusTotals totals;
  std::vector<RegionalSummary> regional;
  std::vector<SectorIndicators> sectors;  // every taxonomy SDS, sorted
  std::map<std::string, double> weights;
  std::vector<AggregateRow> aggregate;
  LoadReport report;
  Diagnostics diagnostics;

  const SectorIndicators *FindSector(const std::string &sds) const;
  // Sectors with at least one SDS-enterprise event.
  std::vector<const SectorIndicators *> ActiveSectors() const;
};

// Full pipeline in memory. Throws the first hard error from loading.
Analysis RunAnalysis(const RunConfig &config);

// Subcommands. Each returns the process exit code; diagnostics go to `err`,
// data to files under config.out_dir.
int CmdValidate(const RunConfig &config, std::ostream &err);
int CmdAnalyze(const RunConfig &config, std::ostream &err);
int CmdSector(const RunConfig &config, const std::string &sds,
              std::ostream &err);
int CmdRegion(const RunConfig &config, const std::string &region,
              std::ostream &err);
int CmdDiff(const std::string &t0_dir, const std::string &t1_dir,
            const std::string &out_dir, std::ostream &err);

// Reads an `analyze` output directory. Throws Error(kDiff) naming every
// missing file.
Snapshot LoadSnapshot(const std::string &dir);

}  // namespace bibreg

#endif  // BIBREG_PIPELINE_H_
