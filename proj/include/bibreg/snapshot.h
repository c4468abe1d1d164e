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

#ifndef BIBREG_SNAPSHOT_H_
#define BIBREG_SNAPSHOT_H_

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bibreg/indicators.h"

namespace bibreg {

enum class DiffMetric {
  kSurplus = 0,
  kDemandPerScientist,
  kMarketShare,
  kIntraOverNationalSupply,
};
inline constexpr size_t kDiffMetricCount = 4;

std::string_view DiffMetricName(DiffMetric metric);

using MetricVector = std::array<Value, kDiffMetricCount>;

// The indicator values compared between two points in time.
struct Snapshot {
  std::vector<std::string> regions;
  std::vector<std::string> taxonomy;  // every SDS code of the run
  // Sectors with published tables; each vector is in region order.
  std::map<std::string, std::vector<MetricVector>> sectors;
};

Snapshot MakeSnapshot(const std::vector<std::string> &regions,
                      const std::vector<std::string> &taxonomy,
                      const std::vector<SectorIndicators> &sectors);

enum class DeltaFlag { kNone, kEmergent, kVanished };

std::string_view DeltaFlagName(DeltaFlag flag);

struct DeltaCell {
  Value t0;
  Value t1;
  Value delta;  // t1 - t0 when both are defined
  DeltaFlag flag = DeltaFlag::kNone;
};

struct SnapshotDelta {
  std::string region;
  std::string sds;
  std::array<DeltaCell, kDiffMetricCount> cells;
};

// Per-(sector, region) deltas, sectors sorted, regions in snapshot order.
// A value appearing only in t1 is flagged emergent, one disappearing is
// flagged vanished; a sector published only in t1 (t0) flags every cell of
// every region emergent (vanished). Throws Error(kDiff) when the region sets
// or taxonomies differ.
std::vector<SnapshotDelta> DiffSnapshots(const Snapshot &t0,
                                         const Snapshot &t1);

}  // namespace bibreg

#endif  // BIBREG_SNAPSHOT_H_
