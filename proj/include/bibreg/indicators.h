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

#ifndef BIBREG_INDICATORS_H_
#define BIBREG_INDICATORS_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bibreg/collab.h"
#include "bibreg/model.h"

namespace bibreg {

// A cell that may be undefined (rendered as NA).
using Value = std::optional<double>;

// Supply (university side) and demand (enterprise side) of university-
// enterprise events for one region. Shares are fractions in [0, 1].
struct RegionalSummary {
  std::string region;
  long supply_intra = 0;
  long supply_extra = 0;
  long supply_national = 0;
  long demand_intra = 0;
  long demand_extra = 0;
  long demand_national = 0;
  long net_difference = 0;
  Value market_share;  // supply_intra / demand_national
};

// One row per region in `regions` order, zero rows included. Throws
// Error(kData) for an event whose region is not in `regions`.
std::vector<RegionalSummary> ComputeRegionalSummary(
    const std::vector<UECollaboration> &events,
    const std::vector<std::string> &regions);

// Mean over eligible entries with NA coerced to 0. Returns NA when nothing is
// eligible. `values` and `eligible` have equal length.
Value DistributionMean(std::span<const Value> values,
                       std::span<const bool> eligible);

// value / mean for eligible entries with a defined value; NA otherwise or
// when the mean is NA or zero.
std::vector<Value> RelativeToMean(std::span<const Value> values,
                                  std::span<const bool> eligible);

// Roster headcount per (sds, region), summed from headcount weights.
class HeadcountTable {
 public:
  HeadcountTable(const std::vector<ScientistRosterEntry> &roster,
                 const OrganizationIndex &organizations,
                 const std::vector<std::string> &regions);

  // Headcount of `sds` in each region, in region order.
  std::vector<double> ForSector(const std::string &sds) const;

 private:
  size_t region_count_;
  std::map<std::string, std::vector<double>> by_sector_;
};

struct RegionSectorCounts {
  std::string region;
  double scientists = 0.0;
  long national_demand = 0;  // events whose enterprise is in the region
  long national_supply = 0;  // events supplied by the region
  long intra_supply = 0;     // supplied by and demanded in the region
};

struct SectorCounts {
  std::string sds;
  std::vector<RegionSectorCounts> rows;  // region order
};

// `events` may contain other sectors; only `sds` is counted. Throws
// Error(kData) for regions outside `regions`.
SectorCounts CountSector(const std::string &sds,
                         std::span<const double> headcounts,
                         const std::vector<SDSCollaboration> &events,
                         const std::vector<std::string> &regions);

struct SectorCorrespondenceRow {
  std::string region;
  double scientists = 0.0;
  long national_demand = 0;
  double surplus = 0.0;
  Value demand_per_scientist;
  Value demand_per_scientist_rel;
};

// `capacity` scales how many collaborations one scientist can serve; the
// surplus and ratio use scientists * capacity.
std::vector<SectorCorrespondenceRow> CorrespondenceFromCounts(
    const SectorCounts &counts, double capacity = 1.0);

struct SectorFlowsRow {
  std::string region;
  long national_demand = 0;
  long national_supply = 0;
  long intra_supply = 0;
  Value national_supply_per_scientist;
  Value national_supply_per_scientist_rel;
  Value intra_supply_per_scientist;
  Value intra_supply_per_scientist_rel;
  Value market_share;                // fraction
  Value market_share_per_scientist;  // fraction per scientist
  Value intra_over_national_supply;  // fraction
};

std::vector<SectorFlowsRow> FlowsFromCounts(const SectorCounts &counts);

// Both tables for one sector; rows share region order.
struct SectorIndicators {
  std::string sds;
  std::vector<SectorCorrespondenceRow> correspondence;
  std::vector<SectorFlowsRow> flows;
  long events = 0;  // SDS-enterprise events in this sector
};

SectorIndicators ComputeSector(const std::string &sds,
                               std::span<const double> headcounts,
                               const std::vector<SDSCollaboration> &events,
                               const std::vector<std::string> &regions,
                               double capacity = 1.0);

struct SectorRunOptions {
  std::map<std::string, double> capacity;  // default 1
};

// Indicators for every sector in `sds_codes` (OpenMP over sectors). Result
// order follows `sds_codes`.
std::vector<SectorIndicators> ComputeAllSectors(
    const std::vector<std::string> &sds_codes, const HeadcountTable &headcounts,
    const std::vector<SDSCollaboration> &events,
    const std::vector<std::string> &regions,
    const SectorRunOptions &options = {});

std::vector<SectorIndicators> ComputeAllSectorsSerial(
    const std::vector<std::string> &sds_codes, const HeadcountTable &headcounts,
    const std::vector<SDSCollaboration> &events,
    const std::vector<std::string> &regions,
    const SectorRunOptions &options = {});

enum class Quadrant { kI, kII, kIII, kIV };

std::string_view QuadrantName(Quadrant q);

// Dividers at surplus 0 and market share `threshold` (a fraction). Points on
// a divider go to the non-negative-surplus / high-share side.
std::optional<Quadrant> ClassifyQuadrant(double surplus, Value market_share,
                                         double threshold = 0.5);

struct QuadrantPosition {
  std::string region;
  std::string sds;
  double surplus = 0.0;
  double market_share = 0.0;
  Quadrant quadrant = Quadrant::kI;
};

// Regions with national demand > 0 in the sector, in region order.
std::vector<QuadrantPosition> PositionRegions(const SectorIndicators &sector,
                                              double threshold = 0.5);

struct RegionSectorStats {
  std::string region;
  size_t observations = 0;  // sectors with scientists in the region
  Value mean;
  Value standard_error;  // sample sd / sqrt(n); NA for n < 2
  Value median;
  Value minimum;
  Value maximum;
  size_t zero_demand_sds = 0;
};

// Statistics of demand per scientist over `rows` (one row per sector for the
// same region) restricted to rows with scientists > 0.
RegionSectorStats ComputeRegionSectorStats(
    const std::string &region, std::span<const SectorCorrespondenceRow> rows);

// Collects the region's row from every sector and computes its statistics.
RegionSectorStats ComputeRegionSectorStats(
    const std::string &region, const std::vector<std::string> &regions,
    const std::vector<SectorIndicators> &sectors);

}  // namespace bibreg

#endif  // BIBREG_INDICATORS_H_
