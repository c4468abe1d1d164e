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

#ifndef BIBREG_AGGREGATE_H_
#define BIBREG_AGGREGATE_H_

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bibreg/collab.h"
#include "bibreg/indicators.h"

namespace bibreg {

// The five per-region indicators that are aggregated across sectors.
enum class AggregateIndicator {
  kDemandPerScientist = 0,
  kNationalSupplyPerScientist,
  kIntraSupplyPerScientist,
  kMarketSharePerScientist,
  kIntraOverNationalSupply,
};
inline constexpr size_t kAggregateIndicatorCount = 5;

std::string_view AggregateIndicatorName(AggregateIndicator indicator);

using IndicatorVector = std::array<Value, kAggregateIndicatorCount>;

// Per-region indicator values of one sector, in region order.
struct SectorIndicatorValues {
  std::string sds;
  std::vector<IndicatorVector> by_region;
};

SectorIndicatorValues ExtractIndicatorValues(const SectorIndicators &sector);

// Share of each sector in all SDS-enterprise events, over sectors with at
// least one event.
std::map<std::string, double> ComputeSdsWeights(
    const std::vector<SDSCollaboration> &events);

enum class AggregationNaPolicy { kCoerceZero, kRenormalize };

struct AggregateRow {
  std::string region;
  IndicatorVector values;
  std::array<std::optional<int>, kAggregateIndicatorCount> ranks;
};

// For each region and indicator: sum over weighted sectors of w * value.
// kCoerceZero counts NA as 0; kRenormalize divides by the weight of sectors
// where the value is defined (NA if none). Throws Error(kComputation) if the
// weights do not sum to 1 within 1e-9, or if a weighted sector has no
// values. An empty weight map yields 0 (coerce) or NA (renormalize).
std::vector<AggregateRow> AggregateRegions(
    const std::vector<std::string> &regions,
    const std::vector<SectorIndicatorValues> &sectors,
    const std::map<std::string, double> &weights,
    AggregationNaPolicy policy = AggregationNaPolicy::kCoerceZero);

// Descending competition ranking ("1224"). NA entries stay unranked.
std::vector<std::optional<int>> RankRegions(std::span<const Value> values);

}  // namespace bibreg

#endif  // BIBREG_AGGREGATE_H_
