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

#include "bibreg/aggregate.h"

#include <algorithm>
#include <cmath>

#include "bibreg/error.h"

namespace bibreg {

std::string_view AggregateIndicatorName(AggregateIndicator indicator) {
  switch (indicator) {
    case AggregateIndicator::kDemandPerScientist:
      return "demand_per_scientist";
    case AggregateIndicator::kNationalSupplyPerScientist:
      return "national_supply_per_scientist";
    case AggregateIndicator::kIntraSupplyPerScientist:
      return "intra_supply_per_scientist";
    case AggregateIndicator::kMarketSharePerScientist:
      return "market_share_per_scientist";
    case AggregateIndicator::kIntraOverNationalSupply:
      return "intra_over_national_supply";
  }
  return "";
}

SectorIndicatorValues ExtractIndicatorValues(const SectorIndicators &sector) {
  SectorIndicatorValues out;
  out.sds = sector.sds;
  out.by_region.resize(sector.flows.size());
  for (size_t i = 0; i < sector.flows.size(); ++i) {
    const SectorFlowsRow &f = sector.flows[i];
    out.by_region[i] = {sector.correspondence[i].demand_per_scientist,
                        f.national_supply_per_scientist,
                        f.intra_supply_per_scientist,
                        f.market_share_per_scientist,
                        f.intra_over_national_supply};
  }
  return out;
}

std::map<std::string, double> ComputeSdsWeights(
    const std::vector<SDSCollaboration> &events) {
  std::map<std::string, double> weights;
  if (events.empty()) return weights;
  for (const SDSCollaboration &e : events) weights[e.sds] += 1.0;
  const double total = static_cast<double>(events.size());
  for (auto &entry : weights) entry.second /= total;
  return weights;
}

std::vector<AggregateRow> AggregateRegions(
    const std::vector<std::string> &regions,
    const std::vector<SectorIndicatorValues> &sectors,
    const std::map<std::string, double> &weights,
    AggregationNaPolicy policy) {
  if (!weights.empty()) {
    double total = 0.0;
    for (const auto &entry : weights) total += entry.second;
    if (std::fabs(total - 1.0) > 1e-9) {
      throw Error(ErrorKind::kComputation,
                  "sector weights sum to " + std::to_string(total) +
                      ", expected 1");
    }
  }
  std::map<std::string, const SectorIndicatorValues *> by_sds;
  for (const SectorIndicatorValues &s : sectors) by_sds.emplace(s.sds, &s);

  const size_t n = regions.size();
  std::vector<std::array<double, kAggregateIndicatorCount>> sum(n), defined(n);
  for (size_t r = 0; r < n; ++r) {
    sum[r].fill(0.0);
    defined[r].fill(0.0);
  }
  for (const auto &[sds, weight] : weights) {
    auto it = by_sds.find(sds);
    if (it == by_sds.end() || it->second->by_region.size() != n) {
      throw Error(ErrorKind::kComputation,
                  "no indicator values for weighted sector \"" + sds + "\"");
    }
    for (size_t r = 0; r < n; ++r) {
      const IndicatorVector &v = it->second->by_region[r];
      for (size_t k = 0; k < kAggregateIndicatorCount; ++k) {
        if (!v[k]) continue;
        sum[r][k] += weight * *v[k];
        defined[r][k] += weight;
      }
    }
  }

  std::vector<AggregateRow> rows(n);
  for (size_t r = 0; r < n; ++r) {
    rows[r].region = regions[r];
    for (size_t k = 0; k < kAggregateIndicatorCount; ++k) {
      if (policy == AggregationNaPolicy::kCoerceZero) {
        rows[r].values[k] = sum[r][k];
      } else if (defined[r][k] > 0.0) {
        rows[r].values[k] = sum[r][k] / defined[r][k];
      }
    }
  }
  for (size_t k = 0; k < kAggregateIndicatorCount; ++k) {
    std::vector<Value> column(n);
    for (size_t r = 0; r < n; ++r) column[r] = rows[r].values[k];
    auto ranks = RankRegions(column);
    for (size_t r = 0; r < n; ++r) rows[r].ranks[k] = ranks[r];
  }
  return rows;
}

std::vector<std::optional<int>> RankRegions(std::span<const Value> values) {
  std::vector<size_t> order;
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i]) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return *values[a] > *values[b];
  });
  std::vector<std::optional<int>> ranks(values.size());
  for (size_t pos = 0; pos < order.size(); ++pos) {
    if (pos > 0 && *values[order[pos]] == *values[order[pos - 1]]) {
      ranks[order[pos]] = ranks[order[pos - 1]];
    } else {
      ranks[order[pos]] = static_cast<int>(pos) + 1;
    }
  }
  return ranks;
}

}  // namespace bibreg
