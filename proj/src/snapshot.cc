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

#include "bibreg/snapshot.h"

#include <algorithm>
#include <iterator>
#include <set>

#include "bibreg/error.h"

namespace bibreg {

std::string_view DiffMetricName(DiffMetric metric) {
  switch (metric) {
    case DiffMetric::kSurplus: return "surplus";
    case DiffMetric::kDemandPerScientist: return "demand_per_scientist";
    case DiffMetric::kMarketShare: return "market_share";
    case DiffMetric::kIntraOverNationalSupply:
      return "intra_over_national_supply";
  }
  return "";
}

std::string_view DeltaFlagName(DeltaFlag flag) {
  switch (flag) {
    case DeltaFlag::kNone: return "";
    case DeltaFlag::kEmergent: return "emergent";
    case DeltaFlag::kVanished: return "vanished";
  }
  return "";
}

Snapshot MakeSnapshot(const std::vector<std::string> &regions,
                      const std::vector<std::string> &taxonomy,
                      const std::vector<SectorIndicators> &sectors) {
  Snapshot snapshot;
  snapshot.regions = regions;
  snapshot.taxonomy = taxonomy;
  for (const SectorIndicators &s : sectors) {
    std::vector<MetricVector> rows(s.flows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
      rows[i] = {s.correspondence[i].surplus,
                 s.correspondence[i].demand_per_scientist,
                 s.flows[i].market_share,
                 s.flows[i].intra_over_national_supply};
    }
    snapshot.sectors.emplace(s.sds, std::move(rows));
  }
  return snapshot;
}

namespace {

std::string Join(const std::set<std::string> &items) {
  std::string out;
  for (const std::string &s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

DeltaCell CompareCell(const Value &t0, const Value &t1) {
  DeltaCell cell{t0, t1, std::nullopt, DeltaFlag::kNone};
  if (t0 && t1) {
    cell.delta = *t1 - *t0;
  } else if (t1) {
    cell.flag = DeltaFlag::kEmergent;
  } else if (t0) {
    cell.flag = DeltaFlag::kVanished;
  }
  return cell;
}

}  // namespace

std::vector<SnapshotDelta> DiffSnapshots(const Snapshot &t0,
                                         const Snapshot &t1) {
  if (t0.regions != t1.regions) {
    throw Error(ErrorKind::kDiff, "snapshots use different region sets");
  }
  std::set<std::string> a(t0.taxonomy.begin(), t0.taxonomy.end());
  std::set<std::string> b(t1.taxonomy.begin(), t1.taxonomy.end());
  if (a != b) {
    std::set<std::string> only;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::inserter(only, only.end()));
    throw Error(ErrorKind::kDiff,
                "taxonomies differ in SDS codes: " + Join(only));
  }

  std::set<std::string> sectors;
  for (const auto &entry : t0.sectors) sectors.insert(entry.first);
  for (const auto &entry : t1.sectors) sectors.insert(entry.first);

  const size_t n = t0.regions.size();
  std::vector<SnapshotDelta> out;
  for (const std::string &sds : sectors) {
    auto before = t0.sectors.find(sds);
    auto after = t1.sectors.find(sds);
    const bool in_t0 = before != t0.sectors.end();
    const bool in_t1 = after != t1.sectors.end();
    for (size_t r = 0; r < n; ++r) {
      SnapshotDelta delta;
      delta.region = t0.regions[r];
      delta.sds = sds;
      for (size_t k = 0; k < kDiffMetricCount; ++k) {
        Value v0 = in_t0 && r < before->second.size() ? before->second[r][k]
                                                      : Value{};
        Value v1 = in_t1 && r < after->second.size() ? after->second[r][k]
                                                     : Value{};
        DeltaCell cell = CompareCell(v0, v1);
        if (!in_t0) cell.flag = DeltaFlag::kEmergent;
        if (!in_t1) cell.flag = DeltaFlag::kVanished;
        delta.cells[k] = cell;
      }
      out.push_back(std::move(delta));
    }
  }
  return out;
}

}  // namespace bibreg
