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

#include "bibreg/indicators.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <unordered_map>

#include "bibreg/error.h"

namespace bibreg {
namespace {

std::unordered_map<std::string, size_t> RegionPositions(
    const std::vector<std::string> &regions) {
  std::unordered_map<std::string, size_t> positions;
  for (size_t i = 0; i < regions.size(); ++i) positions.emplace(regions[i], i);
  return positions;
}

size_t PositionOf(const std::unordered_map<std::string, size_t> &positions,
                  const std::string &region, const std::string &context) {
  auto it = positions.find(region);
  if (it == positions.end()) {
    throw Error(ErrorKind::kData, "event " + context + " references region \"" +
                                      region +
                                      "\" outside the configured region set");
  }
  return it->second;
}

Value Ratio(double numerator, double denominator) {
  if (denominator == 0.0) return std::nullopt;
  return numerator / denominator;
}

}  // namespace

std::vector<RegionalSummary> ComputeRegionalSummary(
    const std::vector<UECollaboration> &events,
    const std::vector<std::string> &regions) {
  auto positions = RegionPositions(regions);
  std::vector<RegionalSummary> rows(regions.size());
  for (size_t i = 0; i < regions.size(); ++i) rows[i].region = regions[i];

  for (const UECollaboration &e : events) {
    size_t u = PositionOf(positions, e.u_region, e.pub_id);
    size_t d = PositionOf(positions, e.e_region, e.pub_id);
    if (u == d) {
      ++rows[u].supply_intra;
      ++rows[d].demand_intra;
    } else {
      ++rows[u].supply_extra;
      ++rows[d].demand_extra;
    }
  }
  for (RegionalSummary &r : rows) {
    r.supply_national = r.supply_intra + r.supply_extra;
    r.demand_national = r.demand_intra + r.demand_extra;
    r.net_difference = r.supply_national - r.demand_national;
    r.market_share = Ratio(static_cast<double>(r.supply_intra),
                           static_cast<double>(r.demand_national));
  }
  return rows;
}

Value DistributionMean(std::span<const Value> values,
                       std::span<const bool> eligible) {
  double sum = 0.0;
  size_t count = 0;
  for (size_t i = 0; i < values.size(); ++i) {
    if (!eligible[i]) continue;
    ++count;
    sum += values[i].value_or(0.0);
  }
  if (count == 0) return std::nullopt;
  return sum / static_cast<double>(count);
}

std::vector<Value> RelativeToMean(std::span<const Value> values,
                                  std::span<const bool> eligible) {
  std::vector<Value> out(values.size());
  Value mean = DistributionMean(values, eligible);
  if (!mean || *mean == 0.0) return out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (eligible[i] && values[i]) out[i] = *values[i] / *mean;
  }
  return out;
}

HeadcountTable::HeadcountTable(const std::vector<ScientistRosterEntry> &roster,
                               const OrganizationIndex &organizations,
                               const std::vector<std::string> &regions)
    : region_count_(regions.size()) {
  auto positions = RegionPositions(regions);
  for (const ScientistRosterEntry &entry : roster) {
    const Organization *u = organizations.Find(entry.university_id);
    if (!u) continue;
    auto it = positions.find(u->region);
    if (it == positions.end()) continue;
    auto &counts = by_sector_[entry.sds];
    if (counts.empty()) counts.assign(region_count_, 0.0);
    counts[it->second] += entry.headcount_weight;
  }
}

std::vector<double> HeadcountTable::ForSector(const std::string &sds) const {
  auto it = by_sector_.find(sds);
  if (it == by_sector_.end()) return std::vector<double>(region_count_, 0.0);
  return it->second;
}

SectorCounts CountSector(const std::string &sds,
                         std::span<const double> headcounts,
                         const std::vector<SDSCollaboration> &events,
                         const std::vector<std::string> &regions) {
  auto positions = RegionPositions(regions);
  SectorCounts counts;
  counts.sds = sds;
  counts.rows.resize(regions.size());
  for (size_t i = 0; i < regions.size(); ++i) {
    counts.rows[i].region = regions[i];
    counts.rows[i].scientists = i < headcounts.size() ? headcounts[i] : 0.0;
  }
  for (const SDSCollaboration &e : events) {
    if (e.sds != sds) continue;
    size_t s = PositionOf(positions, e.supply_region, e.pub_id);
    size_t d = PositionOf(positions, e.e_region, e.pub_id);
    ++counts.rows[s].national_supply;
    ++counts.rows[d].national_demand;
    if (s == d) ++counts.rows[s].intra_supply;
  }
  return counts;
}

std::vector<SectorCorrespondenceRow> CorrespondenceFromCounts(
    const SectorCounts &counts, double capacity) {
  const size_t n = counts.rows.size();
  std::vector<SectorCorrespondenceRow> rows(n);
  std::vector<Value> ratio(n);
  std::unique_ptr<bool[]> eligible(new bool[n]);
  for (size_t i = 0; i < n; ++i) {
    const RegionSectorCounts &c = counts.rows[i];
    SectorCorrespondenceRow &row = rows[i];
    const double supply = c.scientists * capacity;
    row.region = c.region;
    row.scientists = c.scientists;
    row.national_demand = c.national_demand;
    row.surplus = supply - static_cast<double>(c.national_demand);
    row.demand_per_scientist =
        Ratio(static_cast<double>(c.national_demand), supply);
    ratio[i] = row.demand_per_scientist;
    eligible[i] = c.scientists > 0.0;
  }
  std::span<const bool> mask(eligible.get(), n);
  std::vector<Value> rel = RelativeToMean(ratio, mask);
  for (size_t i = 0; i < n; ++i) rows[i].demand_per_scientist_rel = rel[i];
  return rows;
}

std::vector<SectorFlowsRow> FlowsFromCounts(const SectorCounts &counts) {
  const size_t n = counts.rows.size();
  std::vector<SectorFlowsRow> rows(n);
  std::vector<Value> national(n), intra(n);
  std::unique_ptr<bool[]> eligible(new bool[n]);
  for (size_t i = 0; i < n; ++i) {
    const RegionSectorCounts &c = counts.rows[i];
    SectorFlowsRow &row = rows[i];
    row.region = c.region;
    row.national_demand = c.national_demand;
    row.national_supply = c.national_supply;
    row.intra_supply = c.intra_supply;
    row.national_supply_per_scientist =
        Ratio(static_cast<double>(c.national_supply), c.scientists);
    row.intra_supply_per_scientist =
        Ratio(static_cast<double>(c.intra_supply), c.scientists);
    row.market_share = Ratio(static_cast<double>(c.intra_supply),
                             static_cast<double>(c.national_demand));
    if (row.market_share && c.scientists > 0.0) {
      row.market_share_per_scientist = *row.market_share / c.scientists;
    }
    row.intra_over_national_supply =
        Ratio(static_cast<double>(c.intra_supply),
              static_cast<double>(c.national_supply));
    national[i] = row.national_supply_per_scientist;
    intra[i] = row.intra_supply_per_scientist;
    eligible[i] = c.scientists > 0.0;
  }
  std::span<const bool> mask(eligible.get(), n);
  std::vector<Value> national_rel = RelativeToMean(national, mask);
  std::vector<Value> intra_rel = RelativeToMean(intra, mask);
  for (size_t i = 0; i < n; ++i) {
    rows[i].national_supply_per_scientist_rel = national_rel[i];
    rows[i].intra_supply_per_scientist_rel = intra_rel[i];
  }
  return rows;
}

SectorIndicators ComputeSector(const std::string &sds,
                               std::span<const double> headcounts,
                               const std::vector<SDSCollaboration> &events,
                               const std::vector<std::string> &regions,
                               double capacity) {
  SectorCounts counts = CountSector(sds, headcounts, events, regions);
  SectorIndicators out;
  out.sds = sds;
  out.correspondence = CorrespondenceFromCounts(counts, capacity);
  out.flows = FlowsFromCounts(counts);
  for (const RegionSectorCounts &c : counts.rows) out.events += c.national_supply;
  return out;
}

namespace {

// Events bucketed by sector so each sector only scans its own events.
std::map<std::string, std::vector<SDSCollaboration>> BucketBySector(
    const std::vector<SDSCollaboration> &events) {
  std::map<std::string, std::vector<SDSCollaboration>> buckets;
  for (const SDSCollaboration &e : events) buckets[e.sds].push_back(e);
  return buckets;
}

double CapacityFor(const SectorRunOptions &options, const std::string &sds) {
  auto it = options.capacity.find(sds);
  return it == options.capacity.end() ? 1.0 : it->second;
}

}  // namespace

std::vector<SectorIndicators> ComputeAllSectors(
    const std::vector<std::string> &sds_codes, const HeadcountTable &headcounts,
    const std::vector<SDSCollaboration> &events,
    const std::vector<std::string> &regions,
    const SectorRunOptions &options) {
  const auto buckets = BucketBySector(events);
  static const std::vector<SDSCollaboration> kNoEvents;
  std::vector<SectorIndicators> out(sds_codes.size());
  std::vector<std::string> failures(sds_codes.size());
  const long n = static_cast<long>(sds_codes.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) {
    const std::string &sds = sds_codes[i];
    auto it = buckets.find(sds);
    const auto &sector_events = it == buckets.end() ? kNoEvents : it->second;
    try {
      out[i] = ComputeSector(sds, headcounts.ForSector(sds), sector_events,
                             regions, CapacityFor(options, sds));
    } catch (const Error &e) {
      failures[i] = e.what();
    }
  }
  for (const std::string &f : failures) {
    if (!f.empty()) throw Error(ErrorKind::kData, f);
  }
  return out;
}

std::vector<SectorIndicators> ComputeAllSectorsSerial(
    const std::vector<std::string> &sds_codes, const HeadcountTable &headcounts,
    const std::vector<SDSCollaboration> &events,
    const std::vector<std::string> &regions,
    const SectorRunOptions &options) {
  std::vector<SectorIndicators> out;
  out.reserve(sds_codes.size());
  for (const std::string &sds : sds_codes) {
    out.push_back(ComputeSector(sds, headcounts.ForSector(sds), events,
                                regions, CapacityFor(options, sds)));
  }
  return out;
}

std::string_view QuadrantName(Quadrant q) {
  switch (q) {
    case Quadrant::kI: return "I";
    case Quadrant::kII: return "II";
    case Quadrant::kIII: return "III";
    case Quadrant::kIV: return "IV";
  }
  return "?";
}

std::optional<Quadrant> ClassifyQuadrant(double surplus, Value market_share,
                                         double threshold) {
  if (!market_share) return std::nullopt;
  const bool high_share = *market_share >= threshold;
  if (surplus < 0.0) return high_share ? Quadrant::kI : Quadrant::kIV;
  return high_share ? Quadrant::kII : Quadrant::kIII;
}

std::vector<QuadrantPosition> PositionRegions(const SectorIndicators &sector,
                                              double threshold) {
  std::vector<QuadrantPosition> out;
  for (size_t i = 0; i < sector.flows.size(); ++i) {
    const SectorFlowsRow &flow = sector.flows[i];
    if (flow.national_demand <= 0) continue;
    const double surplus = sector.correspondence[i].surplus;
    auto quadrant = ClassifyQuadrant(surplus, flow.market_share, threshold);
    if (!quadrant) continue;
    out.push_back({flow.region, sector.sds, surplus, *flow.market_share,
                   *quadrant});
  }
  return out;
}

RegionSectorStats ComputeRegionSectorStats(
    const std::string &region, std::span<const SectorCorrespondenceRow> rows) {
  RegionSectorStats stats;
  stats.region = region;
  std::vector<double> values;
  for (const SectorCorrespondenceRow &row : rows) {
    if (!(row.scientists > 0.0) || !row.demand_per_scientist) continue;
    values.push_back(*row.demand_per_scientist);
    if (row.national_demand == 0) ++stats.zero_demand_sds;
  }
  stats.observations = values.size();
  if (values.empty()) return stats;

  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / n;
  stats.mean = mean;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    stats.standard_error = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  }
  std::sort(values.begin(), values.end());
  const size_t mid = values.size() / 2;
  stats.median = values.size() % 2 == 1
                     ? values[mid]
                     : (values[mid - 1] + values[mid]) / 2.0;
  stats.minimum = values.front();
  stats.maximum = values.back();
  return stats;
}

RegionSectorStats ComputeRegionSectorStats(
    const std::string &region, const std::vector<std::string> &regions,
    const std::vector<SectorIndicators> &sectors) {
  auto it = std::find(regions.begin(), regions.end(), region);
  if (it == regions.end()) {
    throw Error(ErrorKind::kUsage,
                "region \"" + region + "\" is not in the configured set");
  }
  const size_t index = static_cast<size_t>(it - regions.begin());
  std::vector<SectorCorrespondenceRow> rows;
  rows.reserve(sectors.size());
  for (const SectorIndicators &s : sectors) {
    rows.push_back(s.correspondence[index]);
  }
  return ComputeRegionSectorStats(region, rows);
}

}  // namespace bibreg
