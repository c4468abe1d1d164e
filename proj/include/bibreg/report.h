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

#ifndef BIBREG_REPORT_H_
#define BIBREG_REPORT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bibreg/aggregate.h"
#include "bibreg/indicators.h"
#include "bibreg/snapshot.h"

namespace bibreg {

// How a numeric cell is printed. Percent classes multiply by 100 first. All
// rounding is half away from zero and applied to the unrounded value.
enum class RoundingClass {
  kHeadcount,  // up to 6 decimals, trailing zeros trimmed
  kRatio2,
  kRatio3,
  kPercent0,
  kPercent2,
  kPercent3,
};

struct Cell {
  enum class Kind { kText, kInteger, kNumber, kNa };

  Kind kind = Kind::kNa;
  std::string text;
  long long integer = 0;
  double number = 0.0;
  RoundingClass rounding = RoundingClass::kRatio2;

  static Cell Text(std::string text);
  static Cell Integer(long long value);
  static Cell Number(double value, RoundingClass rounding);
  static Cell Na();
  static Cell Optional(const Value &value, RoundingClass rounding);
  static Cell Rank(const std::optional<int> &rank);
};

struct RenderedTable {
  std::string name;
  std::vector<std::string> headers;
  std::vector<std::vector<Cell>> rows;
};

enum class OutputFormat { kCsv, kJsonl };

// Throws Error(kUsage) for anything but "csv" or "jsonl".
OutputFormat ParseOutputFormat(std::string_view name);
std::string_view OutputFormatExtension(OutputFormat format);

// Half away from zero; never prints "-0".
std::string FormatFixed(double value, int decimals);
std::string FormatNumber(double value, RoundingClass rounding);

// csv: header row then rounded cells, NA as `NA`. jsonl: one object per row
// keyed by header, numbers unrounded in display units, NA as the string
// "NA".
std::string RenderTable(const RenderedTable &table, OutputFormat format);

RenderedTable RegionalSummaryTable(const std::vector<RegionalSummary> &rows);
RenderedTable CorrespondenceTable(const SectorIndicators &sector);
RenderedTable FlowsTable(const SectorIndicators &sector);
RenderedTable RegionStatsTable(const RegionSectorStats &stats);
RenderedTable AggregateTable(const std::vector<AggregateRow> &rows);
RenderedTable DeltaTable(const std::vector<SnapshotDelta> &deltas);

// Scatter of surplus (x) against market share (y) with one divider line at
// surplus 0 and one at `threshold`. Points are labeled with the 1-based
// position of their region in `regions`. Throws Error(kData) when
// `positions` is empty.
std::string EmitQuadrantSvg(const std::vector<QuadrantPosition> &positions,
                            const std::string &sds,
                            const std::vector<std::string> &regions,
                            double threshold = 0.5);

}  // namespace bibreg

#endif  // BIBREG_REPORT_H_
