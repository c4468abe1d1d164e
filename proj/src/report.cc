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

#include "bibreg/report.h"

#include <algorithm>
#include <cmath>

#include "bibreg/csv.h"
#include "bibreg/error.h"
#include "json.hpp"

namespace bibreg {

Cell Cell::Text(std::string text) {
  Cell c;
  c.kind = Kind::kText;
  c.text = std::move(text);
  return c;
}

Cell Cell::Integer(long long value) {
  Cell c;
  c.kind = Kind::kInteger;
  c.integer = value;
  return c;
}

Cell Cell::Number(double value, RoundingClass rounding) {
  Cell c;
  c.kind = Kind::kNumber;
  c.number = value;
  c.rounding = rounding;
  return c;
}

Cell Cell::Na() { return Cell{}; }

Cell Cell::Optional(const Value &value, RoundingClass rounding) {
  return value ? Number(*value, rounding) : Na();
}

Cell Cell::Rank(const std::optional<int> &rank) {
  return rank ? Integer(*rank) : Na();
}

OutputFormat ParseOutputFormat(std::string_view name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "jsonl") return OutputFormat::kJsonl;
  throw Error(ErrorKind::kUsage,
              "unknown output format \"" + std::string(name) + "\"");
}

std::string_view OutputFormatExtension(OutputFormat format) {
  return format == OutputFormat::kCsv ? "csv" : "jsonl";
}

std::string FormatFixed(double value, int decimals) {
  if (!std::isfinite(value)) return "NA";
  const double scale = std::pow(10.0, decimals);
  const double scaled = value * scale;
  double magnitude = std::fabs(scaled);
  double whole = std::floor(magnitude);
  // Values a hair below a tie (e.g. 1.005 * 100) count as the tie.
  if (magnitude - whole >= 0.5 - 1e-9 * std::max(1.0, magnitude)) {
    whole += 1.0;
  }
  long long digits = static_cast<long long>(whole);
  std::string body = std::to_string(digits);
  if (decimals > 0) {
    if (body.size() <= static_cast<size_t>(decimals)) {
      body.insert(0, static_cast<size_t>(decimals) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<size_t>(decimals), ".");
  }
  const bool negative = scaled < 0.0 && digits != 0;
  return negative ? "-" + body : body;
}

namespace {

double DisplayValue(double value, RoundingClass rounding) {
  switch (rounding) {
    case RoundingClass::kPercent0:
    case RoundingClass::kPercent2:
    case RoundingClass::kPercent3:
      return value * 100.0;
    default:
      return value;
  }
}

}  // namespace

std::string FormatNumber(double value, RoundingClass rounding) {
  const double shown = DisplayValue(value, rounding);
  switch (rounding) {
    case RoundingClass::kHeadcount: {
      std::string s = FormatFixed(shown, 6);
      while (!s.empty() && s.back() == '0') s.pop_back();
      if (!s.empty() && s.back() == '.') s.pop_back();
      return s;
    }
    case RoundingClass::kRatio2:
    case RoundingClass::kPercent2:
      return FormatFixed(shown, 2);
    case RoundingClass::kRatio3:
    case RoundingClass::kPercent3:
      return FormatFixed(shown, 3);
    case RoundingClass::kPercent0:
      return FormatFixed(shown, 0);
  }
  return FormatFixed(shown, 2);
}

std::string RenderTable(const RenderedTable &table, OutputFormat format) {
  std::string out;
  if (format == OutputFormat::kCsv) {
    out += CsvLine(table.headers);
    for (const auto &row : table.rows) {
      std::vector<std::string> fields;
      fields.reserve(row.size());
      for (const Cell &cell : row) {
        switch (cell.kind) {
          case Cell::Kind::kText: fields.push_back(cell.text); break;
          case Cell::Kind::kInteger:
            fields.push_back(std::to_string(cell.integer));
            break;
          case Cell::Kind::kNumber:
            fields.push_back(FormatNumber(cell.number, cell.rounding));
            break;
          case Cell::Kind::kNa: fields.push_back("NA"); break;
        }
      }
      out += CsvLine(fields);
    }
    return out;
  }
  for (const auto &row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (size_t i = 0; i < row.size() && i < table.headers.size(); ++i) {
      const Cell &cell = row[i];
      auto &slot = obj[table.headers[i]];
      switch (cell.kind) {
        case Cell::Kind::kText: slot = cell.text; break;
        case Cell::Kind::kInteger: slot = cell.integer; break;
        case Cell::Kind::kNumber: {
          double shown = DisplayValue(cell.number, cell.rounding);
          slot = shown == 0.0 ? 0.0 : shown;
          break;
        }
        case Cell::Kind::kNa: slot = "NA"; break;
      }
    }
    out += obj.dump();
    out += '\n';
  }
  return out;
}

RenderedTable RegionalSummaryTable(const std::vector<RegionalSummary> &rows) {
  RenderedTable t;
  t.name = "table1_regional";
  t.headers = {"region",          "supply_intra",  "supply_extra",
               "supply_national", "demand_intra",  "demand_extra",
               "demand_national", "net_difference", "market_share"};
  for (const RegionalSummary &r : rows) {
    t.rows.push_back({Cell::Text(r.region), Cell::Integer(r.supply_intra),
                      Cell::Integer(r.supply_extra),
                      Cell::Integer(r.supply_national),
                      Cell::Integer(r.demand_intra),
                      Cell::Integer(r.demand_extra),
                      Cell::Integer(r.demand_national),
                      Cell::Integer(r.net_difference),
                      Cell::Optional(r.market_share, RoundingClass::kPercent0)});
  }
  return t;
}

RenderedTable CorrespondenceTable(const SectorIndicators &sector) {
  RenderedTable t;
  t.name = "table2_" + sector.sds;
  t.headers = {"region",  "scientists",           "national_demand",
               "surplus", "demand_per_scientist", "demand_per_scientist_rel"};
  for (const SectorCorrespondenceRow &r : sector.correspondence) {
    t.rows.push_back(
        {Cell::Text(r.region),
         Cell::Number(r.scientists, RoundingClass::kHeadcount),
         Cell::Integer(r.national_demand),
         Cell::Number(r.surplus, RoundingClass::kHeadcount),
         Cell::Optional(r.demand_per_scientist, RoundingClass::kRatio2),
         Cell::Optional(r.demand_per_scientist_rel, RoundingClass::kRatio2)});
  }
  return t;
}

RenderedTable FlowsTable(const SectorIndicators &sector) {
  RenderedTable t;
  t.name = "table3_" + sector.sds;
  t.headers = {"region",
               "national_demand",
               "national_supply",
               "national_supply_per_scientist",
               "national_supply_per_scientist_rel",
               "intra_supply",
               "intra_supply_per_scientist",
               "intra_supply_per_scientist_rel",
               "market_share",
               "market_share_per_scientist",
               "intra_over_national_supply"};
  using R = RoundingClass;
  for (const SectorFlowsRow &r : sector.flows) {
    t.rows.push_back(
        {Cell::Text(r.region), Cell::Integer(r.national_demand),
         Cell::Integer(r.national_supply),
         Cell::Optional(r.national_supply_per_scientist, R::kRatio2),
         Cell::Optional(r.national_supply_per_scientist_rel, R::kRatio2),
         Cell::Integer(r.intra_supply),
         Cell::Optional(r.intra_supply_per_scientist, R::kRatio2),
         Cell::Optional(r.intra_supply_per_scientist_rel, R::kRatio2),
         Cell::Optional(r.market_share, R::kPercent2),
         Cell::Optional(r.market_share_per_scientist, R::kPercent2),
         Cell::Optional(r.intra_over_national_supply, R::kPercent2)});
  }
  return t;
}

RenderedTable RegionStatsTable(const RegionSectorStats &s) {
  RenderedTable t;
  t.name = "table4_" + s.region;
  t.headers = {"region", "observations", "mean",    "standard_error",
               "median", "minimum",      "maximum", "zero_demand_sds"};
  using R = RoundingClass;
  t.rows.push_back({Cell::Text(s.region),
                    Cell::Integer(static_cast<long long>(s.observations)),
                    Cell::Optional(s.mean, R::kRatio3),
                    Cell::Optional(s.standard_error, R::kRatio3),
                    Cell::Optional(s.median, R::kRatio3),
                    Cell::Optional(s.minimum, R::kRatio3),
                    Cell::Optional(s.maximum, R::kRatio3),
                    Cell::Integer(static_cast<long long>(s.zero_demand_sds))});
  return t;
}

RenderedTable AggregateTable(const std::vector<AggregateRow> &rows) {
  RenderedTable t;
  t.name = "table5_aggregate";
  t.headers = {"region"};
  for (size_t k = 0; k < kAggregateIndicatorCount; ++k) {
    std::string name(AggregateIndicatorName(static_cast<AggregateIndicator>(k)));
    t.headers.push_back(name);
    t.headers.push_back(name + "_rank");
  }
  for (const AggregateRow &r : rows) {
    std::vector<Cell> cells = {Cell::Text(r.region)};
    for (size_t k = 0; k < kAggregateIndicatorCount; ++k) {
      auto rounding = static_cast<AggregateIndicator>(k) ==
                              AggregateIndicator::kMarketSharePerScientist
                          ? RoundingClass::kPercent3
                          : RoundingClass::kRatio3;
      cells.push_back(Cell::Optional(r.values[k], rounding));
      cells.push_back(Cell::Rank(r.ranks[k]));
    }
    t.rows.push_back(std::move(cells));
  }
  return t;
}

RenderedTable DeltaTable(const std::vector<SnapshotDelta> &deltas) {
  RenderedTable t;
  t.name = "diff_deltas";
  t.headers = {"region", "sds", "metric", "t0", "t1", "delta", "flag"};
  for (const SnapshotDelta &d : deltas) {
    for (size_t k = 0; k < kDiffMetricCount; ++k) {
      const auto metric = static_cast<DiffMetric>(k);
      RoundingClass rounding = RoundingClass::kRatio2;
      if (metric == DiffMetric::kSurplus) rounding = RoundingClass::kHeadcount;
      if (metric == DiffMetric::kMarketShare ||
          metric == DiffMetric::kIntraOverNationalSupply) {
        rounding = RoundingClass::kPercent2;
      }
      const DeltaCell &c = d.cells[k];
      t.rows.push_back({Cell::Text(d.region), Cell::Text(d.sds),
                        Cell::Text(std::string(DiffMetricName(metric))),
                        Cell::Optional(c.t0, rounding),
                        Cell::Optional(c.t1, rounding),
                        Cell::Optional(c.delta, rounding),
                        Cell::Text(std::string(DeltaFlagName(c.flag)))});
    }
  }
  return t;
}

namespace {

std::string XmlEscape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::string EmitQuadrantSvg(const std::vector<QuadrantPosition> &positions,
                            const std::string &sds,
                            const std::vector<std::string> &regions,
                            double threshold) {
  if (positions.empty()) {
    throw Error(ErrorKind::kData, "no positions to plot for " + sds);
  }
  constexpr double kWidth = 640, kHeight = 480;
  constexpr double kLeft = 70, kRight = 30, kTop = 40, kBottom = 60;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  double lo = 0.0, hi = 0.0;
  for (const QuadrantPosition &p : positions) {
    lo = std::min(lo, p.surplus);
    hi = std::max(hi, p.surplus);
  }
  double pad = (hi - lo) * 0.1;
  if (pad == 0.0) pad = 1.0;
  lo -= pad;
  hi += pad;
  auto x_of = [&](double surplus) {
    return kLeft + (surplus - lo) / (hi - lo) * plot_w;
  };
  auto y_of = [&](double share) { return kTop + (1.0 - share) * plot_h; };
  auto f = [](double v) { return FormatFixed(v, 2); };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
         "height=\"480\" viewBox=\"0 0 640 480\">\n";
  svg += "<title>Regional positioning for " + XmlEscape(sds) + "</title>\n";
  svg += "<rect x=\"" + f(kLeft) + "\" y=\"" + f(kTop) + "\" width=\"" +
         f(plot_w) + "\" height=\"" + f(plot_h) +
         "\" fill=\"none\" stroke=\"#000000\"/>\n";
  svg += "<line class=\"divider\" x1=\"" + f(x_of(0.0)) + "\" y1=\"" +
         f(kTop) + "\" x2=\"" + f(x_of(0.0)) + "\" y2=\"" + f(kTop + plot_h) +
         "\" stroke=\"#555555\" stroke-dasharray=\"4 3\"/>\n";
  svg += "<line class=\"divider\" x1=\"" + f(kLeft) + "\" y1=\"" +
         f(y_of(threshold)) + "\" x2=\"" + f(kLeft + plot_w) + "\" y2=\"" +
         f(y_of(threshold)) + "\" stroke=\"#555555\" stroke-dasharray=\"4 3\"/>\n";
  // Quadrant names in the corners of the plot area.
  svg += "<text x=\"" + f(kLeft + plot_w - 6) + "\" y=\"" + f(kTop + 14) +
         "\" text-anchor=\"end\" font-size=\"12\">II</text>\n";
  svg += "<text x=\"" + f(kLeft + 6) + "\" y=\"" + f(kTop + 14) +
         "\" font-size=\"12\">I</text>\n";
  svg += "<text x=\"" + f(kLeft + 6) + "\" y=\"" + f(kTop + plot_h - 6) +
         "\" font-size=\"12\">IV</text>\n";
  svg += "<text x=\"" + f(kLeft + plot_w - 6) + "\" y=\"" +
         f(kTop + plot_h - 6) +
         "\" text-anchor=\"end\" font-size=\"12\">III</text>\n";
  svg += "<text x=\"" + f(kLeft + plot_w / 2) + "\" y=\"" +
         f(kHeight - 20) +
         "\" text-anchor=\"middle\" font-size=\"13\">Degree of correspondence "
         "(surplus)</text>\n";
  svg += "<text x=\"20\" y=\"" + f(kTop + plot_h / 2) +
         "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 "
         "20 " +
         f(kTop + plot_h / 2) + ")\">Regional market share (%)</text>\n";
  svg += "<text x=\"" + f(kLeft) + "\" y=\"" + f(kTop + plot_h + 16) +
         "\" font-size=\"11\">" + f(lo) + "</text>\n";
  svg += "<text x=\"" + f(kLeft + plot_w) + "\" y=\"" +
         f(kTop + plot_h + 16) + "\" text-anchor=\"end\" font-size=\"11\">" +
         f(hi) + "</text>\n";
  svg += "<text x=\"" + f(kLeft - 6) + "\" y=\"" + f(y_of(1.0) + 4) +
         "\" text-anchor=\"end\" font-size=\"11\">100</text>\n";
  svg += "<text x=\"" + f(kLeft - 6) + "\" y=\"" + f(y_of(0.0) + 4) +
         "\" text-anchor=\"end\" font-size=\"11\">0</text>\n";

  for (const QuadrantPosition &p : positions) {
    auto it = std::find(regions.begin(), regions.end(), p.region);
    std::string id = it == regions.end()
                         ? "?"
                         : std::to_string(it - regions.begin() + 1);
    const double cx = x_of(p.surplus), cy = y_of(p.market_share);
    svg += "<g class=\"point\" data-quadrant=\"" +
           std::string(QuadrantName(p.quadrant)) + "\">";
    svg += "<title>" + XmlEscape(p.region) + "</title>";
    svg += "<circle cx=\"" + f(cx) + "\" cy=\"" + f(cy) +
           "\" r=\"4\" fill=\"#1f4e79\"/>";
    svg += "<text x=\"" + f(cx + 6) + "\" y=\"" + f(cy - 6) +
           "\" font-size=\"11\">" + id + "</text>";
    svg += "</g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace bibreg
