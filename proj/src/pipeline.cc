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

#include "bibreg/pipeline.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "bibreg/csv.h"
#include "bibreg/report.h"
#include "bibreg/resolve.h"
#include "bibreg/text.h"
#include "json.hpp"

namespace bibreg {
namespace {

namespace fs = std::filesystem;

constexpr size_t kMaxPrintedDiagnostics = 20;

std::vector<std::string> DisplayRegions(std::vector<std::string> regions) {
  std::sort(regions.begin(), regions.end());
  regions.erase(std::unique(regions.begin(), regions.end()), regions.end());
  return regions;
}

void WriteFile(const fs::path &dir, const std::string &name,
               const std::string &content) {
  fs::create_directories(dir);
  std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + (dir / name).string());
  out << content;
  if (!out) throw Error(ErrorKind::kIo, "write failed for " + (dir / name).string());
}

void WriteTable(const fs::path &dir, const std::string &stem,
                const RenderedTable &table) {
  WriteFile(dir, stem + ".csv", RenderTable(table, OutputFormat::kCsv));
  WriteFile(dir, stem + ".jsonl", RenderTable(table, OutputFormat::kJsonl));
}

void PrintDiagnostics(const Diagnostics &diagnostics, std::ostream &err) {
  size_t printed = 0;
  // Hard errors first so that they are never crowded out by warnings.
  for (Severity severity : {Severity::kError, Severity::kWarning}) {
    for (const Diagnostic &d : diagnostics.entries()) {
      if (d.severity != severity) continue;
      if (printed == kMaxPrintedDiagnostics) break;
      err << d.ToString() << '\n';
      ++printed;
    }
  }
  if (diagnostics.entries().size() > printed) {
    err << "... " << diagnostics.entries().size() - printed
        << " more diagnostics not shown\n";
  }
}

int ReportFailure(const Error &e, std::ostream &err) {
  err << "bibreg: " << ErrorKindName(e.kind()) << ": " << e.what() << '\n';
  return 1;
}

void WriteSectorFiles(const fs::path &dir, const SectorIndicators &sector,
                      const std::vector<std::string> &regions,
                      double threshold) {
  const std::string stem = FileStem(sector.sds);
  WriteTable(dir, "table2_" + stem, CorrespondenceTable(sector));
  WriteTable(dir, "table3_" + stem, FlowsTable(sector));
  auto positions = PositionRegions(sector, threshold);
  if (!positions.empty()) {
    WriteFile(dir, "fig1_" + stem + ".svg",
              EmitQuadrantSvg(positions, sector.sds, regions, threshold));
  }
}

}  // namespace

std::string LoadReport::ToString() const {
  std::ostringstream out;
  out << "records_read = " << publications.records_read << '\n'
      << "records_in_window = " << publications.records_in_window << '\n'
      << "records_outside_window = " << publications.records_outside_window
      << '\n'
      << "dropped_unresolvable = " << dropped_unresolvable << '\n'
      << "retained_after_filter = " << retained_after_filter << '\n'
      << "ue_events = " << ue_events << '\n'
      << "sds_events = " << sds_events << '\n'
      << "warnings = " << warnings << '\n'
      << "errors = " << errors << '\n';
  return out.str();
}

ValidationResult RunValidation(const RunConfig &config) {
  ValidationResult result;
  result.regions = DisplayRegions(config.regions);
  Diagnostics &diagnostics = result.diagnostics;

  result.registries =
      LoadRegistries(config.organizations, config.roster, config.taxonomy,
                     config.regions, &diagnostics);
  std::vector<PublicationRecord> publications = LoadPublications(
      config.publications, config.window, &diagnostics,
      &result.report.publications);
  if (result.report.publications.records_in_window == 0) {
    diagnostics.Warn(ErrorKind::kData, config.publications,
                     "no publications inside window " +
                         std::to_string(config.window.first) + ":" +
                         std::to_string(config.window.last));
  }

  AffiliationResolver resolver(result.registries.organizations);
  for (const std::string &w : resolver.warnings()) {
    diagnostics.Warn(ErrorKind::kValidation, config.organizations, w);
  }
  RosterIndex roster(result.registries.roster);
  ResolutionContext context{result.registries.organizations, resolver, roster,
                            config.ambiguity};
  std::vector<ResolvedPublication> resolved =
      ResolveCorpus(publications, context);

  for (ResolvedPublication &p : resolved) {
    bool any = std::any_of(p.affiliations.begin(), p.affiliations.end(),
                           [](const AffiliationResolution &r) {
                             return r.org_id.has_value();
                           });
    if (!any) {
      diagnostics.Warn(ErrorKind::kData, config.publications,
                       "publication \"" + p.record.pub_id +
                           "\" has no resolvable affiliation; dropped");
      ++result.report.dropped_unresolvable;
      continue;
    }
    result.resolved.push_back(std::move(p));
  }
  result.report.errors = diagnostics.error_count();
  result.report.warnings = diagnostics.warning_count();
  return result;
}

const SectorIndicators *Analysis::FindSector(const std::string &sds) const {
  for (const SectorIndicators &s : sectors) {
    if (s.sds == sds) return &s;
  }
  return nullptr;
}

std::vector<const SectorIndicators *> Analysis::ActiveSectors() const {
  std::vector<const SectorIndicators *> out;
  for (const SectorIndicators &s : sectors) {
    if (s.events > 0) out.push_back(&s);
  }
  return out;
}

Analysis RunAnalysis(const RunConfig &config) {
  ValidateConfig(config);
  ValidationResult validation = RunValidation(config);
  validation.diagnostics.ThrowIfFailed();

  Analysis analysis;
  analysis.regions = validation.regions;
  analysis.report = validation.report;
  analysis.diagnostics = std::move(validation.diagnostics);
  const Registries &registries = validation.registries;
  analysis.taxonomy = registries.taxonomy.RestrictedTo(config.udas);

  analysis.retained = FilterHardSciences(
      validation.resolved, registries.organizations, analysis.taxonomy);
  analysis.events = DeriveEvents(analysis.retained, registries.organizations,
                                 analysis.taxonomy, config.sds_region_split);
  analysis.totals = ComputeCorpusTotals(analysis.events);
  analysis.regional =
      ComputeRegionalSummary(analysis.events.ue, analysis.regions);

  HeadcountTable headcounts(registries.roster, registries.organizations,
                            analysis.regions);
  SectorRunOptions options;
  options.capacity = config.capacity;
  analysis.sectors =
      ComputeAllSectors(analysis.taxonomy.SdsCodes(), headcounts,
                        analysis.events.sds, analysis.regions, options);

  analysis.weights = ComputeSdsWeights(analysis.events.sds);
  std::vector<SectorIndicatorValues> values;
  for (const SectorIndicators &s : analysis.sectors) {
    if (analysis.weights.count(s.sds)) values.push_back(ExtractIndicatorValues(s));
  }
  analysis.aggregate = AggregateRegions(analysis.regions, values,
                                        analysis.weights, config.aggregation_na);

  analysis.report.retained_after_filter = analysis.retained.size();
  analysis.report.ue_events = analysis.events.ue.size();
  analysis.report.sds_events = analysis.events.sds.size();
  return analysis;
}

int CmdValidate(const RunConfig &config, std::ostream &err) {
  try {
    ValidateConfig(config);
    ValidationResult result = RunValidation(config);
    const fs::path out(config.out_dir);
    WriteFile(out, "resolution_report.csv",
              RenderResolutionReport(result.resolved));
    WriteFile(out, "load_report.txt", result.report.ToString());
    PrintDiagnostics(result.diagnostics, err);
    err << "validate: " << result.report.errors << " errors, "
        << result.report.warnings << " warnings, "
        << result.resolved.size() << " publications resolved\n";
    return result.diagnostics.has_errors() ? 1 : 0;
  } catch (const Error &e) {
    return ReportFailure(e, err);
  }
}

int CmdAnalyze(const RunConfig &config, std::ostream &err) {
  try {
    Analysis analysis = RunAnalysis(config);
    PrintDiagnostics(analysis.diagnostics, err);
    const fs::path out(config.out_dir);

    WriteFile(out, "effective_config.txt", SerializeConfig(config));
    WriteFile(out, "load_report.txt", analysis.report.ToString());
    WriteFile(out, "resolution_report.csv",
              RenderResolutionReport(analysis.retained));
    WriteFile(out, "ue_events.csv", RenderUeEvents(analysis.events.ue));
    WriteFile(out, "sds_events.csv", RenderSdsEvents(analysis.events.sds));
    WriteTable(out, "table1_regional", RegionalSummaryTable(analysis.regional));

    std::string manifest = CsvLine({"sds", "uda", "active", "file_stem"});
    for (const SectorIndicators &s : analysis.sectors) {
      const bool active = s.events > 0;
      manifest += CsvLine({s.sds, *analysis.taxonomy.UdaOf(s.sds),
                           active ? "1" : "0", FileStem(s.sds)});
      if (active) {
        WriteSectorFiles(out, s, analysis.regions,
                         config.quadrant_share_threshold);
      }
    }
    WriteFile(out, "manifest.csv", manifest);

    for (const std::string &region : analysis.regions) {
      RegionSectorStats stats =
          ComputeRegionSectorStats(region, analysis.regions, analysis.sectors);
      WriteTable(out, "table4_" + FileStem(region), RegionStatsTable(stats));
    }
    WriteTable(out, "table5_aggregate", AggregateTable(analysis.aggregate));
    err << "analyze: " << analysis.totals.ue_events
        << " university-enterprise events, " << analysis.totals.sds_events
        << " SDS-enterprise events, " << analysis.ActiveSectors().size()
        << " active sectors\n";
    return 0;
  } catch (const Error &e) {
    return ReportFailure(e, err);
  }
}

int CmdSector(const RunConfig &config, const std::string &sds,
              std::ostream &err) {
  try {
    Analysis analysis = RunAnalysis(config);
    const SectorIndicators *sector = analysis.FindSector(sds);
    if (sector == nullptr) {
      throw Error(ErrorKind::kUsage,
                  "SDS \"" + sds + "\" is not in the analysed taxonomy");
    }
    WriteSectorFiles(config.out_dir, *sector, analysis.regions,
                     config.quadrant_share_threshold);
    return 0;
  } catch (const Error &e) {
    return ReportFailure(e, err);
  }
}

int CmdRegion(const RunConfig &config, const std::string &region,
              std::ostream &err) {
  try {
    Analysis analysis = RunAnalysis(config);
    RegionSectorStats stats =
        ComputeRegionSectorStats(region, analysis.regions, analysis.sectors);
    WriteTable(config.out_dir, "table4_" + FileStem(region),
               RegionStatsTable(stats));
    return 0;
  } catch (const Error &e) {
    return ReportFailure(e, err);
  }
}

namespace {

using json = nlohmann::json;

std::vector<json> ReadJsonl(const fs::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kDiff, "cannot read " + path.string());
  std::vector<json> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (Trim(line).empty()) continue;
    json row = json::parse(line, nullptr, false);
    if (row.is_discarded() || !row.is_object()) {
      throw Error(ErrorKind::kDiff, "malformed row in " + path.string());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Value ReadCell(const json &row, const char *key, double scale,
               const fs::path &path) {
  auto it = row.find(key);
  if (it == row.end()) {
    throw Error(ErrorKind::kDiff,
                std::string("missing column `") + key + "` in " + path.string());
  }
  if (it->is_number()) return it->get<double>() / scale;
  if (it->is_string() && it->get<std::string>() == "NA") return std::nullopt;
  throw Error(ErrorKind::kDiff,
              std::string("bad value for `") + key + "` in " + path.string());
}

}  // namespace

Snapshot LoadSnapshot(const std::string &dir_name) {
  const fs::path dir(dir_name);
  const fs::path manifest_path = dir / "manifest.csv";
  if (!fs::is_regular_file(manifest_path)) {
    throw Error(ErrorKind::kDiff, "incomplete snapshot " + dir_name +
                                      ": missing manifest.csv");
  }
  struct Entry {
    std::string sds;
    std::string stem;
    bool active = false;
  };
  std::vector<Entry> entries;
  {
    std::ifstream in(manifest_path);
    CsvReader reader(in);
    std::vector<std::string> fields;
    size_t line = 0;
    bool header = true;
    while (reader.Next(&fields, &line)) {
      if (header) {
        header = false;
        continue;
      }
      if (fields.size() != 4) {
        throw Error(ErrorKind::kDiff,
                    "malformed manifest line " + std::to_string(line));
      }
      entries.push_back({fields[0], fields[3], fields[2] == "1"});
    }
  }

  std::vector<std::string> required = {"table1_regional.csv",
                                       "table1_regional.jsonl",
                                       "table5_aggregate.csv",
                                       "table5_aggregate.jsonl"};
  for (const Entry &e : entries) {
    if (!e.active) continue;
    for (const char *prefix : {"table2_", "table3_"}) {
      for (const char *ext : {".csv", ".jsonl"}) {
        required.push_back(prefix + e.stem + ext);
      }
    }
  }
  std::string missing;
  for (const std::string &name : required) {
    if (!fs::is_regular_file(dir / name)) {
      missing += (missing.empty() ? "" : ", ") + name;
    }
  }
  if (!missing.empty()) {
    throw Error(ErrorKind::kDiff,
                "incomplete snapshot " + dir_name + ": missing " + missing);
  }

  Snapshot snapshot;
  for (const json &row : ReadJsonl(dir / "table1_regional.jsonl")) {
    snapshot.regions.push_back(row.value("region", ""));
  }
  for (const Entry &e : entries) {
    snapshot.taxonomy.push_back(e.sds);
    if (!e.active) continue;
    const fs::path t2 = dir / ("table2_" + e.stem + ".jsonl");
    const fs::path t3 = dir / ("table3_" + e.stem + ".jsonl");
    auto correspondence = ReadJsonl(t2);
    auto flows = ReadJsonl(t3);
    if (correspondence.size() != snapshot.regions.size() ||
        flows.size() != snapshot.regions.size()) {
      throw Error(ErrorKind::kDiff, "row count mismatch in tables for " + e.sds);
    }
    std::vector<MetricVector> rows(snapshot.regions.size());
    for (size_t r = 0; r < rows.size(); ++r) {
      // Percent columns are stored in display units.
      rows[r] = {ReadCell(correspondence[r], "surplus", 1.0, t2),
                 ReadCell(correspondence[r], "demand_per_scientist", 1.0, t2),
                 ReadCell(flows[r], "market_share", 100.0, t3),
                 ReadCell(flows[r], "intra_over_national_supply", 100.0, t3)};
    }
    snapshot.sectors.emplace(e.sds, std::move(rows));
  }
  return snapshot;
}

int CmdDiff(const std::string &t0_dir, const std::string &t1_dir,
            const std::string &out_dir, std::ostream &err) {
  try {
    Snapshot t0 = LoadSnapshot(t0_dir);
    Snapshot t1 = LoadSnapshot(t1_dir);
    std::vector<SnapshotDelta> deltas = DiffSnapshots(t0, t1);
    WriteTable(out_dir, "diff_deltas", DeltaTable(deltas));
    size_t emergent = 0, vanished = 0;
    for (const SnapshotDelta &d : deltas) {
      for (const DeltaCell &c : d.cells) {
        if (c.flag == DeltaFlag::kEmergent) ++emergent;
        if (c.flag == DeltaFlag::kVanished) ++vanished;
      }
    }
    err << "diff: " << deltas.size() << " region-sector rows, " << emergent
        << " emergent cells, " << vanished << " vanished cells\n";
    return 0;
  } catch (const Error &e) {
    return ReportFailure(e, err);
  }
}

}  // namespace bibreg
