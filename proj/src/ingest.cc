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

#include "bibreg/ingest.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <unordered_set>

#include "bibreg/csv.h"
#include "bibreg/text.h"
#include "json.hpp"

namespace bibreg {
namespace {

using json = nlohmann::json;

std::string Where(const std::string &source, size_t line) {
  return source + ":" + std::to_string(line);
}

std::ifstream OpenOrThrow(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path);
  return in;
}

bool ParseInt(std::string_view text, int *value) {
  text = Trim(text);
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   *value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

bool ParseDouble(std::string_view text, double *value) {
  text = Trim(text);
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   *value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

// Reads the header and checks it against the expected column names.
bool ReadHeader(CsvReader &reader, const std::vector<std::string> &expected,
                const std::string &source, Diagnostics *diagnostics) {
  std::vector<std::string> fields;
  size_t line = 0;
  if (!reader.Next(&fields, &line)) {
    diagnostics->Fail(ErrorKind::kParse, source, "missing header row");
    return false;
  }
  for (std::string &f : fields) f = std::string(Trim(f));
  if (!fields.empty() && fields[0].rfind("\xEF\xBB\xBF", 0) == 0) {
    fields[0].erase(0, 3);
  }
  if (fields != expected) {
    std::string want;
    for (const std::string &e : expected) want += (want.empty() ? "" : ",") + e;
    diagnostics->Fail(ErrorKind::kParse, Where(source, line),
                      "header must be `" + want + "`");
    return false;
  }
  return true;
}

// Returns false (and records a parse error) on a malformed publication line.
bool DecodePublication(const json &obj, PublicationRecord *record,
                       std::string *problem) {
  if (!obj.is_object()) {
    *problem = "record is not a JSON object";
    return false;
  }
  auto need = [&](const char *key) -> const json * {
    auto it = obj.find(key);
    if (it == obj.end()) {
      *problem = std::string("missing key `") + key + "`";
      return nullptr;
    }
    return &*it;
  };
  const json *id = need("pub_id");
  if (!id) return false;
  const json *year = need("year");
  if (!year) return false;
  const json *authors = need("authors");
  if (!authors) return false;
  const json *affiliations = need("affiliations");
  if (!affiliations) return false;

  if (!id->is_string()) {
    *problem = "`pub_id` must be a string";
    return false;
  }
  if (!year->is_number_integer()) {
    *problem = "`year` must be an integer";
    return false;
  }
  if (!authors->is_array() || !affiliations->is_array()) {
    *problem = "`authors` and `affiliations` must be arrays";
    return false;
  }
  record->pub_id = id->get<std::string>();
  record->year = year->get<int>();
  for (const json &a : *authors) {
    if (!a.is_object() || !a.contains("surname") || !a.contains("initials") ||
        !a["surname"].is_string() || !a["initials"].is_string()) {
      *problem = "author entries need string `surname` and `initials`";
      return false;
    }
    record->authors.push_back(
        {a["surname"].get<std::string>(), a["initials"].get<std::string>()});
  }
  for (const json &f : *affiliations) {
    if (!f.is_string()) {
      *problem = "affiliations must be strings";
      return false;
    }
    record->affiliations.push_back(f.get<std::string>());
  }
  return true;
}

}  // namespace

std::vector<PublicationRecord> ParsePublications(
    std::istream &in, const std::string &source, const YearWindow &window,
    Diagnostics *diagnostics, PublicationLoadStats *stats) {
  std::vector<PublicationRecord> kept;
  std::unordered_set<std::string> seen;
  PublicationLoadStats local;
  std::string text;
  size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (Trim(text).empty()) continue;
    const std::string where = Where(source, line);
    json obj = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (obj.is_discarded()) {
      diagnostics->Fail(ErrorKind::kParse, where, "malformed JSON record");
      continue;
    }
    PublicationRecord record;
    std::string problem;
    if (!DecodePublication(obj, &record, &problem)) {
      diagnostics->Fail(ErrorKind::kParse, where, problem);
      continue;
    }
    ++local.records_read;

    bool valid = true;
    if (record.pub_id.empty()) {
      diagnostics->Fail(ErrorKind::kValidation, where, "empty pub_id");
      valid = false;
    } else if (!seen.insert(record.pub_id).second) {
      diagnostics->Fail(ErrorKind::kValidation, where,
                        "duplicate pub_id \"" + record.pub_id + "\"");
      valid = false;
    }
    if (record.authors.empty()) {
      diagnostics->Fail(ErrorKind::kValidation, where,
                        "publication \"" + record.pub_id + "\" has no authors");
      valid = false;
    }
    if (record.affiliations.empty()) {
      diagnostics->Fail(
          ErrorKind::kValidation, where,
          "publication \"" + record.pub_id + "\" has no affiliations");
      valid = false;
    }
    for (AuthorName &author : record.authors) {
      std::string raw_initials = author.initials;
      author.surname = NormalizeName(author.surname);
      author.initials = NormalizeInitials(author.initials);
      if (author.surname.empty()) {
        diagnostics->Fail(ErrorKind::kValidation, where,
                          "author with empty surname");
        valid = false;
      }
      if (author.initials.empty() || author.initials.size() > 3) {
        diagnostics->Fail(ErrorKind::kValidation, where,
                          "invalid initials \"" + raw_initials + "\"");
        valid = false;
      }
    }
    if (!valid) continue;
    if (!window.Contains(record.year)) {
      ++local.records_outside_window;
      continue;
    }
    ++local.records_in_window;
    kept.push_back(std::move(record));
  }
  if (stats) *stats = local;
  return kept;
}

std::vector<PublicationRecord> LoadPublications(
    const std::string &path, const YearWindow &window,
    Diagnostics *diagnostics, PublicationLoadStats *stats) {
  std::ifstream in = OpenOrThrow(path);
  return ParsePublications(in, path, window, diagnostics, stats);
}

std::vector<PublicationRecord> LoadPublications(const std::string &path,
                                                const YearWindow &window) {
  Diagnostics diagnostics;
  auto records = LoadPublications(path, window, &diagnostics);
  diagnostics.ThrowIfFailed();
  return records;
}

std::string SerializePublication(const PublicationRecord &record) {
  json authors = json::array();
  for (const AuthorName &a : record.authors) {
    authors.push_back({{"surname", a.surname}, {"initials", a.initials}});
  }
  json obj = {{"pub_id", record.pub_id},
              {"year", record.year},
              {"authors", std::move(authors)},
              {"affiliations", record.affiliations}};
  return obj.dump();
}

void WritePublications(std::ostream &out,
                       const std::vector<PublicationRecord> &records) {
  for (const PublicationRecord &r : records) {
    out << SerializePublication(r) << '\n';
  }
}

std::vector<Organization> ParseOrganizations(
    std::istream &in, const std::string &source,
    const std::vector<std::string> &regions, Diagnostics *diagnostics) {
  std::vector<Organization> out;
  CsvReader reader(in);
  if (!ReadHeader(reader,
                  {"org_id", "kind", "region", "canonical_name", "aliases"},
                  source, diagnostics)) {
    return out;
  }
  std::set<std::string> seen;
  std::vector<std::string> fields;
  size_t line = 0;
  while (reader.Next(&fields, &line)) {
    const std::string where = Where(source, line);
    if (fields.size() != 5) {
      diagnostics->Fail(ErrorKind::kParse, where,
                        "expected 5 columns, found " +
                            std::to_string(fields.size()));
      continue;
    }
    Organization org;
    org.org_id = std::string(Trim(fields[0]));
    std::string kind(Trim(fields[1]));
    org.region = std::string(Trim(fields[2]));
    org.canonical_name = std::string(Trim(fields[3]));
    bool valid = true;
    if (kind == "university") {
      org.kind = OrgKind::kUniversity;
    } else if (kind == "enterprise") {
      org.kind = OrgKind::kEnterprise;
    } else {
      diagnostics->Fail(ErrorKind::kValidation, where,
                        "unknown organization kind \"" + kind + "\"");
      valid = false;
    }
    if (org.org_id.empty()) {
      diagnostics->Fail(ErrorKind::kValidation, where, "empty org_id");
      valid = false;
    } else if (!seen.insert(org.org_id).second) {
      diagnostics->Fail(ErrorKind::kValidation, where,
                        "duplicate org_id \"" + org.org_id + "\"");
      valid = false;
    }
    if (std::find(regions.begin(), regions.end(), org.region) ==
        regions.end()) {
      diagnostics->Fail(ErrorKind::kValidation, where,
                        "region \"" + org.region + "\" of \"" + org.org_id +
                            "\" is not in the configured region set");
      valid = false;
    }
    if (org.canonical_name.empty()) {
      diagnostics->Fail(ErrorKind::kValidation, where,
                        "empty canonical_name for \"" + org.org_id + "\"");
      valid = false;
    }
    org.aliases.push_back(org.canonical_name);
    if (!Trim(fields[4]).empty()) {
      for (const std::string &alias : Split(fields[4], '|')) {
        std::string a(Trim(alias));
        if (a.empty()) continue;
        if (std::find(org.aliases.begin(), org.aliases.end(), a) ==
            org.aliases.end()) {
          org.aliases.push_back(std::move(a));
        }
      }
    }
    if (valid) out.push_back(std::move(org));
  }
  return out;
}

SectorTaxonomy ParseTaxonomy(std::istream &in, const std::string &source,
                             Diagnostics *diagnostics) {
  SectorTaxonomy taxonomy;
  CsvReader reader(in);
  if (!ReadHeader(reader, {"sds", "uda"}, source, diagnostics)) return taxonomy;
  std::vector<std::string> fields;
  size_t line = 0;
  while (reader.Next(&fields, &line)) {
    const std::string where = Where(source, line);
    if (fields.size() != 2) {
      diagnostics->Fail(ErrorKind::kParse, where,
                        "expected 2 columns, found " +
                            std::to_string(fields.size()));
      continue;
    }
    std::string sds(Trim(fields[0]));
    std::string uda(Trim(fields[1]));
    if (sds.empty() || uda.empty()) {
      diagnostics->Fail(ErrorKind::kValidation, where, "empty sds or uda");
      continue;
    }
    if (!taxonomy.Add(sds, uda)) {
      diagnostics->Fail(ErrorKind::kValidation, where,
                        "SDS \"" + sds + "\" listed under UDAs \"" +
                            *taxonomy.UdaOf(sds) + "\" and \"" + uda + "\"");
    }
  }
  return taxonomy;
}

std::vector<ScientistRosterEntry> ParseRoster(
    std::istream &in, const std::string &source,
    const OrganizationIndex &organizations, const SectorTaxonomy &taxonomy,
    Diagnostics *diagnostics) {
  std::vector<ScientistRosterEntry> out;
  CsvReader reader(in);
  if (!ReadHeader(reader,
                  {"surname", "initials", "university_id", "sds", "uda",
                   "active_years", "headcount_weight"},
                  source, diagnostics)) {
    return out;
  }
  std::vector<std::string> fields;
  size_t line = 0;
  while (reader.Next(&fields, &line)) {
    const std::string where = Where(source, line);
    if (fields.size() != 7) {
      diagnostics->Fail(ErrorKind::kParse, where,
                        "expected 7 columns, found " +
                            std::to_string(fields.size()));
      continue;
    }
    ScientistRosterEntry entry;
    entry.surname = NormalizeName(fields[0]);
    entry.initials = NormalizeInitials(fields[1]);
    entry.university_id = std::string(Trim(fields[2]));
    entry.sds = std::string(Trim(fields[3]));
    entry.uda = std::string(Trim(fields[4]));
    bool valid = true;
    if (entry.surname.empty()) {
      diagnostics->Fail(ErrorKind::kValidation, where, "empty surname");
      valid = false;
    }
    if (entry.initials.empty() || entry.initials.size() > 3) {
      diagnostics->Fail(ErrorKind::kValidation, where,
                        "invalid initials \"" + fields[1] + "\"");
      valid = false;
    }
    const Organization *university = organizations.Find(entry.university_id);
    if (university == nullptr) {
      diagnostics->Fail(ErrorKind::kReferential, where,
                        "unknown university_id \"" + entry.university_id +
                            "\"");
      valid = false;
    } else if (university->kind != OrgKind::kUniversity) {
      diagnostics->Fail(ErrorKind::kReferential, where,
                        "university_id \"" + entry.university_id +
                            "\" refers to an enterprise");
      valid = false;
    }
    const std::string *parent = taxonomy.UdaOf(entry.sds);
    if (parent == nullptr) {
      diagnostics->Fail(ErrorKind::kReferential, where,
                        "SDS \"" + entry.sds + "\" is not in the taxonomy");
      valid = false;
    } else if (*parent != entry.uda) {
      diagnostics->Fail(ErrorKind::kValidation, where,
                        "SDS \"" + entry.sds + "\" belongs to UDA \"" +
                            *parent + "\", not \"" + entry.uda + "\"");
      valid = false;
    }
    if (!Trim(fields[5]).empty()) {
      for (const std::string &y : Split(fields[5], '|')) {
        int year = 0;
        if (!ParseInt(y, &year)) {
          diagnostics->Fail(ErrorKind::kParse, where,
                            "bad active year \"" + y + "\"");
          valid = false;
          continue;
        }
        entry.active_years.push_back(year);
      }
    }
    std::sort(entry.active_years.begin(), entry.active_years.end());
    entry.active_years.erase(
        std::unique(entry.active_years.begin(), entry.active_years.end()),
        entry.active_years.end());
    if (!ParseDouble(fields[6], &entry.headcount_weight)) {
      diagnostics->Fail(ErrorKind::kParse, where,
                        "bad headcount_weight \"" + fields[6] + "\"");
      valid = false;
    } else if (!(entry.headcount_weight > 0.0)) {
      diagnostics->Fail(ErrorKind::kValidation, where,
                        "headcount_weight must be positive");
      valid = false;
    }
    if (valid) out.push_back(std::move(entry));
  }
  return out;
}

Registries LoadRegistries(const std::string &org_path,
                          const std::string &roster_path,
                          const std::string &taxonomy_path,
                          const std::vector<std::string> &regions,
                          Diagnostics *diagnostics) {
  Registries registries;
  {
    std::ifstream in = OpenOrThrow(taxonomy_path);
    registries.taxonomy = ParseTaxonomy(in, taxonomy_path, diagnostics);
  }
  {
    std::ifstream in = OpenOrThrow(org_path);
    registries.organizations = OrganizationIndex(
        ParseOrganizations(in, org_path, regions, diagnostics));
  }
  {
    std::ifstream in = OpenOrThrow(roster_path);
    registries.roster =
        ParseRoster(in, roster_path, registries.organizations,
                    registries.taxonomy, diagnostics);
  }
  return registries;
}

Registries LoadRegistries(const std::string &org_path,
                          const std::string &roster_path,
                          const std::string &taxonomy_path,
                          const std::vector<std::string> &regions) {
  Diagnostics diagnostics;
  Registries registries = LoadRegistries(org_path, roster_path, taxonomy_path,
                                         regions, &diagnostics);
  diagnostics.ThrowIfFailed();
  return registries;
}

bool PassesHardScienceFilter(const ResolvedPublication &publication,
                             const OrganizationIndex &organizations,
                             const SectorTaxonomy &taxonomy) {
  bool has_sector = std::any_of(
      publication.attributions.begin(), publication.attributions.end(),
      [&](const AuthorAttribution &a) {
        return a.sds && taxonomy.Contains(*a.sds);
      });
  if (!has_sector) return false;
  return std::any_of(
      publication.affiliations.begin(), publication.affiliations.end(),
      [&](const AffiliationResolution &r) {
        if (!r.org_id) return false;
        const Organization *org = organizations.Find(*r.org_id);
        return org && org->kind == OrgKind::kEnterprise;
      });
}

std::vector<ResolvedPublication> FilterHardSciences(
    const std::vector<ResolvedPublication> &publications,
    const OrganizationIndex &organizations, const SectorTaxonomy &taxonomy) {
  std::vector<ResolvedPublication> out;
  for (const ResolvedPublication &p : publications) {
    if (PassesHardScienceFilter(p, organizations, taxonomy)) out.push_back(p);
  }
  return out;
}

}  // namespace bibreg
