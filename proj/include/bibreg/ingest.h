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

#ifndef BIBREG_INGEST_H_
#define BIBREG_INGEST_H_

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "bibreg/error.h"
#include "bibreg/model.h"

namespace bibreg {

struct PublicationLoadStats {
  size_t records_read = 0;
  size_t records_in_window = 0;
  size_t records_outside_window = 0;
};

// Parses line-delimited publication records. Every record is validated; only
// those with a year inside `window` are returned, in input order. Problems
// are recorded in `diagnostics` with "source:line" locations.
std::vector<PublicationRecord> ParsePublications(
    std::istream &in, const std::string &source, const YearWindow &window,
    Diagnostics *diagnostics, PublicationLoadStats *stats = nullptr);

std::vector<PublicationRecord> LoadPublications(
    const std::string &path, const YearWindow &window,
    Diagnostics *diagnostics, PublicationLoadStats *stats = nullptr);

// Throwing variant: raises the first recorded error.
std::vector<PublicationRecord> LoadPublications(const std::string &path,
                                                const YearWindow &window);

// One JSON object, no trailing newline. Parsing the result yields `record`.
std::string SerializePublication(const PublicationRecord &record);
void WritePublications(std::ostream &out,
                       const std::vector<PublicationRecord> &records);

std::vector<Organization> ParseOrganizations(
    std::istream &in, const std::string &source,
    const std::vector<std::string> &regions, Diagnostics *diagnostics);
SectorTaxonomy ParseTaxonomy(std::istream &in, const std::string &source,
                             Diagnostics *diagnostics);
std::vector<ScientistRosterEntry> ParseRoster(
    std::istream &in, const std::string &source,
    const OrganizationIndex &organizations, const SectorTaxonomy &taxonomy,
    Diagnostics *diagnostics);

Registries LoadRegistries(const std::string &org_path,
                          const std::string &roster_path,
                          const std::string &taxonomy_path,
                          const std::vector<std::string> &regions,
                          Diagnostics *diagnostics);

Registries LoadRegistries(const std::string &org_path,
                          const std::string &roster_path,
                          const std::string &taxonomy_path,
                          const std::vector<std::string> &regions);

// Keeps publications with at least one attribution to an SDS of `taxonomy`
// and at least one affiliation resolved to an enterprise. Order preserving
// and idempotent.
std::vector<ResolvedPublication> FilterHardSciences(
    const std::vector<ResolvedPublication> &publications,
    const OrganizationIndex &organizations, const SectorTaxonomy &taxonomy);

bool PassesHardScienceFilter(const ResolvedPublication &publication,
                             const OrganizationIndex &organizations,
                             const SectorTaxonomy &taxonomy);

}  // namespace bibreg

#endif  // BIBREG_INGEST_H_
