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

#include "bibreg/collab.h"

#include <algorithm>
#include <map>
#include <set>

#include "bibreg/csv.h"
#include "bibreg/error.h"

namespace bibreg {
namespace {

// Distinct organizations of `kind`, ordered by org_id.
std::vector<const Organization *> DistinctOrganizations(
    const ResolvedPublication &publication,
    const OrganizationIndex &organizations, OrgKind kind) {
  std::map<std::string, const Organization *> found;
  for (const AffiliationResolution &r : publication.affiliations) {
    if (!r.org_id) continue;
    const Organization *org = organizations.Find(*r.org_id);
    if (org && org->kind == kind) found.emplace(org->org_id, org);
  }
  std::vector<const Organization *> out;
  out.reserve(found.size());
  for (const auto &entry : found) out.push_back(entry.second);
  return out;
}

}  // namespace

std::vector<UECollaboration> DeriveUeEvents(
    const ResolvedPublication &publication,
    const OrganizationIndex &organizations) {
  auto universities = DistinctOrganizations(publication, organizations,
                                            OrgKind::kUniversity);
  auto enterprises = DistinctOrganizations(publication, organizations,
                                           OrgKind::kEnterprise);
  if (universities.empty() || enterprises.empty()) {
    throw Error(ErrorKind::kContract,
                "publication \"" + publication.record.pub_id +
                    "\" lacks a university or an enterprise affiliation");
  }
  std::vector<UECollaboration> events;
  events.reserve(universities.size() * enterprises.size());
  for (const Organization *u : universities) {
    for (const Organization *e : enterprises) {
      events.push_back({publication.record.pub_id, u->org_id, u->region,
                        e->org_id, e->region, publication.record.year});
    }
  }
  return events;
}

std::vector<SDSCollaboration> DeriveSdsEvents(
    const ResolvedPublication &publication,
    const OrganizationIndex &organizations, const SectorTaxonomy &taxonomy,
    SdsRegionSplit split) {
  // sds -> (supplying region -> lowest attributing university id)
  std::map<std::string, std::map<std::string, std::string>> sectors;
  for (const AuthorAttribution &a : publication.attributions) {
    if (!a.sds || !a.university_id || !taxonomy.Contains(*a.sds)) continue;
    const Organization *u = organizations.Find(*a.university_id);
    if (!u) continue;
    auto &regions = sectors[*a.sds];
    auto [it, inserted] = regions.emplace(u->region, u->org_id);
    if (!inserted && u->org_id < it->second) it->second = u->org_id;
  }
  auto enterprises = DistinctOrganizations(publication, organizations,
                                           OrgKind::kEnterprise);
  if (sectors.empty() || enterprises.empty()) {
    throw Error(ErrorKind::kContract,
                "publication \"" + publication.record.pub_id +
                    "\" lacks a sector attribution or an enterprise");
  }

  std::vector<SDSCollaboration> events;
  for (const auto &[sds, regions] : sectors) {
    const std::string &uda = *taxonomy.UdaOf(sds);
    std::vector<std::string> supply_regions;
    if (split == SdsRegionSplit::kPerRegion) {
      for (const auto &entry : regions) supply_regions.push_back(entry.first);
    } else {
      // Region of the lowest attributing university id.
      auto best = std::min_element(
          regions.begin(), regions.end(),
          [](const auto &a, const auto &b) { return a.second < b.second; });
      supply_regions.push_back(best->first);
    }
    for (const std::string &region : supply_regions) {
      for (const Organization *e : enterprises) {
        events.push_back({publication.record.pub_id, sds, uda, region,
                          e->org_id, e->region, publication.record.year});
      }
    }
  }
  return events;
}

namespace {

void SortEvents(EventStore *store) {
  std::sort(store->ue.begin(), store->ue.end());
  std::sort(store->sds.begin(), store->sds.end());
}

}  // namespace

EventStore DeriveEvents(const std::vector<ResolvedPublication> &publications,
                        const OrganizationIndex &organizations,
                        const SectorTaxonomy &taxonomy, SdsRegionSplit split) {
  const long n = static_cast<long>(publications.size());
  std::vector<std::vector<UECollaboration>> ue(publications.size());
  std::vector<std::vector<SDSCollaboration>> sds(publications.size());
  // Exceptions must not escape an OpenMP region; keep the first one.
  std::vector<std::string> failures(publications.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i) {
    try {
      ue[i] = DeriveUeEvents(publications[i], organizations);
      sds[i] = DeriveSdsEvents(publications[i], organizations, taxonomy, split);
    } catch (const Error &e) {
      failures[i] = e.what();
    }
  }
  for (const std::string &f : failures) {
    if (!f.empty()) throw Error(ErrorKind::kContract, f);
  }
  EventStore store;
  for (long i = 0; i < n; ++i) {
    store.ue.insert(store.ue.end(), ue[i].begin(), ue[i].end());
    store.sds.insert(store.sds.end(), sds[i].begin(), sds[i].end());
  }
  SortEvents(&store);
  return store;
}

EventStore DeriveEventsSerial(
    const std::vector<ResolvedPublication> &publications,
    const OrganizationIndex &organizations, const SectorTaxonomy &taxonomy,
    SdsRegionSplit split) {
  EventStore store;
  for (const ResolvedPublication &p : publications) {
    auto ue = DeriveUeEvents(p, organizations);
    auto sds = DeriveSdsEvents(p, organizations, taxonomy, split);
    store.ue.insert(store.ue.end(), ue.begin(), ue.end());
    store.sds.insert(store.sds.end(), sds.begin(), sds.end());
  }
  SortEvents(&store);
  return store;
}

CorpusTotals ComputeCorpusTotals(const EventStore &events) {
  std::set<std::string> universities, enterprises, sectors;
  for (const UECollaboration &e : events.ue) {
    universities.insert(e.university_id);
    enterprises.insert(e.enterprise_id);
  }
  for (const SDSCollaboration &e : events.sds) sectors.insert(e.sds);
  return {events.ue.size(), events.sds.size(), universities.size(),
          enterprises.size(), sectors.size()};
}

std::string RenderUeEvents(const std::vector<UECollaboration> &events) {
  std::string out = CsvLine({"pub_id", "university_id", "u_region",
                             "enterprise_id", "e_region", "year"});
  for (const UECollaboration &e : events) {
    out += CsvLine({e.pub_id, e.university_id, e.u_region, e.enterprise_id,
                    e.e_region, std::to_string(e.year)});
  }
  return out;
}

std::string RenderSdsEvents(const std::vector<SDSCollaboration> &events) {
  std::string out = CsvLine({"pub_id", "sds", "uda", "supply_region",
                             "enterprise_id", "e_region", "year"});
  for (const SDSCollaboration &e : events) {
    out += CsvLine({e.pub_id, e.sds, e.uda, e.supply_region, e.enterprise_id,
                    e.e_region, std::to_string(e.year)});
  }
  return out;
}

}  // namespace bibreg
