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

#include "bibreg/resolve.h"

#include <algorithm>
#include <set>

#include "bibreg/csv.h"
#include "bibreg/text.h"

namespace bibreg {

AffiliationResolver::AffiliationResolver(
    const OrganizationIndex &organizations) {
  std::map<std::string, std::set<std::string>> alias_owners;
  for (const Organization &org : organizations.organizations()) {
    std::string canonical = NormalizeName(org.canonical_name);
    auto [it, inserted] = canonical_.emplace(canonical, org.org_id);
    if (!inserted && org.org_id < it->second) it->second = org.org_id;
    for (const std::string &alias : org.aliases) {
      std::string key = NormalizeName(alias);
      if (!key.empty()) alias_owners[key].insert(org.org_id);
    }
  }
  // std::map iteration keeps the warning order deterministic.
  for (const auto &[key, owners] : alias_owners) {
    alias_.emplace(key, *owners.begin());
    if (owners.size() > 1) {
      std::string ids;
      for (const std::string &id : owners) ids += (ids.empty() ? "" : ", ") + id;
      warnings_.push_back("alias \"" + key + "\" is shared by " + ids +
                          "; resolving to " + *owners.begin());
    }
  }
}

AffiliationResolution AffiliationResolver::Resolve(std::string_view raw) const {
  AffiliationResolution out;
  out.raw = std::string(raw);
  std::string key = NormalizeName(raw);
  if (key.empty()) return out;
  if (auto it = canonical_.find(key); it != canonical_.end()) {
    out.org_id = it->second;
    out.confidence = MatchConfidence::kExact;
  } else if (auto jt = alias_.find(key); jt != alias_.end()) {
    out.org_id = jt->second;
    out.confidence = MatchConfidence::kAlias;
  }
  return out;
}

RosterIndex::RosterIndex(const std::vector<ScientistRosterEntry> &roster) {
  for (const ScientistRosterEntry &entry : roster) {
    by_name_[{entry.surname, entry.initials}].push_back(&entry);
  }
}

const std::vector<const ScientistRosterEntry *> &RosterIndex::Lookup(
    const std::string &surname, const std::string &initials) const {
  static const std::vector<const ScientistRosterEntry *> kNone;
  auto it = by_name_.find({surname, initials});
  return it == by_name_.end() ? kNone : it->second;
}

std::vector<AuthorAttribution> AttributeAuthors(
    const PublicationRecord &publication,
    const std::vector<AffiliationResolution> &resolutions,
    const OrganizationIndex &organizations, const RosterIndex &roster,
    AmbiguityPolicy policy) {
  std::set<std::string> universities;
  for (const AffiliationResolution &r : resolutions) {
    if (!r.org_id) continue;
    const Organization *org = organizations.Find(*r.org_id);
    if (org && org->kind == OrgKind::kUniversity) universities.insert(org->org_id);
  }

  std::vector<AuthorAttribution> out;
  for (size_t i = 0; i < publication.authors.size(); ++i) {
    const AuthorName &author = publication.authors[i];
    // Distinct (university, sds) candidates, ordered.
    std::map<std::pair<std::string, std::string>, std::string> candidates;
    for (const ScientistRosterEntry *entry :
         roster.Lookup(author.surname, author.initials)) {
      if (!universities.count(entry->university_id)) continue;
      if (!entry->ActiveIn(publication.year)) continue;
      candidates.emplace(std::make_pair(entry->university_id, entry->sds),
                         entry->uda);
    }
    if (candidates.empty()) continue;

    AuthorAttribution base;
    base.pub_id = publication.pub_id;
    base.author_index = i;
    if (candidates.size() == 1) {
      const auto &[key, uda] = *candidates.begin();
      base.university_id = key.first;
      base.sds = key.second;
      base.uda = uda;
      base.status = AttributionStatus::kUnique;
      out.push_back(std::move(base));
    } else if (policy == AmbiguityPolicy::kStrict) {
      base.status = AttributionStatus::kAmbiguousSkipped;
      out.push_back(std::move(base));
    } else {
      for (const auto &[key, uda] : candidates) {
        AuthorAttribution a = base;
        a.university_id = key.first;
        a.sds = key.second;
        a.uda = uda;
        a.status = AttributionStatus::kAmbiguousAll;
        out.push_back(std::move(a));
      }
    }
  }
  return out;
}

ResolvedPublication ResolvePublication(const PublicationRecord &publication,
                                       const ResolutionContext &context) {
  ResolvedPublication out;
  out.record = publication;
  out.affiliations.reserve(publication.affiliations.size());
  for (const std::string &raw : publication.affiliations) {
    out.affiliations.push_back(context.resolver.Resolve(raw));
  }
  out.attributions =
      AttributeAuthors(publication, out.affiliations, context.organizations,
                       context.roster, context.policy);
  return out;
}

std::vector<ResolvedPublication> ResolveCorpus(
    const std::vector<PublicationRecord> &publications,
    const ResolutionContext &context) {
  std::vector<ResolvedPublication> out(publications.size());
  const long n = static_cast<long>(publications.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i) {
    out[i] = ResolvePublication(publications[i], context);
  }
  return out;
}

std::vector<ResolvedPublication> ResolveCorpusSerial(
    const std::vector<PublicationRecord> &publications,
    const ResolutionContext &context) {
  std::vector<ResolvedPublication> out;
  out.reserve(publications.size());
  for (const PublicationRecord &p : publications) {
    out.push_back(ResolvePublication(p, context));
  }
  return out;
}

ResolutionCounts CountResolution(const ResolvedPublication &publication) {
  ResolutionCounts counts;
  counts.pub_id = publication.record.pub_id;
  for (const AffiliationResolution &r : publication.affiliations) {
    switch (r.confidence) {
      case MatchConfidence::kExact: ++counts.exact; break;
      case MatchConfidence::kAlias: ++counts.alias; break;
      case MatchConfidence::kUnresolved: ++counts.unresolved; break;
    }
  }
  std::set<size_t> unique_authors, ambiguous_authors;
  for (const AuthorAttribution &a : publication.attributions) {
    if (a.status == AttributionStatus::kUnique) {
      unique_authors.insert(a.author_index);
    } else {
      ambiguous_authors.insert(a.author_index);
    }
  }
  counts.unique = unique_authors.size();
  counts.ambiguous = ambiguous_authors.size();
  return counts;
}

std::string RenderResolutionReport(
    const std::vector<ResolvedPublication> &publications) {
  std::string out =
      CsvLine({"pub_id", "exact", "alias", "unresolved", "unique", "ambiguous"});
  for (const ResolvedPublication &p : publications) {
    ResolutionCounts c = CountResolution(p);
    out += CsvLine({c.pub_id, std::to_string(c.exact), std::to_string(c.alias),
                    std::to_string(c.unresolved), std::to_string(c.unique),
                    std::to_string(c.ambiguous)});
  }
  return out;
}

}  // namespace bibreg
