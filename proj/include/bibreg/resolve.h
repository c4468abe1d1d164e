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

#ifndef BIBREG_RESOLVE_H_
#define BIBREG_RESOLVE_H_

#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bibreg/model.h"

namespace bibreg {

// Matches raw address lines against normalized canonical names first, then
// normalized aliases. Collisions resolve to the lowest org_id.
class AffiliationResolver {
 public:
  explicit AffiliationResolver(const OrganizationIndex &organizations);

  AffiliationResolution Resolve(std::string_view raw) const;

  // One message per normalized alias shared by two or more organizations.
  const std::vector<std::string> &warnings() const { return warnings_; }

 private:
  std::unordered_map<std::string, std::string> canonical_;
  std::unordered_map<std::string, std::string> alias_;
  std::vector<std::string> warnings_;
};

enum class AmbiguityPolicy { kStrict, kAll };

// Roster entries keyed by (normalized surname, initials).
class RosterIndex {
 public:
  explicit RosterIndex(const std::vector<ScientistRosterEntry> &roster);

  const std::vector<const ScientistRosterEntry *> &Lookup(
      const std::string &surname, const std::string &initials) const;

 private:
  std::map<std::pair<std::string, std::string>,
           std::vector<const ScientistRosterEntry *>>
      by_name_;
};

// Attributes each author to roster scientists at universities that appear in
// the publication's resolved address list and that are active in the
// publication year. Authors without candidates are not attributed.
std::vector<AuthorAttribution> AttributeAuthors(
    const PublicationRecord &publication,
    const std::vector<AffiliationResolution> &resolutions,
    const OrganizationIndex &organizations, const RosterIndex &roster,
    AmbiguityPolicy policy);

// Everything needed to resolve a corpus; all members are read-only.
struct ResolutionContext {
  const OrganizationIndex &organizations;
  const AffiliationResolver &resolver;
  const RosterIndex &roster;
  AmbiguityPolicy policy = AmbiguityPolicy::kStrict;
};

ResolvedPublication ResolvePublication(const PublicationRecord &publication,
                                       const ResolutionContext &context);

// Data-parallel over publications (OpenMP). Output order equals input order.
std::vector<ResolvedPublication> ResolveCorpus(
    const std::vector<PublicationRecord> &publications,
    const ResolutionContext &context);

// Serial reference for ResolveCorpus.
std::vector<ResolvedPublication> ResolveCorpusSerial(
    const std::vector<PublicationRecord> &publications,
    const ResolutionContext &context);

struct ResolutionCounts {
  std::string pub_id;
  size_t exact = 0;
  size_t alias = 0;
  size_t unresolved = 0;
  size_t unique = 0;     // authors with a unique attribution
  size_t ambiguous = 0;  // authors with more than one candidate
};

ResolutionCounts CountResolution(const ResolvedPublication &publication);

// CSV with columns pub_id,exact,alias,unresolved,unique,ambiguous.
std::string RenderResolutionReport(
    const std::vector<ResolvedPublication> &publications);

}  // namespace bibreg

#endif  // BIBREG_RESOLVE_H_
