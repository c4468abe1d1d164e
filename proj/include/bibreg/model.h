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

#ifndef BIBREG_MODEL_H_
#define BIBREG_MODEL_H_

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace bibreg {

struct YearWindow {
  int first = 2001;
  int last = 2003;

  bool Contains(int year) const { return year >= first && year <= last; }
  friend bool operator==(const YearWindow &, const YearWindow &) = default;
};

struct AuthorName {
  std::string surname;   // normalized
  std::string initials;  // 1-3 uppercase letters

  friend bool operator==(const AuthorName &, const AuthorName &) = default;
};

struct PublicationRecord {
  std::string pub_id;
  int year = 0;
  std::vector<AuthorName> authors;
  std::vector<std::string> affiliations;  // raw address lines

  friend bool operator==(const PublicationRecord &,
                         const PublicationRecord &) = default;
};

enum class OrgKind { kUniversity, kEnterprise };

struct Organization {
  std::string org_id;
  std::string canonical_name;
  std::vector<std::string> aliases;  // always includes canonical_name
  OrgKind kind = OrgKind::kUniversity;
  std::string region;
};

struct ScientistRosterEntry {
  std::string surname;  // normalized
  std::string initials;
  std::string university_id;
  std::string sds;
  std::string uda;
  std::vector<int> active_years;  // sorted, unique
  double headcount_weight = 1.0;

  bool ActiveIn(int year) const;
};

// The SDS -> UDA hierarchy. Every SDS has exactly one parent UDA.
class SectorTaxonomy {
 public:
  // Returns false when `sds` is already registered under a different UDA.
  bool Add(const std::string &sds, const std::string &uda);

  bool Contains(const std::string &sds) const {
    return parent_.count(sds) > 0;
  }
  const std::string *UdaOf(const std::string &sds) const;

  // Keeps only SDS whose UDA is in `udas`; an empty list keeps everything.
  SectorTaxonomy RestrictedTo(const std::vector<std::string> &udas) const;

  const std::vector<std::string> &udas() const { return udas_; }
  // SDS codes in lexicographic order.
  std::vector<std::string> SdsCodes() const;
  size_t size() const { return parent_.size(); }

  friend bool operator==(const SectorTaxonomy &,
                         const SectorTaxonomy &) = default;

 private:
  std::vector<std::string> udas_;  // first-seen order
  std::map<std::string, std::string> parent_;
};

// Read-only lookup over the organization registry.
class OrganizationIndex {
 public:
  OrganizationIndex() = default;
  explicit OrganizationIndex(std::vector<Organization> organizations);

  const Organization *Find(const std::string &org_id) const;
  const std::vector<Organization> &organizations() const {
    return organizations_;
  }

 private:
  std::vector<Organization> organizations_;
  std::unordered_map<std::string, size_t> by_id_;
};

struct Registries {
  OrganizationIndex organizations;
  std::vector<ScientistRosterEntry> roster;
  SectorTaxonomy taxonomy;
};

enum class MatchConfidence { kExact, kAlias, kUnresolved };

struct AffiliationResolution {
  std::string raw;
  std::optional<std::string> org_id;  // absent iff unresolved
  MatchConfidence confidence = MatchConfidence::kUnresolved;
};

enum class AttributionStatus { kUnique, kAmbiguousSkipped, kAmbiguousAll };

// One author-to-roster attribution. For kAmbiguousSkipped the university and
// sector are absent.
struct AuthorAttribution {
  std::string pub_id;
  size_t author_index = 0;
  std::optional<std::string> university_id;
  std::optional<std::string> sds;
  std::optional<std::string> uda;
  AttributionStatus status = AttributionStatus::kUnique;

  bool has_sector() const { return sds.has_value(); }
};

struct ResolvedPublication {
  PublicationRecord record;
  std::vector<AffiliationResolution> affiliations;
  std::vector<AuthorAttribution> attributions;
};

// The twenty Italian administrative regions, alphabetical.
std::vector<std::string> ItalianRegions();

}  // namespace bibreg

#endif  // BIBREG_MODEL_H_
