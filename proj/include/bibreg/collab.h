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

#ifndef BIBREG_COLLAB_H_
#define BIBREG_COLLAB_H_

#include <compare>
#include <string>
#include <vector>

#include "bibreg/model.h"

namespace bibreg {

// One university-enterprise pair on one publication.
struct UECollaboration {
  std::string pub_id;
  std::string university_id;
  std::string u_region;
  std::string enterprise_id;
  std::string e_region;
  int year = 0;

  friend auto operator<=>(const UECollaboration &,
                          const UECollaboration &) = default;
};

// One (SDS, supplying region, enterprise) triple on one publication.
struct SDSCollaboration {
  std::string pub_id;
  std::string sds;
  std::string uda;
  std::string supply_region;
  std::string enterprise_id;
  std::string e_region;
  int year = 0;

  friend auto operator<=>(const SDSCollaboration &,
                          const SDSCollaboration &) = default;
};

enum class SdsRegionSplit { kPerRegion, kSingle };

// |U| x |E| events over the distinct resolved universities and enterprises.
// Throws Error(kContract) when either set is empty.
std::vector<UECollaboration> DeriveUeEvents(
    const ResolvedPublication &publication,
    const OrganizationIndex &organizations);

// |S| x |E| events over the distinct attributed sectors of `taxonomy` and the
// distinct enterprises. With kPerRegion a sector attributed via universities
// in two regions counts once per region. Throws Error(kContract) when the
// publication has no sector attribution or no enterprise.
std::vector<SDSCollaboration> DeriveSdsEvents(
    const ResolvedPublication &publication,
    const OrganizationIndex &organizations, const SectorTaxonomy &taxonomy,
    SdsRegionSplit split);

struct EventStore {
  std::vector<UECollaboration> ue;
  std::vector<SDSCollaboration> sds;

  friend bool operator==(const EventStore &, const EventStore &) = default;
};

// Derives both populations for every publication (OpenMP over publications),
// then sorts each population for a deterministic order.
EventStore DeriveEvents(const std::vector<ResolvedPublication> &publications,
                        const OrganizationIndex &organizations,
                        const SectorTaxonomy &taxonomy, SdsRegionSplit split);

EventStore DeriveEventsSerial(
    const std::vector<ResolvedPublication> &publications,
    const OrganizationIndex &organizations, const SectorTaxonomy &taxonomy,
    SdsRegionSplit split);

struct CorpusTotals {
  size_t ue_events = 0;
  size_t sds_events = 0;
  size_t universities = 0;
  size_t enterprises = 0;
  size_t sds_with_events = 0;

  friend bool operator==(const CorpusTotals &, const CorpusTotals &) = default;
};

CorpusTotals ComputeCorpusTotals(const EventStore &events);

// pub_id,university_id,u_region,enterprise_id,e_region,year
std::string RenderUeEvents(const std::vector<UECollaboration> &events);
// pub_id,sds,uda,supply_region,enterprise_id,e_region,year
std::string RenderSdsEvents(const std::vector<SDSCollaboration> &events);

}  // namespace bibreg

#endif  // BIBREG_COLLAB_H_
