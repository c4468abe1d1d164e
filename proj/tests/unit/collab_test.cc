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

#include <random>
#include <set>
#include <tuple>

#include "bibreg/error.h"
#include "gtest/gtest.h"
#include "support/fixtures.h"

namespace bibreg {
namespace {

class CollabTest : public ::testing::Test {
 protected:
  CollabTest()
      : orgs_({{"U1", "u1", {"u1"}, OrgKind::kUniversity, "Lazio"},
               {"U2", "u2", {"u2"}, OrgKind::kUniversity, "Lombardy"},
               {"U3", "u3", {"u3"}, OrgKind::kUniversity, "Lombardy"},
               {"E1", "e1", {"e1"}, OrgKind::kEnterprise, "Lombardy"},
               {"E2", "e2", {"e2"}, OrgKind::kEnterprise, "Sicily"},
               {"E3", "e3", {"e3"}, OrgKind::kEnterprise, "Lazio"}}) {
    taxonomy_.Add("FIS/01", "02");
    taxonomy_.Add("ING-INF/01", "09");
  }

  ResolvedPublication Pub(std::vector<std::string> org_ids,
                          std::vector<std::pair<std::string, std::string>>
                              attributions = {{"U1", "FIS/01"}}) {
    ResolvedPublication p;
    p.record.pub_id = "P1";
    p.record.year = 2002;
    for (const auto &id : org_ids) {
      p.affiliations.push_back({id, id, MatchConfidence::kExact});
    }
    p.affiliations.push_back({"unmatched", std::nullopt,
                              MatchConfidence::kUnresolved});
    size_t i = 0;
    for (const auto &[u, sds] : attributions) {
      p.attributions.push_back({"P1", i++, u, sds, *taxonomy_.UdaOf(sds),
                                AttributionStatus::kUnique});
    }
    return p;
  }

  OrganizationIndex orgs_;
  SectorTaxonomy taxonomy_;
};

TEST_F(CollabTest, ProductOfDistinctOrganizations) {
  EXPECT_EQ(DeriveUeEvents(Pub({"U1", "E1"}), orgs_).size(), 1u);
  EXPECT_EQ(DeriveUeEvents(Pub({"U1", "U2", "E1", "E2", "E3"}), orgs_).size(),
            6u);
  EXPECT_EQ(DeriveUeEvents(Pub({"U1", "U1", "E1"}), orgs_).size(), 1u);
}

TEST_F(CollabTest, EventsCarryRegionsAndYear) {
  auto events = DeriveUeEvents(Pub({"U1", "E2"}), orgs_);
  ASSERT_EQ(events.size(), 1u);
  EXPECT_EQ(events[0],
            (UECollaboration{"P1", "U1", "Lazio", "E2", "Sicily", 2002}));
}

TEST_F(CollabTest, MissingSideIsContractViolation) {
  try {
    DeriveUeEvents(Pub({"U1", "U2"}), orgs_);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kContract);
  }
  EXPECT_THROW(DeriveSdsEvents(Pub({"U1", "E1"}, {}), orgs_, taxonomy_,
                               SdsRegionSplit::kPerRegion),
               Error);
}

TEST_F(CollabTest, SdsEventsCountDistinctSectors) {
  auto split = SdsRegionSplit::kPerRegion;
  EXPECT_EQ(DeriveSdsEvents(Pub({"U1", "E1"}, {{"U1", "FIS/01"},
                                               {"U1", "ING-INF/01"}}),
                            orgs_, taxonomy_, split)
                .size(),
            2u);
  EXPECT_EQ(DeriveSdsEvents(Pub({"U1", "E1", "E2"}), orgs_, taxonomy_, split)
                .size(),
            2u);
  EXPECT_EQ(DeriveSdsEvents(Pub({"U1", "E1"}, {{"U1", "FIS/01"},
                                               {"U1", "FIS/01"},
                                               {"U1", "FIS/01"}}),
                            orgs_, taxonomy_, split)
                .size(),
            1u);
}

TEST_F(CollabTest, SectorOutsideTaxonomyIsIgnored) {
  SectorTaxonomy narrow = taxonomy_.RestrictedTo({"02"});
  auto events = DeriveSdsEvents(
      Pub({"U1", "E1"}, {{"U1", "FIS/01"}, {"U1", "ING-INF/01"}}), orgs_,
      narrow, SdsRegionSplit::kPerRegion);
  ASSERT_EQ(events.size(), 1u);
  EXPECT_EQ(events[0].sds, "FIS/01");
}

TEST_F(CollabTest, RegionSplitPolicies) {
  // One sector attributed at universities in two regions.
  auto pub = Pub({"U1", "U2", "U3", "E1"},
                 {{"U3", "FIS/01"}, {"U2", "FIS/01"}, {"U1", "FIS/01"}});
  auto per_region =
      DeriveSdsEvents(pub, orgs_, taxonomy_, SdsRegionSplit::kPerRegion);
  ASSERT_EQ(per_region.size(), 2u);
  EXPECT_EQ(per_region[0].supply_region, "Lazio");
  EXPECT_EQ(per_region[1].supply_region, "Lombardy");

  auto single = DeriveSdsEvents(pub, orgs_, taxonomy_, SdsRegionSplit::kSingle);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].supply_region, "Lazio");  // U1 is the lowest id
}

TEST(DeriveEventsTest, ParallelMatchesSerialAndTotals) {
  std::mt19937 rng(123);
  auto world = fixtures::MakeSyntheticWorld();
  auto corpus = fixtures::RandomCorpus(rng, world, 2500);
  for (auto split : {SdsRegionSplit::kPerRegion, SdsRegionSplit::kSingle}) {
    EventStore parallel =
        DeriveEvents(corpus, world.organizations, world.taxonomy, split);
    EventStore serial =
        DeriveEventsSerial(corpus, world.organizations, world.taxonomy, split);
    EXPECT_EQ(parallel, serial);
    EXPECT_TRUE(std::is_sorted(parallel.ue.begin(), parallel.ue.end()));
  }
  EventStore events = DeriveEvents(corpus, world.organizations, world.taxonomy,
                                   SdsRegionSplit::kPerRegion);
  CorpusTotals totals = ComputeCorpusTotals(events);
  std::set<std::string> universities, enterprises, sectors;
  for (const auto &e : events.ue) {
    universities.insert(e.university_id);
    enterprises.insert(e.enterprise_id);
  }
  for (const auto &e : events.sds) sectors.insert(e.sds);
  EXPECT_EQ(totals.ue_events, events.ue.size());
  EXPECT_EQ(totals.sds_events, events.sds.size());
  EXPECT_EQ(totals.universities, universities.size());
  EXPECT_EQ(totals.enterprises, enterprises.size());
  EXPECT_EQ(totals.sds_with_events, sectors.size());
}

TEST(DeriveEventsTest, ContractFailureSurfacesFromParallelRegion) {
  auto world = fixtures::MakeSyntheticWorld();
  std::mt19937 rng(1);
  auto corpus = fixtures::RandomCorpus(rng, world, 100);
  corpus[57].affiliations.clear();
  EXPECT_THROW(DeriveEvents(corpus, world.organizations, world.taxonomy,
                            SdsRegionSplit::kPerRegion),
               Error);
}

TEST(RenderEventsTest, HeadersAndRows) {
  std::vector<UECollaboration> ue = {{"P1", "U1", "Lazio", "E1", "Valle d'Aosta", 2001}};
  EXPECT_EQ(RenderUeEvents(ue),
            "pub_id,university_id,u_region,enterprise_id,e_region,year\n"
            "P1,U1,Lazio,E1,Valle d'Aosta,2001\n");
  std::vector<SDSCollaboration> sds = {{"P1", "FIS/01", "02", "Lazio", "E1", "Emilia Romagna", 2003}};
  EXPECT_EQ(RenderSdsEvents(sds),
            "pub_id,sds,uda,supply_region,enterprise_id,e_region,year\n"
            "P1,FIS/01,02,Lazio,E1,Emilia Romagna,2003\n");
}

}  // namespace
}  // namespace bibreg
