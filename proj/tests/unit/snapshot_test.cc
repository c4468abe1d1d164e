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

#include "bibreg/snapshot.h"

#include "bibreg/error.h"
#include "gtest/gtest.h"

namespace bibreg {
namespace {

Snapshot Make(std::map<std::string, std::vector<MetricVector>> sectors,
              std::vector<std::string> taxonomy = {"A", "B"}) {
  return Snapshot{{"Lazio", "Sicily"}, std::move(taxonomy), std::move(sectors)};
}

const MetricVector kRow = {3.0, 0.5, 0.25, std::nullopt};

TEST(DiffSnapshotsTest, IdenticalSnapshotsHaveZeroDeltas) {
  Snapshot s = Make({{"A", {kRow, kRow}}});
  auto deltas = DiffSnapshots(s, s);
  ASSERT_EQ(deltas.size(), 2u);
  for (const auto &d : deltas) {
    for (size_t k = 0; k < 3; ++k) {
      EXPECT_EQ(*d.cells[k].delta, 0.0);
      EXPECT_EQ(d.cells[k].flag, DeltaFlag::kNone);
    }
    EXPECT_FALSE(d.cells[3].delta);  // NA - NA stays NA
    EXPECT_EQ(d.cells[3].flag, DeltaFlag::kNone);
  }
}

TEST(DiffSnapshotsTest, CellFlags) {
  MetricVector later = {5.0, std::nullopt, 0.25, 0.75};
  auto deltas = DiffSnapshots(Make({{"A", {kRow, kRow}}}),
                              Make({{"A", {later, kRow}}}));
  const auto &lazio = deltas[0];
  EXPECT_EQ(*lazio.cells[0].delta, 2.0);
  EXPECT_EQ(lazio.cells[1].flag, DeltaFlag::kVanished);
  EXPECT_EQ(lazio.cells[3].flag, DeltaFlag::kEmergent);
  EXPECT_FALSE(lazio.cells[3].delta);
}

TEST(DiffSnapshotsTest, SectorOnlyInOneSnapshot) {
  auto deltas = DiffSnapshots(Make({{"A", {kRow, kRow}}}),
                              Make({{"A", {kRow, kRow}}, {"B", {kRow, kRow}}}));
  ASSERT_EQ(deltas.size(), 4u);
  for (const auto &d : deltas) {
    for (const auto &c : d.cells) {
      EXPECT_EQ(c.flag, d.sds == "B" ? DeltaFlag::kEmergent : DeltaFlag::kNone);
    }
  }
  auto reverse = DiffSnapshots(Make({{"B", {kRow, kRow}}}), Make({}));
  for (const auto &d : reverse) {
    for (const auto &c : d.cells) EXPECT_EQ(c.flag, DeltaFlag::kVanished);
  }
}

TEST(DiffSnapshotsTest, MismatchedRegistriesAreDiffErrors) {
  try {
    DiffSnapshots(Make({}, {"A", "B"}), Make({}, {"A", "C"}));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDiff);
    EXPECT_NE(std::string(e.what()).find("B, C"), std::string::npos);
  }
  Snapshot other = Make({});
  other.regions = {"Lazio"};
  EXPECT_THROW(DiffSnapshots(Make({}), other), Error);
}

TEST(MakeSnapshotTest, TakesCorrespondenceAndFlowColumns) {
  SectorIndicators s;
  s.sds = "A";
  s.correspondence.resize(1);
  s.flows.resize(1);
  s.correspondence[0].surplus = -4;
  s.correspondence[0].demand_per_scientist = 1.5;
  s.flows[0].market_share = 0.2;
  auto snapshot = MakeSnapshot({"Lazio"}, {"A"}, {s});
  const MetricVector want = {-4.0, 1.5, 0.2, std::nullopt};
  EXPECT_EQ(snapshot.sectors.at("A")[0], want);
  EXPECT_EQ(DiffMetricName(DiffMetric::kMarketShare), "market_share");
  EXPECT_EQ(DeltaFlagName(DeltaFlag::kEmergent), "emergent");
}

}  // namespace
}  // namespace bibreg
