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

#include "bibreg/aggregate.h"

#include <random>

#include "bibreg/error.h"
#include "gtest/gtest.h"
#include "support/fixtures.h"

namespace bibreg {
namespace {

const std::vector<std::string> kRegions = {"Lazio", "Sicily"};

SectorIndicatorValues Uniform(const std::string &sds, Value lazio,
                              Value sicily) {
  SectorIndicatorValues s{sds, {{}, {}}};
  s.by_region[0].fill(lazio);
  s.by_region[1].fill(sicily);
  return s;
}

TEST(SdsWeightsTest, ShareOfEvents) {
  std::vector<SDSCollaboration> events(4);
  events[0].sds = events[1].sds = events[2].sds = "A";
  events[3].sds = "B";
  auto w = ComputeSdsWeights(events);
  EXPECT_DOUBLE_EQ(w.at("A"), 0.75);
  EXPECT_DOUBLE_EQ(w.at("B"), 0.25);
  EXPECT_TRUE(ComputeSdsWeights({}).empty());
}

TEST(AggregateRegionsTest, WeightedSum) {
  auto rows = AggregateRegions(kRegions, {Uniform("A", 2.0, 1.0),
                                          Uniform("B", 6.0, std::nullopt)},
                               {{"A", 0.75}, {"B", 0.25}});
  EXPECT_DOUBLE_EQ(*rows[0].values[0], 0.75 * 2 + 0.25 * 6);
  EXPECT_DOUBLE_EQ(*rows[1].values[0], 0.75);  // NA counts as zero
  EXPECT_EQ(rows[0].ranks[0], 1);
  EXPECT_EQ(rows[1].ranks[0], 2);
}

TEST(AggregateRegionsTest, RenormalizeSkipsMissingCells) {
  auto rows = AggregateRegions(
      kRegions,
      {Uniform("A", 2.0, 1.0), Uniform("B", 6.0, std::nullopt)},
      {{"A", 0.75}, {"B", 0.25}}, AggregationNaPolicy::kRenormalize);
  EXPECT_DOUBLE_EQ(*rows[1].values[0], 1.0);
  auto empty = AggregateRegions(
      kRegions, {Uniform("A", std::nullopt, std::nullopt)}, {{"A", 1.0}},
      AggregationNaPolicy::kRenormalize);
  EXPECT_FALSE(empty[0].values[0]);
  EXPECT_FALSE(empty[0].ranks[0]);
}

TEST(AggregateRegionsTest, EmptyWeightMap) {
  auto coerce = AggregateRegions(kRegions, {}, {});
  EXPECT_EQ(*coerce[0].values[2], 0.0);
  EXPECT_EQ(coerce[0].ranks[2], 1);
  EXPECT_EQ(coerce[1].ranks[2], 1);
  auto renorm =
      AggregateRegions(kRegions, {}, {}, AggregationNaPolicy::kRenormalize);
  EXPECT_FALSE(renorm[0].values[2]);
}

TEST(AggregateRegionsTest, BadWeightsAreComputationErrors) {
  try {
    AggregateRegions(kRegions, {Uniform("A", 1, 1)}, {{"A", 0.9}});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kComputation);
  }
  EXPECT_THROW(AggregateRegions(kRegions, {Uniform("A", 1, 1)},
                                {{"A", 0.5}, {"B", 0.5}}),
               Error);
  EXPECT_NO_THROW(AggregateRegions(kRegions, {Uniform("A", 1, 1)},
                                   {{"A", 1.0 + 5e-10}}));
}

TEST(ExtractIndicatorValuesTest, ColumnOrder) {
  const auto headcounts = fixtures::ElectronicsHeadcounts();
  auto sector = ComputeSector(fixtures::kElectronics, headcounts,
                              fixtures::ElectronicsEvents(), ItalianRegions());
  auto values = ExtractIndicatorValues(sector);
  ASSERT_EQ(values.by_region.size(), ItalianRegions().size());
  for (size_t r = 0; r < values.by_region.size(); ++r) {
    const auto &v = values.by_region[r];
    EXPECT_EQ(v[0], sector.correspondence[r].demand_per_scientist);
    EXPECT_EQ(v[1], sector.flows[r].national_supply_per_scientist);
    EXPECT_EQ(v[2], sector.flows[r].intra_supply_per_scientist);
    EXPECT_EQ(v[3], sector.flows[r].market_share_per_scientist);
    EXPECT_EQ(v[4], sector.flows[r].intra_over_national_supply);
  }
  EXPECT_EQ(AggregateIndicatorName(AggregateIndicator::kIntraOverNationalSupply),
            "intra_over_national_supply");
}

TEST(RankRegionsTest, CompetitionRanking) {
  std::vector<Value> values = {5.0, 3.0, 3.0, 1.0};
  EXPECT_EQ(RankRegions(values),
            (std::vector<std::optional<int>>{1, 2, 2, 4}));
  std::vector<Value> with_na = {std::nullopt, 0.0, 2.0, 0.0};
  EXPECT_EQ(RankRegions(with_na),
            (std::vector<std::optional<int>>{std::nullopt, 2, 1, 2}));
  EXPECT_TRUE(RankRegions(std::vector<Value>{}).empty());
}

// Ranks do not depend on input order.
TEST(RankRegionsTest, PermutationInvariant) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Value> values(1 + rng() % 20);
    for (auto &v : values) {
      if (rng() % 5) v = static_cast<double>(rng() % 4);
    }
    std::vector<size_t> perm(values.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Value> shuffled;
    for (size_t i : perm) shuffled.push_back(values[i]);
    auto ranks = RankRegions(values);
    auto shuffled_ranks = RankRegions(shuffled);
    for (size_t i = 0; i < perm.size(); ++i) {
      EXPECT_EQ(shuffled_ranks[i], ranks[perm[i]]);
    }
  }
}

}  // namespace
}  // namespace bibreg
