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

// Test fixtures: published regional counts encoded as synthetic event sets,
// a corpus writer for end-to-end runs and a random corpus generator.

#ifndef BIBREG_TESTS_SUPPORT_FIXTURES_H_
#define BIBREG_TESTS_SUPPORT_FIXTURES_H_

#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bibreg/collab.h"
#include "bibreg/model.h"

namespace bibreg::fixtures {

inline constexpr char kElectronics[] = "ING-INF/01";

// One row of the published regional distribution of collaborations.
struct Table1Row {
  std::string region;
  long supply_intra;
  long supply_extra;
  long demand_intra;
  long demand_extra;
  long net_difference;              // as printed
  std::optional<int> share_percent;  // as printed; nullopt for NA
};

// 19 rows; Valle d'Aosta does not appear.
const std::vector<Table1Row> &Table1();

struct ElectronicsRow {
  std::string region;
  int scientists;
  long national_demand;
  long national_supply;
  long intra_supply;
};

// All 20 regions in ItalianRegions() order; Valle d'Aosta is all zero.
const std::vector<ElectronicsRow> &ElectronicsCounts();

// flows[s][d]: collaborations supplied by region s to enterprises of d.
using FlowMatrix = std::vector<std::vector<long>>;

// Fills the diagonal with `intra` and distributes the extra-regional
// totals off the diagonal, one unit at a time from the largest remaining
// supplier to the largest remaining foreign demand. Throws
// std::runtime_error when the margins cannot be met.
FlowMatrix BuildFlowMatrix(const std::vector<long> &intra,
                           const std::vector<long> &supply_extra,
                           const std::vector<long> &demand_extra);

// University-enterprise events whose regional margins equal Table1().
std::vector<UECollaboration> Table1Events();

// SDS-enterprise events of the electronics sector with the margins of
// ElectronicsCounts(), and the matching headcounts in region order.
std::vector<SDSCollaboration> ElectronicsEvents();
std::vector<double> ElectronicsHeadcounts();

// Writes organizations.csv, roster.csv, taxonomy.csv, publications.jsonl
// and config.txt. Running the pipeline on config.txt reproduces the
// electronics counts; the corpus also carries alias and diacritic variants,
// repeated address lines, unattributable co-authors, records outside the
// window and sectors of a UDA excluded by the config.
void WriteElectronicsCorpus(const std::filesystem::path &dir);

// Organizations spread over every region and a small taxonomy.
struct SyntheticWorld {
  std::vector<std::string> regions;
  OrganizationIndex organizations;
  SectorTaxonomy taxonomy;
  std::vector<std::string> university_ids;
  std::vector<std::string> enterprise_ids;
};

SyntheticWorld MakeSyntheticWorld(int universities_per_region = 2,
                                  int enterprises_per_region = 2,
                                  int sectors = 12);

// A resolved publication with 1-4 universities, 1-4 enterprises and 1-3
// attributed sectors. Each organization appears one to three times in the
// address list and unresolved lines are mixed in.
ResolvedPublication RandomPublication(std::mt19937 &rng,
                                      const SyntheticWorld &world,
                                      const std::string &pub_id);

std::vector<ResolvedPublication> RandomCorpus(std::mt19937 &rng,
                                              const SyntheticWorld &world,
                                              size_t publications);

}  // namespace bibreg::fixtures

#endif  // BIBREG_TESTS_SUPPORT_FIXTURES_H_
