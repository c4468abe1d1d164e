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

// Serial reference kernels against their OpenMP versions on synthetic data.

#include <random>
#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "bibreg/collab.h"
#include "bibreg/indicators.h"
#include "bibreg/resolve.h"
#include "support/fixtures.h"

namespace bibreg {
namespace {

struct Workload {
  fixtures::SyntheticWorld world;
  std::vector<ScientistRosterEntry> roster;
  std::vector<PublicationRecord> records;
  std::vector<ResolvedPublication> resolved;
};

const Workload &SharedWorkload() {
  static const Workload *w = [] {
    auto *w = new Workload{fixtures::MakeSyntheticWorld(3, 3, 60), {}, {}, {}};
    std::mt19937 rng(2026);
    const auto &orgs = w->world.organizations.organizations();
    int n = 0;
    for (const auto &u : w->world.university_ids) {
      for (const auto &sds : w->world.taxonomy.SdsCodes()) {
        if (rng() % 2) continue;
        w->roster.push_back({"author" + std::to_string(n++ % 500), "A", u, sds,
                             *w->world.taxonomy.UdaOf(sds), {2001, 2002, 2003},
                             1.0});
      }
    }
    for (int i = 0; i < 20000; ++i) {
      PublicationRecord p{"P" + std::to_string(i),
                          2001 + static_cast<int>(rng() % 3), {}, {}};
      for (int a = 0, k = 1 + rng() % 4; a < k; ++a) {
        p.authors.push_back({"author" + std::to_string(rng() % 500), "A"});
      }
      for (int f = 0, k = 2 + rng() % 4; f < k; ++f) {
        const Organization &o = orgs[rng() % orgs.size()];
        p.affiliations.push_back(o.aliases[rng() % o.aliases.size()]);
      }
      w->records.push_back(std::move(p));
    }
    w->resolved = fixtures::RandomCorpus(rng, w->world, 20000);
    return w;
  }();
  return *w;
}

template <bool kParallel>
void BM_ResolveCorpus(benchmark::State &state) {
  const Workload &w = SharedWorkload();
  AffiliationResolver resolver(w.world.organizations);
  RosterIndex roster(w.roster);
  ResolutionContext context{w.world.organizations, resolver, roster,
                            AmbiguityPolicy::kAll};
  for (auto _ : state) {
    auto out = kParallel ? ResolveCorpus(w.records, context)
                         : ResolveCorpusSerial(w.records, context);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * w.records.size());
}

template <bool kParallel>
void BM_DeriveEvents(benchmark::State &state) {
  const Workload &w = SharedWorkload();
  for (auto _ : state) {
    auto out = kParallel
                   ? DeriveEvents(w.resolved, w.world.organizations,
                                  w.world.taxonomy, SdsRegionSplit::kPerRegion)
                   : DeriveEventsSerial(w.resolved, w.world.organizations,
                                        w.world.taxonomy,
                                        SdsRegionSplit::kPerRegion);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * w.resolved.size());
}

template <bool kParallel>
void BM_ComputeAllSectors(benchmark::State &state) {
  const Workload &w = SharedWorkload();
  auto events = DeriveEvents(w.resolved, w.world.organizations,
                             w.world.taxonomy, SdsRegionSplit::kPerRegion);
  HeadcountTable headcounts(w.roster, w.world.organizations, w.world.regions);
  const auto codes = w.world.taxonomy.SdsCodes();
  for (auto _ : state) {
    auto out = kParallel ? ComputeAllSectors(codes, headcounts, events.sds,
                                             w.world.regions)
                         : ComputeAllSectorsSerial(codes, headcounts,
                                                   events.sds, w.world.regions);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * codes.size());
}

BENCHMARK(BM_ResolveCorpus<false>)->Name("ResolveCorpus/serial")->UseRealTime();
BENCHMARK(BM_ResolveCorpus<true>)->Name("ResolveCorpus/openmp")->UseRealTime();
BENCHMARK(BM_DeriveEvents<false>)->Name("DeriveEvents/serial")->UseRealTime();
BENCHMARK(BM_DeriveEvents<true>)->Name("DeriveEvents/openmp")->UseRealTime();
BENCHMARK(BM_ComputeAllSectors<false>)
    ->Name("ComputeAllSectors/serial")
    ->UseRealTime();
BENCHMARK(BM_ComputeAllSectors<true>)
    ->Name("ComputeAllSectors/openmp")
    ->UseRealTime();

}  // namespace
}  // namespace bibreg

BENCHMARK_MAIN();
