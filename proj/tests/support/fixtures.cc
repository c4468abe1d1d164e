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

#include "support/fixtures.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>

#include "bibreg/csv.h"
#include "bibreg/ingest.h"
#include "json.hpp"

namespace bibreg::fixtures {
namespace {

namespace fs = std::filesystem;

size_t RegionIndex(const std::vector<std::string> &regions,
                   const std::string &region) {
  auto it = std::find(regions.begin(), regions.end(), region);
  if (it == regions.end()) throw std::runtime_error("unknown region " + region);
  return it - regions.begin();
}

// Expands a flow matrix over `regions` into one callback per unit.
template <typename Fn>
void ForEachUnit(const FlowMatrix &flows, Fn fn) {
  for (size_t s = 0; s < flows.size(); ++s) {
    for (size_t d = 0; d < flows[s].size(); ++d) {
      for (long k = 0; k < flows[s][d]; ++k) fn(s, d, k);
    }
  }
}

FlowMatrix ElectronicsFlows() {
  const auto &rows = ElectronicsCounts();
  std::vector<long> intra, supply_extra, demand_extra;
  for (const ElectronicsRow &r : rows) {
    intra.push_back(r.intra_supply);
    supply_extra.push_back(r.national_supply - r.intra_supply);
    demand_extra.push_back(r.national_demand - r.intra_supply);
  }
  return BuildFlowMatrix(intra, supply_extra, demand_extra);
}

// Deterministic pronounceable surnames, unique per index below 8000.
std::string Surname(int index) {
  static const char *kSyllables[] = {"ba", "ce", "di", "fo", "gu", "la", "me",
                                     "ni", "po", "ru", "sa", "te", "vi", "zo",
                                     "ca", "de", "fi", "go", "lu", "ma"};
  std::string out;
  for (int i = 0; i < 3; ++i) {
    out += kSyllables[index % 20];
    index /= 20;
  }
  out[0] = static_cast<char>(out[0] - 'a' + 'A');
  return out;
}

std::string Initials(int index) {
  std::string out(1, static_cast<char>('A' + index % 26));
  if (index % 3 == 0) out += static_cast<char>('A' + (index / 26) % 26);
  return out;
}

// Accented spelling of a surname ending in a vowel; normalizes back.
std::string Accented(const std::string &surname) {
  switch (surname.back()) {
    case 'a': return surname.substr(0, surname.size() - 1) + "à";
    case 'o': return surname.substr(0, surname.size() - 1) + "ò";
    case 'i': return surname.substr(0, surname.size() - 1) + "ì";
    default: return surname;
  }
}

std::string UniversityId(size_t region) {
  return "U" + std::string(region < 9 ? "0" : "") + std::to_string(region + 1);
}
std::string EnterpriseId(size_t region) {
  return "E" + std::string(region < 9 ? "0" : "") + std::to_string(region + 1);
}

std::string UniversityName(const std::string &region) {
  return "Universita degli Studi " + region;
}
std::string EnterpriseName(const std::string &region) {
  return region + " Microsistemi SpA";
}

void WriteText(const fs::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

struct RosterPerson {
  std::string surname;
  std::string initials;
};

}  // namespace

const std::vector<Table1Row> &Table1() {
  static const std::vector<Table1Row> kRows = {
      {"Abruzzo", 13, 44, 13, 10, 34, 57},
      {"Basilicata", 0, 6, 0, 0, 6, std::nullopt},
      {"Calabria", 0, 13, 0, 2, 11, 0},
      {"Campania", 13, 90, 13, 8, 82, 62},
      {"Emilia Romagna", 93, 205, 93, 103, 102, 47},
      {"Friuli Venezia Giulia", 15, 45, 15, 6, 39, 71},
      {"Lazio", 63, 97, 63, 226, -129, 22},
      {"Liguria", 7, 52, 7, 16, 36, 30},
      {"Lombardy", 233, 170, 233, 536, -366, 30},
      {"Marche", 6, 31, 6, 2, 29, 75},
      {"Molise", 0, 0, 0, 2, -2, 0},
      {"Piedmont", 57, 77, 57, 90, -13, 39},
      {"Puglia", 3, 45, 3, 1, 44, 75},
      {"Sardinia", 3, 22, 3, 6, 16, 33},
      {"Sicily", 62, 56, 62, 23, 33, 73},
      {"Tuscany", 67, 146, 67, 148, -2, 31},
      {"Trentino Alto Adige", 2, 18, 2, 8, 10, 20},
      {"Umbria", 3, 56, 3, 1, 55, 75},
      {"Veneto", 50, 120, 50, 105, 15, 32},
  };
  return kRows;
}

const std::vector<ElectronicsRow> &ElectronicsCounts() {
  static const std::vector<ElectronicsRow> kRows = {
      {"Abruzzo", 5, 3, 3, 3},
      {"Basilicata", 0, 0, 0, 0},
      {"Calabria", 6, 0, 0, 0},
      {"Campania", 24, 2, 4, 0},
      {"Emilia Romagna", 37, 6, 22, 4},
      {"Friuli Venezia Giulia", 12, 0, 3, 0},
      {"Lazio", 53, 13, 13, 3},
      {"Liguria", 15, 1, 0, 0},
      {"Lombardy", 47, 79, 39, 33},
      {"Marche", 3, 0, 1, 0},
      {"Molise", 0, 0, 0, 0},
      {"Piedmont", 26, 6, 0, 0},
      {"Puglia", 14, 1, 10, 1},
      {"Sardinia", 6, 0, 0, 0},
      {"Sicily", 21, 15, 9, 8},
      {"Trentino Alto Adige", 2, 0, 1, 0},
      {"Tuscany", 32, 6, 4, 2},
      {"Umbria", 5, 1, 4, 1},
      {"Valle d'Aosta", 0, 0, 0, 0},
      {"Veneto", 12, 1, 21, 1},
  };
  return kRows;
}

FlowMatrix BuildFlowMatrix(const std::vector<long> &intra,
                           const std::vector<long> &supply_extra,
                           const std::vector<long> &demand_extra) {
  const size_t n = intra.size();
  if (supply_extra.size() != n || demand_extra.size() != n) {
    throw std::runtime_error("margin sizes differ");
  }
  FlowMatrix flows(n, std::vector<long>(n, 0));
  for (size_t i = 0; i < n; ++i) flows[i][i] = intra[i];
  std::vector<long> supply = supply_extra, demand = demand_extra;
  for (;;) {
    size_t s = n;
    for (size_t i = 0; i < n; ++i) {
      if (supply[i] > 0 && (s == n || supply[i] > supply[s])) s = i;
    }
    if (s == n) break;
    size_t d = n;
    for (size_t j = 0; j < n; ++j) {
      if (j != s && demand[j] > 0 && (d == n || demand[j] > demand[d])) d = j;
    }
    if (d == n) throw std::runtime_error("flow margins cannot be met");
    ++flows[s][d];
    --supply[s];
    --demand[d];
  }
  for (long left : demand) {
    if (left != 0) throw std::runtime_error("flow margins cannot be met");
  }
  return flows;
}

std::vector<UECollaboration> Table1Events() {
  const std::vector<std::string> regions = ItalianRegions();
  std::vector<long> intra(regions.size(), 0), supply(regions.size(), 0),
      demand(regions.size(), 0);
  for (const Table1Row &row : Table1()) {
    const size_t i = RegionIndex(regions, row.region);
    if (row.supply_intra != row.demand_intra) {
      throw std::runtime_error("intra-regional columns disagree");
    }
    intra[i] = row.supply_intra;
    supply[i] = row.supply_extra;
    demand[i] = row.demand_extra;
  }
  std::vector<UECollaboration> events;
  int serial = 0;
  ForEachUnit(BuildFlowMatrix(intra, supply, demand),
              [&](size_t s, size_t d, long) {
                events.push_back({"T" + std::to_string(++serial),
                                  UniversityId(s), regions[s], EnterpriseId(d),
                                  regions[d], 2001 + serial % 3});
              });
  return events;
}

std::vector<SDSCollaboration> ElectronicsEvents() {
  const std::vector<std::string> regions = ItalianRegions();
  std::vector<SDSCollaboration> events;
  int serial = 0;
  ForEachUnit(ElectronicsFlows(), [&](size_t s, size_t d, long) {
    events.push_back({"X" + std::to_string(++serial), kElectronics, "09",
                      regions[s], EnterpriseId(d), regions[d],
                      2001 + serial % 3});
  });
  return events;
}

std::vector<double> ElectronicsHeadcounts() {
  std::vector<double> out;
  for (const ElectronicsRow &r : ElectronicsCounts()) {
    out.push_back(r.scientists);
  }
  return out;
}

void WriteElectronicsCorpus(const fs::path &dir) {
  using json = nlohmann::ordered_json;
  fs::create_directories(dir);
  const std::vector<std::string> regions = ItalianRegions();
  const auto &counts = ElectronicsCounts();

  WriteText(dir / "taxonomy.csv",
            "sds,uda\n"
            "CHIM/07,03\n"
            "FIS/01,02\n"
            "FIS/03,02\n"
            "ING-INF/01,09\n"
            "ING-INF/05,09\n"
            "IUS/01,12\n");

  std::string orgs = CsvLine({"org_id", "kind", "region", "canonical_name",
                              "aliases"});
  for (size_t r = 0; r < regions.size(); ++r) {
    orgs += CsvLine({UniversityId(r), "university", regions[r],
                     UniversityName(regions[r]),
                     "Univ " + regions[r] + "|Ateneo di " + regions[r]});
    orgs += CsvLine({EnterpriseId(r), "enterprise", regions[r],
                     EnterpriseName(regions[r]),
                     regions[r] + " Microsistemi"});
  }
  WriteText(dir / "organizations.csv", orgs);

  // Electronics scientists per region, then a few scientists of the other
  // sectors so that the excluded UDA and the secondary sectors are
  // populated.
  int person = 0;
  std::string roster = CsvLine({"surname", "initials", "university_id", "sds",
                                "uda", "active_years", "headcount_weight"});
  std::vector<std::vector<RosterPerson>> electronics(regions.size());
  std::map<std::pair<size_t, std::string>, std::vector<RosterPerson>> others;
  auto add = [&](size_t r, const std::string &sds, const std::string &uda) {
    RosterPerson p{Surname(person), Initials(person)};
    ++person;
    roster += CsvLine({p.surname, p.initials, UniversityId(r), sds, uda,
                       "2001|2002|2003", "1"});
    return p;
  };
  for (size_t r = 0; r < regions.size(); ++r) {
    for (int k = 0; k < counts[r].scientists; ++k) {
      electronics[r].push_back(add(r, kElectronics, "09"));
    }
  }
  const std::vector<std::pair<std::string, std::string>> kOtherSectors = {
      {"FIS/01", "02"}, {"CHIM/07", "03"}, {"IUS/01", "12"}};
  for (size_t r = 0; r < regions.size(); r += 3) {
    for (const auto &[sds, uda] : kOtherSectors) {
      others[{r, sds}].push_back(add(r, sds, uda));
      others[{r, sds}].push_back(add(r, sds, uda));
    }
  }
  WriteText(dir / "roster.csv", roster);

  std::string pubs;
  int serial = 0;
  auto emit = [&](int year, const std::vector<RosterPerson> &authors,
                  const std::vector<std::string> &affiliations) {
    json record;
    char id[16];
    std::snprintf(id, sizeof(id), "P%05d", ++serial);
    record["pub_id"] = id;
    record["year"] = year;
    json list = json::array();
    for (const RosterPerson &a : authors) {
      list.push_back({{"surname", a.surname}, {"initials", a.initials}});
    }
    record["authors"] = list;
    record["affiliations"] = affiliations;
    pubs += record.dump() + "\n";
  };
  auto university_line = [&](size_t r, int variant) {
    switch (variant % 3) {
      case 0: return "Università degli Studi " + regions[r];
      case 1: return "UNIV " + regions[r];
      default: return UniversityName(regions[r]);
    }
  };
  auto enterprise_line = [&](size_t d, int variant) {
    return variant % 2 ? regions[d] + " microsistemi"
                       : EnterpriseName(regions[d]);
  };

  std::vector<size_t> next(regions.size(), 0);
  int unit = 0;
  ForEachUnit(ElectronicsFlows(), [&](size_t s, size_t d, long) {
    ++unit;
    std::vector<RosterPerson> authors;
    const auto &pool = electronics[s];
    authors.push_back(pool[next[s]++ % pool.size()]);
    if (unit % 7 == 0) authors.push_back(pool[next[s]++ % pool.size()]);
    if (unit % 4 == 0) authors.push_back({"Ospite", "Z"});
    if (unit % 5 == 0) authors[0].surname = Accented(authors[0].surname);
    std::vector<std::string> lines = {university_line(s, unit),
                                      enterprise_line(d, unit)};
    if (unit % 3 == 0) lines.push_back(university_line(s, unit + 1));
    if (unit % 6 == 0) lines.push_back(enterprise_line(d, unit + 1));
    if (unit % 8 == 0) lines.push_back("Istituto Sconosciuto, Roma");
    emit(2001 + unit % 3, authors, lines);
  });

  // Secondary sectors: each populated region supplies two enterprises.
  for (const auto &[key, people] : others) {
    const auto &[r, sds] = key;
    const size_t d1 = (r + 5) % regions.size(), d2 = (r + 8) % regions.size();
    emit(2002, {people[0]},
         {university_line(r, 2), enterprise_line(d1, 0)});
    emit(2003, {people[1]},
         {university_line(r, 0), enterprise_line(r, 0), enterprise_line(d2, 1)});
  }

  // Records that never produce events.
  const auto &lombardy = electronics[RegionIndex(regions, "Lombardy")];
  emit(1999, {lombardy[0]},
       {UniversityName("Lombardy"), EnterpriseName("Lombardy")});
  emit(2002, {lombardy[1]}, {UniversityName("Lombardy")});
  emit(2002, {{"Ignoto", "Q"}}, {"Politecnico Immaginario"});
  emit(2003, {{"Ignoto", "Q"}},
       {UniversityName("Lazio"), EnterpriseName("Lazio")});
  WriteText(dir / "publications.jsonl", pubs);

  WriteText(dir / "config.txt",
            "# Electronics fixture\n"
            "publications = publications.jsonl\n"
            "organizations = organizations.csv\n"
            "roster = roster.csv\n"
            "taxonomy = taxonomy.csv\n"
            "window = 2001:2003\n"
            "udas = 02|03|09\n");
}

SyntheticWorld MakeSyntheticWorld(int universities_per_region,
                                  int enterprises_per_region, int sectors) {
  SyntheticWorld world;
  world.regions = ItalianRegions();
  std::vector<Organization> orgs;
  for (size_t r = 0; r < world.regions.size(); ++r) {
    for (int k = 0; k < universities_per_region; ++k) {
      std::string id = "U" + std::to_string(r * 10 + k);
      orgs.push_back({id, "uni " + id, {"uni " + id}, OrgKind::kUniversity,
                      world.regions[r]});
      world.university_ids.push_back(id);
    }
    for (int k = 0; k < enterprises_per_region; ++k) {
      std::string id = "E" + std::to_string(r * 10 + k);
      orgs.push_back({id, "ent " + id, {"ent " + id}, OrgKind::kEnterprise,
                      world.regions[r]});
      world.enterprise_ids.push_back(id);
    }
  }
  world.organizations = OrganizationIndex(std::move(orgs));
  for (int s = 0; s < sectors; ++s) {
    world.taxonomy.Add("S" + std::to_string(s), "A" + std::to_string(s % 3));
  }
  return world;
}

ResolvedPublication RandomPublication(std::mt19937 &rng,
                                      const SyntheticWorld &world,
                                      const std::string &pub_id) {
  auto pick = [&](const std::vector<std::string> &pool, int count) {
    std::vector<std::string> out;
    std::sample(pool.begin(), pool.end(), std::back_inserter(out), count, rng);
    std::shuffle(out.begin(), out.end(), rng);
    return out;
  };
  std::uniform_int_distribution<int> one_to_four(1, 4), one_to_three(1, 3);
  const auto universities = pick(world.university_ids, one_to_four(rng));
  const auto enterprises = pick(world.enterprise_ids, one_to_four(rng));
  const auto sectors = pick(world.taxonomy.SdsCodes(), one_to_three(rng));

  ResolvedPublication pub;
  pub.record.pub_id = pub_id;
  pub.record.year = 2001 + static_cast<int>(rng() % 3);
  for (const auto *pool : {&universities, &enterprises}) {
    for (const std::string &id : *pool) {
      const int mentions = one_to_three(rng);
      for (int m = 0; m < mentions; ++m) {
        pub.affiliations.push_back({"line " + id, id, MatchConfidence::kExact});
      }
    }
  }
  if (rng() % 4 == 0) {
    pub.affiliations.push_back({"unknown lab", std::nullopt,
                                MatchConfidence::kUnresolved});
  }
  std::shuffle(pub.affiliations.begin(), pub.affiliations.end(), rng);
  for (const AffiliationResolution &r : pub.affiliations) {
    pub.record.affiliations.push_back(r.raw);
  }

  std::uniform_int_distribution<size_t> any_university(
      0, universities.size() - 1);
  for (const std::string &sds : sectors) {
    const int authors = one_to_three(rng);
    for (int a = 0; a < authors; ++a) {
      const size_t index = pub.record.authors.size();
      pub.record.authors.push_back(
          {"author" + std::to_string(index), "A"});
      pub.attributions.push_back({pub_id, index,
                                  universities[any_university(rng)], sds,
                                  *world.taxonomy.UdaOf(sds),
                                  AttributionStatus::kUnique});
    }
  }
  return pub;
}

std::vector<ResolvedPublication> RandomCorpus(std::mt19937 &rng,
                                              const SyntheticWorld &world,
                                              size_t publications) {
  std::vector<ResolvedPublication> out;
  out.reserve(publications);
  for (size_t i = 0; i < publications; ++i) {
    out.push_back(RandomPublication(rng, world, "R" + std::to_string(i)));
  }
  return out;
}

}  // namespace bibreg::fixtures
