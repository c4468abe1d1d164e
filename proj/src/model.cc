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

#include "bibreg/model.h"

#include <algorithm>

namespace bibreg {

bool ScientistRosterEntry::ActiveIn(int year) const {
  return std::binary_search(active_years.begin(), active_years.end(), year);
}

bool SectorTaxonomy::Add(const std::string &sds, const std::string &uda) {
  auto it = parent_.find(sds);
  if (it != parent_.end()) return it->second == uda;
  parent_.emplace(sds, uda);
  if (std::find(udas_.begin(), udas_.end(), uda) == udas_.end()) {
    udas_.push_back(uda);
  }
  return true;
}

const std::string *SectorTaxonomy::UdaOf(const std::string &sds) const {
  auto it = parent_.find(sds);
  return it == parent_.end() ? nullptr : &it->second;
}

SectorTaxonomy SectorTaxonomy::RestrictedTo(
    const std::vector<std::string> &udas) const {
  if (udas.empty()) return *this;
  SectorTaxonomy out;
  for (const std::string &uda : udas_) {
    if (std::find(udas.begin(), udas.end(), uda) == udas.end()) continue;
    for (const auto &[sds, parent] : parent_) {
      if (parent == uda) out.Add(sds, parent);
    }
  }
  return out;
}

std::vector<std::string> SectorTaxonomy::SdsCodes() const {
  std::vector<std::string> codes;
  codes.reserve(parent_.size());
  for (const auto &entry : parent_) codes.push_back(entry.first);
  return codes;
}

OrganizationIndex::OrganizationIndex(std::vector<Organization> organizations)
    : organizations_(std::move(organizations)) {
  for (size_t i = 0; i < organizations_.size(); ++i) {
    by_id_.emplace(organizations_[i].org_id, i);
  }
}

const Organization *OrganizationIndex::Find(const std::string &org_id) const {
  auto it = by_id_.find(org_id);
  return it == by_id_.end() ? nullptr : &organizations_[it->second];
}

std::vector<std::string> ItalianRegions() {
  return {"Abruzzo",        "Basilicata",          "Calabria",
          "Campania",       "Emilia Romagna",      "Friuli Venezia Giulia",
          "Lazio",          "Liguria",             "Lombardy",
          "Marche",         "Molise",              "Piedmont",
          "Puglia",         "Sardinia",            "Sicily",
          "Trentino Alto Adige", "Tuscany",        "Umbria",
          "Valle d'Aosta",  "Veneto"};
}

}  // namespace bibreg
