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

#include "bibreg/config.h"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bibreg/error.h"
#include "bibreg/text.h"

namespace bibreg {
namespace {

namespace fs = std::filesystem;

std::string ResolvePath(const std::string &value, const std::string &base_dir) {
  fs::path p(value);
  if (p.is_relative() && !base_dir.empty()) p = fs::path(base_dir) / p;
  return fs::weakly_canonical(p).string();
}

double ParseNumber(const std::string &key, const std::string &value) {
  std::string_view text = Trim(value);
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::kUsage,
                "bad number \"" + value + "\" for `" + key + "`");
  }
  return out;
}

std::vector<std::string> ParseList(const std::string &value) {
  std::vector<std::string> out;
  for (const std::string &item : Split(value, '|')) {
    std::string_view t = Trim(item);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

std::string JoinList(const std::vector<std::string> &items) {
  std::string out;
  for (const std::string &s : items) out += (out.empty() ? "" : "|") + s;
  return out;
}

// Shortest text that parses back to the same double.
std::string ExactNumber(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

YearWindow ParseWindow(const std::string &text) {
  auto parts = Split(text, ':');
  int first = 0, last = 0;
  auto parse = [](std::string_view s, int *v) {
    s = Trim(s);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *v);
    return !s.empty() && ec == std::errc() && ptr == s.data() + s.size();
  };
  if (parts.size() != 2 || !parse(parts[0], &first) ||
      !parse(parts[1], &last) || first > last) {
    throw Error(ErrorKind::kUsage,
                "window must look like <first>:<last>, got \"" + text + "\"");
  }
  return {first, last};
}

void SetConfigValue(RunConfig *config, const std::string &key,
                    const std::string &value, const std::string &base_dir) {
  const std::string v(Trim(value));
  if (key == "publications") {
    config->publications = ResolvePath(v, base_dir);
  } else if (key == "organizations") {
    config->organizations = ResolvePath(v, base_dir);
  } else if (key == "roster") {
    config->roster = ResolvePath(v, base_dir);
  } else if (key == "taxonomy") {
    config->taxonomy = ResolvePath(v, base_dir);
  } else if (key == "out") {
    config->out_dir = ResolvePath(v, base_dir);
  } else if (key == "window") {
    config->window = ParseWindow(v);
  } else if (key == "regions") {
    config->regions = ParseList(v);
  } else if (key == "udas") {
    config->udas = ParseList(v);
  } else if (key == "ambiguity") {
    if (v == "strict") config->ambiguity = AmbiguityPolicy::kStrict;
    else if (v == "all") config->ambiguity = AmbiguityPolicy::kAll;
    else throw Error(ErrorKind::kUsage, "ambiguity must be strict or all");
  } else if (key == "sds_region_split") {
    if (v == "per-region") config->sds_region_split = SdsRegionSplit::kPerRegion;
    else if (v == "single") config->sds_region_split = SdsRegionSplit::kSingle;
    else throw Error(ErrorKind::kUsage,
                     "sds_region_split must be per-region or single");
  } else if (key == "quadrant_share_threshold") {
    config->quadrant_share_threshold = ParseNumber(key, v);
  } else if (key == "aggregation_na") {
    if (v == "coerce-zero") {
      config->aggregation_na = AggregationNaPolicy::kCoerceZero;
    } else if (v == "renormalize") {
      config->aggregation_na = AggregationNaPolicy::kRenormalize;
    } else {
      throw Error(ErrorKind::kUsage,
                  "aggregation_na must be coerce-zero or renormalize");
    }
  } else if (key == "capacity") {
    config->capacity.clear();
    for (const std::string &item : ParseList(v)) {
      size_t colon = item.rfind(':');
      if (colon == std::string::npos || colon == 0) {
        throw Error(ErrorKind::kUsage,
                    "capacity entries look like <sds>:<multiplier>");
      }
      config->capacity[std::string(Trim(item.substr(0, colon)))] =
          ParseNumber(key, item.substr(colon + 1));
    }
  } else {
    throw Error(ErrorKind::kUsage, "unknown config key `" + key + "`");
  }
}

RunConfig ParseConfig(std::istream &in, const std::string &source,
                      const std::string &base_dir) {
  RunConfig config;
  std::string line;
  size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view text = Trim(line);
    if (text.empty() || text.front() == '#') continue;
    size_t eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::kUsage, source + ":" + std::to_string(number) +
                                         ": expected key = value");
    }
    std::string key(Trim(text.substr(0, eq)));
    std::string value(Trim(text.substr(eq + 1)));
    try {
      SetConfigValue(&config, key, value, base_dir);
    } catch (const Error &e) {
      throw Error(ErrorKind::kUsage,
                  source + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  return config;
}

RunConfig LoadConfig(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open config " + path);
  fs::path base = fs::absolute(fs::path(path)).parent_path();
  return ParseConfig(in, path, base.string());
}

void ValidateConfig(const RunConfig &config) {
  if (!(config.quadrant_share_threshold > 0.0 &&
        config.quadrant_share_threshold < 1.0)) {
    throw Error(ErrorKind::kUsage, "quadrant_share_threshold must be in (0,1)");
  }
  for (const auto &[sds, multiplier] : config.capacity) {
    if (!(multiplier > 0.0)) {
      throw Error(ErrorKind::kUsage,
                  "capacity multiplier for " + sds + " must be positive");
    }
  }
  if (config.regions.empty()) {
    throw Error(ErrorKind::kUsage, "region set is empty");
  }
  const std::pair<const char *, const std::string *> inputs[] = {
      {"publications", &config.publications},
      {"organizations", &config.organizations},
      {"roster", &config.roster},
      {"taxonomy", &config.taxonomy}};
  for (const auto &[key, value] : inputs) {
    if (value->empty()) {
      throw Error(ErrorKind::kUsage, std::string("missing `") + key +
                                         "` path in config");
    }
  }
}

std::string SerializeConfig(const RunConfig &config) {
  std::ostringstream out;
  out << "publications = " << config.publications << '\n';
  out << "organizations = " << config.organizations << '\n';
  out << "roster = " << config.roster << '\n';
  out << "taxonomy = " << config.taxonomy << '\n';
  out << "window = " << config.window.first << ':' << config.window.last
      << '\n';
  out << "regions = " << JoinList(config.regions) << '\n';
  out << "udas = " << JoinList(config.udas) << '\n';
  out << "ambiguity = "
      << (config.ambiguity == AmbiguityPolicy::kStrict ? "strict" : "all")
      << '\n';
  out << "sds_region_split = "
      << (config.sds_region_split == SdsRegionSplit::kPerRegion ? "per-region"
                                                                : "single")
      << '\n';
  out << "quadrant_share_threshold = "
      << ExactNumber(config.quadrant_share_threshold) << '\n';
  out << "aggregation_na = "
      << (config.aggregation_na == AggregationNaPolicy::kCoerceZero
              ? "coerce-zero"
              : "renormalize")
      << '\n';
  std::string capacity;
  for (const auto &[sds, m] : config.capacity) {
    capacity += (capacity.empty() ? "" : "|") + sds + ":" + ExactNumber(m);
  }
  out << "capacity = " << capacity << '\n';
  return out.str();
}

}  // namespace bibreg
