//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "roundtrip/cli/config.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace roundtrip::cli {
namespace {

std::string trim(const std::string &s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const std::string &key, const std::string &value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw CliError(kInputError, "bad value for " + key + ": '" + value + "'");
  }
  return out;
}

int parse_int(const std::string &key, const std::string &value, int lo, int hi) {
  const int v = parse_number<int>(key, value);
  if (v < lo || v > hi) {
    throw CliError(kInputError, key + " must be in [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
  }
  return v;
}

using Setter = std::function<void(RunConfig &, const std::string &, const std::string &)>;

Setter path(std::string RunConfig::*field) {
  return [field](RunConfig &c, const std::string &, const std::string &v) { c.*field = v; };
}

Setter integer(int RunConfig::*field, int lo, int hi) {
  return [field, lo, hi](RunConfig &c, const std::string &k, const std::string &v) {
    c.*field = parse_int(k, v, lo, hi);
  };
}

const std::map<std::string, Setter> &setters() {
  static const std::map<std::string, Setter> table = {
      {"reactions", path(&RunConfig::reactions)},
      {"dataset", path(&RunConfig::dataset)},
      {"stock", path(&RunConfig::stock)},
      {"retro_library", path(&RunConfig::retro_library)},
      {"forward_library", path(&RunConfig::forward_library)},
      {"routes", path(&RunConfig::routes)},
      {"molecules", path(&RunConfig::molecules)},
      {"labels", path(&RunConfig::labels)},
      {"records", path(&RunConfig::records)},
      {"out", path(&RunConfig::out)},
      {"counts", path(&RunConfig::counts)},
      {"beam", integer(&RunConfig::beam, 1, 50)},
      {"depth", integer(&RunConfig::depth, 1, 15)},
      {"budget", integer(&RunConfig::budget, 1, 1000000)},
      {"topk", integer(&RunConfig::topk, 1, 50)},
      {"radius", integer(&RunConfig::radius, 0, 4)},
      {"route_budget", integer(&RunConfig::route_budget, 0, 1000000)},
      {"fp_radius", integer(&RunConfig::fp_radius, 0, 6)},
      {"fp_width", integer(&RunConfig::fp_width, 64, 1 << 20)},
      {"jobs", integer(&RunConfig::jobs, 1, 256)},
      {"seed",
       [](RunConfig &c, const std::string &k, const std::string &v) {
         c.seed = parse_number<std::uint64_t>(k, v);
       }},
      {"split",
       [](RunConfig &c, const std::string &k, const std::string &v) {
         std::vector<int> parts;
         std::stringstream in(v);
         std::string item;
         while (std::getline(in, item, ',')) parts.push_back(parse_int(k, trim(item), 0, 100));
         if (parts.size() != 3 || parts[0] + parts[1] + parts[2] != 100) {
           throw CliError(kInputError, "split must be three percentages summing to 100");
         }
         c.split = parts;
       }},
  };
  return table;
}

}  // namespace

void set_value(RunConfig &cfg, const std::string &key, const std::string &value) {
  const auto it = setters().find(key);
  if (it == setters().end()) throw CliError(kInputError, "unknown config key: " + key);
  it->second(cfg, key, trim(value));
}

void load_config_file(RunConfig &cfg, const std::filesystem::path &file) {
  std::ifstream in(file);
  if (!in) throw CliError(kInputError, "cannot read config file " + file.string());
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line.substr(0, line.find('#')));
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw CliError(kInputError, file.string() + ":" + std::to_string(line_no) + ": expected key = value");
    }
    set_value(cfg, trim(t.substr(0, eq)), t.substr(eq + 1));
  }
}

void validate(const RunConfig &cfg) {
  if (cfg.topk > cfg.beam) throw CliError(kInputError, "topk must not exceed beam");
  if (cfg.fp_width & (cfg.fp_width - 1)) {
    throw CliError(kInputError, "fp_width must be a power of two");
  }
}

std::string canonical_text(const RunConfig &cfg) {
  std::map<std::string, std::string> kv = {
      {"reactions", cfg.reactions},
      {"dataset", cfg.dataset},
      {"stock", cfg.stock},
      {"retro_library", cfg.retro_library},
      {"forward_library", cfg.forward_library},
      {"routes", cfg.routes},
      {"molecules", cfg.molecules},
      {"labels", cfg.labels},
      {"records", cfg.records},
      {"counts", cfg.counts},
      {"beam", std::to_string(cfg.beam)},
      {"depth", std::to_string(cfg.depth)},
      {"budget", std::to_string(cfg.budget)},
      {"topk", std::to_string(cfg.topk)},
      {"radius", std::to_string(cfg.radius)},
      {"route_budget", std::to_string(cfg.route_budget)},
      {"fp_radius", std::to_string(cfg.fp_radius)},
      {"fp_width", std::to_string(cfg.fp_width)},
      {"seed", std::to_string(cfg.seed)},
      {"split", std::to_string(cfg.split[0]) + "," + std::to_string(cfg.split[1]) + "," +
                    std::to_string(cfg.split[2])},
  };
  std::string out;
  for (const auto &[k, v] : kv) out += k + "=" + v + "\n";
  return out;
}

std::uint64_t fnv1a64_bytes(const std::string &bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string config_hash(const RunConfig &cfg) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64_bytes(canonical_text(cfg))));
  return buf;
}

}  // namespace roundtrip::cli
