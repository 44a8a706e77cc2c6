//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_CLI_CONFIG_H_
#define ROUNDTRIP_CLI_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace roundtrip::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kInputError = 2,
  kEmptyModel = 3,
  kSchemaMismatch = 4,
};

class CliError: public std::runtime_error {
public:
  CliError(ExitCode code, const std::string &what): std::runtime_error(what), code_(code) {}
  ExitCode code() const { return code_; }

private:
  ExitCode code_;
};

struct RunConfig {
  // Paths; empty when unset.
  std::string reactions;
  std::string dataset;
  std::string stock;
  std::string retro_library;
  std::string forward_library;
  std::string routes;
  std::string molecules;
  std::string labels;
  std::string records;
  std::string out = "out";

  // Planner.
  int beam = 5;
  int depth = 15;
  int budget = 500;
  int topk = 5;
  // Template extraction radius.
  int radius = 1;
  // Routes kept per target when building.
  int route_budget = 64;
  // Train/validation/test percentages.
  std::vector<int> split = {98, 1, 1};
  // Fingerprint.
  int fp_radius = 2;
  int fp_width = 2048;

  int jobs = 1;
  std::uint64_t seed = 42;

  // Confusion counts "tp,tn,fp,fn" for a counts-only bench report.
  std::string counts;
};

// Sets one key from text. Throws CliError(kInputError) on an unknown key or
// a value out of range.
void set_value(RunConfig &cfg, const std::string &key, const std::string &value);

// key = value lines; blank lines and '#' comments skipped.
void load_config_file(RunConfig &cfg, const std::filesystem::path &path);

// Checks cross-field ranges. Throws CliError(kInputError).
void validate(const RunConfig &cfg);

// Every key except jobs and out, sorted, as "key=value\n" lines. Two configs
// that yield the same outputs serialize identically.
std::string canonical_text(const RunConfig &cfg);

std::uint64_t fnv1a64_bytes(const std::string &bytes);
// 16 lowercase hex digits of fnv1a64_bytes(canonical_text(cfg)).
std::string config_hash(const RunConfig &cfg);

}  // namespace roundtrip::cli

#endif  // ROUNDTRIP_CLI_CONFIG_H_
