//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_CLI_COMMANDS_H_
#define ROUNDTRIP_CLI_COMMANDS_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "roundtrip/cli/config.h"

namespace roundtrip::cli {

// Each command writes its artifacts and a manifest.json into cfg.out and
// logs a short summary to `log`. Failures throw CliError.

// reactions -> dataset.jsonl, ingest_stats.json, drops.txt
void cmd_ingest(const RunConfig &cfg, std::ostream &log);
// dataset -> network.json, targets.txt, routes.jsonl, stock.txt,
// targets_{train,validation,test}.txt, routes_test.jsonl, dataset_train.jsonl
void cmd_build(const RunConfig &cfg, std::ostream &log);
// dataset -> retro_library.jsonl, forward_library.jsonl, fit_stats.json
void cmd_fit(const RunConfig &cfg, std::ostream &log);
// molecules + libraries + stock -> eval_records.jsonl, timings.jsonl,
// report.{csv,txt,json}
void cmd_eval(const RunConfig &cfg, std::ostream &log);
// reference routes + libraries + stock (+ labels) -> bench_records.jsonl,
// timings.jsonl, bench.{json,txt}. With cfg.counts set, only the statistics
// of those counts are reported.
void cmd_bench(const RunConfig &cfg, std::ostream &log);
// eval records -> report.{csv,txt,json}
void cmd_report(const RunConfig &cfg, std::ostream &log);

// Parses arguments and dispatches; returns the process exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace roundtrip::cli

#endif  // ROUNDTRIP_CLI_COMMANDS_H_
