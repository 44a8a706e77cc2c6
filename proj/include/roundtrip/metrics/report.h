//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_METRICS_REPORT_H_
#define ROUNDTRIP_METRICS_REPORT_H_

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "roundtrip/metrics/metrics.h"

namespace roundtrip {

// Columns: group, n, avg_atoms, stock_ratio, top1..topK, search_success.
// Ratios are written as percentages with two decimals.
void write_report_csv(const std::vector<ReportRow> &rows, std::ostream &out);
std::string format_report_text(const std::vector<ReportRow> &rows);
nlohmann::ordered_json report_json(const std::vector<ReportRow> &rows);

std::string format_confusion_text(const ConfusionCounts &c, const ConfusionStats &s);
nlohmann::ordered_json confusion_json(const ConfusionCounts &c, const ConfusionStats &s);

nlohmann::ordered_json eval_record_json(const EvalRecord &r);
// Throws std::runtime_error on malformed records.
EvalRecord eval_record_from_json(const nlohmann::json &j);

void write_eval_records_jsonl(const std::vector<EvalRecord> &records, std::ostream &out);
std::vector<EvalRecord> read_eval_records_jsonl(std::istream &in);

}  // namespace roundtrip

#endif  // ROUNDTRIP_METRICS_REPORT_H_
