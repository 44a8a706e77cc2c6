//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_METRICS_METRICS_H_
#define ROUNDTRIP_METRICS_METRICS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "roundtrip/network/route.h"
#include "roundtrip/simulate/simulate.h"

namespace roundtrip {

struct EvalRecord {
  std::string smiles;
  // Report group label.
  std::string group;
  int heavy_atoms = 0;
  bool in_stock = false;
  // A route was found, or the molecule is in stock.
  bool solved = false;
  int calls = 0;
  // Round-trip records for the top-k routes, in planner order.
  std::vector<RoundTripRecord> records;
  // Present only when reference routes were supplied.
  std::optional<bool> matched;
  // Set when scoring this molecule raised an error.
  std::optional<std::string> error;
};

// True iff the leaf set of `pred` equals that of some reference.
bool match_starting_materials(const SyntheticRoute &pred, const std::vector<SyntheticRoute> &refs);

// Fraction of solved records; 0 for an empty list.
double search_success_rate(const std::vector<EvalRecord> &records);

struct ConfusionCounts {
  std::int64_t tp = 0;
  std::int64_t tn = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;

  std::int64_t total() const { return tp + tn + fp + fn; }
  bool operator==(const ConfusionCounts &) const = default;
};

// Fractions in [0, 1]; empty when the denominator is zero.
struct ConfusionStats {
  std::optional<double> accuracy;
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f1;
};

ConfusionStats confusion_stats(const ConfusionCounts &c);

enum class Cell { kTP, kTN, kFP, kFN };

std::string_view to_string(Cell cell);

// Feasible routes should score exactly 1 on the top-1 record; a record with
// no routes scores 0.
Cell classify_route(const EvalRecord &record, bool feasible);

// Throws std::invalid_argument when the sizes differ.
ConfusionCounts tally(const std::vector<EvalRecord> &records, const std::vector<bool> &feasible);

// Fraction of records where one of the first k round-trip records scores
// exactly 1. Throws std::invalid_argument for k < 1.
double topk_success(const std::vector<EvalRecord> &records, int k);

inline constexpr int kReportTopK = 5;

struct ReportRow {
  std::string group;
  int n = 0;
  double avg_atoms = 0.0;
  // Fractions in [0, 1].
  double stock_ratio = 0.0;
  std::vector<double> topk;
  double search_success = 0.0;
};

// One row per distinct group label, in order of first appearance; groups[i]
// labels records[i]. Throws std::invalid_argument when the sizes differ.
std::vector<ReportRow> summarize(const std::vector<EvalRecord> &records,
                                 const std::vector<std::string> &groups,
                                 int max_k = kReportTopK);

// Groups by EvalRecord::group.
std::vector<ReportRow> summarize(const std::vector<EvalRecord> &records, int max_k = kReportTopK);

// Top-k differences in percentage points, `to` minus `from`.
std::vector<double> topk_gaps(const ReportRow &from, const ReportRow &to);

}  // namespace roundtrip

#endif  // ROUNDTRIP_METRICS_METRICS_H_
