//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "roundtrip/metrics/metrics.h"

#include <map>
#include <stdexcept>

namespace roundtrip {

bool match_starting_materials(const SyntheticRoute &pred, const std::vector<SyntheticRoute> &refs) {
  for (const SyntheticRoute &r : refs) {
    if (r.leaves == pred.leaves) return true;
  }
  return false;
}

double search_success_rate(const std::vector<EvalRecord> &records) {
  if (records.empty()) return 0.0;
  std::size_t solved = 0;
  for (const EvalRecord &r : records) solved += r.solved ? 1 : 0;
  return static_cast<double>(solved) / static_cast<double>(records.size());
}

ConfusionStats confusion_stats(const ConfusionCounts &c) {
  const auto ratio = [](std::int64_t num, std::int64_t den) -> std::optional<double> {
    if (den == 0) return std::nullopt;
    return static_cast<double>(num) / static_cast<double>(den);
  };
  ConfusionStats s;
  s.accuracy = ratio(c.tp + c.tn, c.total());
  s.precision = ratio(c.tp, c.tp + c.fp);
  s.recall = ratio(c.tp, c.tp + c.fn);
  if (s.precision && s.recall && *s.precision + *s.recall > 0.0) {
    s.f1 = 2.0 * *s.precision * *s.recall / (*s.precision + *s.recall);
  }
  return s;
}

std::string_view to_string(Cell cell) {
  switch (cell) {
  case Cell::kTP: return "TP";
  case Cell::kTN: return "TN";
  case Cell::kFP: return "FP";
  case Cell::kFN: return "FN";
  }
  return "?";
}

Cell classify_route(const EvalRecord &record, bool feasible) {
  const bool perfect = !record.records.empty() && record.records.front().score == 1.0;
  if (feasible) return perfect ? Cell::kTP : Cell::kFN;
  return perfect ? Cell::kFP : Cell::kTN;
}

ConfusionCounts tally(const std::vector<EvalRecord> &records, const std::vector<bool> &feasible) {
  if (records.size() != feasible.size()) {
    throw std::invalid_argument("label count does not match record count");
  }
  ConfusionCounts c;
  for (std::size_t i = 0; i < records.size(); ++i) {
    switch (classify_route(records[i], feasible[i])) {
    case Cell::kTP: ++c.tp; break;
    case Cell::kTN: ++c.tn; break;
    case Cell::kFP: ++c.fp; break;
    case Cell::kFN: ++c.fn; break;
    }
  }
  return c;
}

double topk_success(const std::vector<EvalRecord> &records, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (records.empty()) return 0.0;
  std::size_t hits = 0;
  for (const EvalRecord &r : records) {
    const std::size_t n = std::min<std::size_t>(k, r.records.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (r.records[i].score == 1.0) {
        ++hits;
        break;
      }
    }
  }
  return static_cast<double>(hits) / static_cast<double>(records.size());
}

std::vector<ReportRow> summarize(const std::vector<EvalRecord> &records,
                                 const std::vector<std::string> &groups, int max_k) {
  if (records.size() != groups.size()) {
    throw std::invalid_argument("group count does not match record count");
  }
  std::vector<std::string> order;
  std::map<std::string, std::vector<EvalRecord>> members;
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto [it, inserted] = members.try_emplace(groups[i]);
    if (inserted) order.push_back(groups[i]);
    it->second.push_back(records[i]);
  }
  std::vector<ReportRow> rows;
  for (const std::string &g : order) {
    const std::vector<EvalRecord> &rs = members.at(g);
    ReportRow row;
    row.group = g;
    row.n = static_cast<int>(rs.size());
    double atoms = 0.0;
    int stock = 0;
    for (const EvalRecord &r : rs) {
      atoms += r.heavy_atoms;
      stock += r.in_stock ? 1 : 0;
    }
    row.avg_atoms = atoms / row.n;
    row.stock_ratio = static_cast<double>(stock) / row.n;
    for (int k = 1; k <= max_k; ++k) row.topk.push_back(topk_success(rs, k));
    row.search_success = search_success_rate(rs);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ReportRow> summarize(const std::vector<EvalRecord> &records, int max_k) {
  std::vector<std::string> groups;
  for (const EvalRecord &r : records) groups.push_back(r.group);
  return summarize(records, groups, max_k);
}

std::vector<double> topk_gaps(const ReportRow &from, const ReportRow &to) {
  if (from.topk.size() != to.topk.size()) throw std::invalid_argument("rows differ in k");
  std::vector<double> out;
  for (std::size_t k = 0; k < from.topk.size(); ++k) out.push_back(100.0 * (to.topk[k] - from.topk[k]));
  return out;
}

}  // namespace roundtrip
