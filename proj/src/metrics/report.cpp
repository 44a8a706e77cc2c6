//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "roundtrip/metrics/report.h"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "roundtrip/network/route_json.h"

namespace roundtrip {
namespace {

std::string fixed(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string percent(double fraction) { return fixed(100.0 * fraction); }

std::vector<std::string> header(const std::vector<ReportRow> &rows) {
  std::vector<std::string> h = {"group", "n", "avg_atoms", "stock_ratio"};
  const std::size_t k = rows.empty() ? kReportTopK : rows.front().topk.size();
  for (std::size_t i = 1; i <= k; ++i) h.push_back("top" + std::to_string(i));
  h.push_back("search_success");
  return h;
}

std::vector<std::string> cells(const ReportRow &r) {
  std::vector<std::string> c = {r.group, std::to_string(r.n), fixed(r.avg_atoms),
                                percent(r.stock_ratio)};
  for (double t : r.topk) c.push_back(percent(t));
  c.push_back(percent(r.search_success));
  return c;
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

nlohmann::ordered_json optional_json(const std::optional<double> &v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

std::string optional_percent(const std::optional<double> &v) {
  return v ? percent(*v) + "%" : "undefined";
}

}  // namespace

void write_report_csv(const std::vector<ReportRow> &rows, std::ostream &out) {
  const std::vector<std::string> h = header(rows);
  for (std::size_t i = 0; i < h.size(); ++i) out << (i ? "," : "") << h[i];
  out << '\n';
  for (const ReportRow &r : rows) {
    const std::vector<std::string> c = cells(r);
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << csv_field(c[i]);
    out << '\n';
  }
}

std::string format_report_text(const std::vector<ReportRow> &rows) {
  std::vector<std::vector<std::string>> table = {header(rows)};
  for (const ReportRow &r : rows) table.push_back(cells(r));
  std::vector<std::size_t> width(table.front().size(), 0);
  for (const auto &row : table) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto &row : table) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string pad(width[i] - row[i].size(), ' ');
      // First column left aligned, numbers right aligned.
      out += i == 0 ? row[i] + pad : "  " + pad + row[i];
    }
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json report_json(const std::vector<ReportRow> &rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ReportRow &r : rows) {
    nlohmann::ordered_json j;
    j["group"] = r.group;
    j["n"] = r.n;
    j["avg_atoms"] = r.avg_atoms;
    j["stock_ratio"] = r.stock_ratio;
    for (std::size_t k = 0; k < r.topk.size(); ++k) j["top" + std::to_string(k + 1)] = r.topk[k];
    j["search_success"] = r.search_success;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string format_confusion_text(const ConfusionCounts &c, const ConfusionStats &s) {
  std::ostringstream out;
  out << "TP " << c.tp << "  TN " << c.tn << "  FP " << c.fp << "  FN " << c.fn << '\n';
  out << "accuracy  " << optional_percent(s.accuracy) << '\n';
  out << "precision " << optional_percent(s.precision) << '\n';
  out << "recall    " << optional_percent(s.recall) << '\n';
  out << "f1        " << optional_percent(s.f1) << '\n';
  return out.str();
}

nlohmann::ordered_json confusion_json(const ConfusionCounts &c, const ConfusionStats &s) {
  nlohmann::ordered_json j;
  j["tp"] = c.tp;
  j["tn"] = c.tn;
  j["fp"] = c.fp;
  j["fn"] = c.fn;
  j["accuracy"] = optional_json(s.accuracy);
  j["precision"] = optional_json(s.precision);
  j["recall"] = optional_json(s.recall);
  j["f1"] = optional_json(s.f1);
  return j;
}

nlohmann::ordered_json eval_record_json(const EvalRecord &r) {
  nlohmann::ordered_json j;
  j["smiles"] = r.smiles;
  j["group"] = r.group;
  j["heavy_atoms"] = r.heavy_atoms;
  j["in_stock"] = r.in_stock;
  j["solved"] = r.solved;
  j["calls"] = r.calls;
  j["records"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    const RoundTripRecord &rec = r.records[i];
    nlohmann::ordered_json e;
    e["route_id"] = i;
    e["score"] = rec.score;
    e["shortcircuit"] = rec.is_stock_shortcircuit;
    e["failure_step"] = rec.failure_step ? nlohmann::ordered_json(*rec.failure_step)
                                         : nlohmann::ordered_json(nullptr);
    e["route"] = route_to_json(rec.route);
    j["records"].push_back(std::move(e));
  }
  if (r.matched) j["matched"] = *r.matched;
  if (r.error) j["error"] = *r.error;
  return j;
}

EvalRecord eval_record_from_json(const nlohmann::json &j) {
  try {
    EvalRecord r;
    r.smiles = j.at("smiles").get<std::string>();
    r.group = j.value("group", "");
    r.heavy_atoms = j.at("heavy_atoms").get<int>();
    r.in_stock = j.at("in_stock").get<bool>();
    r.solved = j.at("solved").get<bool>();
    r.calls = j.at("calls").get<int>();
    for (const auto &e : j.at("records")) {
      RoundTripRecord rec;
      rec.molecule = r.smiles;
      rec.score = e.at("score").get<double>();
      rec.is_stock_shortcircuit = e.at("shortcircuit").get<bool>();
      if (!e.at("failure_step").is_null()) rec.failure_step = e["failure_step"].get<int>();
      const auto &route = e.at("route");
      if (route.at("steps").empty()) {
        rec.route.target = route.at("target").get<std::string>();
      } else {
        rec.route = route_from_json(route);
      }
      r.records.push_back(std::move(rec));
    }
    if (j.contains("matched")) r.matched = j["matched"].get<bool>();
    if (j.contains("error")) r.error = j["error"].get<std::string>();
    return r;
  } catch (const nlohmann::json::exception &e) {
    throw std::runtime_error(std::string("bad eval record: ") + e.what());
  }
}

void write_eval_records_jsonl(const std::vector<EvalRecord> &records, std::ostream &out) {
  for (const EvalRecord &r : records) out << eval_record_json(r).dump() << '\n';
}

std::vector<EvalRecord> read_eval_records_jsonl(std::istream &in) {
  std::vector<EvalRecord> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(eval_record_from_json(nlohmann::json::parse(line)));
    } catch (const std::exception &e) {
      throw std::runtime_error("records line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace roundtrip
