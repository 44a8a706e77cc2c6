//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "roundtrip/templates/library_io.h"

#include <string>

#include <json.hpp>

namespace roundtrip {

namespace {

template <typename T>
void write_jsonl(const TemplateLibrary<T> &lib, std::ostream &out) {
  for (const T &t : lib.templates()) {
    nlohmann::ordered_json j;
    j["id"] = t.id;
    j["direction"] = to_string(T::kDirection);
    j["pattern"] = template_text(t, T::kDirection);
    j["radius"] = t.radius;
    j["support"] = t.support;
    out << j.dump() << '\n';
  }
}

template <typename T>
TemplateLibrary<T> read_jsonl(std::istream &in) {
  std::vector<T> templates;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "template library line " + std::to_string(line_no);
    try {
      const nlohmann::json j = nlohmann::json::parse(line);
      if (direction_from_string(j.at("direction").get<std::string>()) != T::kDirection) {
        throw std::runtime_error("direction mismatch");
      }
      T t;
      static_cast<ReactionTemplate &>(t) =
          parse_template_text(j.at("pattern").get<std::string>(), T::kDirection);
      t.id = j.at("id").get<int>();
      t.radius = j.at("radius").get<int>();
      t.support = j.at("support").get<int>();
      if (t.support < 1 || t.radius < 0) throw std::runtime_error("bad support or radius");
      templates.push_back(std::move(t));
    } catch (const std::exception &e) {
      throw std::runtime_error(where + ": " + e.what());
    }
  }
  return TemplateLibrary<T>(std::move(templates));
}

}  // namespace

void write_library_jsonl(const RetroLibrary &lib, std::ostream &out) { write_jsonl(lib, out); }

void write_library_jsonl(const ForwardLibrary &lib, std::ostream &out) { write_jsonl(lib, out); }

RetroLibrary read_retro_library(std::istream &in) { return read_jsonl<RetroTemplate>(in); }

ForwardLibrary read_forward_library(std::istream &in) {
  return read_jsonl<ForwardTemplate>(in);
}

}  // namespace roundtrip
