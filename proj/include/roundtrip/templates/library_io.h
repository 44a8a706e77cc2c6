//
// Project roundtrip - Copyright 2026 The roundtrip Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROUNDTRIP_TEMPLATES_LIBRARY_IO_H_
#define ROUNDTRIP_TEMPLATES_LIBRARY_IO_H_

#include <istream>
#include <ostream>

#include "roundtrip/templates/predict.h"

namespace roundtrip {

// One JSON object per line: {id, direction, pattern, radius, support}.
void write_library_jsonl(const RetroLibrary &lib, std::ostream &out);
void write_library_jsonl(const ForwardLibrary &lib, std::ostream &out);

// Throw std::runtime_error on malformed records or a direction mismatch.
RetroLibrary read_retro_library(std::istream &in);
ForwardLibrary read_forward_library(std::istream &in);

}  // namespace roundtrip

#endif  // ROUNDTRIP_TEMPLATES_LIBRARY_IO_H_
