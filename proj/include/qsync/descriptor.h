// Copyright 2026 The qsync Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSYNC_DESCRIPTOR_H
#define QSYNC_DESCRIPTOR_H

#include <cstdint>
#include <string>

#include "qsync/qsync_code.h"

namespace qsync {

/// Canonical JSON text for a code: keys sorted, two-space indent, trailing newline.
std::string code_descriptor_json(const CyclicCode &code);
std::string descriptor_json(const QsyncCode &code);

/// Parses a descriptor and rebuilds the code through QsyncCode::build. Throws InvalidInput when the
/// text is malformed or when a recorded derived field (k, f, n_ext, k_logical, sync table,
/// computed distance) disagrees with the rebuilt code; construction clauses surface as
/// PreconditionViolation.
QsyncCode parse_descriptor(const std::string &text);
QsyncCode load_descriptor(const std::string &path);
void save_descriptor(const QsyncCode &code, const std::string &path);

/// 64-bit FNV-1a over the canonical descriptor text.
uint64_t descriptor_hash(const QsyncCode &code);
std::string hex64(uint64_t value);

}  // namespace qsync

#endif
