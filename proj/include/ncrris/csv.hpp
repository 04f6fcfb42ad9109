// SPDX-License-Identifier: Apache-2.0
//
// ncrris - closed-form SNR analysis of RIS- and repeater-assisted uplinks
// Copyright (C) 2026 The ncrris authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <ostream>
#include <string>

#include "ncrris/sweep.hpp"

namespace ncrris {

/// Comma-separated output: one header row, numbers with 9 significant
/// digits, `inf`/`-inf`/`nan` for non-finite values, LF line endings. Text
/// cells are quoted when they contain a comma, quote or newline.
void emit_csv(const SweepTable& table, std::ostream& out);

/// Writes the table to `path`; failures throw IoError naming the path.
void write_csv(const SweepTable& table, const std::string& path);

std::string format_number(double v);

}  // namespace ncrris
