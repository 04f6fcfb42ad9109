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

#include "ncrris/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "ncrris/error.hpp"

namespace ncrris {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

namespace {

std::string quote(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void emit_line(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ',';
        out << quote(cells[i]);
    }
    out << '\n';
}

}  // namespace

void emit_csv(const SweepTable& table, std::ostream& out) {
    emit_line(out, table.columns);
    std::vector<std::string> cells;
    for (const auto& row : table.rows) {
        cells.clear();
        for (const auto& c : row) {
            if (const auto* d = std::get_if<double>(&c))
                cells.push_back(format_number(*d));
            else
                cells.push_back(std::get<std::string>(c));
        }
        emit_line(out, cells);
    }
}

void write_csv(const SweepTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    emit_csv(table, out);
    out.flush();
    if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace ncrris
