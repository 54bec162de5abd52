// SPDX-License-Identifier: Apache-2.0
//
// rispath: physical path loss modelling for RIS-enabled radio channels
// Copyright (C) 2026 The rispath Authors
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
//
// CSV emission. Numbers are printed with 12 significant digits, '.' decimal
// separator, and line-feed endings; the whole file is composed in memory and
// written in one piece, so identical rows always produce identical bytes.

#pragma once

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rispath/experiments.hpp"

namespace rispath {

inline std::string format_csv_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

inline std::string sweep_csv(const std::vector<SweepRow> &rows) {
    std::string out = "side_lambda,psi_s_deg,r_over_lambda,strategy,N,loss_db,normalized_db\n";
    for (const SweepRow &r : rows) {
        out += format_csv_number(r.side_lambda);
        out += ',';
        out += format_csv_number(r.psi_s_deg);
        out += ',';
        out += format_csv_number(r.r_over_lambda);
        out += ',';
        out += to_string(r.strategy);
        out += ',';
        out += std::to_string(r.n_elements);
        out += ',';
        out += format_csv_number(r.loss_db);
        out += ',';
        out += format_csv_number(r.normalized_db);
        out += '\n';
    }
    return out;
}

inline std::string table_csv(const std::vector<TableRow> &rows) {
    std::string out = "case,frequency_hz,fe_m,side_m,side_lambda,side_m_unrounded,"
                      "side_lambda_unrounded,degenerate\n";
    for (const TableRow &r : rows) {
        out += to_string(r.table_case);
        out += ',';
        out += format_csv_number(r.frequency_hz);
        out += ',';
        out += format_csv_number(r.focal_length_m);
        out += ',';
        out += format_csv_number(r.side_m_rounded);
        out += ',';
        out += format_csv_number(r.side_lambda_rounded);
        out += ',';
        out += format_csv_number(r.side_m);
        out += ',';
        out += format_csv_number(r.side_lambda);
        out += ',';
        out += r.degenerate ? '1' : '0';
        out += '\n';
    }
    return out;
}

inline void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out)
        throw std::runtime_error("failed while writing " + path);
}

} // namespace rispath
