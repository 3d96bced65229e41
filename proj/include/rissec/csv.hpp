// rissec - RIS-assisted mm-Wave secrecy-rate simulator
// Copyright (C) 2026 the rissec authors
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

#include <filesystem>
#include <string>
#include <vector>

namespace rissec
{

    // Locale-independent decimal formatting at 12 significant digits; the one
    // float-to-text path for all emitted data, so repeated runs are
    // byte-identical.
    std::string format_csv_double(double value);

    struct CsvTable
    {
        std::vector<std::string> columns;
        std::vector<std::vector<std::string>> rows;
    };

    // UTF-8, comma separators, header row first, '\n' terminated rows
    // (including the last). Every row must match the column count.
    void emit_csv(const CsvTable &table, const std::filesystem::path &path);

} // namespace rissec
