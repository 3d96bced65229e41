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

#include "rissec/csv.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace rissec
{

    std::string format_csv_double(double value)
    {
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                       std::chars_format::general, 12);
        if (res.ec != std::errc())
            throw std::runtime_error("format_csv_double: conversion failed");
        return std::string(buf, res.ptr);
    }

    void emit_csv(const CsvTable &table, const std::filesystem::path &path)
    {
        for (const auto &row : table.rows)
            if (row.size() != table.columns.size())
                throw std::invalid_argument("emit_csv: row width does not match schema (" +
                                            path.string() + ")");

        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("emit_csv: cannot open " + path.string());

        auto write_row = [&out](const std::vector<std::string> &cells)
        {
            for (std::size_t i = 0; i < cells.size(); ++i)
            {
                if (i != 0)
                    out.put(',');
                out << cells[i];
            }
            out.put('\n');
        };

        write_row(table.columns);
        for (const auto &row : table.rows)
            write_row(row);

        out.flush();
        if (!out)
            throw std::runtime_error("emit_csv: write failed for " + path.string());
    }

} // namespace rissec
