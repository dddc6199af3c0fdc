// Copyright (c) 2026 The atlas developers.
// This file is part of atlas, released under the Apache License 2.0.

#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace atlas::csv {

using Row = std::vector<std::string>;

/// RFC-4180 style reader: quoted fields may contain commas, quotes ("")
/// and newlines. Returns one Row per record.
std::vector<Row> read_file(const std::filesystem::path& path);

/// Parse CSV from an in-memory buffer (used by tests and the reader).
std::vector<Row> parse(const std::string& text);

std::string escape_field(const std::string& field);
void write_row(std::ostream& os, const Row& row);
void write_file(const std::filesystem::path& path, const std::vector<Row>& rows);

} // namespace atlas::csv
