// Copyright (c) 2026 The dialogic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIALOGIC_IO_HPP_
#define DIALOGIC_IO_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace dialogic {

std::string read_text_file(const std::filesystem::path& path);

/// Writes through a sibling temporary file and renames it into place, so a
/// reader never observes a partially written file.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

/// Hex SHA-256 of a byte string.
std::string sha256_hex(std::string_view bytes);

namespace csv {

using Row = std::vector<std::string>;

/// RFC-4180 parse. Accepts LF or CRLF record separators; a trailing newline
/// does not produce an empty record. Malformed quoting throws SchemaError
/// naming the 1-based line.
std::vector<Row> parse(std::string_view text);

std::string format_row(const Row& fields);

/// Decimal text with exactly `decimals` digits after the point.
std::string fixed(double value, int decimals);

/// Shortest text that round-trips to the same double.
std::string shortest(double value);

double parse_double(std::string_view text, std::size_t line, std::string_view field);
long long parse_int(std::string_view text, std::size_t line, std::string_view field);

}  // namespace csv
}  // namespace dialogic

#endif  // DIALOGIC_IO_HPP_
