// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nofade {

/// Shortest decimal representation that re-parses to exactly the same
/// double. Used for every number we serialize so emitted files are
/// byte-stable and parse/emit round-trips are the identity.
std::string format_double(double value);

/// Strict double parse of a whole field. Empty, trailing garbage, or
/// non-numeric input yields nullopt.
std::optional<double> parse_double(std::string_view field);

/// RFC-4180-style quoting: fields containing a comma, quote, or newline
/// are quoted, embedded quotes doubled. Everything else passes through.
std::string csv_escape(std::string_view field);

/// Escape and comma-join one record. No line terminator is appended.
std::string csv_join(const std::vector<std::string>& fields);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;  // data rows, header excluded
};

/// Parse a CSV document. Handles quoted fields and doubled quotes.
/// Throws ValidationError on empty input or unbalanced quoting (the
/// message carries the 1-based record number, the header being record 1).
CsvTable parse_csv(std::string_view text);

CsvTable read_csv_file(const std::filesystem::path& path);

/// Write content to `path + ".tmp"` and rename onto `path`, so a failed
/// run never leaves a partial file under the final name.
void atomic_write_file(const std::filesystem::path& path, std::string_view content);

/// FNV-1a 64-bit over the raw bytes; stable across runs and builds.
std::uint64_t fnv1a64(std::string_view bytes);

/// fnv1a64 rendered as 16 lowercase hex digits.
std::string content_hash(std::string_view bytes);

}  // namespace nofade
