#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "pcakit/matrix.hpp"
#include "pcakit/stats.hpp"

namespace pcakit {

/// Parses comma-separated text: a header row of variable names followed by
/// one numeric row per observation. Fields may be double-quoted ("" escapes a
/// quote); LF and CRLF line endings are both accepted and blank lines are
/// skipped. Rows are counted from 1 with the header as row 1, so the first
/// observation is row 2.
///
/// Throws ErrorKind::parse_error for empty input, duplicate or empty headers,
/// ragged rows and non-numeric cells (citing "row R, column C").
DataMatrix parse_csv(std::string_view text);

/// Reads and parses a file. Throws ErrorKind::io_error if it cannot be read.
DataMatrix ingest_csv(const std::filesystem::path& path);

/// Header of labels, then each row at shortest round-trip precision.
std::string write_csv(const std::vector<std::string>& header, const Matrix& rows);

}  // namespace pcakit
