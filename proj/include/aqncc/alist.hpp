#pragma once

#include <filesystem>
#include <string>

#include "aqncc/bin_matrix.hpp"

namespace aqncc {

/// Serialize to the standard LDPC "alist" text format:
///   n_cols n_rows
///   max_col_degree max_row_degree
///   per-column degrees, per-row degrees
///   per-column 1-based row supports, zero-padded to max_col_degree
///   per-row 1-based column supports, zero-padded to max_row_degree
/// The writer emits a canonical form (single spaces, '\n' endings) so that
/// write -> read -> write round-trips bit-exactly.
std::string to_alist(const BinMatrix& m);

/// Parse an alist document; throws std::invalid_argument on malformed input.
BinMatrix parse_alist(const std::string& text);

BinMatrix read_alist_file(const std::filesystem::path& path);

/// Write the full content to a temporary file in the target directory and
/// atomically rename it into place; partial files are never left behind.
void atomic_write_file(const std::filesystem::path& path, const std::string& content);

std::string read_text_file(const std::filesystem::path& path);

} // namespace aqncc
