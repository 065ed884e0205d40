#pragma once

#include "nnirank2/exact.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace nnirank2 {

/// One row per line, base-10 integers separated by whitespace. Lines starting
/// with '#' and blank lines are skipped. Throws InputError on ragged rows,
/// non-integer tokens or an empty matrix.
IntMatrix parse_matrix(std::string_view text);
IntMatrix read_matrix(std::istream& in);
IntMatrix read_matrix_file(const std::string& path);

/// Rows on separate lines, entries separated by single spaces.
std::string format_matrix(const IntMatrix& m);
void write_matrix_file(const std::string& path, const IntMatrix& m);

} // namespace nnirank2
