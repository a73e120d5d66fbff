#pragma once

#include <string>
#include <utility>

#include "semirings/table.hpp"

namespace semirings {

// Text format: line 1 is the order n; n lines of n space-separated entries
// for addition; one blank line; n lines for multiplication. Entries must lie
// in 0..n-1.

// Raw tables without axiom checking, so callers can report axiom witnesses
// separately from parse errors. Throws ParseError on malformed input.
std::pair<OpTable, OpTable> parse_tables(const std::string& text);

std::string format_tables(const OpTable& add, const OpTable& mul);
std::string format_semiring(const FiniteSemiring& s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace semirings
