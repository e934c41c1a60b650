#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace faultsim {

/// Whole file as bytes. Throws IoError when the file cannot be opened.
std::string read_file(const std::string& path);

/// Truncates and writes. Throws IoError.
void write_file(const std::string& path, std::string_view content);

/// Splits on '\n', dropping a trailing '\r' from each line. A final empty
/// line produced by a terminating newline is not returned.
std::vector<std::string_view> split_lines(std::string_view content);

std::vector<std::string_view> split(std::string_view line, char sep);

std::string_view trim(std::string_view s);

std::string ascii_lower(std::string_view s);

/// Decodes UTF-8 into Unicode scalar values. Throws ParseError on malformed
/// input.
std::u32string utf8_decode(std::string_view s);
std::string utf8_encode(std::u32string_view s);

/// Strict whole-string numeric parses. Throw ParseError naming `what`.
long long parse_int(std::string_view s, std::string_view what);
double parse_double(std::string_view s, std::string_view what);

}  // namespace faultsim
