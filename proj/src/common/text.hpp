#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hgemb::text {

// One logical line of an input file: comment stripped, whitespace trimmed,
// with its 1-based line number for error messages.
struct Line {
  int number = 0;
  std::string_view content;
};

std::vector<Line> logical_lines(std::string_view text);
std::vector<std::string_view> split_ws(std::string_view s);
std::string_view trim(std::string_view s);

// Splits "key: rest" at the first ':'; returns false when there is none.
bool split_key(std::string_view line, std::string_view& key, std::string_view& rest);

std::int64_t parse_int(std::string_view token, int line);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

[[noreturn]] void fail(int line, const std::string& message);

}  // namespace hgemb::text
