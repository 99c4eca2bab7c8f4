#pragma once

// Line-oriented text helpers shared by the graph and decomposition readers.

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "octbic/graph.hpp"

namespace octbic::detail {

// Splits into non-empty lines with their 1-based line numbers. Text after '#'
// is dropped.
inline std::vector<std::pair<std::size_t, std::string_view>> content_lines(
    std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    line = line.substr(0, line.find('#'));
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    out.emplace_back(line_no, line.substr(first, last - first + 1));
  }
  return out;
}

inline std::vector<std::size_t> parse_numbers(std::string_view line, std::size_t line_no) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == ' ' || line[pos] == '\t') {
      ++pos;
      continue;
    }
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    const auto consumed = static_cast<std::size_t>(ptr - (line.data() + pos));
    if (ec != std::errc{} || consumed == 0 ||
        (pos + consumed < line.size() && line[pos + consumed] != ' ' &&
         line[pos + consumed] != '\t')) {
      throw InputError("line " + std::to_string(line_no) + ": malformed number in '" +
                       std::string(line) + "'");
    }
    out.push_back(value);
    pos += consumed;
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace octbic::detail
