#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lipi::detail {

struct TsvRow {
  std::size_t line = 0;  // 1-based
  std::vector<std::string> cells;
};

/// Splits on '\n' and '\t'; skips blank lines and lines starting with '#'.
/// Trailing "\t# ..." cells are dropped as comments.
std::vector<TsvRow> parse_tsv(std::string_view text);

std::string trim(std::string_view s);
std::vector<std::string> split_ws(std::string_view s);

}  // namespace lipi::detail
