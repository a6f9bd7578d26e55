#include "tsv.hpp"

namespace lipi::detail {

std::string trim(std::string_view s) {
  const auto* ws = " \r\n\t";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<TsvRow> parse_tsv(std::string_view text) {
  std::vector<TsvRow> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    ++line_no;
    pos = nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') {
      if (nl == text.size()) break;
      continue;
    }
    TsvRow row{line_no, {}};
    std::size_t c = 0;
    while (true) {
      const auto tab = line.find('\t', c);
      std::string_view cell = line.substr(c, tab == std::string_view::npos ? line.npos : tab - c);
      if (!cell.empty() && cell.front() == '#') break;
      row.cells.emplace_back(cell);
      if (tab == std::string_view::npos) break;
      c = tab + 1;
    }
    rows.push_back(std::move(row));
    if (nl == text.size()) break;
  }
  return rows;
}

}  // namespace lipi::detail
