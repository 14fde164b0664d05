#include "hfcli/render.hpp"

#include <algorithm>
#include <map>

namespace hfcli {

std::vector<std::string> render(const hf::Frieze& z) {
  const std::vector<hf::NodeIdx> nodes = z.window_nodes();
  if (nodes.empty()) return {};
  const long first = 2 * z.window().lo;
  const long cells = 2 * (z.window().hi - z.window().lo) + 1;

  std::map<std::pair<long, long>, std::string> text;  // (row2, col2) -> entry
  size_t width = 1;
  auto put = [&](long row, long col, const hf::Rat* value) {
    std::string s = value ? hf::rat_format(*value) : ".";
    width = std::max(width, s.size());
    text[{row, col}] = std::move(s);
  };
  for (const hf::NodeIdx& node : nodes) put(node.row2(), node.col2(), z.find(node));
  // Line rows use pseudo-rows -1 (up) and -2 (down), anchored where the line
  // meets the bottom row: column 2k + 1.
  for (const hf::LineIdx& line : z.window_lines()) {
    long col = 2 * line.k + 1;
    if (col >= first && col < first + cells) put(line.dir == hf::LineDir::Up ? -1 : -2, col, z.find(line));
  }
  ++width;

  auto row_text = [&](const std::string& prefix, long row) {
    std::string out = prefix;
    for (long c = 0; c < cells; ++c) {
      auto it = text.find({row, first + c});
      std::string cell = it == text.end() ? "" : it->second;
      out += std::string(width - cell.size(), ' ') + cell;
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
  };

  std::vector<std::string> rows;
  const long step = z.kind() == hf::FriezeKind::Heronian ? 1 : 2;
  for (long row = 2L * z.n(); row >= 0; row -= step) rows.push_back(row_text("  ", row));
  rows.push_back(std::string(2 + width * static_cast<size_t>(cells), '-'));
  rows.push_back(row_text("/ ", -1));
  rows.push_back(row_text("\\ ", -2));
  return rows;
}

}  // namespace hfcli
