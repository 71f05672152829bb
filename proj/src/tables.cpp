#include "ncribbon/tables.hpp"

#include <algorithm>

#include "ncribbon/qt_bases.hpp"

namespace ncribbon {

namespace {

constexpr const char* kZeroCell = "·";  // middle dot

// Column widths are display widths: UTF-8 continuation bytes don't count.
size_t display_width(const std::string& s) {
  size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xc0) != 0x80) ++w;
  return w;
}

std::string pad_left(const std::string& s, size_t width) {
  size_t w = display_width(s);
  return std::string(width > w ? width - w : 0, ' ') + s;
}

std::string cell_text(const LaurentPoly& p) { return p.is_zero() ? kZeroCell : to_text(p); }

}  // namespace

std::string TableDocument::render() const {
  size_t label_w = 0;
  for (const auto& r : row_labels) label_w = std::max(label_w, display_width(r));
  std::vector<size_t> col_w(column_labels.size());
  for (size_t j = 0; j < column_labels.size(); ++j) {
    col_w[j] = display_width(column_labels[j]);
    for (const auto& row : cells) col_w[j] = std::max(col_w[j], display_width(row[j]));
  }
  std::string out = title + "\n";
  out += pad_left("", label_w) + " |";
  for (size_t j = 0; j < column_labels.size(); ++j)
    out += " " + pad_left(column_labels[j], col_w[j]);
  out += "\n";
  size_t total = 0;
  for (size_t w : col_w) total += w + 1;
  out += std::string(label_w + 1, '-') + "+" + std::string(total, '-') + "\n";
  for (size_t i = 0; i < row_labels.size(); ++i) {
    out += pad_left(row_labels[i], label_w) + " |";
    for (size_t j = 0; j < column_labels.size(); ++j)
      out += " " + pad_left(cells[i][j], col_w[j]);
    out += "\n";
  }
  return out;
}

Json TableDocument::to_json() const {
  return Json{{"title", title},
              {"columns", column_labels},
              {"rows", row_labels},
              {"cells", cells}};
}

TableDocument gamma_schur_table(const Composition& gamma) {
  uint32_t n = gamma.degree();
  GammaOrdering ord(gamma);
  TableDocument doc;
  doc.title = "gamma-schur table  n=" + std::to_string(n) + "  level=" + format_compact(gamma);
  std::vector<Composition> cols = ord.compositions_below();
  std::vector<Composition> rows = compositions_of(n);
  for (const auto& c : cols) doc.column_labels.push_back(format_compact(c));
  for (const auto& r : rows) doc.row_labels.push_back(format_compact(r));
  std::vector<NcsfElement> expansions;
  expansions.reserve(cols.size());
  for (const auto& a : cols) expansions.push_back(gamma_schur(gamma, a));
  for (const auto& r : rows) {
    std::vector<std::string> line;
    for (const auto& e : expansions) line.push_back(cell_text(e.coefficient(r)));
    doc.cells.push_back(std::move(line));
  }
  return doc;
}

TableDocument macdonald_gamma_table(const Composition& gamma) {
  uint32_t n = gamma.degree();
  GammaOrdering ord(gamma);
  TableDocument doc;
  doc.title =
      "macdonald-gamma table  n=" + std::to_string(n) + "  level=" + format_compact(gamma);
  std::vector<Composition> idx = ord.compositions_below();
  for (const auto& c : idx) doc.column_labels.push_back(format_compact(c));
  doc.row_labels = doc.column_labels;
  std::vector<NcsfElement> expansions;
  expansions.reserve(idx.size());
  for (const auto& a : idx) expansions.push_back(macdonald_in_gamma_schur(gamma, a, false));
  for (const auto& r : idx) {
    std::vector<std::string> line;
    for (const auto& e : expansions) line.push_back(cell_text(e.coefficient(r)));
    doc.cells.push_back(std::move(line));
  }
  return doc;
}

}  // namespace ncribbon
