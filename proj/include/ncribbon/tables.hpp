#pragma once

#include <string>
#include <vector>

#include "ncribbon/composition.hpp"
#include "ncribbon/json_io.hpp"

namespace ncribbon {

/// A rendered coefficient table: columns index the expanded functions,
/// rows the target basis; "·" marks a zero cell.
struct TableDocument {
  std::string title;
  std::vector<std::string> column_labels;
  std::vector<std::string> row_labels;
  std::vector<std::vector<std::string>> cells;  // [row][col]

  std::string render() const;
  Json to_json() const;
};

/// Columns: alpha <= gamma in restricted phi_gamma order; rows: all
/// compositions of n in phi order; cell = coefficient of R_row in
/// R^{(gamma)}_col(A;t).
TableDocument gamma_schur_table(const Composition& gamma);

/// Columns and rows: alpha, beta <= gamma in restricted phi_gamma order;
/// cell = coefficient of R^{(gamma)}_row in H_col(A;q,t).
TableDocument macdonald_gamma_table(const Composition& gamma);

}  // namespace ncribbon
