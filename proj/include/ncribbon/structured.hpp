#pragma once

#include <optional>
#include <vector>

#include "ncribbon/composition.hpp"
#include "ncribbon/laurent.hpp"

namespace ncribbon {

/// A linear operator given as an ordered list of small factor matrices,
/// one per descent position i = 1..n-1, applied as a Kronecker product
/// without materializing the dense matrix.
///
/// Under the tensor convention B (x) C = [c_ij B], the factor for descent i
/// occupies slot sigma(i)-1, where sigma is the identity for the plain phi
/// ordering and sigma_gamma for a PhiGamma ordering; lower slots are less
/// significant index bits. Row bits of the dense row index are assigned to
/// the factors with two rows in increasing slot order, and column bits
/// likewise to the factors with two columns, so 1x1 factors act as scalars,
/// 1x2 factors consume a column bit, and 2x1 factors produce a row bit.
class StructuredOperator {
 public:
  /// A rows x cols factor (rows, cols in {1, 2}), entries row-major.
  struct Factor {
    uint8_t rows = 1;
    uint8_t cols = 1;
    std::vector<LaurentPoly> entries;  // rows*cols entries

    const LaurentPoly& at(uint8_t r, uint8_t c) const { return entries[r * cols + c]; }
    static Factor scalar(LaurentPoly v) { return {1, 1, {std::move(v)}}; }
    static Factor mat2(LaurentPoly a00, LaurentPoly a01, LaurentPoly a10, LaurentPoly a11) {
      return {2, 2, {std::move(a00), std::move(a01), std::move(a10), std::move(a11)}};
    }
    static Factor row2(LaurentPoly a0, LaurentPoly a1) { return {1, 2, {std::move(a0), std::move(a1)}}; }
    static Factor col2(LaurentPoly a0, LaurentPoly a1) { return {2, 1, {std::move(a0), std::move(a1)}}; }
    Factor transposed() const;
  };

  /// factors[i-1] is the factor for descent position i. The ordering is
  /// PhiGamma when an ordering is supplied, plain Phi otherwise.
  StructuredOperator(uint32_t degree, std::optional<GammaOrdering> ordering,
                     std::vector<Factor> factors);

  uint32_t degree() const { return degree_; }
  const std::optional<GammaOrdering>& ordering() const { return ordering_; }
  const Factor& factor(uint32_t descent) const { return factors_[descent - 1]; }
  const std::vector<Factor>& factors() const { return factors_; }

  uint64_t row_dim() const { return row_dim_; }
  uint64_t col_dim() const { return col_dim_; }

  /// The dense matrix-vector product, computed factor-by-factor along bit
  /// dimensions in O((n-1) 2^{n-1}) polynomial operations.
  std::vector<LaurentPoly> apply(const std::vector<LaurentPoly>& vec) const;

  /// The transpose: every factor transposed, same slot assignment.
  StructuredOperator transposed() const;

 private:
  uint32_t degree_;
  std::optional<GammaOrdering> ordering_;
  std::vector<Factor> factors_;
  std::vector<uint32_t> slot_order_;  // descent positions in increasing slot order
  uint64_t row_dim_ = 1;
  uint64_t col_dim_ = 1;
};

}  // namespace ncribbon
