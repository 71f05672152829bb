#include "ncribbon/structured.hpp"

#include <algorithm>

namespace ncribbon {

StructuredOperator::Factor StructuredOperator::Factor::transposed() const {
  Factor f;
  f.rows = cols;
  f.cols = rows;
  f.entries.resize(entries.size());
  for (uint8_t r = 0; r < rows; ++r)
    for (uint8_t c = 0; c < cols; ++c) f.entries[c * rows + r] = entries[r * cols + c];
  return f;
}

StructuredOperator::StructuredOperator(uint32_t degree, std::optional<GammaOrdering> ordering,
                                       std::vector<Factor> factors)
    : degree_(degree), ordering_(std::move(ordering)), factors_(std::move(factors)) {
  if (degree_ < 1 || degree_ > Composition::kMaxDenseDegree)
    throw InvalidCompositionError("operator degree out of range");
  if (factors_.size() != degree_ - 1)
    throw DimensionMismatchError("expected one factor per descent position");
  if (ordering_ && ordering_->degree() != degree_)
    throw DimensionMismatchError("ordering degree does not match the operator degree");
  slot_order_.resize(degree_ - 1);
  for (uint32_t s = 0; s < degree_ - 1; ++s)
    slot_order_[s] = ordering_ ? ordering_->descent_at_slot(s) : s + 1;
  for (const auto& f : factors_) {
    if ((f.rows != 1 && f.rows != 2) || (f.cols != 1 && f.cols != 2) ||
        f.entries.size() != static_cast<size_t>(f.rows) * f.cols)
      throw DimensionMismatchError("factor shapes must be 1x1, 1x2, 2x1 or 2x2");
    row_dim_ *= f.rows;
    col_dim_ *= f.cols;
  }
}

std::vector<LaurentPoly> StructuredOperator::apply(const std::vector<LaurentPoly>& vec) const {
  if (vec.size() != col_dim_)
    throw DimensionMismatchError("vector length " + std::to_string(vec.size()) +
                                 " does not match operator input dimension " +
                                 std::to_string(col_dim_));
  std::vector<LaurentPoly> cur = vec;
  uint64_t low = 1;  // product of output dims of the slots already processed
  for (size_t s = 0; s < slot_order_.size(); ++s) {
    const Factor& f = factors_[slot_order_[s] - 1];
    if (f.rows == 1 && f.cols == 1) {
      // scalar slot: no index bit on either side
      for (auto& p : cur) p = p * f.entries[0];
      continue;
    }
    uint64_t high = cur.size() / (low * f.cols);
    std::vector<LaurentPoly> next(low * f.rows * high);
    for (uint64_t h = 0; h < high; ++h) {
      for (uint8_t r = 0; r < f.rows; ++r) {
        for (uint64_t l = 0; l < low; ++l) {
          LaurentPoly acc;
          for (uint8_t c = 0; c < f.cols; ++c) {
            const LaurentPoly& fe = f.at(r, c);
            const LaurentPoly& ve = cur[(h * f.cols + c) * low + l];
            if (!fe.is_zero() && !ve.is_zero()) acc += fe * ve;
          }
          next[(h * f.rows + r) * low + l] = std::move(acc);
        }
      }
    }
    cur = std::move(next);
    low *= f.rows;
  }
  return cur;
}

StructuredOperator StructuredOperator::transposed() const {
  std::vector<Factor> tf;
  tf.reserve(factors_.size());
  for (const auto& f : factors_) tf.push_back(f.transposed());
  return StructuredOperator(degree_, ordering_, std::move(tf));
}

}  // namespace ncribbon
