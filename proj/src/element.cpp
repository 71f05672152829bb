#include "ncribbon/element.hpp"

#include <functional>

namespace ncribbon {

std::string basis_kind_name(BasisKind k) {
  switch (k) {
    case BasisKind::Homogeneous: return "homogeneous";
    case BasisKind::Ribbon: return "ribbon";
    case BasisKind::HallLittlewood: return "hall-littlewood";
    case BasisKind::Macdonald: return "macdonald";
    case BasisKind::ModifiedMacdonald: return "modified-macdonald";
    case BasisKind::ModifiedHallLittlewood: return "modified-hall-littlewood";
    case BasisKind::GammaSchur: return "gamma-schur";
  }
  return "?";
}

NcsfElement::NcsfElement(uint32_t degree, BasisTag basis, VarFamily family)
    : degree_(degree), basis_(std::move(basis)), family_(family) {
  if (basis_.kind == BasisKind::GammaSchur) {
    if (!basis_.level) throw BasisError("gamma-schur basis requires a level");
    if (basis_.level->degree() != degree_)
      throw BasisError("gamma-schur level degree does not match the element degree");
  }
  if (family_.is_multivariate() && degree_ >= 1 && family_.arity != degree_ - 1)
    throw FamilyMismatchError("multivariate family arity must equal degree - 1");
}

LaurentPoly NcsfElement::coefficient(const Composition& c) const {
  auto it = coeffs_.find(c);
  return it == coeffs_.end() ? LaurentPoly::zero(family_) : it->second;
}

void NcsfElement::add_term(const Composition& c, const LaurentPoly& p) {
  if (c.degree() != degree_)
    throw DegreeMismatchError("term degree does not match the element degree");
  if (!p.is_zero() && !(p.family() == family_))
    throw FamilyMismatchError("coefficient family does not match the element family");
  if (basis_.kind == BasisKind::GammaSchur && !refines(c, *basis_.level))
    throw LevelError("gamma-schur support must refine the level: " + format_dotted(c));
  auto it = coeffs_.find(c);
  if (it == coeffs_.end()) {
    if (!p.is_zero()) coeffs_.emplace(c, p);
  } else {
    it->second += p;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

NcsfElement NcsfElement::operator+(const NcsfElement& o) const {
  if (!(basis_ == o.basis_) || degree_ != o.degree_)
    throw BasisError("cannot add elements in different bases or degrees");
  NcsfElement r = *this;
  for (const auto& [c, p] : o.coeffs_) r.add_term(c, p);
  return r;
}

NcsfElement NcsfElement::operator-(const NcsfElement& o) const {
  return *this + o.scaled(LaurentPoly::constant(-1, family_));
}

NcsfElement NcsfElement::scaled(const LaurentPoly& p) const {
  NcsfElement r(degree_, basis_, family_);
  if (p.is_zero()) return r;
  for (const auto& [c, v] : coeffs_) r.add_term(c, v * p);
  return r;
}

NcsfElement NcsfElement::map_coefficients(
    const std::function<LaurentPoly(const LaurentPoly&)>& f) const {
  NcsfElement r(degree_, basis_, family_);
  for (const auto& [c, v] : coeffs_) {
    LaurentPoly w = f(v);
    if (!w.is_zero()) r.add_term(c, w);
  }
  return r;
}

NcsfElement NcsfElement::relabel_support(
    const std::function<Composition(const Composition&)>& f) const {
  NcsfElement r(degree_, basis_, family_);
  for (const auto& [c, v] : coeffs_) r.add_term(f(c), v);
  return r;
}

bool NcsfElement::operator==(const NcsfElement& o) const {
  return degree_ == o.degree_ && basis_ == o.basis_ && coeffs_ == o.coeffs_;
}

NcsfElement NcsfElement::unit(const Composition& c, BasisTag tag, VarFamily family) {
  NcsfElement r(c.degree(), std::move(tag), family);
  r.add_term(c, LaurentPoly::one(family));
  return r;
}

DenseLayout::DenseLayout(uint32_t degree, std::optional<GammaOrdering> ord, bool restricted)
    : degree_(degree), ordering_(std::move(ord)), restricted_(restricted) {
  if (degree_ > Composition::kMaxDenseDegree)
    throw InvalidCompositionError("degree exceeds the full-basis cap");
}

DenseLayout DenseLayout::full_phi(uint32_t n) { return DenseLayout(n, std::nullopt, false); }

DenseLayout DenseLayout::full_phi_gamma(const GammaOrdering& ord) {
  return DenseLayout(ord.degree(), ord, false);
}

DenseLayout DenseLayout::restricted(const GammaOrdering& ord) {
  return DenseLayout(ord.degree(), ord, true);
}

uint64_t DenseLayout::size() const {
  if (restricted_) return ordering_->restricted_dim();
  return 1ull << (degree_ - 1);
}

uint64_t DenseLayout::index_of(const Composition& c) const {
  if (c.degree() != degree_) throw DegreeMismatchError("composition degree mismatch in layout");
  if (restricted_) return ordering_->restricted_rank(c);
  if (ordering_) return ordering_->rank_phi_gamma(c);
  return rank_phi(c);
}

Composition DenseLayout::composition_at(uint64_t index) const {
  if (index >= size()) throw InvalidCompositionError("dense index out of range");
  if (restricted_) return ordering_->unrank_restricted(index);
  if (!ordering_) return Composition(degree_, index);
  uint64_t mask = 0;
  for (uint32_t s = 0; s < degree_ - 1; ++s)
    if (index >> s & 1) mask |= 1ull << (ordering_->descent_at_slot(s) - 1);
  return Composition(degree_, mask);
}

std::vector<LaurentPoly> to_dense(const NcsfElement& e, const DenseLayout& layout) {
  std::vector<LaurentPoly> v(layout.size(), LaurentPoly::zero(e.family()));
  for (const auto& [c, p] : e.coeffs()) v[layout.index_of(c)] = p;
  return v;
}

NcsfElement from_dense(const std::vector<LaurentPoly>& vec, const DenseLayout& layout,
                       BasisTag tag, VarFamily family) {
  if (vec.size() != layout.size()) throw DimensionMismatchError("dense vector size mismatch");
  NcsfElement r(layout.degree(), std::move(tag), family);
  for (uint64_t i = 0; i < vec.size(); ++i)
    if (!vec[i].is_zero()) r.add_term(layout.composition_at(i), vec[i]);
  return r;
}

}  // namespace ncribbon
