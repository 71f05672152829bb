#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncribbon/composition.hpp"
#include "ncribbon/laurent.hpp"

namespace ncribbon {

enum class BasisKind : uint8_t {
  Homogeneous,
  Ribbon,
  HallLittlewood,
  Macdonald,
  ModifiedMacdonald,
  ModifiedHallLittlewood,
  GammaSchur,
};

enum class BasisFlavor : uint8_t { SingleParam, Multivariate };

/// Identifies the basis an element's coefficients refer to. GammaSchur
/// carries its level; inverted_t marks bases evaluated at 1/t (the
/// R^{(gamma)}(A;1/t) family the nabla operator acts on).
struct BasisTag {
  BasisKind kind = BasisKind::Ribbon;
  BasisFlavor flavor = BasisFlavor::SingleParam;
  bool inverted_t = false;
  std::optional<Composition> level;  // GammaSchur only

  static BasisTag homogeneous(BasisFlavor f = BasisFlavor::SingleParam) {
    return {BasisKind::Homogeneous, f, false, std::nullopt};
  }
  static BasisTag ribbon(BasisFlavor f = BasisFlavor::SingleParam) {
    return {BasisKind::Ribbon, f, false, std::nullopt};
  }
  static BasisTag hall_littlewood(BasisFlavor f = BasisFlavor::SingleParam) {
    return {BasisKind::HallLittlewood, f, false, std::nullopt};
  }
  static BasisTag macdonald(BasisFlavor f = BasisFlavor::SingleParam) {
    return {BasisKind::Macdonald, f, false, std::nullopt};
  }
  static BasisTag modified_macdonald(BasisFlavor f = BasisFlavor::SingleParam) {
    return {BasisKind::ModifiedMacdonald, f, false, std::nullopt};
  }
  static BasisTag modified_hall_littlewood(BasisFlavor f = BasisFlavor::SingleParam) {
    return {BasisKind::ModifiedHallLittlewood, f, false, std::nullopt};
  }
  static BasisTag gamma_schur(Composition level, BasisFlavor f = BasisFlavor::SingleParam,
                              bool inverted = false) {
    return {BasisKind::GammaSchur, f, inverted, std::move(level)};
  }

  bool operator==(const BasisTag&) const = default;
};

std::string basis_kind_name(BasisKind k);

/// A degree-n element: a finitely supported map Composition -> LaurentPoly
/// under a basis tag. Keys all have the declared degree; zero polynomials
/// are never stored; GammaSchur support refines the level. Coefficients
/// share one parameter family.
class NcsfElement {
 public:
  NcsfElement(uint32_t degree, BasisTag basis, VarFamily family);

  uint32_t degree() const { return degree_; }
  const BasisTag& basis() const { return basis_; }
  const VarFamily& family() const { return family_; }
  const std::map<Composition, LaurentPoly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  size_t support_size() const { return coeffs_.size(); }

  /// Coefficient of the given composition (zero when absent).
  LaurentPoly coefficient(const Composition& c) const;
  /// Adds p to the coefficient of c, enforcing the element invariants.
  void add_term(const Composition& c, const LaurentPoly& p);

  NcsfElement operator+(const NcsfElement& o) const;
  NcsfElement operator-(const NcsfElement& o) const;
  /// Scales every coefficient.
  NcsfElement scaled(const LaurentPoly& p) const;
  /// Applies f to every coefficient, keeping the family declaration of the
  /// result polynomials.
  NcsfElement map_coefficients(const std::function<LaurentPoly(const LaurentPoly&)>& f) const;
  /// Relabels the support through an index bijection (coefficients kept).
  NcsfElement relabel_support(const std::function<Composition(const Composition&)>& f) const;

  bool operator==(const NcsfElement& o) const;

  static NcsfElement unit(const Composition& c, BasisTag tag,
                          VarFamily family = VarFamily::two_param());

 private:
  uint32_t degree_;
  BasisTag basis_;
  VarFamily family_;
  std::map<Composition, LaurentPoly> coeffs_;  // phi order
};

/// Index layouts for the dense 2^{n-1} (or restricted 2^{n-1-k}) coefficient
/// vectors StructuredOperator works on. The bit at slot sigma(i)-1 records
/// descent position i; the plain phi layout is sigma = identity. Restricted
/// layouts drop the k slots pinned by the level.
class DenseLayout {
 public:
  static DenseLayout full_phi(uint32_t n);
  static DenseLayout full_phi_gamma(const GammaOrdering& ord);
  static DenseLayout restricted(const GammaOrdering& ord);

  uint32_t degree() const { return degree_; }
  uint64_t size() const;
  bool is_restricted() const { return restricted_; }
  const std::optional<GammaOrdering>& ordering() const { return ordering_; }

  uint64_t index_of(const Composition& c) const;
  Composition composition_at(uint64_t index) const;

 private:
  DenseLayout(uint32_t degree, std::optional<GammaOrdering> ord, bool restricted);
  uint32_t degree_;
  std::optional<GammaOrdering> ordering_;
  bool restricted_;
};

std::vector<LaurentPoly> to_dense(const NcsfElement& e, const DenseLayout& layout);
NcsfElement from_dense(const std::vector<LaurentPoly>& vec, const DenseLayout& layout,
                       BasisTag tag, VarFamily family);

}  // namespace ncribbon
