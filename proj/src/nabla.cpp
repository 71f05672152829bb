#include "ncribbon/nabla.hpp"

namespace ncribbon {

namespace {

LaurentPoly tp(int64_t e) { return LaurentPoly::t_pow(static_cast<int32_t>(e)); }
LaurentPoly qp(int64_t e) { return LaurentPoly::q_pow(static_cast<int32_t>(e)); }

// [[0, -q^{n-i} t^i], [1, t^i + q^{n-i}]]
StructuredOperator::Factor ribbon_nabla_factor(uint32_t n, uint32_t i) {
  LaurentPoly qt = LaurentPoly::monomial(VarFamily::two_param(),
                                         {{var::q, static_cast<int32_t>(n - i)},
                                          {var::t, static_cast<int32_t>(i)}},
                                         -1);
  return StructuredOperator::Factor::mat2(LaurentPoly::zero(), std::move(qt),
                                          LaurentPoly::one(), tp(i) + qp(n - i));
}

}  // namespace

NablaEigenvalue nabla_eigenvalue(const Composition& alpha) {
  Monomial m;
  int64_t et = static_cast<int64_t>(major_index(alpha));
  int64_t eq = static_cast<int64_t>(major_index(conjugate(alpha)));
  if (eq) m.emplace_back(var::q, static_cast<int32_t>(eq));
  if (et) m.emplace_back(var::t, static_cast<int32_t>(et));
  return {alpha, LaurentPoly::monomial(VarFamily::two_param(), m)};
}

StructuredOperator nabla_structured(NablaKind kind, uint32_t degree) {
  std::vector<StructuredOperator::Factor> fs;
  fs.reserve(degree - 1);
  for (uint32_t i = 1; i < degree; ++i) {
    switch (kind) {
      case NablaKind::EigenDiagonal:
        fs.push_back(StructuredOperator::Factor::mat2(qp(degree - i), LaurentPoly::zero(),
                                                      LaurentPoly::zero(), tp(i)));
        break;
      case NablaKind::Ribbon:
        fs.push_back(ribbon_nabla_factor(degree, i));
        break;
      default:
        throw LevelError("this nabla kind requires a level composition");
    }
  }
  return StructuredOperator(degree, std::nullopt, std::move(fs));
}

StructuredOperator nabla_structured(NablaKind kind, const Composition& gamma) {
  uint32_t n = gamma.degree();
  std::vector<StructuredOperator::Factor> fs;
  fs.reserve(n - 1);
  for (uint32_t i = 1; i < n; ++i) {
    bool in_level = gamma.has_descent(i);
    switch (kind) {
      case NablaKind::GammaSchur:
        fs.push_back(in_level ? StructuredOperator::Factor::scalar(tp(i))
                              : ribbon_nabla_factor(n, i));
        break;
      case NablaKind::ModifiedHallLittlewood:
        if (in_level) {
          fs.push_back(StructuredOperator::Factor::scalar(tp(2 * i)));
        } else {
          LaurentPoly qt = LaurentPoly::monomial(
              VarFamily::two_param(),
              {{var::q, static_cast<int32_t>(n - i)}, {var::t, static_cast<int32_t>(i)}}, -1);
          fs.push_back(StructuredOperator::Factor::mat2(LaurentPoly::zero(), std::move(qt), tp(i),
                                                        tp(2 * i)));
        }
        break;
      case NablaKind::GammaSchurToRibbon:
        fs.push_back(in_level ? StructuredOperator::Factor::row2(LaurentPoly::one(), tp(i))
                              : ribbon_nabla_factor(n, i));
        break;
      default:
        throw Error("this nabla kind takes a plain degree, not a level");
    }
  }
  return StructuredOperator(n, GammaOrdering(gamma), std::move(fs));
}

namespace {

Composition tightest_level(const NcsfElement& e) {
  uint32_t n = e.degree();
  uint64_t inter = (1ull << (n - 1)) - 1;
  for (const auto& [c, p] : e.coeffs()) inter &= c.descent_mask();
  if (e.is_zero()) return Composition::single(n);
  return Composition(n, inter);
}

void require_single_param(const NcsfElement& e) {
  if (e.basis().flavor != BasisFlavor::SingleParam || e.family().is_multivariate())
    throw BasisError("nabla is only defined for the single-parameter flavor");
}

}  // namespace

NcsfElement nabla(const NcsfElement& e, std::optional<Composition> level) {
  const BasisTag& tag = e.basis();
  require_single_param(e);
  switch (tag.kind) {
    case BasisKind::ModifiedMacdonald: {
      if (tag.inverted_t) throw BasisError("unsupported input basis for nabla");
      NcsfElement out(e.degree(), tag, e.family());
      for (const auto& [a, p] : e.coeffs()) out.add_term(a, p * nabla_eigenvalue(a).value);
      return out;
    }
    case BasisKind::Ribbon: {
      DenseLayout layout = DenseLayout::full_phi(e.degree());
      auto vec = nabla_structured(NablaKind::Ribbon, e.degree()).transposed().apply(to_dense(e, layout));
      return from_dense(vec, layout, tag, e.family());
    }
    case BasisKind::GammaSchur: {
      if (!tag.inverted_t)
        throw BasisError("nabla acts on the gamma-schur basis in the parameter 1/t");
      GammaOrdering ord(*tag.level);
      DenseLayout layout = DenseLayout::restricted(ord);
      auto vec = nabla_structured(NablaKind::GammaSchur, *tag.level)
                     .transposed()
                     .apply(to_dense(e, layout));
      return from_dense(vec, layout, tag, e.family());
    }
    case BasisKind::ModifiedHallLittlewood: {
      Composition gamma = level ? *level : tightest_level(e);
      for (const auto& [c, p] : e.coeffs()) {
        if (!refines(c, gamma))
          throw LevelError("support " + format_dotted(c) + " does not refine the level " +
                           format_dotted(gamma));
      }
      GammaOrdering ord(gamma);
      DenseLayout layout = DenseLayout::restricted(ord);
      auto vec = nabla_structured(NablaKind::ModifiedHallLittlewood, gamma)
                     .transposed()
                     .apply(to_dense(e, layout));
      return from_dense(vec, layout,
                        BasisTag::gamma_schur(gamma, BasisFlavor::SingleParam, /*inverted=*/true),
                        e.family());
    }
    default:
      throw BasisError("unsupported input basis for nabla: " + basis_kind_name(tag.kind));
  }
}

NcsfElement nabla_to_ribbon(const NcsfElement& e) {
  const BasisTag& tag = e.basis();
  require_single_param(e);
  if (tag.kind != BasisKind::GammaSchur || !tag.inverted_t)
    throw BasisError("the ribbon-output nabla path takes gamma-schur input at 1/t");
  GammaOrdering ord(*tag.level);
  auto vec = nabla_structured(NablaKind::GammaSchurToRibbon, *tag.level)
                 .transposed()
                 .apply(to_dense(e, DenseLayout::restricted(ord)));
  return from_dense(vec, DenseLayout::full_phi_gamma(ord), BasisTag::ribbon(), e.family());
}

SignSplit sign_normalize(const NcsfElement& e) {
  int sign = 0;
  for (const auto& [c, p] : e.coeffs()) {
    int s = p.uniform_sign();
    if (sign == 0) sign = s;
    if (s != sign)
      throw SignUniformityError("coefficient of " + format_dotted(c) +
                                " breaks the global sign");
  }
  if (sign == 0) sign = 1;
  SignSplit out{sign, e};
  if (sign < 0) out.positive_part = e.scaled(LaurentPoly::constant(-1, e.family()));
  return out;
}

}  // namespace ncribbon
