#include "ncribbon/qt_bases.hpp"

#include <bit>

namespace ncribbon {

namespace {

uint64_t full_mask(uint32_t n) { return (1ull << (n - 1)) - 1; }

// Descent-set weight: product over i in `set` of t_i (resp. q_i) in the
// multivariate family, t^i (resp. q^i) in the two-param family. Exponents
// are negated when invert is set.
LaurentPoly set_weight(uint64_t set, uint32_t n, VarFamily fam, bool t_type, bool invert = false) {
  int32_t sgn = invert ? -1 : 1;
  if (!fam.is_multivariate()) {
    int64_t s = 0;
    for (uint32_t i = 1; i < n; ++i)
      if (set >> (i - 1) & 1) s += i;
    if (s == 0) return LaurentPoly::one(fam);
    return LaurentPoly::monomial(fam, {{t_type ? var::t : var::q, sgn * static_cast<int32_t>(s)}});
  }
  Monomial m;
  for (uint32_t i = 1; i < n; ++i)
    if (set >> (i - 1) & 1) m.emplace_back(t_type ? var::ti(i) : var::qi(i), sgn);
  return LaurentPoly::monomial(fam, m);
}

// q-weight of the Macdonald definitions: c(alpha', rev beta) as a set sum.
LaurentPoly macdonald_q_weight(const Composition& alpha, const Composition& beta, VarFamily fam) {
  uint64_t set = conjugate(alpha).descent_mask() & reverse(beta).descent_mask();
  return set_weight(set, alpha.degree(), fam, /*t_type=*/false);
}

template <typename F>
void for_each_submask(uint64_t mask, F&& f) {
  uint64_t sub = mask;
  while (true) {
    f(sub);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
}

void require_level(const Composition& alpha, const Composition& gamma) {
  if (!refines(alpha, gamma))
    throw LevelError("index " + format_dotted(alpha) + " does not refine the level " +
                     format_dotted(gamma));
}

void check_dense(uint32_t n) {
  if (n > Composition::kMaxDenseDegree)
    throw InvalidCompositionError("degree exceeds the full-basis cap");
}

}  // namespace

VarFamily family_for(uint32_t degree, BasisFlavor flavor) {
  return flavor == BasisFlavor::Multivariate ? VarFamily::multivariate(degree - 1)
                                             : VarFamily::two_param();
}

NcsfElement hall_littlewood(const Composition& alpha, BasisFlavor flavor) {
  uint32_t n = alpha.degree();
  check_dense(n);
  VarFamily fam = family_for(n, flavor);
  NcsfElement out(n, BasisTag::ribbon(), fam);
  uint64_t da = alpha.descent_mask();
  for_each_submask(da, [&](uint64_t db) {
    out.add_term(Composition(n, db), set_weight(da & ~db, n, fam, true));
  });
  return out;
}

NcsfElement macdonald(const Composition& alpha, BasisFlavor flavor) {
  uint32_t n = alpha.degree();
  check_dense(n);
  VarFamily fam = family_for(n, flavor);
  NcsfElement out(n, BasisTag::ribbon(), fam);
  uint64_t da = alpha.descent_mask();
  for (uint64_t db = 0; db <= full_mask(n); ++db) {
    Composition beta(n, db);
    out.add_term(beta, set_weight(da & ~db, n, fam, true) * macdonald_q_weight(alpha, beta, fam));
  }
  return out;
}

NcsfElement modified_macdonald(const Composition& alpha, BasisFlavor flavor) {
  uint32_t n = alpha.degree();
  check_dense(n);
  VarFamily fam = family_for(n, flavor);
  NcsfElement out(n, BasisTag::ribbon(), fam);
  uint64_t da = alpha.descent_mask();
  for (uint64_t db = 0; db <= full_mask(n); ++db) {
    Composition beta(n, db);
    out.add_term(beta, set_weight(da & db, n, fam, true) * macdonald_q_weight(alpha, beta, fam));
  }
  return out;
}

NcsfElement modified_hall_littlewood(const Composition& alpha, BasisFlavor flavor) {
  uint32_t n = alpha.degree();
  check_dense(n);
  VarFamily fam = family_for(n, flavor);
  NcsfElement out(n, BasisTag::ribbon(), fam);
  uint64_t da = alpha.descent_mask();
  for_each_submask(da, [&](uint64_t db) {
    out.add_term(Composition(n, db), set_weight(da & db, n, fam, true));
  });
  return out;
}

NcsfElement gamma_schur(const Composition& gamma, const Composition& alpha, BasisFlavor flavor,
                        bool inverted_t) {
  require_level(alpha, gamma);
  uint32_t n = alpha.degree();
  check_dense(n);
  VarFamily fam = family_for(n, flavor);
  NcsfElement out(n, BasisTag::ribbon(), fam);
  uint64_t da = alpha.descent_mask();
  uint64_t dg = gamma.descent_mask();
  // beta ranges over the interval: D(alpha)\D(gamma) always kept, the
  // descents shared with gamma freely dropped.
  uint64_t base = da & ~dg;
  for_each_submask(da & dg, [&](uint64_t sub) {
    uint64_t db = base | sub;
    out.add_term(Composition(n, db), set_weight(da & ~db, n, fam, true, inverted_t));
  });
  return out;
}

NcsfElement hl_to_gamma_schur(const Composition& gamma, const Composition& alpha) {
  require_level(alpha, gamma);
  uint32_t n = alpha.degree();
  check_dense(n);
  VarFamily fam = VarFamily::two_param();
  NcsfElement out(n, BasisTag::gamma_schur(gamma), fam);
  uint64_t da = alpha.descent_mask();
  uint64_t dg = gamma.descent_mask();
  for_each_submask(da & ~dg, [&](uint64_t sub) {
    uint64_t db = dg | sub;
    out.add_term(Composition(n, db), set_weight(da & ~db, n, fam, true));
  });
  return out;
}

NcsfElement gamma_schur_to_hl(const Composition& gamma, const Composition& alpha) {
  require_level(alpha, gamma);
  uint32_t n = alpha.degree();
  check_dense(n);
  VarFamily fam = VarFamily::two_param();
  NcsfElement out(n, BasisTag::hall_littlewood(), fam);
  uint64_t da = alpha.descent_mask();
  uint64_t dg = gamma.descent_mask();
  int la = std::popcount(da);
  for_each_submask(da & ~dg, [&](uint64_t sub) {
    uint64_t db = dg | sub;
    int sign = ((la - std::popcount(db)) & 1) ? -1 : 1;
    out.add_term(Composition(n, db),
                 set_weight(da & ~db, n, fam, true) * LaurentPoly::constant(sign, fam));
  });
  return out;
}

NcsfElement branch(const Composition& gamma, const Composition& gamma_tilde,
                   const Composition& alpha, BasisFlavor flavor) {
  if (!refines(gamma, gamma_tilde))
    throw LevelError("branching target " + format_dotted(gamma_tilde) +
                     " must be coarser than " + format_dotted(gamma));
  require_level(alpha, gamma);
  uint32_t n = alpha.degree();
  check_dense(n);
  VarFamily fam = family_for(n, flavor);
  NcsfElement out(n, BasisTag::gamma_schur(gamma_tilde, flavor), fam);
  uint64_t da = alpha.descent_mask();
  uint64_t droppable = da & gamma.descent_mask() & ~gamma_tilde.descent_mask();
  for_each_submask(droppable, [&](uint64_t sub) {
    uint64_t db = (da & ~droppable) | sub;
    out.add_term(Composition(n, db), set_weight(da & ~db, n, fam, true));
  });
  return out;
}

NcsfElement macdonald_in_gamma_schur(const Composition& gamma, const Composition& alpha,
                                     bool modified) {
  require_level(alpha, gamma);
  uint32_t n = alpha.degree();
  check_dense(n);
  VarFamily fam = VarFamily::two_param();
  NcsfElement out(n, BasisTag::gamma_schur(gamma, BasisFlavor::SingleParam, modified), fam);
  uint64_t da = alpha.descent_mask();
  uint64_t dg = gamma.descent_mask();
  for_each_submask(full_mask(n) & ~dg, [&](uint64_t sub) {
    uint64_t db = dg | sub;
    Composition beta(n, db);
    LaurentPoly w = set_weight(modified ? (da & db) : (da & ~db), n, fam, true) *
                    macdonald_q_weight(alpha, beta, fam);
    out.add_term(beta, w);
  });
  return out;
}

OmegaCResult omega_c_on_gamma_schur(const Composition& gamma, const Composition& alpha) {
  require_level(alpha, gamma);
  uint32_t n = alpha.degree();
  uint64_t dgc = full_mask(n) & ~gamma.descent_mask();
  Composition zeta(n, (dgc & ~alpha.descent_mask()) | gamma.descent_mask());
  LaurentPoly pref = LaurentPoly::t_pow(static_cast<int32_t>(major_index(gamma)));
  NcsfElement elem = NcsfElement::unit(
      zeta, BasisTag::gamma_schur(gamma, BasisFlavor::SingleParam, /*inverted=*/true));
  return {zeta, pref, std::move(elem)};
}

NcsfElement omega_rev_on_gamma_schur(const Composition& gamma, const Composition& alpha,
                                     BasisFlavor flavor, int t_value) {
  if (flavor == BasisFlavor::SingleParam && t_value != 1)
    throw UnsupportedSpecializationError(
        "the single-parameter rev-omega identity only holds at t = 1");
  NcsfElement e = gamma_schur(gamma, alpha, flavor);
  if (flavor == BasisFlavor::SingleParam)
    e = e.map_coefficients([](const LaurentPoly& p) { return specialize_value(p, ParamVar::T, 1); });
  return omega_rev(e);
}

namespace {

StructuredOperator::Factor ribbon_kind_factor(StructuredKind kind, uint32_t n, uint32_t i,
                                              VarFamily fam) {
  LaurentPoly one = LaurentPoly::one(fam);
  LaurentPoly ti = fam.is_multivariate() ? LaurentPoly::ti_var(fam, i)
                                         : LaurentPoly::t_pow(static_cast<int32_t>(i));
  LaurentPoly qni = fam.is_multivariate() ? LaurentPoly::qi_var(fam, n - i)
                                          : LaurentPoly::q_pow(static_cast<int32_t>(n - i));
  switch (kind) {
    case StructuredKind::MacdonaldFromRibbon:
      return StructuredOperator::Factor::mat2(one, qni, ti, one);
    case StructuredKind::ModifiedMacdonaldFromRibbon:
      return StructuredOperator::Factor::mat2(one, qni, one, ti);
    default:
      throw Error("kind requires a level");
  }
}

}  // namespace

StructuredOperator build_structured(StructuredKind kind, uint32_t degree, BasisFlavor flavor) {
  if (kind == StructuredKind::ModifiedMacdonaldFromGammaSchur)
    throw LevelError("ModifiedMacdonaldFromGammaSchur requires a level composition");
  VarFamily fam = family_for(degree, flavor);
  std::vector<StructuredOperator::Factor> fs;
  fs.reserve(degree - 1);
  for (uint32_t i = 1; i < degree; ++i) fs.push_back(ribbon_kind_factor(kind, degree, i, fam));
  return StructuredOperator(degree, std::nullopt, std::move(fs));
}

StructuredOperator build_structured(StructuredKind kind, const Composition& gamma) {
  if (kind != StructuredKind::ModifiedMacdonaldFromGammaSchur)
    throw Error("only ModifiedMacdonaldFromGammaSchur takes a level");
  uint32_t n = gamma.degree();
  VarFamily fam = VarFamily::two_param();
  std::vector<StructuredOperator::Factor> fs;
  fs.reserve(n - 1);
  for (uint32_t i = 1; i < n; ++i) {
    if (gamma.has_descent(i)) {
      fs.push_back(StructuredOperator::Factor::scalar(LaurentPoly::t_pow(static_cast<int32_t>(i))));
    } else {
      fs.push_back(StructuredOperator::Factor::mat2(
          LaurentPoly::one(fam), LaurentPoly::q_pow(static_cast<int32_t>(n - i)),
          LaurentPoly::one(fam), LaurentPoly::t_pow(static_cast<int32_t>(i))));
    }
  }
  return StructuredOperator(n, GammaOrdering(gamma), std::move(fs));
}

NcsfElement expand_to_ribbon(const NcsfElement& e) {
  const BasisTag& tag = e.basis();
  switch (tag.kind) {
    case BasisKind::Ribbon:
      return e;
    case BasisKind::Homogeneous:
      return h_to_ribbon(e);
    default:
      break;
  }
  if (tag.inverted_t && tag.kind != BasisKind::GammaSchur)
    throw BasisError("inverted-t flag is only defined for the gamma-schur basis");
  NcsfElement out(e.degree(), BasisTag::ribbon(), e.family());
  for (const auto& [a, p] : e.coeffs()) {
    NcsfElement basis_elem = [&] {
      switch (tag.kind) {
        case BasisKind::HallLittlewood:
          return hall_littlewood(a, tag.flavor);
        case BasisKind::Macdonald:
          return macdonald(a, tag.flavor);
        case BasisKind::ModifiedMacdonald:
          return modified_macdonald(a, tag.flavor);
        case BasisKind::ModifiedHallLittlewood:
          return modified_hall_littlewood(a, tag.flavor);
        case BasisKind::GammaSchur:
          return gamma_schur(*tag.level, a, tag.flavor, tag.inverted_t);
        default:
          throw BasisError("cannot expand basis " + basis_kind_name(tag.kind));
      }
    }();
    out = out + basis_elem.scaled(p);
  }
  return out;
}

}  // namespace ncribbon
