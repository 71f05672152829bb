#include "ncribbon/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "ncribbon/nabla.hpp"
#include "ncribbon/qt_bases.hpp"
#include "ncribbon/text_io.hpp"

namespace ncribbon {

std::string SuiteResult::summary() const {
  std::string s = suite + ": " + (passed() ? "pass" : "FAIL") + ", " + std::to_string(checks) +
                  " checks up to degree " + std::to_string(max_degree);
  if (!passed())
    s += ", " + std::to_string(failures) + " failures; first: " + first_failure;
  return s;
}

namespace {

// Degrees above this run on sampled instances instead of full enumeration.
constexpr uint32_t kExhaustiveCeiling = 6;
constexpr uint32_t kNablaCeiling = 7;
constexpr size_t kSamplesPerDegree = 250;

struct Checker {
  SuiteResult result;

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result.checks;
    if (!ok) {
      if (result.failures == 0) result.first_failure = describe();
      ++result.failures;
    }
  }
};

uint64_t full_mask(uint32_t n) { return (1ull << (n - 1)) - 1; }

// Uniformly random supermask of `base` inside the degree-n descent space.
uint64_t random_supermask(std::mt19937_64& rng, uint32_t n, uint64_t base) {
  return base | (rng() & full_mask(n) & ~base);
}

uint64_t random_mask(std::mt19937_64& rng, uint32_t n) { return rng() & full_mask(n); }

// Enumerates (gamma, alpha <= gamma) pairs: exhaustively at low degree,
// sampled above the ceiling.
void for_levels(uint32_t n, uint32_t ceiling, std::mt19937_64& rng,
                const std::function<void(const Composition&, const Composition&)>& f) {
  if (n <= ceiling) {
    for (uint64_t g = 0; g <= full_mask(n); ++g) {
      Composition gamma(n, g);
      uint64_t extra = full_mask(n) & ~g;
      uint64_t sub = extra;
      while (true) {
        f(gamma, Composition(n, g | sub));
        if (sub == 0) break;
        sub = (sub - 1) & extra;
      }
    }
  } else {
    for (size_t s = 0; s < kSamplesPerDegree; ++s) {
      uint64_t g = random_mask(rng, n);
      f(Composition(n, g), Composition(n, random_supermask(rng, n, g)));
    }
  }
}

std::string instance(const char* what, std::initializer_list<Composition> cs) {
  std::string s = what;
  for (const auto& c : cs) s += " " + format_compact(c);
  return s;
}

NcsfElement h_in_ribbons(const Composition& a) {
  return h_to_ribbon(NcsfElement::unit(a, BasisTag::homogeneous()));
}

// ---------------------------------------------------------------- basis --

void suite_basis(Checker& ck, uint32_t max_degree, std::mt19937_64& rng) {
  for (uint32_t n = 1; n <= max_degree; ++n) {
    for_levels(n, kExhaustiveCeiling, rng, [&](const Composition& gamma, const Composition& alpha) {
      GammaOrdering ord(gamma);
      // expanding H_alpha through the gamma-Schur definitions
      NcsfElement via = expand_to_ribbon(hl_to_gamma_schur(gamma, alpha));
      ck.check(via == hall_littlewood(alpha),
               [&] { return instance("hl via gamma-schur", {gamma, alpha}); });
      // unitriangularity under phi_gamma
      NcsfElement col = hl_to_gamma_schur(gamma, alpha);
      bool tri = col.coefficient(alpha).is_one();
      uint64_t ra = ord.restricted_rank(alpha);
      for (const auto& [b, p] : col.coeffs())
        if (ord.restricted_rank(b) > ra) tri = false;
      ck.check(tri, [&] { return instance("unitriangularity", {gamma, alpha}); });
      // round trips both ways
      NcsfElement in_hl = gamma_schur_to_hl(gamma, alpha);
      NcsfElement back(n, BasisTag::gamma_schur(gamma), VarFamily::two_param());
      for (const auto& [b, p] : in_hl.coeffs()) back = back + hl_to_gamma_schur(gamma, b).scaled(p);
      ck.check(back == NcsfElement::unit(alpha, BasisTag::gamma_schur(gamma)),
               [&] { return instance("round-trip gs->hl->gs", {gamma, alpha}); });
      NcsfElement in_gs = hl_to_gamma_schur(gamma, alpha);
      NcsfElement back2(n, BasisTag::hall_littlewood(), VarFamily::two_param());
      for (const auto& [b, p] : in_gs.coeffs())
        back2 = back2 + gamma_schur_to_hl(gamma, b).scaled(p);
      ck.check(back2 == NcsfElement::unit(alpha, BasisTag::hall_littlewood()),
               [&] { return instance("round-trip hl->gs->hl", {gamma, alpha}); });
    });
  }
}

// ------------------------------------------------------------ branching --

void suite_branching(Checker& ck, uint32_t max_degree, std::mt19937_64& rng) {
  auto check_transitivity = [&](const Composition& gamma, const Composition& gt,
                                const Composition& ghat, const Composition& alpha,
                                const NcsfElement& br) {
    NcsfElement direct = branch(gamma, ghat, alpha);
    NcsfElement stepped(gamma.degree(), BasisTag::gamma_schur(ghat), VarFamily::two_param());
    for (const auto& [b, p] : br.coeffs()) stepped = stepped + branch(gt, ghat, b).scaled(p);
    ck.check(direct == stepped,
             [&] { return instance("branch transitivity", {gamma, gt, ghat, alpha}); });
  };

  auto check_chain = [&](const Composition& gamma, const Composition& gt,
                         const Composition& alpha, bool exhaustive) {
    uint32_t n = gamma.degree();
    NcsfElement br = branch(gamma, gt, alpha);
    bool monomial_positive = true;
    for (const auto& [b, p] : br.coeffs())
      if (!p.is_monomial() || !p.has_nonnegative_exponents() || p.uniform_sign() < 0)
        monomial_positive = false;
    ck.check(monomial_positive, [&] { return instance("branch positivity", {gamma, gt, alpha}); });
    ck.check(expand_to_ribbon(br) == gamma_schur(gamma, alpha),
             [&] { return instance("branch expansion", {gamma, gt, alpha}); });
    // branching to the top level recovers the definition
    NcsfElement top = branch(gamma, Composition::single(n), alpha);
    NcsfElement def = gamma_schur(gamma, alpha);
    bool same = top.support_size() == def.support_size();
    if (same)
      for (const auto& [b, p] : top.coeffs())
        if (!(def.coefficient(b) == p)) same = false;
    ck.check(same, [&] { return instance("branch to (n)", {gamma, alpha}); });
    // transitivity: every coarser ghat when exhaustive, one sample otherwise
    uint64_t dgt = gt.descent_mask();
    if (exhaustive) {
      uint64_t hsub = dgt;
      while (true) {
        check_transitivity(gamma, gt, Composition(n, hsub), alpha, br);
        if (hsub == 0) break;
        hsub = (hsub - 1) & dgt;
      }
    } else {
      check_transitivity(gamma, gt, Composition(n, dgt & random_mask(rng, n)), alpha, br);
    }
  };

  for (uint32_t n = 1; n <= max_degree; ++n) {
    if (n <= kExhaustiveCeiling) {
      for (uint64_t g = 0; g <= full_mask(n); ++g) {
        Composition gamma(n, g);
        uint64_t sub = g;
        while (true) {  // descent subsets of gamma: the coarser levels gt >= gamma
          Composition gt(n, sub);
          uint64_t extra = full_mask(n) & ~g;
          uint64_t asub = extra;
          while (true) {
            check_chain(gamma, gt, Composition(n, g | asub), true);
            if (asub == 0) break;
            asub = (asub - 1) & extra;
          }
          if (sub == 0) break;
          sub = (sub - 1) & g;
        }
      }
    } else {
      for (size_t s = 0; s < kSamplesPerDegree; ++s) {
        uint64_t g = random_mask(rng, n);
        uint64_t gt = g & random_mask(rng, n);
        check_chain(Composition(n, g), Composition(n, gt),
                    Composition(n, random_supermask(rng, n, g)), false);
      }
    }
  }
}

// -------------------------------------------------- macdonald-positivity --

void suite_macdonald(Checker& ck, uint32_t max_degree, std::mt19937_64& rng) {
  for (uint32_t n = 1; n <= max_degree; ++n) {
    // per-alpha identities
    auto per_alpha = [&](const Composition& alpha) {
      NcsfElement mm = modified_macdonald(alpha);
      NcsfElement inverted = macdonald(alpha).map_coefficients(
          [&](const LaurentPoly& p) { return specialize_t_inverse(p); });
      ck.check(mm == inverted.scaled(LaurentPoly::t_pow(static_cast<int32_t>(major_index(alpha)))),
               [&] { return instance("Ht = t^n(a) H(q,1/t)", {alpha}); });
    };
    if (n <= kExhaustiveCeiling) {
      for (uint64_t a = 0; a <= full_mask(n); ++a) per_alpha(Composition(n, a));
    } else {
      for (size_t s = 0; s < kSamplesPerDegree; ++s) per_alpha(Composition(n, random_mask(rng, n)));
    }

    for_levels(n, kExhaustiveCeiling, rng, [&](const Composition& gamma, const Composition& alpha) {
      for (bool modified : {false, true}) {
        NcsfElement e = macdonald_in_gamma_schur(gamma, alpha, modified);
        bool pos = true;
        for (const auto& [b, p] : e.coeffs())
          if (!p.is_monomial() || !p.has_nonnegative_exponents() || p.uniform_sign() < 0) pos = false;
        ck.check(pos, [&] { return instance("macdonald positivity", {gamma, alpha}); });
        NcsfElement want = modified ? modified_macdonald(alpha) : macdonald(alpha);
        ck.check(expand_to_ribbon(e) == want,
                 [&] { return instance("macdonald route", {gamma, alpha}); });
      }
      // structured operator row vs the defining sum
      GammaOrdering ord(gamma);
      DenseLayout layout = DenseLayout::restricted(ord);
      auto unit = to_dense(NcsfElement::unit(
                               alpha, BasisTag::gamma_schur(gamma, BasisFlavor::SingleParam, true)),
                           layout);
      auto row = build_structured(StructuredKind::ModifiedMacdonaldFromGammaSchur, gamma)
                     .transposed()
                     .apply(unit);
      NcsfElement structured = from_dense(
          row, layout, BasisTag::gamma_schur(gamma, BasisFlavor::SingleParam, true),
          VarFamily::two_param());
      ck.check(structured == macdonald_in_gamma_schur(gamma, alpha, true),
               [&] { return instance("structured vs summation", {gamma, alpha}); });
    });
  }
}

// ---------------------------------------------------------------- omega --

void suite_omega(Checker& ck, uint32_t max_degree, std::mt19937_64& rng) {
  for (uint32_t n = 1; n <= max_degree; ++n) {
    auto ribbon_unit = [&](const Composition& a) {
      return NcsfElement::unit(a, BasisTag::ribbon());
    };
    auto per_alpha = [&](const Composition& a) {
      ck.check(omega_c(omega_c(ribbon_unit(a))) == ribbon_unit(a),
               [&] { return instance("omega_c involution", {a}); });
      ck.check(omega_rev(omega_rev(ribbon_unit(a))) == ribbon_unit(a),
               [&] { return instance("omega_rev involution", {a}); });
      ck.check(omega_c(omega_rev(ribbon_unit(a))) == omega_rev(omega_c(ribbon_unit(a))),
               [&] { return instance("omegas commute", {a}); });
      ck.check(omega_c(omega_rev(ribbon_unit(a))) == ribbon_unit(conjugate(a)),
               [&] { return instance("composite = conjugate", {a}); });
    };
    if (n <= kExhaustiveCeiling) {
      for (uint64_t a = 0; a <= full_mask(n); ++a) per_alpha(Composition(n, a));
    } else {
      for (size_t s = 0; s < kSamplesPerDegree; ++s) per_alpha(Composition(n, random_mask(rng, n)));
    }

    for_levels(n, kExhaustiveCeiling, rng, [&](const Composition& gamma, const Composition& alpha) {
      // complement conjugation, verified by ribbon expansion
      OmegaCResult oc = omega_c_on_gamma_schur(gamma, alpha);
      ck.check(refines(oc.zeta, gamma), [&] { return instance("zeta refines level", {gamma, alpha}); });
      NcsfElement lhs = omega_c(gamma_schur(gamma, alpha));
      NcsfElement rhs = expand_to_ribbon(oc.element).scaled(oc.prefactor);
      ck.check(lhs == rhs, [&] { return instance("omega_c conjugation", {gamma, alpha}); });
      // reversal conjugation at t = 1
      NcsfElement l1 = omega_rev_on_gamma_schur(gamma, alpha, BasisFlavor::SingleParam, 1);
      NcsfElement r1 = gamma_schur(reverse(gamma), reverse(alpha))
                           .map_coefficients([](const LaurentPoly& p) {
                             return specialize_value(p, ParamVar::T, 1);
                           });
      ck.check(l1 == r1, [&] { return instance("omega_rev t=1", {gamma, alpha}); });
      NcsfElement lmv = omega_rev_on_gamma_schur(gamma, alpha, BasisFlavor::Multivariate);
      NcsfElement rmv = gamma_schur(reverse(gamma), reverse(alpha), BasisFlavor::Multivariate)
                            .map_coefficients([](const LaurentPoly& p) {
                              return reverse_variables(p);
                            });
      ck.check(lmv == rmv, [&] { return instance("omega_rev multivariate", {gamma, alpha}); });
    });
  }
}

// ---------------------------------------------------------------- nabla --

void suite_nabla(Checker& ck, uint32_t max_degree, std::mt19937_64& rng) {
  for (uint32_t n = 1; n <= std::min(max_degree, kNablaCeiling); ++n) {
    DenseLayout full = DenseLayout::full_phi(n);
    StructuredOperator ribbon_op = nabla_structured(NablaKind::Ribbon, n).transposed();
    auto ribbon_route = [&](const NcsfElement& ribbons) {
      return from_dense(ribbon_op.apply(to_dense(ribbons, full)), full, BasisTag::ribbon(),
                        VarFamily::two_param());
    };

    auto per_alpha = [&](const Composition& alpha) {
      // eigen relation through the ribbon operator
      NcsfElement ht = modified_macdonald(alpha);
      ck.check(ribbon_route(ht) == ht.scaled(nabla_eigenvalue(alpha).value),
               [&] { return instance("eigen relation", {alpha}); });
      // eigen scaling path agrees
      NcsfElement viaht =
          expand_to_ribbon(nabla(NcsfElement::unit(alpha, BasisTag::modified_macdonald())));
      ck.check(viaht == ribbon_route(ht), [&] { return instance("diagonal route", {alpha}); });
      // ribbon positivity up to a global sign
      NcsfElement nr = nabla(NcsfElement::unit(alpha, BasisTag::ribbon()));
      bool uniform = true;
      try {
        sign_normalize(nr);
      } catch (const SignUniformityError&) {
        uniform = false;
      }
      ck.check(uniform, [&] { return instance("ribbon sign uniformity", {alpha}); });
    };
    for (uint64_t a = 0; a <= full_mask(n); ++a) per_alpha(Composition(n, a));

    for_levels(n, kNablaCeiling, rng, [&](const Composition& gamma, const Composition& alpha) {
      BasisTag inv_tag = BasisTag::gamma_schur(gamma, BasisFlavor::SingleParam, true);
      NcsfElement unit_inv = NcsfElement::unit(alpha, inv_tag);
      NcsfElement reference = ribbon_route(expand_to_ribbon(unit_inv));
      // the gamma-schur-to-gamma-schur form
      NcsfElement via_gamma = expand_to_ribbon(nabla(unit_inv));
      ck.check(via_gamma == reference, [&] { return instance("gamma-form route", {gamma, alpha}); });
      bool uniform = true;
      try {
        sign_normalize(nabla(unit_inv));
      } catch (const SignUniformityError&) {
        uniform = false;
      }
      ck.check(uniform, [&] { return instance("gamma-form sign uniformity", {gamma, alpha}); });
      // the ribbon-output form
      ck.check(nabla_to_ribbon(unit_inv) == reference,
               [&] { return instance("ribbon-output route", {gamma, alpha}); });
      bool uniform_nc = true;
      try {
        sign_normalize(nabla_to_ribbon(unit_inv));
      } catch (const SignUniformityError&) {
        uniform_nc = false;
      }
      ck.check(uniform_nc, [&] { return instance("ribbon-output sign uniformity", {gamma, alpha}); });
      // the modified Hall-Littlewood form
      NcsfElement unit_hl = NcsfElement::unit(alpha, BasisTag::modified_hall_littlewood());
      NcsfElement ref_hl = ribbon_route(modified_hall_littlewood(alpha));
      NcsfElement via_hl = expand_to_ribbon(nabla(unit_hl, gamma));
      ck.check(via_hl == ref_hl, [&] { return instance("modified-hl route", {gamma, alpha}); });
      bool uniform_hl = true;
      try {
        sign_normalize(nabla(unit_hl, gamma));
      } catch (const SignUniformityError&) {
        uniform_hl = false;
      }
      ck.check(uniform_hl, [&] { return instance("modified-hl sign uniformity", {gamma, alpha}); });
    });
  }

  // frozen degree-4 goldens
  if (max_degree >= 4) {
    VarFamily f2 = VarFamily::two_param();
    auto C = [](std::initializer_list<uint32_t> ps) {
      return Composition::from_parts(std::vector<uint32_t>(ps));
    };
    NcsfElement want(4, BasisTag::ribbon(), f2);
    want.add_term(C({2, 2}), parse_poly("-q^2t^2", f2));
    want.add_term(C({2, 1, 1}), parse_poly("-q^3t^2 - q^2t^5", f2));
    want.add_term(C({1, 1, 2}), parse_poly("-q^5t^2 - q^2t^3", f2));
    want.add_term(C({1, 1, 1, 1}), parse_poly("-q^6t^2 - q^5t^5 - q^3t^3 - q^2t^6", f2));
    ck.check(nabla(NcsfElement::unit(C({1, 2, 1}), BasisTag::ribbon())) == want,
             [&] { return std::string("golden nabla R_121"); });

    NcsfElement want_hl(4, BasisTag::ribbon(), f2);
    want_hl.add_term(C({2, 2}), parse_poly("-q^2t^6", f2));
    want_hl.add_term(C({2, 1, 1}), parse_poly("-q^2t^9", f2));
    want_hl.add_term(C({1, 1, 2}), parse_poly("-q^2t^7", f2));
    want_hl.add_term(C({1, 1, 1, 1}), parse_poly("-q^2t^10", f2));
    NcsfElement got_hl = expand_to_ribbon(
        nabla(NcsfElement::unit(C({1, 2, 1}), BasisTag::modified_hall_littlewood())));
    ck.check(got_hl == want_hl, [&] { return std::string("golden nabla Ht_121(A;t)"); });

    ck.check(nabla_eigenvalue(C({3, 1})).value == parse_poly("q^5t^3", f2),
             [&] { return std::string("golden eigenvalue Ht_31"); });
  }
}

// --------------------------------------------------------- multivariate --

void suite_multivariate(Checker& ck, uint32_t max_degree, std::mt19937_64& rng) {
  for (uint32_t n = 1; n <= max_degree; ++n) {
    auto collapse_elem = [](const NcsfElement& e) {
      NcsfElement out(e.degree(), BasisTag::ribbon(), VarFamily::two_param());
      for (const auto& [c, p] : e.coeffs()) out.add_term(c, collapse_multivariate(p));
      return out;
    };
    auto per_alpha = [&](const Composition& alpha) {
      ck.check(collapse_elem(hall_littlewood(alpha, BasisFlavor::Multivariate)) ==
                   hall_littlewood(alpha),
               [&] { return instance("mv collapse HL", {alpha}); });
      ck.check(collapse_elem(macdonald(alpha, BasisFlavor::Multivariate)) == macdonald(alpha),
               [&] { return instance("mv collapse H", {alpha}); });
      ck.check(collapse_elem(modified_macdonald(alpha, BasisFlavor::Multivariate)) ==
                   modified_macdonald(alpha),
               [&] { return instance("mv collapse Ht", {alpha}); });
      ck.check(collapse_elem(modified_hall_littlewood(alpha, BasisFlavor::Multivariate)) ==
                   modified_hall_littlewood(alpha),
               [&] { return instance("mv collapse modified HL", {alpha}); });
      VarFamily fam = family_for(n, BasisFlavor::Multivariate);
      Monomial pref;
      for (uint32_t i = 1; i < n; ++i)
        if (alpha.has_descent(i)) pref.emplace_back(var::ti(i), 1);
      NcsfElement rhs = macdonald(alpha, BasisFlavor::Multivariate)
                            .map_coefficients([](const LaurentPoly& p) {
                              return specialize_t_inverse(p);
                            })
                            .scaled(LaurentPoly::monomial(fam, pref));
      ck.check(modified_macdonald(alpha, BasisFlavor::Multivariate) == rhs,
               [&] { return instance("mv modified identity", {alpha}); });
      // multivariate structured forms against the summation rows
      if (n <= Composition::kMaxDenseDegree) {
        DenseLayout full = DenseLayout::full_phi(n);
        for (StructuredKind kind :
             {StructuredKind::ModifiedMacdonaldFromRibbon, StructuredKind::MacdonaldFromRibbon}) {
          auto row = build_structured(kind, n, BasisFlavor::Multivariate)
                         .transposed()
                         .apply(to_dense(
                             NcsfElement::unit(alpha, BasisTag::ribbon(), fam), full));
          NcsfElement got = from_dense(row, full, BasisTag::ribbon(), fam);
          NcsfElement want = kind == StructuredKind::MacdonaldFromRibbon
                                 ? macdonald(alpha, BasisFlavor::Multivariate)
                                 : modified_macdonald(alpha, BasisFlavor::Multivariate);
          ck.check(got == want, [&] { return instance("mv structured row", {alpha}); });
        }
      }
    };
    if (n <= kExhaustiveCeiling) {
      for (uint64_t a = 0; a <= full_mask(n); ++a) per_alpha(Composition(n, a));
    } else {
      for (size_t s = 0; s < kSamplesPerDegree; ++s) per_alpha(Composition(n, random_mask(rng, n)));
    }
    for_levels(n, kExhaustiveCeiling, rng, [&](const Composition& gamma, const Composition& alpha) {
      NcsfElement mv = gamma_schur(gamma, alpha, BasisFlavor::Multivariate);
      NcsfElement sp = gamma_schur(gamma, alpha);
      NcsfElement coll(n, BasisTag::ribbon(), VarFamily::two_param());
      for (const auto& [c, p] : mv.coeffs()) coll.add_term(c, collapse_multivariate(p));
      ck.check(coll == sp, [&] { return instance("mv collapse gamma-schur", {gamma, alpha}); });
    });
  }

  // frozen multivariate goldens
  if (max_degree >= 4) {
    auto C = [](std::initializer_list<uint32_t> ps) {
      return Composition::from_parts(std::vector<uint32_t>(ps));
    };
    VarFamily f3 = VarFamily::multivariate(3);
    NcsfElement want(4, BasisTag::ribbon(), f3);
    want.add_term(C({1, 2, 1}), LaurentPoly::one(f3));
    want.add_term(C({3, 1}), parse_poly("t_1", f3));
    want.add_term(C({1, 3}), parse_poly("t_3", f3));
    want.add_term(C({4}), parse_poly("t_1t_3", f3));
    ck.check(hall_littlewood(C({1, 2, 1}), BasisFlavor::Multivariate) == want,
             [&] { return std::string("golden mv H_121"); });

    NcsfElement want31(4, BasisTag::ribbon(), f3);
    want31.add_term(C({4}), LaurentPoly::one(f3));
    want31.add_term(C({1, 3}), parse_poly("q_3", f3));
    want31.add_term(C({2, 2}), parse_poly("q_2", f3));
    want31.add_term(C({1, 1, 2}), parse_poly("q_2q_3", f3));
    want31.add_term(C({3, 1}), parse_poly("t_3", f3));
    want31.add_term(C({1, 2, 1}), parse_poly("q_3t_3", f3));
    want31.add_term(C({2, 1, 1}), parse_poly("q_2t_3", f3));
    want31.add_term(C({1, 1, 1, 1}), parse_poly("q_2q_3t_3", f3));
    ck.check(modified_macdonald(C({3, 1}), BasisFlavor::Multivariate) == want31,
             [&] { return std::string("golden mv Ht_31"); });
  }
}

// --------------------------------------------------------------- lemmas --

void suite_lemmas(Checker& ck, uint32_t max_degree, std::mt19937_64& rng) {
  for (uint32_t n = 1; n <= max_degree; ++n) {
    // c-statistic additivity along chains alpha <= beta <= delta
    auto check_chain_stat = [&](uint64_t da, uint64_t db, uint64_t dd) {
      Composition a(n, da), b(n, db), d(n, dd);
      ck.check(c_stat(a, complement(b)) + c_stat(b, complement(d)) == c_stat(a, complement(d)),
               [&] { return instance("c additivity", {a, b, d}); });
    };
    if (n <= 8 && n <= max_degree) {
      // chains D(d) subset D(b) subset D(a)
      for (uint64_t da = 0; da <= full_mask(n); ++da) {
        uint64_t db = da;
        while (true) {
          uint64_t dd = db;
          while (true) {
            check_chain_stat(da, db, dd);
            if (dd == 0) break;
            dd = (dd - 1) & db;
          }
          if (db == 0) break;
          db = (db - 1) & da;
        }
      }
    } else {
      for (size_t s = 0; s < kSamplesPerDegree; ++s) {
        uint64_t da = random_mask(rng, n);
        uint64_t db = da & random_mask(rng, n);
        check_chain_stat(da, db, db & random_mask(rng, n));
      }
    }

    // n(alpha) - c(alpha, beta^c) = c(alpha, beta)
    auto check_nc = [&](uint64_t da, uint64_t db) {
      Composition a(n, da), b(n, db);
      ck.check(major_index(a) - c_stat(a, complement(b)) == c_stat(a, b),
               [&] { return instance("n(a)-c(a,b^c)=c(a,b)", {a, b}); });
    };
    if (n <= kExhaustiveCeiling) {
      for (uint64_t da = 0; da <= full_mask(n); ++da)
        for (uint64_t db = 0; db <= full_mask(n); ++db) check_nc(da, db);
    } else {
      for (size_t s = 0; s < kSamplesPerDegree; ++s)
        check_nc(random_mask(rng, n), random_mask(rng, n));
    }

    // interval-factorization bijection, alpha <= gamma <= gt, delta >= alpha
    auto check_interval_bijection = [&](const Composition& gamma, const Composition& gt,
                             const Composition& alpha) {
      uint64_t da = alpha.descent_mask();
      uint64_t diff = gamma.descent_mask() & ~gt.descent_mask();
      std::vector<std::pair<uint64_t, uint64_t>> A;  // (delta, beta)
      uint64_t bsub = da;
      while (true) {
        if ((da & ~bsub & ~diff) == 0) {
          uint64_t dsub = bsub;
          while (true) {
            if ((bsub & ~dsub & ~gt.descent_mask()) == 0) A.emplace_back(dsub, bsub);
            if (dsub == 0) break;
            dsub = (dsub - 1) & bsub;
          }
        }
        if (bsub == 0) break;
        bsub = (bsub - 1) & da;
      }
      std::vector<uint64_t> B;
      uint64_t dsub = da;
      while (true) {
        if ((da & ~dsub & ~gamma.descent_mask()) == 0) B.push_back(dsub);
        if (dsub == 0) break;
        dsub = (dsub - 1) & da;
      }
      std::vector<uint64_t> images;
      bool inverse_ok = true;
      for (const auto& [d, b] : A) {
        images.push_back(d);
        if (b != (d | gt.descent_mask())) inverse_ok = false;
      }
      std::sort(images.begin(), images.end());
      std::sort(B.begin(), B.end());
      bool bijection = images.size() == A.size() &&
                       std::adjacent_find(images.begin(), images.end()) == images.end() &&
                       images == B;
      ck.check(bijection, [&] { return instance("interval bijection", {gamma, gt, alpha}); });
      ck.check(inverse_ok, [&] { return instance("interval bijection inverse", {gamma, gt, alpha}); });
    };
    if (n <= kExhaustiveCeiling) {
      for (uint64_t g = 0; g <= full_mask(n); ++g) {
        Composition gamma(n, g);
        uint64_t gsub = g;
        while (true) {
          Composition gt(n, gsub);
          uint64_t extra = full_mask(n) & ~g;
          uint64_t asub = extra;
          while (true) {
            check_interval_bijection(gamma, gt, Composition(n, g | asub));
            if (asub == 0) break;
            asub = (asub - 1) & extra;
          }
          if (gsub == 0) break;
          gsub = (gsub - 1) & g;
        }
      }
    } else {
      for (size_t s = 0; s < kSamplesPerDegree; ++s) {
        uint64_t g = random_mask(rng, n);
        check_interval_bijection(Composition(n, g), Composition(n, g & random_mask(rng, n)),
                      Composition(n, random_supermask(rng, n, g)));
      }
    }
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"basis",  "branching",    "macdonald-positivity", "omega",
          "nabla",  "multivariate", "lemmas"};
}

SuiteResult run_suite(const std::string& name, uint32_t max_degree, uint64_t seed) {
  Checker ck;
  ck.result.suite = name;
  ck.result.max_degree = max_degree;
  std::mt19937_64 rng(seed);
  if (name == "basis") {
    suite_basis(ck, max_degree, rng);
  } else if (name == "branching") {
    suite_branching(ck, max_degree, rng);
  } else if (name == "macdonald-positivity") {
    suite_macdonald(ck, max_degree, rng);
  } else if (name == "omega") {
    suite_omega(ck, max_degree, rng);
  } else if (name == "nabla") {
    suite_nabla(ck, max_degree, rng);
  } else if (name == "multivariate") {
    suite_multivariate(ck, max_degree, rng);
  } else if (name == "lemmas") {
    suite_lemmas(ck, max_degree, rng);
  } else {
    throw Error("unknown suite '" + name + "'");
  }
  return ck.result;
}

SuiteResult run_specialization_checks(uint32_t max_degree) {
  Checker ck;
  ck.result.suite = "specializations";
  ck.result.max_degree = max_degree;
  for (uint32_t n = 1; n <= max_degree; ++n) {
    for (uint64_t a = 0; a <= full_mask(n); ++a) {
      Composition alpha(n, a);
      NcsfElement hl = hall_littlewood(alpha);
      auto at = [&](const NcsfElement& e, ParamVar v, int val) {
        return e.map_coefficients(
            [&](const LaurentPoly& p) { return specialize_value(p, v, val); });
      };
      ck.check(at(hl, ParamVar::T, 0) == NcsfElement::unit(alpha, BasisTag::ribbon()),
               [&] { return instance("H(A;0) = R", {alpha}); });
      ck.check(at(hl, ParamVar::T, 1) == h_in_ribbons(alpha),
               [&] { return instance("H(A;1) = h", {alpha}); });
      ck.check(at(macdonald(alpha), ParamVar::Q, 0) == hl,
               [&] { return instance("H(A;0,t) = HL", {alpha}); });
      ck.check(at(modified_macdonald(alpha), ParamVar::Q, 0) == modified_hall_littlewood(alpha),
               [&] { return instance("Ht(A;0,t) = modified HL", {alpha}); });
      // multivariate collapse for every basis
      auto coll = [&](const NcsfElement& e) {
        NcsfElement out(e.degree(), BasisTag::ribbon(), VarFamily::two_param());
        for (const auto& [c, p] : e.coeffs()) out.add_term(c, collapse_multivariate(p));
        return out;
      };
      ck.check(coll(hall_littlewood(alpha, BasisFlavor::Multivariate)) == hl,
               [&] { return instance("collapse HL", {alpha}); });
      ck.check(coll(macdonald(alpha, BasisFlavor::Multivariate)) == macdonald(alpha),
               [&] { return instance("collapse H", {alpha}); });
      ck.check(coll(modified_macdonald(alpha, BasisFlavor::Multivariate)) ==
                   modified_macdonald(alpha),
               [&] { return instance("collapse Ht", {alpha}); });
      ck.check(coll(modified_hall_littlewood(alpha, BasisFlavor::Multivariate)) ==
                   modified_hall_littlewood(alpha),
               [&] { return instance("collapse modified HL", {alpha}); });
    }
    // gamma-schur collapse over all levels
    for (uint64_t g = 0; g <= full_mask(n); ++g) {
      Composition gamma(n, g);
      uint64_t extra = full_mask(n) & ~g;
      uint64_t sub = extra;
      while (true) {
        Composition alpha(n, g | sub);
        NcsfElement mv = gamma_schur(gamma, alpha, BasisFlavor::Multivariate);
        NcsfElement out(n, BasisTag::ribbon(), VarFamily::two_param());
        for (const auto& [c, p] : mv.coeffs()) out.add_term(c, collapse_multivariate(p));
        ck.check(out == gamma_schur(gamma, alpha),
                 [&] { return instance("collapse gamma-schur", {gamma, alpha}); });
        if (sub == 0) break;
        sub = (sub - 1) & extra;
      }
    }
  }
  return ck.result;
}

}  // namespace ncribbon
