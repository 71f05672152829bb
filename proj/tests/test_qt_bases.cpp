#include <doctest.h>

#include "ncribbon/qt_bases.hpp"
#include "ncribbon/text_io.hpp"

using namespace ncribbon;

namespace {

Composition C(std::initializer_list<uint32_t> parts) {
  return Composition::from_parts(std::vector<uint32_t>(parts));
}

LaurentPoly P2(const std::string& s) { return parse_poly(s, VarFamily::two_param()); }

}  // namespace

TEST_CASE("Hall-Littlewood expansions") {
  NcsfElement h = hall_littlewood(C({1, 2, 1}));
  CHECK(h.support_size() == 4);
  CHECK(h.coefficient(C({1, 2, 1})) == P2("1"));
  CHECK(h.coefficient(C({3, 1})) == P2("t"));
  CHECK(h.coefficient(C({1, 3})) == P2("t^3"));
  CHECK(h.coefficient(C({4})) == P2("t^4"));

  CHECK(hall_littlewood(C({5})) == NcsfElement::unit(C({5}), BasisTag::ribbon()));

  VarFamily f3 = VarFamily::multivariate(3);
  NcsfElement hm = hall_littlewood(C({1, 2, 1}), BasisFlavor::Multivariate);
  CHECK(hm.coefficient(C({3, 1})) == parse_poly("t_1", f3));
  CHECK(hm.coefficient(C({1, 3})) == parse_poly("t_3", f3));
  CHECK(hm.coefficient(C({4})) == parse_poly("t_1t_3", f3));
}

TEST_CASE("modified Macdonald expansions") {
  NcsfElement ht = modified_macdonald(C({3, 1}));
  CHECK(ht.support_size() == 8);
  CHECK(ht.coefficient(C({4})) == P2("1"));
  CHECK(ht.coefficient(C({1, 3})) == P2("q^3"));
  CHECK(ht.coefficient(C({2, 2})) == P2("q^2"));
  CHECK(ht.coefficient(C({1, 1, 2})) == P2("q^5"));
  CHECK(ht.coefficient(C({3, 1})) == P2("t^3"));
  CHECK(ht.coefficient(C({1, 2, 1})) == P2("q^3t^3"));
  CHECK(ht.coefficient(C({2, 1, 1})) == P2("q^2t^3"));
  CHECK(ht.coefficient(C({1, 1, 1, 1})) == P2("q^5t^3"));

  VarFamily f3 = VarFamily::multivariate(3);
  NcsfElement htm = modified_macdonald(C({3, 1}), BasisFlavor::Multivariate);
  CHECK(htm.coefficient(C({1, 1, 2})) == parse_poly("q_2q_3", f3));
  CHECK(htm.coefficient(C({1, 1, 1, 1})) == parse_poly("q_2q_3t_3", f3));

  // Ht = t^{n(alpha)} H(A;q,1/t), exhaustively for n <= 6
  for (uint32_t n = 1; n <= 6; ++n) {
    for (uint64_t m = 0; m < (1ull << (n - 1)); ++m) {
      Composition a(n, m);
      NcsfElement rhs = macdonald(a)
                            .map_coefficients(
                                [](const LaurentPoly& p) { return specialize_t_inverse(p); })
                            .scaled(LaurentPoly::t_pow(static_cast<int32_t>(major_index(a))));
      CHECK(modified_macdonald(a) == rhs);
    }
  }

  // q = 0 kills every q-carrying term and leaves the modified Hall-Littlewood
  for (uint64_t m = 0; m < 8; ++m) {
    Composition a(4, m);
    NcsfElement at0 = modified_macdonald(a).map_coefficients(
        [](const LaurentPoly& p) { return specialize_value(p, ParamVar::Q, 0); });
    CHECK(at0 == modified_hall_littlewood(a));
  }
}

TEST_CASE("Hall-Littlewood specializations") {
  for (uint32_t n = 1; n <= 6; ++n) {
    for (uint64_t m = 0; m < (1ull << (n - 1)); ++m) {
      Composition a(n, m);
      NcsfElement hl = hall_littlewood(a);
      NcsfElement at0 = hl.map_coefficients(
          [](const LaurentPoly& p) { return specialize_value(p, ParamVar::T, 0); });
      CHECK(at0 == NcsfElement::unit(a, BasisTag::ribbon()));
      NcsfElement at1 = hl.map_coefficients(
          [](const LaurentPoly& p) { return specialize_value(p, ParamVar::T, 1); });
      CHECK(at1 == h_to_ribbon(NcsfElement::unit(a, BasisTag::homogeneous())));
      // Macdonald at q = 0 is the Hall-Littlewood function
      NcsfElement mq0 = macdonald(a).map_coefficients(
          [](const LaurentPoly& p) { return specialize_value(p, ParamVar::Q, 0); });
      CHECK(mq0 == hl);
    }
  }
}

TEST_CASE("gamma-ribbon Schur functions") {
  NcsfElement g = gamma_schur(C({1, 3, 1}), C({1, 1, 2, 1}));
  CHECK(g.support_size() == 4);
  CHECK(g.coefficient(C({1, 1, 2, 1})) == P2("1"));
  CHECK(g.coefficient(C({2, 2, 1})) == P2("t"));
  CHECK(g.coefficient(C({1, 1, 3})) == P2("t^4"));
  CHECK(g.coefficient(C({2, 3})) == P2("t^5"));

  // level extremes
  for (uint32_t n = 1; n <= 6; ++n) {
    for (uint64_t m = 0; m < (1ull << (n - 1)); ++m) {
      Composition a(n, m);
      CHECK(gamma_schur(Composition::single(n), a) == NcsfElement::unit(a, BasisTag::ribbon()));
      CHECK(gamma_schur(a, a) == hall_littlewood(a));
    }
    Composition fine(n, (1ull << (n - 1)) - 1);
    CHECK(gamma_schur(fine, fine) == hall_littlewood(fine));
  }

  CHECK(gamma_schur(C({2, 2}), C({2, 2})).coefficient(C({4})) == P2("t^2"));
  CHECK_THROWS_AS(gamma_schur(C({3, 1}), C({1, 3})), LevelError);

  // inverted flavor negates the t exponents
  NcsfElement gi = gamma_schur(C({1, 3, 1}), C({1, 1, 2, 1}), BasisFlavor::SingleParam, true);
  CHECK(gi.coefficient(C({2, 3})) == P2("t^-5"));
}

TEST_CASE("Hall-Littlewood to gamma-Schur and back") {
  NcsfElement e = hl_to_gamma_schur(C({3, 1}), C({1, 1, 1, 1}));
  CHECK(e.basis().kind == BasisKind::GammaSchur);
  CHECK(e.coefficient(C({1, 1, 1, 1})) == P2("1"));
  CHECK(e.coefficient(C({2, 1, 1})) == P2("t"));
  CHECK(e.coefficient(C({1, 2, 1})) == P2("t^2"));
  CHECK(e.coefficient(C({3, 1})) == P2("t^3"));

  // gamma = alpha: the interval collapses to a point
  NcsfElement single = hl_to_gamma_schur(C({2, 1, 1}), C({2, 1, 1}));
  CHECK(single.support_size() == 1);
  CHECK(single.coefficient(C({2, 1, 1})) == P2("1"));

  // round trip at gamma=(221), alpha=(1121)
  Composition g = C({2, 2, 1});
  Composition a = C({1, 1, 2, 1});
  NcsfElement hl = gamma_schur_to_hl(g, a);
  NcsfElement roundtrip(5, BasisTag::gamma_schur(g), VarFamily::two_param());
  for (const auto& [b, p] : hl.coeffs()) roundtrip = roundtrip + hl_to_gamma_schur(g, b).scaled(p);
  CHECK(roundtrip == NcsfElement::unit(a, BasisTag::gamma_schur(g)));

  CHECK_THROWS_AS(hl_to_gamma_schur(C({3, 1}), C({4})), LevelError);
}

TEST_CASE("branching") {
  // expanding both sides into ribbons pins the second target index to (131)
  NcsfElement b41 = branch(C({2, 2, 1}), C({4, 1}), C({1, 1, 2, 1}));
  CHECK(b41.support_size() == 2);
  CHECK(b41.coefficient(C({1, 1, 2, 1})) == P2("1"));
  CHECK(b41.coefficient(C({1, 3, 1})) == P2("t^2"));

  NcsfElement b23 = branch(C({2, 2, 1}), C({2, 3}), C({1, 1, 2, 1}));
  CHECK(b23.support_size() == 2);
  CHECK(b23.coefficient(C({1, 1, 2, 1})) == P2("1"));
  CHECK(b23.coefficient(C({1, 1, 3})) == P2("t^4"));

  // both branchings expand to the same ribbon element
  CHECK(expand_to_ribbon(b41) == gamma_schur(C({2, 2, 1}), C({1, 1, 2, 1})));
  CHECK(expand_to_ribbon(b23) == gamma_schur(C({2, 2, 1}), C({1, 1, 2, 1})));

  NcsfElement same = branch(C({2, 2}), C({2, 2}), C({1, 1, 2}));
  CHECK(same.support_size() == 1);
  CHECK(same.coefficient(C({1, 1, 2})) == P2("1"));

  CHECK_THROWS_AS(branch(C({4, 1}), C({2, 2, 1}), C({1, 1, 2, 1})), LevelError);
  CHECK_THROWS_AS(branch(C({2, 2, 1}), C({4, 1}), C({2, 3})), LevelError);
}

TEST_CASE("Macdonald in the gamma-Schur basis") {
  // level (31), column (31) of the weight-4 table
  NcsfElement e = macdonald_in_gamma_schur(C({3, 1}), C({3, 1}), false);
  CHECK(e.coefficient(C({3, 1})) == P2("1"));
  CHECK(e.coefficient(C({1, 2, 1})) == P2("q^3"));
  CHECK(e.coefficient(C({2, 1, 1})) == P2("q^2"));
  CHECK(e.coefficient(C({1, 1, 1, 1})) == P2("q^5"));
  CHECK_FALSE(e.basis().inverted_t);

  // level (22), column (211): t^3, q^3t^3, 1, q^3 down the rows
  NcsfElement e2 = macdonald_in_gamma_schur(C({2, 2}), C({2, 1, 1}), false);
  CHECK(e2.coefficient(C({2, 2})) == P2("t^3"));
  CHECK(e2.coefficient(C({1, 1, 2})) == P2("q^3t^3"));
  CHECK(e2.coefficient(C({2, 1, 1})) == P2("1"));
  CHECK(e2.coefficient(C({1, 1, 1, 1})) == P2("q^3"));

  // expanding through the definitions recovers the Macdonald functions
  for (uint32_t n = 1; n <= 5; ++n) {
    for (uint64_t gm = 0; gm < (1ull << (n - 1)); ++gm) {
      Composition gamma(n, gm);
      uint64_t extra = ((1ull << (n - 1)) - 1) & ~gm;
      uint64_t sub = extra;
      while (true) {
        Composition alpha(n, gm | sub);
        CHECK(expand_to_ribbon(macdonald_in_gamma_schur(gamma, alpha, false)) == macdonald(alpha));
        NcsfElement mm = macdonald_in_gamma_schur(gamma, alpha, true);
        CHECK(mm.basis().inverted_t);
        CHECK(expand_to_ribbon(mm) == modified_macdonald(alpha));
        if (sub == 0) break;
        sub = (sub - 1) & extra;
      }
    }
  }

  CHECK_THROWS_AS(macdonald_in_gamma_schur(C({3, 1}), C({2, 2}), false), LevelError);
}

TEST_CASE("omega_c on gamma-Schur functions") {
  OmegaCResult oc = omega_c_on_gamma_schur(C({3, 1}), C({1, 2, 1}));
  CHECK(oc.zeta == C({2, 1, 1}));
  CHECK(oc.prefactor == P2("t^3"));
  NcsfElement lhs = omega_c(gamma_schur(C({3, 1}), C({1, 2, 1})));
  CHECK(lhs == expand_to_ribbon(oc.element).scaled(oc.prefactor));
  CHECK(lhs.coefficient(C({2, 2})) == P2("1"));
  CHECK(lhs.coefficient(C({2, 1, 1})) == P2("t^3"));

  // gamma = (n): reduces to the plain complement involution
  OmegaCResult plain = omega_c_on_gamma_schur(C({5}), C({5}));
  CHECK(plain.prefactor == P2("1"));
  CHECK(plain.zeta == complement(C({5})));

  // alpha = gamma: omega_c(H_gamma(A;t)) = t^{n(gamma)} R^{(gamma)}_{1^n}(A;1/t)
  for (uint32_t n = 1; n <= 6; ++n) {
    for (uint64_t gm = 0; gm < (1ull << (n - 1)); ++gm) {
      Composition gamma(n, gm);
      OmegaCResult r = omega_c_on_gamma_schur(gamma, gamma);
      CHECK(r.zeta == Composition(n, (1ull << (n - 1)) - 1));
      CHECK(omega_c(hall_littlewood(gamma)) == expand_to_ribbon(r.element).scaled(r.prefactor));
    }
  }
}

TEST_CASE("omega_rev on gamma-Schur functions") {
  // multivariate: rev-omega relabels and reverses the variable order
  Composition g = C({1, 3, 1});
  Composition a = C({1, 1, 2, 1});
  NcsfElement lhs = omega_rev_on_gamma_schur(g, a, BasisFlavor::Multivariate);
  NcsfElement rhs = gamma_schur(reverse(g), reverse(a), BasisFlavor::Multivariate)
                        .map_coefficients([](const LaurentPoly& p) { return reverse_variables(p); });
  CHECK(lhs == rhs);
  CHECK(reverse(g) == g);          // (131) is palindromic
  CHECK(reverse(a) == C({1, 2, 1, 1}));

  // single parameter at t = 1
  NcsfElement l1 = omega_rev_on_gamma_schur(C({3, 1}), C({1, 2, 1}), BasisFlavor::SingleParam, 1);
  NcsfElement r1 = gamma_schur(C({1, 3}), C({1, 2, 1}))
                       .map_coefficients(
                           [](const LaurentPoly& p) { return specialize_value(p, ParamVar::T, 1); });
  CHECK(l1 == r1);
  CHECK_THROWS_AS(omega_rev_on_gamma_schur(C({3, 1}), C({1, 2, 1}), BasisFlavor::SingleParam, 0),
                  UnsupportedSpecializationError);

  // gamma = (n): plain reversal
  CHECK(omega_rev_on_gamma_schur(C({4}), C({3, 1}), BasisFlavor::Multivariate) ==
        NcsfElement::unit(C({1, 3}), BasisTag::ribbon(), VarFamily::multivariate(3)));
}

TEST_CASE("structured builders") {
  StructuredOperator m2 = build_structured(StructuredKind::MacdonaldFromRibbon, 2);
  CHECK(m2.factor(1).at(0, 0) == P2("1"));
  CHECK(m2.factor(1).at(0, 1) == P2("q"));
  CHECK(m2.factor(1).at(1, 0) == P2("t"));
  CHECK(m2.factor(1).at(1, 1) == P2("1"));

  // the Macdonald operator reproduces the summation rows for n <= 5
  for (uint32_t n = 1; n <= 5; ++n) {
    DenseLayout full = DenseLayout::full_phi(n);
    StructuredOperator hq = build_structured(StructuredKind::MacdonaldFromRibbon, n).transposed();
    StructuredOperator hqt =
        build_structured(StructuredKind::ModifiedMacdonaldFromRibbon, n).transposed();
    for (uint64_t m = 0; m < (1ull << (n - 1)); ++m) {
      Composition a(n, m);
      NcsfElement unit = NcsfElement::unit(a, BasisTag::ribbon());
      CHECK(from_dense(hq.apply(to_dense(unit, full)), full, BasisTag::ribbon(),
                       VarFamily::two_param()) == macdonald(a));
      CHECK(from_dense(hqt.apply(to_dense(unit, full)), full, BasisTag::ribbon(),
                       VarFamily::two_param()) == modified_macdonald(a));
    }
  }

  // gamma = (n): no scalar factors, identical to the ribbon kind
  StructuredOperator top =
      build_structured(StructuredKind::ModifiedMacdonaldFromGammaSchur, C({4}));
  StructuredOperator plain = build_structured(StructuredKind::ModifiedMacdonaldFromRibbon, 4);
  for (uint32_t i = 1; i < 4; ++i) {
    CHECK(top.factor(i).rows == 2);
    CHECK(top.factor(i).entries == plain.factor(i).entries);
  }

  CHECK_THROWS_AS(build_structured(StructuredKind::ModifiedMacdonaldFromGammaSchur, 4),
                  LevelError);
}
