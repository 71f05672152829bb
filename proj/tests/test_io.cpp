#include <doctest.h>

#include <random>

#include "ncribbon/json_io.hpp"
#include "ncribbon/nabla.hpp"
#include "ncribbon/qt_bases.hpp"
#include "ncribbon/text_io.hpp"

using namespace ncribbon;

namespace {

Composition C(std::initializer_list<uint32_t> parts) {
  return Composition::from_parts(std::vector<uint32_t>(parts));
}

}  // namespace

TEST_CASE("element text rendering") {
  CHECK(to_text(hall_littlewood(C({1, 2, 1}))) ==
        "t^4 R_{4} + t^3 R_{13} + t R_{31} + R_{121}");
  CHECK(to_text(NcsfElement::unit(C({4}), BasisTag::ribbon())) == "R_{4}");
  CHECK(to_text(NcsfElement(3, BasisTag::ribbon(), VarFamily::two_param())) == "0");

  // gamma-schur terms order by the restricted rank
  CHECK(to_text(hl_to_gamma_schur(C({3, 1}), C({1, 1, 1, 1}))) ==
        "t^3 R^{(31)}_{31} + t^2 R^{(31)}_{121} + t R^{(31)}_{211} + R^{(31)}_{1111}");

  // signs and parenthesized coefficients
  NcsfElement img = nabla(NcsfElement::unit(C({1, 2, 1}), BasisTag::ribbon()));
  CHECK(to_text(img) ==
        "-q^2t^2 R_{22} - (q^2t^3 + q^5t^2) R_{112} - (q^3t^2 + q^2t^5) R_{211} - "
        "(q^3t^3 + q^2t^6 + q^6t^2 + q^5t^5) R_{1111}");
}

TEST_CASE("element text round-trips") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> expo(-2, 3);

  auto random_element = [&](uint32_t n, const BasisTag& tag, VarFamily fam) {
    NcsfElement e(n, tag, fam);
    for (uint64_t m = 0; m < (1ull << (n - 1)); ++m) {
      Composition c(n, m);
      if (tag.kind == BasisKind::GammaSchur && !refines(c, *tag.level)) continue;
      int k = coeff(rng);
      if (k == 0) continue;
      Monomial mono;
      int eq = expo(rng), et = expo(rng);
      if (fam.is_multivariate()) {
        if (eq) mono.emplace_back(var::qi(1 + (m % fam.arity)), eq);
        if (et) mono.emplace_back(var::ti(1 + ((m + 1) % fam.arity)), et);
      } else {
        if (eq) mono.emplace_back(var::q, eq);
        if (et) mono.emplace_back(var::t, et);
      }
      e.add_term(c, LaurentPoly::monomial(fam, mono, k) + LaurentPoly::constant(coeff(rng), fam));
    }
    return e;
  };

  std::vector<BasisTag> tags = {BasisTag::ribbon(), BasisTag::homogeneous(),
                                BasisTag::hall_littlewood(), BasisTag::modified_macdonald(),
                                BasisTag::gamma_schur(C({3, 1}))};
  for (const auto& tag : tags) {
    for (int rep = 0; rep < 20; ++rep) {
      NcsfElement e = random_element(4, tag, VarFamily::two_param());
      CHECK(parse_element(to_text(e), 4, tag, VarFamily::two_param()) == e);
    }
  }
  // multivariate coefficients round-trip too
  VarFamily f3 = VarFamily::multivariate(3);
  for (int rep = 0; rep < 20; ++rep) {
    NcsfElement e = random_element(4, BasisTag::ribbon(), f3);
    CHECK(parse_element(to_text(e), 4, BasisTag::ribbon(), f3) == e);
  }
  CHECK(parse_element("0", 4, BasisTag::ribbon(), VarFamily::two_param()).is_zero());
  CHECK_THROWS_AS(parse_element("R_{21", 3, BasisTag::ribbon(), VarFamily::two_param()),
                  ParseError);
  CHECK_THROWS_AS(parse_element("t h_{21}", 3, BasisTag::ribbon(), VarFamily::two_param()),
                  ParseError);
}

TEST_CASE("element json round-trips") {
  std::vector<NcsfElement> samples = {
      hall_littlewood(C({1, 2, 1})),
      modified_macdonald(C({3, 1}), BasisFlavor::Multivariate),
      hl_to_gamma_schur(C({3, 1}), C({1, 2, 1})),
      macdonald_in_gamma_schur(C({2, 2}), C({1, 1, 2}), true),  // inverted_t tag
      nabla(NcsfElement::unit(C({1, 2, 1}), BasisTag::ribbon())),
      NcsfElement(3, BasisTag::ribbon(), VarFamily::two_param()),  // zero
  };
  for (const auto& e : samples) {
    Json j = to_json(e);
    NcsfElement back = element_from_json(j);
    CHECK(back == e);
    CHECK(back.family() == e.family());
  }
  // coefficients survive as exact integers beyond 64 bits
  NcsfElement big(2, BasisTag::ribbon(), VarFamily::two_param());
  Int huge = Int("123456789012345678901234567890");
  big.add_term(C({2}), LaurentPoly::constant(huge));
  CHECK(element_from_json(to_json(big)).coefficient(C({2})) == LaurentPoly::constant(huge));
}

TEST_CASE("operator json") {
  StructuredOperator op =
      build_structured(StructuredKind::ModifiedMacdonaldFromGammaSchur, C({3, 1}));
  Json j = to_json(op);
  CHECK(j["degree"] == 4);
  CHECK(j["ordering"]["kind"] == "phi-gamma");
  CHECK(j["ordering"]["level"] == Json::array({3, 1}));
  REQUIRE(j["factors"].size() == 3);
  CHECK(j["factors"][2]["rows"] == 1);  // the [t^3] scalar factor
  CHECK(j["factors"][0]["rows"] == 2);
  CHECK(poly_from_json(j["factors"][2]["entries"][0], VarFamily::two_param()) ==
        LaurentPoly::t_pow(3));
}
