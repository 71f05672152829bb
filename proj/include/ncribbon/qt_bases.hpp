#pragma once

#include "ncribbon/element.hpp"
#include "ncribbon/ncsf.hpp"
#include "ncribbon/structured.hpp"

namespace ncribbon {

/// The coefficient family matching a degree and flavor.
VarFamily family_for(uint32_t degree, BasisFlavor flavor);

/// H_alpha(A;t) = sum_{beta >= alpha} t^{c(alpha, beta^c)} R_beta, or the
/// multivariate version with products of t_i. Ribbon-basis expansion.
NcsfElement hall_littlewood(const Composition& alpha,
                            BasisFlavor flavor = BasisFlavor::SingleParam);

/// H_alpha(A;q,t) = sum_beta t^{c(alpha,beta^c)} q^{c(alpha', rev beta)} R_beta.
NcsfElement macdonald(const Composition& alpha, BasisFlavor flavor = BasisFlavor::SingleParam);

/// Ht_alpha(A;q,t) = t^{n(alpha)} H_alpha(A;q,1/t)
///                 = sum_beta t^{c(alpha,beta)} q^{c(alpha', rev beta)} R_beta.
NcsfElement modified_macdonald(const Composition& alpha,
                               BasisFlavor flavor = BasisFlavor::SingleParam);

/// Ht_alpha(A;t) = Ht_alpha(A;0,t) = sum_{beta >= alpha} t^{c(alpha,beta)} R_beta.
NcsfElement modified_hall_littlewood(const Composition& alpha,
                                     BasisFlavor flavor = BasisFlavor::SingleParam);

/// R^{(gamma)}_alpha: sum over {beta >= alpha : D(alpha)\D(beta) subset
/// D(gamma)} of t^{c(alpha,beta^c)} R_beta. Requires alpha <= gamma.
/// inverted_t produces the expansion of R^{(gamma)}_alpha(A;1/t).
NcsfElement gamma_schur(const Composition& gamma, const Composition& alpha,
                        BasisFlavor flavor = BasisFlavor::SingleParam, bool inverted_t = false);

/// H_alpha(A;t) = sum_{alpha <= beta <= gamma} t^{c(alpha,beta^c)} R^{(gamma)}_beta(A;t).
/// Result in the GammaSchur(gamma) basis.
NcsfElement hl_to_gamma_schur(const Composition& gamma, const Composition& alpha);

/// Moebius inverse of hl_to_gamma_schur: R^{(gamma)}_alpha as an alternating
/// sum of Hall-Littlewood functions over [alpha, gamma].
NcsfElement gamma_schur_to_hl(const Composition& gamma, const Composition& alpha);

/// Branching to a coarser level gamma_tilde >= gamma; result in the
/// GammaSchur(gamma_tilde) basis with monomial coefficients.
NcsfElement branch(const Composition& gamma, const Composition& gamma_tilde,
                   const Composition& alpha, BasisFlavor flavor = BasisFlavor::SingleParam);

/// H_alpha(A;q,t) (modified = false) or Ht_alpha(A;q,t) (modified = true)
/// expanded over {beta <= gamma} in the GammaSchur(gamma) basis; the
/// modified expansion lands in the basis at 1/t (inverted_t tag). Requires
/// alpha <= gamma. All coefficients are monomials with nonnegative
/// exponents.
NcsfElement macdonald_in_gamma_schur(const Composition& gamma, const Composition& alpha,
                                     bool modified);

struct OmegaCResult {
  Composition zeta;
  LaurentPoly prefactor;  // t^{n(gamma)}
  NcsfElement element;    // R^{(gamma)}_zeta in the basis at 1/t
};

/// omega^c(R^{(gamma)}_alpha(A;t)) = t^{n(gamma)} R^{(gamma)}_zeta(A;1/t),
/// D(zeta) = (D(gamma^c)\D(alpha)) union D(gamma).
OmegaCResult omega_c_on_gamma_schur(const Composition& gamma, const Composition& alpha);

/// Ribbon expansion of rev-omega applied to R^{(gamma)}_alpha. The
/// multivariate flavor is valid generally; the single-param flavor only at
/// t = 1 (any other t_value throws UnsupportedSpecializationError).
NcsfElement omega_rev_on_gamma_schur(const Composition& gamma, const Composition& alpha,
                                     BasisFlavor flavor, int t_value = 1);

enum class StructuredKind : uint8_t {
  MacdonaldFromRibbon,          // H(A;q,t)  = (x)_i [[1, q^{n-i}], [t^i, 1]] R(A)
  ModifiedMacdonaldFromRibbon,  // Ht(A;q,t) = (x)_i [[1, q^{n-i}], [1, t^i]] R(A)
  ModifiedMacdonaldFromGammaSchur,  // Ht|_g = (x)_{i in D(g)} [t^i] (x)_{else} [[1,q^{n-i}],[1,t^i]] R^{(g)}(A;1/t)
};

/// Ribbon-based kinds, either flavor (t^i -> t_i, q^{n-i} -> q_{n-i}).
StructuredOperator build_structured(StructuredKind kind, uint32_t degree,
                                    BasisFlavor flavor = BasisFlavor::SingleParam);
/// The gamma kind, under the PhiGamma(gamma) ordering.
StructuredOperator build_structured(StructuredKind kind, const Composition& gamma);

/// Expands any element into the ribbon basis through its defining sums.
NcsfElement expand_to_ribbon(const NcsfElement& e);

}  // namespace ncribbon
