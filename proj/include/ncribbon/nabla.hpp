#pragma once

#include "ncribbon/qt_bases.hpp"

namespace ncribbon {

/// The eigenvalue the nabla operator attaches to Ht_alpha: the monomial
/// t^{n(alpha)} q^{n(alpha')}.
struct NablaEigenvalue {
  Composition alpha;
  LaurentPoly value;
};

NablaEigenvalue nabla_eigenvalue(const Composition& alpha);

enum class NablaKind : uint8_t {
  /// Diagonal on the Ht vector: (x)_i [[q^{n-i}, 0], [0, t^i]].
  EigenDiagonal,
  /// On the ribbon vector: (x)_i [[0, -q^{n-i}t^i], [1, t^i+q^{n-i}]].
  Ribbon,
  /// On the restricted gamma-Schur-at-1/t vector:
  /// (x)_{i in D(g)} [t^i] (x)_{else} [[0, -t^i q^{n-i}], [1, t^i+q^{n-i}]].
  GammaSchur,
  /// Modified Hall-Littlewood input, gamma-Schur-at-1/t output:
  /// (x)_{i in D(g)} [t^{2i}] (x)_{else} [[0, -t^i q^{n-i}], [t^i, t^{2i}]].
  ModifiedHallLittlewood,
  /// Gamma-Schur-at-1/t input, full ribbon output:
  /// (x)_{i in D(g)} [1  t^i] (x)_{else} [[0, -q^{n-i}t^i], [1, t^i+q^{n-i}]].
  GammaSchurToRibbon,
};

/// Level-free kinds (EigenDiagonal, Ribbon).
StructuredOperator nabla_structured(NablaKind kind, uint32_t degree);
/// Level-bound kinds, under the PhiGamma(gamma) ordering.
StructuredOperator nabla_structured(NablaKind kind, const Composition& gamma);

/// Applies nabla through the closed-form operator matching the input basis:
///   ModifiedMacdonald        -> ModifiedMacdonald (eigen scaling)
///   Ribbon                   -> Ribbon
///   GammaSchur at 1/t        -> GammaSchur at 1/t
///   ModifiedHallLittlewood   -> GammaSchur(level) at 1/t
/// The level argument is used by the ModifiedHallLittlewood path; when
/// absent the tightest level containing the support is taken. Other bases
/// throw BasisError.
NcsfElement nabla(const NcsfElement& e, std::optional<Composition> level = std::nullopt);

/// The gamma-Schur-at-1/t path that lands directly in the full ribbon
/// basis.
NcsfElement nabla_to_ribbon(const NcsfElement& e);

struct SignSplit {
  int sign;  // +1 or -1 (+1 for the zero element)
  NcsfElement positive_part;
};

/// Extracts the single sign shared by all coefficients; throws
/// SignUniformityError when signs are mixed.
SignSplit sign_normalize(const NcsfElement& e);

}  // namespace ncribbon
