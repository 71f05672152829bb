#pragma once

#include <map>

#include "ncribbon/element.hpp"

namespace ncribbon {

/// Ribbon basis -> homogeneous basis: R_a = sum_{b >= a} (-1)^{l(a)-l(b)} h_b,
/// extended linearly. Input must be tagged Ribbon.
NcsfElement ribbon_to_h(const NcsfElement& e);

/// Homogeneous basis -> ribbon basis: h_a = sum_{b >= a} R_b. Mutually
/// inverse with ribbon_to_h.
NcsfElement h_to_ribbon(const NcsfElement& e);

/// Product of two elements in the same basis, Homogeneous (h_a h_b =
/// h_{a.b}) or Ribbon (R_a R_b = R_{a.b} + R_{a|b}); bilinear. Degrees add.
/// The deformed bases have no product rule and are rejected.
NcsfElement product(const NcsfElement& e1, const NcsfElement& e2);

/// omega^c: relabels ribbon support by complement.
NcsfElement omega_c(const NcsfElement& e);
/// reversed omega: relabels ribbon support by reverse.
NcsfElement omega_rev(const NcsfElement& e);

/// Partition (parts sorted decreasingly) -> coefficient.
using CommutativeImage = std::map<std::vector<uint32_t>, LaurentPoly>;

/// The commutative evaluation chi: h_alpha -> h_{sort(alpha)}. Accepts
/// Homogeneous directly and Ribbon via conversion; other bases must be
/// expanded first.
CommutativeImage chi(const NcsfElement& e);

/// Product of two chi images (commutative h multiplication: partitions
/// merge).
CommutativeImage chi_product(const CommutativeImage& a, const CommutativeImage& b);

}  // namespace ncribbon
