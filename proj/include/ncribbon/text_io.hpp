#pragma once

#include <string>

#include "ncribbon/element.hpp"

namespace ncribbon {

/// Text rendering, e.g. "R_{121} + t R_{31} + t^3 R_{13} + t^4 R_{4}"
/// or "-q^2t^2 R_{22} - (q^3t^2 + q^2t^5) R_{211}". Gamma-schur terms print
/// as "R^{(31)}_{211}" and are ordered by the restricted phi_gamma rank;
/// every other basis prints in phi order.
std::string to_text(const NcsfElement& e);

/// Inverse of to_text for a known tag/degree/family. The zero element is
/// "0".
NcsfElement parse_element(const std::string& text, uint32_t degree, const BasisTag& tag,
                          VarFamily family);

/// The display symbol of a basis ("R", "h", "H", "H~", "R^{(31)}").
std::string basis_symbol(const BasisTag& tag);

}  // namespace ncribbon
