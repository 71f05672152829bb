#include "ncribbon/ncsf.hpp"

#include <algorithm>
#include <bit>

namespace ncribbon {

namespace {

void require_basis(const NcsfElement& e, BasisKind kind, const char* op) {
  if (e.basis().kind != kind)
    throw BasisError(std::string(op) + " expects the " + basis_kind_name(kind) + " basis, got " +
                     basis_kind_name(e.basis().kind));
}

// Enumerates the submasks of `mask` (the order filter {b >= a} in descent
// terms), calling f(submask).
template <typename F>
void for_each_submask(uint64_t mask, F&& f) {
  uint64_t sub = mask;
  while (true) {
    f(sub);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
}

}  // namespace

NcsfElement ribbon_to_h(const NcsfElement& e) {
  require_basis(e, BasisKind::Ribbon, "ribbon_to_h");
  NcsfElement out(e.degree(), BasisTag::homogeneous(e.basis().flavor), e.family());
  for (const auto& [a, p] : e.coeffs()) {
    uint64_t da = a.descent_mask();
    int la = std::popcount(da);
    for_each_submask(da, [&](uint64_t db) {
      int sign = ((la - std::popcount(db)) & 1) ? -1 : 1;
      out.add_term(Composition(a.degree(), db), p * LaurentPoly::constant(sign, e.family()));
    });
  }
  return out;
}

NcsfElement h_to_ribbon(const NcsfElement& e) {
  require_basis(e, BasisKind::Homogeneous, "h_to_ribbon");
  NcsfElement out(e.degree(), BasisTag::ribbon(e.basis().flavor), e.family());
  for (const auto& [a, p] : e.coeffs()) {
    for_each_submask(a.descent_mask(), [&](uint64_t db) {
      out.add_term(Composition(a.degree(), db), p);
    });
  }
  return out;
}

NcsfElement product(const NcsfElement& e1, const NcsfElement& e2) {
  if (!(e1.basis() == e2.basis()))
    throw BasisError("product requires both factors in the same basis");
  BasisKind kind = e1.basis().kind;
  if (kind != BasisKind::Homogeneous && kind != BasisKind::Ribbon)
    throw BasisError("no product rule for the " + basis_kind_name(kind) + " basis");
  NcsfElement out(e1.degree() + e2.degree(), e1.basis(), e1.family());
  for (const auto& [a, p] : e1.coeffs()) {
    for (const auto& [b, q] : e2.coeffs()) {
      LaurentPoly c = p * q;
      out.add_term(concat(a, b), c);
      if (kind == BasisKind::Ribbon) out.add_term(attach(a, b), c);
    }
  }
  return out;
}

NcsfElement omega_c(const NcsfElement& e) {
  require_basis(e, BasisKind::Ribbon, "omega_c");
  return e.relabel_support([](const Composition& c) { return complement(c); });
}

NcsfElement omega_rev(const NcsfElement& e) {
  require_basis(e, BasisKind::Ribbon, "omega_rev");
  return e.relabel_support([](const Composition& c) { return reverse(c); });
}

CommutativeImage chi(const NcsfElement& e) {
  NcsfElement h = e;
  if (e.basis().kind == BasisKind::Ribbon) h = ribbon_to_h(e);
  require_basis(h, BasisKind::Homogeneous, "chi");
  CommutativeImage out;
  for (const auto& [a, p] : h.coeffs()) {
    std::vector<uint32_t> parts = a.parts();
    std::sort(parts.rbegin(), parts.rend());
    auto [it, fresh] = out.emplace(std::move(parts), p);
    if (!fresh) {
      it->second += p;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

CommutativeImage chi_product(const CommutativeImage& a, const CommutativeImage& b) {
  CommutativeImage out;
  for (const auto& [pa, ca] : a) {
    for (const auto& [pb, cb] : b) {
      std::vector<uint32_t> merged = pa;
      merged.insert(merged.end(), pb.begin(), pb.end());
      std::sort(merged.rbegin(), merged.rend());
      LaurentPoly c = ca * cb;
      auto [it, fresh] = out.emplace(std::move(merged), c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

}  // namespace ncribbon
