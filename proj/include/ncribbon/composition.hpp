#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncribbon/errors.hpp"

namespace ncribbon {

/// A composition of n, stored as its degree plus the descent set
/// D(alpha) = {alpha_1, alpha_1+alpha_2, ...} as a bitmask. Membership of
/// descent position i is stored at bit i-1, so the mask value *is* the
/// rank phi(alpha). Parts lists are derived views.
///
/// Immutable value type; all operations on compositions are pure.
class Composition {
 public:
  /// Statistics and set operations work for any degree up to this cap
  /// (descents must fit a machine word).
  static constexpr uint32_t kMaxDegree = 63;
  /// Operations that materialize full 2^{n-1}-dimensional bases enforce
  /// this smaller cap.
  static constexpr uint32_t kMaxDenseDegree = 24;

  Composition(uint32_t degree, uint64_t descent_mask);

  static Composition from_parts(const std::vector<uint32_t>& parts);
  /// The one-part composition (n).
  static Composition single(uint32_t n) { return Composition(n, 0); }

  uint32_t degree() const { return degree_; }
  uint64_t descent_mask() const { return descents_; }
  /// Descent positions in increasing order.
  std::vector<uint32_t> descent_set() const;
  std::vector<uint32_t> parts() const;
  /// Number of parts: |D(alpha)| + 1.
  uint32_t length() const;
  bool has_descent(uint32_t i) const { return i >= 1 && i < degree_ && (descents_ >> (i - 1) & 1); }

  bool operator==(const Composition&) const = default;
  /// phi order within a degree; degrees compare first so mixed-degree
  /// containers stay coherent.
  bool operator<(const Composition& o) const {
    return degree_ != o.degree_ ? degree_ < o.degree_ : descents_ < o.descents_;
  }

 private:
  uint32_t degree_;
  uint64_t descents_;
};

/// alpha . beta: parts lists appended.
Composition concat(const Composition& a, const Composition& b);
/// alpha | beta: boundary parts merged.
Composition attach(const Composition& a, const Composition& b);

/// a <= b in the refinement order: D(b) subset of D(a). Throws
/// DegreeMismatchError on unequal degrees.
bool refines(const Composition& a, const Composition& b);

Composition reverse(const Composition& a);
Composition complement(const Composition& a);
/// conjugate = reverse o complement = complement o reverse.
Composition conjugate(const Composition& a);

/// Major index n(alpha) = sum of descent positions.
uint64_t major_index(const Composition& a);
/// c(alpha, beta) = sum over D(alpha) intersect D(beta).
uint64_t c_stat(const Composition& a, const Composition& b);

/// The rank function phi; literally the descent bitmask.
uint64_t rank_phi(const Composition& a);
Composition unrank_phi(uint32_t n, uint64_t rank);
/// All compositions of n in phi order. Enforces the dense-degree cap.
std::vector<Composition> compositions_of(uint32_t n);

/// {beta : D(alpha)\D(gamma) subset D(beta) subset D(alpha)}, in phi order.
/// Cardinality 2^{|D(alpha) cap D(gamma)|}.
std::vector<Composition> interval(const Composition& alpha, const Composition& gamma);

/// The ordering data attached to a level gamma: the permutation sigma_gamma
/// sending the sorted descents of gamma to 1..k and the sorted descents of
/// gamma^c to k+1..n-1, with the rank functions it induces.
class GammaOrdering {
 public:
  explicit GammaOrdering(Composition gamma);

  const Composition& gamma() const { return gamma_; }
  uint32_t k() const { return k_; }
  uint32_t degree() const { return gamma_.degree(); }
  /// sigma_gamma(i) for a descent position 1 <= i <= n-1.
  uint32_t sigma(uint32_t i) const { return sigma_[i]; }
  /// The descent position mapped to slot s (s = sigma(i)-1, zero-based).
  uint32_t descent_at_slot(uint32_t s) const { return slot_to_descent_[s]; }

  /// phi_gamma(a) = sum over D(a) of 2^{sigma(i)-1}.
  uint64_t rank_phi_gamma(const Composition& a) const;

  /// Bijection {a : a <= gamma} -> {0..2^{n-1-k}-1}; throws LevelError when
  /// a does not refine gamma.
  uint64_t restricted_rank(const Composition& a) const;
  Composition unrank_restricted(uint64_t rank) const;
  uint64_t restricted_dim() const { return 1ull << (gamma_.degree() - 1 - k_); }

  /// {a : a <= gamma} in phi_gamma (= restricted rank) order.
  std::vector<Composition> compositions_below() const;

 private:
  Composition gamma_;
  uint32_t k_;
  std::vector<uint32_t> sigma_;            // index by descent position 1..n-1
  std::vector<uint32_t> slot_to_descent_;  // index by slot 0..n-2
};

/// Dot-separated parts, "2.4.3.1".
std::string format_dotted(const Composition& a);
Composition parse_dotted(const std::string& text);
/// Parenthesized compact form used by the tables, "(211)". Falls back to
/// dots inside the parentheses when a part exceeds 9.
std::string format_compact(const Composition& a);

}  // namespace ncribbon
