#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ncribbon/errors.hpp"

namespace ncribbon {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parameter family of a coefficient ring: either the pair {q, t} or the
/// sequences {q_1..q_m, t_1..t_m} with m = n-1 for ambient degree n.
struct VarFamily {
  enum class Kind : uint8_t { TwoParam, Multivariate };

  Kind kind = Kind::TwoParam;
  uint32_t arity = 0;  // number of q_i (== number of t_i); Multivariate only

  static VarFamily two_param() { return {Kind::TwoParam, 0}; }
  static VarFamily multivariate(uint32_t arity) { return {Kind::Multivariate, arity}; }
  bool is_multivariate() const { return kind == Kind::Multivariate; }
  bool operator==(const VarFamily&) const = default;
};

/// Variable ids. The two-param q and t use index 0; the multivariate
/// q_i, t_i use index i >= 1. Bit 0 distinguishes t-type from q-type.
namespace var {
inline constexpr uint32_t q = 0;
inline constexpr uint32_t t = 1;
inline uint32_t qi(uint32_t i) { return 2 * i; }
inline uint32_t ti(uint32_t i) { return 2 * i + 1; }
inline bool is_t(uint32_t v) { return (v & 1) != 0; }
inline uint32_t index(uint32_t v) { return v >> 1; }
}  // namespace var

/// Exponent vector stored sparsely: (variable id, nonzero exponent), sorted
/// by variable id. Exponents may be negative.
using Monomial = std::vector<std::pair<uint32_t, int32_t>>;

/// Sparse Laurent polynomial with exact integer coefficients.
///
/// Canonical form: terms sorted by monomial, no zero coefficients, no zero
/// exponents inside a monomial. The zero polynomial has an empty term list
/// and unifies with any family.
class LaurentPoly {
 public:
  struct Term {
    Monomial mono;
    Int coeff;
    bool operator==(const Term&) const = default;
  };

  LaurentPoly() = default;  // zero, two-param family
  explicit LaurentPoly(VarFamily family) : family_(family) {}

  static LaurentPoly zero(VarFamily family = VarFamily::two_param());
  static LaurentPoly constant(Int c, VarFamily family = VarFamily::two_param());
  static LaurentPoly one(VarFamily family = VarFamily::two_param());
  /// Single-term polynomial c * prod var^exp. Zero exponents are dropped.
  static LaurentPoly monomial(VarFamily family, const Monomial& exponents, Int c = 1);

  // two-param convenience
  static LaurentPoly q_pow(int32_t e, Int c = 1);
  static LaurentPoly t_pow(int32_t e, Int c = 1);
  // multivariate convenience: q_i / t_i with i >= 1
  static LaurentPoly qi_var(VarFamily family, uint32_t i, int32_t e = 1);
  static LaurentPoly ti_var(VarFamily family, uint32_t i, int32_t e = 1);

  const VarFamily& family() const { return family_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// True when the polynomial is a single term.
  bool is_monomial() const { return terms_.size() == 1; }
  /// True when every exponent of every term is >= 0.
  bool has_nonnegative_exponents() const;
  /// +1 / -1 when all coefficients share that sign; 0 for the zero
  /// polynomial; throws SignUniformityError on mixed signs.
  int uniform_sign() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);

  bool operator==(const LaurentPoly& o) const;

 private:
  VarFamily family_;
  std::vector<Term> terms_;

  void check_family(const LaurentPoly& o) const;
  friend LaurentPoly mul_impl(const LaurentPoly&, const LaurentPoly&);
};

inline LaurentPoly neg(const LaurentPoly& p) { return -p; }
inline LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
inline LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

/// t -> 1/t: negates the exponent of every t-type variable; q untouched.
/// An involution on both families.
LaurentPoly specialize_t_inverse(const LaurentPoly& p);

enum class ParamVar : uint8_t { Q, T };

/// Substitutes 0 or 1 for the named parameter (all q_i or all t_i in the
/// multivariate family). Substituting 0 into a negative exponent throws
/// PoleError; values other than 0 and 1 are not a specialization this ring
/// supports and throw UnsupportedSpecializationError.
LaurentPoly specialize_value(const LaurentPoly& p, ParamVar which, int value);

/// The collapse t_i -> t^i, q_i -> q^i from the multivariate family onto
/// the two-param family. Identity on two-param input.
LaurentPoly collapse_multivariate(const LaurentPoly& p);

/// q_i -> q_{m+1-i}, t_i -> t_{m+1-i} where m is the family arity.
LaurentPoly reverse_variables(const LaurentPoly& p);

/// Exact division by a monomial: subtracts exponents. Total in the Laurent
/// ring.
LaurentPoly divide_by_monomial(const LaurentPoly& p, const Monomial& m);

/// Exact evaluation at an integer point. q_point/t_point hold the values of
/// q_1..q_m / t_1..t_m (a single entry each for the two-param family).
/// Raising zero to a negative exponent throws PoleError.
Rational eval_integers(const LaurentPoly& p, const std::vector<Int>& q_point,
                       const std::vector<Int>& t_point);

/// Text rendering: "q^3t^3 + q^2t^5", multivariate "q_2q_3t_3".
/// Terms ordered by total degree, then lexicographically with q-variables
/// before t-variables.
std::string to_text(const LaurentPoly& p);

/// Inverse of to_text. Accepts optional '{...}' around exponents.
LaurentPoly parse_poly(const std::string& text, VarFamily family);

}  // namespace ncribbon
