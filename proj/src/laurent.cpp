#include "ncribbon/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace ncribbon {

namespace {

void push_term(std::vector<LaurentPoly::Term>& out, Monomial mono, Int coeff) {
  if (coeff == 0) return;
  out.push_back({std::move(mono), std::move(coeff)});
}

std::vector<LaurentPoly::Term> normalize(std::vector<LaurentPoly::Term> ts) {
  std::sort(ts.begin(), ts.end(),
            [](const auto& a, const auto& b) { return a.mono < b.mono; });
  std::vector<LaurentPoly::Term> out;
  out.reserve(ts.size());
  for (auto& t : ts) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

Monomial canonical_mono(const Monomial& m) {
  Monomial c;
  c.reserve(m.size());
  for (const auto& [v, e] : m)
    if (e != 0) c.emplace_back(v, e);
  std::sort(c.begin(), c.end());
  for (size_t i = 1; i < c.size(); ++i)
    if (c[i].first == c[i - 1].first)
      throw Error("monomial has a repeated variable");
  return c;
}

}  // namespace

LaurentPoly LaurentPoly::zero(VarFamily family) { return LaurentPoly(family); }

LaurentPoly LaurentPoly::constant(Int c, VarFamily family) {
  LaurentPoly p(family);
  push_term(p.terms_, {}, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::one(VarFamily family) { return constant(1, family); }

LaurentPoly LaurentPoly::monomial(VarFamily family, const Monomial& exponents, Int c) {
  LaurentPoly p(family);
  push_term(p.terms_, canonical_mono(exponents), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::q_pow(int32_t e, Int c) {
  return monomial(VarFamily::two_param(), {{var::q, e}}, std::move(c));
}

LaurentPoly LaurentPoly::t_pow(int32_t e, Int c) {
  return monomial(VarFamily::two_param(), {{var::t, e}}, std::move(c));
}

LaurentPoly LaurentPoly::qi_var(VarFamily family, uint32_t i, int32_t e) {
  return monomial(family, {{var::qi(i), e}});
}

LaurentPoly LaurentPoly::ti_var(VarFamily family, uint32_t i, int32_t e) {
  return monomial(family, {{var::ti(i), e}});
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.empty() && terms_[0].coeff == 1;
}

bool LaurentPoly::has_nonnegative_exponents() const {
  for (const auto& t : terms_)
    for (const auto& [v, e] : t.mono)
      if (e < 0) return false;
  return true;
}

int LaurentPoly::uniform_sign() const {
  int sign = 0;
  for (const auto& t : terms_) {
    int s = t.coeff > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    if (s != sign)
      throw SignUniformityError("coefficients carry both signs: " + to_text(*this));
  }
  return sign;
}

void LaurentPoly::check_family(const LaurentPoly& o) const {
  // The zero polynomial unifies with any family.
  if (is_zero() || o.is_zero()) return;
  if (!(family_ == o.family_))
    throw FamilyMismatchError("polynomials belong to different parameter families");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_family(o);
  LaurentPoly r(is_zero() ? o.family_ : family_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  while (it != terms_.end() && jt != o.terms_.end()) {
    if (it->mono < jt->mono) {
      r.terms_.push_back(*it++);
    } else if (jt->mono < it->mono) {
      r.terms_.push_back(*jt++);
    } else {
      Int c = it->coeff + jt->coeff;
      if (c != 0) r.terms_.push_back({it->mono, std::move(c)});
      ++it;
      ++jt;
    }
  }
  r.terms_.insert(r.terms_.end(), it, terms_.end());
  r.terms_.insert(r.terms_.end(), jt, o.terms_.end());
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  *this = *this + o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(family_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_family(o);
  LaurentPoly r(is_zero() ? o.family_ : family_);
  if (is_zero() || o.is_zero()) return r;
  std::vector<Term> products;
  products.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Monomial m;
      m.reserve(a.mono.size() + b.mono.size());
      auto it = a.mono.begin();
      auto jt = b.mono.begin();
      while (it != a.mono.end() && jt != b.mono.end()) {
        if (it->first < jt->first) {
          m.push_back(*it++);
        } else if (jt->first < it->first) {
          m.push_back(*jt++);
        } else {
          int32_t e = it->second + jt->second;
          if (e != 0) m.emplace_back(it->first, e);
          ++it;
          ++jt;
        }
      }
      m.insert(m.end(), it, a.mono.end());
      m.insert(m.end(), jt, b.mono.end());
      products.push_back({std::move(m), a.coeff * b.coeff});
    }
  }
  r.terms_ = normalize(std::move(products));
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (terms_.empty() && o.terms_.empty()) return true;
  return family_ == o.family_ && terms_ == o.terms_;
}

LaurentPoly specialize_t_inverse(const LaurentPoly& p) {
  LaurentPoly r(p.family());
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    for (auto& [v, e] : m)
      if (var::is_t(v)) e = -e;
    r += LaurentPoly::monomial(p.family(), m, t.coeff);
  }
  return r;
}

LaurentPoly specialize_value(const LaurentPoly& p, ParamVar which, int value) {
  if (value != 0 && value != 1)
    throw UnsupportedSpecializationError(
        "only the substitutions 0 and 1 are supported; use eval_integers for points");
  const bool target_t = which == ParamVar::T;
  LaurentPoly r(p.family());
  for (const auto& t : p.terms()) {
    Monomial m;
    bool term_vanishes = false;
    for (const auto& [v, e] : t.mono) {
      if (var::is_t(v) == target_t) {
        if (value == 0) {
          if (e < 0) throw PoleError("substituting 0 into a negative exponent");
          term_vanishes = true;
        }
        // value == 1: the variable drops out
      } else {
        m.emplace_back(v, e);
      }
    }
    if (term_vanishes) continue;
    r += LaurentPoly::monomial(p.family(), m, t.coeff);
  }
  return r;
}

LaurentPoly collapse_multivariate(const LaurentPoly& p) {
  if (!p.family().is_multivariate()) return p;
  LaurentPoly r(VarFamily::two_param());
  for (const auto& t : p.terms()) {
    int64_t eq = 0, et = 0;
    for (const auto& [v, e] : t.mono) {
      (var::is_t(v) ? et : eq) += static_cast<int64_t>(var::index(v)) * e;
    }
    Monomial m;
    if (eq != 0) m.emplace_back(var::q, static_cast<int32_t>(eq));
    if (et != 0) m.emplace_back(var::t, static_cast<int32_t>(et));
    r += LaurentPoly::monomial(VarFamily::two_param(), m, t.coeff);
  }
  return r;
}

LaurentPoly reverse_variables(const LaurentPoly& p) {
  if (!p.family().is_multivariate()) return p;
  const uint32_t m = p.family().arity;
  LaurentPoly r(p.family());
  for (const auto& t : p.terms()) {
    Monomial mono;
    for (const auto& [v, e] : t.mono) {
      uint32_t i = var::index(v);
      uint32_t ni = m + 1 - i;
      mono.emplace_back(var::is_t(v) ? var::ti(ni) : var::qi(ni), e);
    }
    r += LaurentPoly::monomial(p.family(), mono, t.coeff);
  }
  return r;
}

LaurentPoly divide_by_monomial(const LaurentPoly& p, const Monomial& m) {
  Monomial inv;
  inv.reserve(m.size());
  for (const auto& [v, e] : m) inv.emplace_back(v, -e);
  return p * LaurentPoly::monomial(p.family(), inv, 1);
}

namespace {

Rational int_pow(const Int& base, int32_t e) {
  if (e >= 0) {
    Int r = 1;
    for (int32_t i = 0; i < e; ++i) r *= base;
    return Rational(r);
  }
  if (base == 0) throw PoleError("zero raised to a negative power");
  Int r = 1;
  for (int32_t i = 0; i < -e; ++i) r *= base;
  return Rational(1) / Rational(r);
}

}  // namespace

Rational eval_integers(const LaurentPoly& p, const std::vector<Int>& q_point,
                       const std::vector<Int>& t_point) {
  const bool mv = p.family().is_multivariate();
  auto value_of = [&](uint32_t v) -> const Int& {
    const auto& pt = var::is_t(v) ? t_point : q_point;
    size_t idx = mv ? var::index(v) - 1 : 0;
    if (idx >= pt.size()) throw Error("evaluation point has too few components");
    return pt[idx];
  };
  Rational total = 0;
  for (const auto& t : p.terms()) {
    Rational m = Rational(t.coeff);
    for (const auto& [v, e] : t.mono) m *= int_pow(value_of(v), e);
    total += m;
  }
  return total;
}

namespace {

// Display rank: q-variables before t-variables, each ordered by index.
uint64_t display_rank(uint32_t v) {
  return (var::is_t(v) ? (1ull << 32) : 0) + var::index(v);
}

std::string var_name(uint32_t v, bool multivariate) {
  std::string base = var::is_t(v) ? "t" : "q";
  if (multivariate) base += "_" + std::to_string(var::index(v));
  return base;
}

std::string mono_text(const Monomial& m, bool multivariate) {
  Monomial d = m;
  std::sort(d.begin(), d.end(), [](const auto& a, const auto& b) {
    return display_rank(a.first) < display_rank(b.first);
  });
  std::string s;
  for (const auto& [v, e] : d) {
    s += var_name(v, multivariate);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

int64_t total_degree(const Monomial& m) {
  int64_t d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

}  // namespace

std::string to_text(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  const bool mv = p.family().is_multivariate();
  std::vector<LaurentPoly::Term> ts = p.terms();
  std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
    int64_t da = total_degree(a.mono), db = total_degree(b.mono);
    if (da != db) return da < db;
    auto key = [&](const Monomial& m) {
      Monomial d = m;
      std::sort(d.begin(), d.end(), [](const auto& x, const auto& y) {
        return display_rank(x.first) < display_rank(y.first);
      });
      return d;
    };
    return key(a.mono) < key(b.mono);
  });
  std::string out;
  bool first = true;
  for (const auto& t : ts) {
    Int c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    std::string body = mono_text(t.mono, mv);
    if (body.empty()) {
      out += c.str();
    } else {
      if (c != 1) out += c.str();
      out += body;
    }
  }
  return out;
}

LaurentPoly parse_poly(const std::string& text, VarFamily family) {
  LaurentPoly result(family);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size()) throw ParseError("empty polynomial");
  bool first = true;
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms: " + text);
    }
    first = false;
    // coefficient digits
    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
    Int coeff = digits.empty() ? Int(1) : Int(digits);
    coeff *= sign;
    Monomial mono;
    while (i < text.size() && (text[i] == 'q' || text[i] == 't')) {
      bool is_t = text[i] == 't';
      ++i;
      uint32_t index = 0;
      if (i < text.size() && text[i] == '_') {
        ++i;
        std::string num;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) num += text[i++];
        if (num.empty()) throw ParseError("variable index expected: " + text);
        index = static_cast<uint32_t>(std::stoul(num));
      }
      if (family.is_multivariate() != (index != 0))
        throw ParseError("variable does not match the parameter family: " + text);
      int32_t exp = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        bool braced = i < text.size() && text[i] == '{';
        if (braced) ++i;
        std::string num;
        if (i < text.size() && text[i] == '-') num += text[i++];
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) num += text[i++];
        if (num.empty() || num == "-") throw ParseError("exponent expected: " + text);
        if (braced) {
          if (i >= text.size() || text[i] != '}') throw ParseError("unterminated exponent: " + text);
          ++i;
        }
        exp = static_cast<int32_t>(std::stol(num));
      }
      mono.emplace_back(is_t ? var::ti(index) : var::qi(index), exp);
    }
    if (digits.empty() && mono.empty()) throw ParseError("empty term: " + text);
    result += LaurentPoly::monomial(family, mono, coeff);
    skip_ws();
  }
  return result;
}

}  // namespace ncribbon
