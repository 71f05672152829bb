#include "ncribbon/text_io.hpp"

#include <algorithm>
#include <cctype>

namespace ncribbon {

namespace {

std::string subscript(const Composition& c) {
  auto ps = c.parts();
  bool small = std::all_of(ps.begin(), ps.end(), [](uint32_t p) { return p <= 9; });
  std::string s = "{";
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i && !small) s += '.';
    s += std::to_string(ps[i]);
  }
  return s + "}";
}

// Renders a coefficient, factoring out an overall minus sign when every
// term is negative. Returns {negative, body}; body is "" for coefficient 1.
std::pair<bool, std::string> coeff_text(const LaurentPoly& p) {
  bool neg = false;
  LaurentPoly body = p;
  if (!p.is_zero()) {
    bool all_neg = true;
    for (const auto& t : p.terms())
      if (t.coeff > 0) all_neg = false;
    if (all_neg) {
      neg = true;
      body = -p;
    }
  }
  if (body.is_one()) return {neg, ""};
  std::string s = to_text(body);
  if (body.terms().size() > 1) s = "(" + s + ")";
  return {neg, s};
}

}  // namespace

std::string basis_symbol(const BasisTag& tag) {
  switch (tag.kind) {
    case BasisKind::Homogeneous: return "h";
    case BasisKind::Ribbon: return "R";
    case BasisKind::HallLittlewood:
    case BasisKind::Macdonald: return "H";
    case BasisKind::ModifiedMacdonald:
    case BasisKind::ModifiedHallLittlewood: return "H~";
    case BasisKind::GammaSchur: return "R^{" + format_compact(*tag.level) + "}";
  }
  return "?";
}

std::string to_text(const NcsfElement& e) {
  if (e.is_zero()) return "0";
  std::string sym = basis_symbol(e.basis());
  std::vector<Composition> order;
  order.reserve(e.support_size());
  for (const auto& [c, p] : e.coeffs()) order.push_back(c);
  if (e.basis().kind == BasisKind::GammaSchur) {
    GammaOrdering ord(*e.basis().level);
    std::sort(order.begin(), order.end(), [&](const Composition& a, const Composition& b) {
      return ord.restricted_rank(a) < ord.restricted_rank(b);
    });
  }
  std::string out;
  bool first = true;
  for (const auto& c : order) {
    auto [neg, coeff] = coeff_text(e.coefficient(c));
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (!coeff.empty()) out += coeff + " ";
    out += sym + "_" + subscript(c);
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool starts_with(const std::string& w) const { return s.compare(i, w.size(), w) == 0; }
};

Composition parse_subscript(Cursor& cur) {
  if (!cur.eat('{')) throw ParseError("expected '{' after basis symbol");
  std::string body;
  while (cur.i < cur.s.size() && cur.s[cur.i] != '}') body += cur.s[cur.i++];
  if (!cur.eat('}')) throw ParseError("unterminated subscript");
  if (body.find('.') != std::string::npos) return parse_dotted(body);
  std::vector<uint32_t> parts;
  for (char ch : body) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("malformed subscript");
    parts.push_back(static_cast<uint32_t>(ch - '0'));
  }
  return Composition::from_parts(parts);
}

}  // namespace

NcsfElement parse_element(const std::string& text, uint32_t degree, const BasisTag& tag,
                          VarFamily family) {
  NcsfElement out(degree, tag, family);
  Cursor cur{text};
  cur.skip_ws();
  if (cur.starts_with("0") && cur.i + 1 >= text.size()) return out;
  const std::string sym = basis_symbol(tag);
  bool first = true;
  while (true) {
    cur.skip_ws();
    if (cur.i >= text.size()) break;
    int sign = 1;
    if (cur.eat('-')) {
      sign = -1;
    } else if (cur.eat('+')) {
      sign = 1;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms");
    }
    first = false;
    cur.skip_ws();
    // coefficient: parenthesized polynomial, or a bare monomial, or nothing
    LaurentPoly coeff = LaurentPoly::one(family);
    if (cur.eat('(')) {
      std::string body;
      int depth = 1;
      while (cur.i < text.size() && depth > 0) {
        char ch = text[cur.i++];
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (depth > 0) body += ch;
      }
      if (depth != 0) throw ParseError("unbalanced parentheses");
      coeff = parse_poly(body, family);
    } else if (!cur.starts_with(sym)) {
      std::string body;
      while (cur.i < text.size() && !cur.starts_with(sym) &&
             !std::isspace(static_cast<unsigned char>(text[cur.i])))
        body += text[cur.i++];
      if (body.empty()) throw ParseError("expected a coefficient or basis symbol");
      coeff = parse_poly(body, family);
    }
    cur.skip_ws();
    if (!cur.starts_with(sym)) throw ParseError("expected basis symbol '" + sym + "'");
    cur.i += sym.size();
    if (!cur.eat('_')) throw ParseError("expected '_' after basis symbol");
    Composition c = parse_subscript(cur);
    out.add_term(c, coeff * LaurentPoly::constant(sign, family));
  }
  return out;
}

}  // namespace ncribbon
