#include "ncribbon/composition.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace ncribbon {

namespace {

uint64_t full_mask(uint32_t n) { return n >= 1 ? (1ull << (n - 1)) - 1 : 0; }

void check_same_degree(const Composition& a, const Composition& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatchError("compositions of degrees " + std::to_string(a.degree()) +
                              " and " + std::to_string(b.degree()) + " are incomparable");
}

void check_dense_degree(uint32_t n) {
  if (n > Composition::kMaxDenseDegree)
    throw InvalidCompositionError("degree " + std::to_string(n) +
                                  " exceeds the full-basis cap of " +
                                  std::to_string(Composition::kMaxDenseDegree));
}

}  // namespace

Composition::Composition(uint32_t degree, uint64_t descent_mask)
    : degree_(degree), descents_(descent_mask) {
  if (degree < 1 || degree > kMaxDegree)
    throw InvalidCompositionError("degree must lie in [1, " + std::to_string(kMaxDegree) + "]");
  if (descent_mask & ~full_mask(degree))
    throw InvalidCompositionError("descent set not contained in {1..n-1}");
}

Composition Composition::from_parts(const std::vector<uint32_t>& parts) {
  if (parts.empty()) throw InvalidCompositionError("a composition needs at least one part");
  uint64_t sum = 0;
  uint64_t mask = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) throw InvalidCompositionError("parts must be positive");
    sum += parts[i];
    if (sum > kMaxDegree) throw InvalidCompositionError("degree exceeds the cap");
    if (i + 1 < parts.size()) mask |= 1ull << (sum - 1);
  }
  return Composition(static_cast<uint32_t>(sum), mask);
}

std::vector<uint32_t> Composition::descent_set() const {
  std::vector<uint32_t> out;
  for (uint32_t i = 1; i < degree_; ++i)
    if (descents_ >> (i - 1) & 1) out.push_back(i);
  return out;
}

std::vector<uint32_t> Composition::parts() const {
  std::vector<uint32_t> out;
  uint32_t prev = 0;
  for (uint32_t i = 1; i < degree_; ++i) {
    if (descents_ >> (i - 1) & 1) {
      out.push_back(i - prev);
      prev = i;
    }
  }
  out.push_back(degree_ - prev);
  return out;
}

uint32_t Composition::length() const {
  return static_cast<uint32_t>(std::popcount(descents_)) + 1;
}

Composition concat(const Composition& a, const Composition& b) {
  uint32_t n = a.degree() + b.degree();
  uint64_t mask = a.descent_mask() | (1ull << (a.degree() - 1)) |
                  (b.descent_mask() << a.degree());
  return Composition(n, mask);
}

Composition attach(const Composition& a, const Composition& b) {
  uint32_t n = a.degree() + b.degree();
  return Composition(n, a.descent_mask() | (b.descent_mask() << a.degree()));
}

bool refines(const Composition& a, const Composition& b) {
  check_same_degree(a, b);
  return (b.descent_mask() & ~a.descent_mask()) == 0;
}

Composition reverse(const Composition& a) {
  // D(rev a) = {n - i : i in D(a)}
  uint32_t n = a.degree();
  uint64_t mask = 0;
  for (uint32_t i = 1; i < n; ++i)
    if (a.descent_mask() >> (i - 1) & 1) mask |= 1ull << (n - i - 1);
  return Composition(n, mask);
}

Composition complement(const Composition& a) {
  return Composition(a.degree(), full_mask(a.degree()) & ~a.descent_mask());
}

Composition conjugate(const Composition& a) { return reverse(complement(a)); }

uint64_t major_index(const Composition& a) {
  uint64_t s = 0;
  for (uint32_t i = 1; i < a.degree(); ++i)
    if (a.descent_mask() >> (i - 1) & 1) s += i;
  return s;
}

uint64_t c_stat(const Composition& a, const Composition& b) {
  check_same_degree(a, b);
  uint64_t inter = a.descent_mask() & b.descent_mask();
  uint64_t s = 0;
  for (uint32_t i = 1; i < a.degree(); ++i)
    if (inter >> (i - 1) & 1) s += i;
  return s;
}

uint64_t rank_phi(const Composition& a) { return a.descent_mask(); }

Composition unrank_phi(uint32_t n, uint64_t rank) {
  if (n < 1 || rank >= (1ull << (n - 1)))
    throw InvalidCompositionError("rank out of range for degree " + std::to_string(n));
  return Composition(n, rank);
}

std::vector<Composition> compositions_of(uint32_t n) {
  check_dense_degree(n);
  std::vector<Composition> out;
  out.reserve(1ull << (n - 1));
  for (uint64_t m = 0; m < (1ull << (n - 1)); ++m) out.emplace_back(n, m);
  return out;
}

std::vector<Composition> interval(const Composition& alpha, const Composition& gamma) {
  check_same_degree(alpha, gamma);
  uint64_t base = alpha.descent_mask() & ~gamma.descent_mask();
  uint64_t free = alpha.descent_mask() & gamma.descent_mask();
  std::vector<Composition> out;
  // enumerate submasks of `free`, then sort into phi order
  uint64_t sub = free;
  while (true) {
    out.emplace_back(alpha.degree(), base | sub);
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
  std::sort(out.begin(), out.end());
  return out;
}

GammaOrdering::GammaOrdering(Composition gamma) : gamma_(gamma) {
  uint32_t n = gamma_.degree();
  check_dense_degree(n);
  k_ = gamma_.length() - 1;
  sigma_.assign(n, 0);
  slot_to_descent_.assign(n >= 1 ? n - 1 : 0, 0);
  uint32_t next = 1;
  for (uint32_t i = 1; i < n; ++i)
    if (gamma_.has_descent(i)) sigma_[i] = next++;
  for (uint32_t i = 1; i < n; ++i)
    if (!gamma_.has_descent(i)) sigma_[i] = next++;
  for (uint32_t i = 1; i < n; ++i) slot_to_descent_[sigma_[i] - 1] = i;
}

uint64_t GammaOrdering::rank_phi_gamma(const Composition& a) const {
  check_same_degree(a, gamma_);
  uint64_t r = 0;
  for (uint32_t i = 1; i < a.degree(); ++i)
    if (a.has_descent(i)) r |= 1ull << (sigma_[i] - 1);
  return r;
}

uint64_t GammaOrdering::restricted_rank(const Composition& a) const {
  if (!refines(a, gamma_))
    throw LevelError("composition " + format_dotted(a) + " does not refine the level " +
                     format_dotted(gamma_));
  return (rank_phi_gamma(a) - ((1ull << k_) - 1)) >> k_;
}

Composition GammaOrdering::unrank_restricted(uint64_t rank) const {
  if (rank >= restricted_dim()) throw LevelError("restricted rank out of range");
  uint64_t mask = gamma_.descent_mask();
  uint32_t n = gamma_.degree();
  for (uint32_t s = k_; s < n - 1; ++s)
    if (rank >> (s - k_) & 1) mask |= 1ull << (slot_to_descent_[s] - 1);
  return Composition(n, mask);
}

std::vector<Composition> GammaOrdering::compositions_below() const {
  std::vector<Composition> out;
  out.reserve(restricted_dim());
  for (uint64_t r = 0; r < restricted_dim(); ++r) out.push_back(unrank_restricted(r));
  return out;
}

std::string format_dotted(const Composition& a) {
  std::string s;
  for (uint32_t p : a.parts()) {
    if (!s.empty()) s += '.';
    s += std::to_string(p);
  }
  return s;
}

Composition parse_dotted(const std::string& text) {
  std::vector<uint32_t> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '.')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("malformed composition '" + text + "' (expected dot-separated parts)");
    parts.push_back(static_cast<uint32_t>(std::stoul(item)));
  }
  if (parts.empty()) throw ParseError("empty composition string");
  return Composition::from_parts(parts);
}

std::string format_compact(const Composition& a) {
  auto ps = a.parts();
  bool small = std::all_of(ps.begin(), ps.end(), [](uint32_t p) { return p <= 9; });
  std::string s = "(";
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i && !small) s += '.';
    s += std::to_string(ps[i]);
  }
  return s + ")";
}

}  // namespace ncribbon
