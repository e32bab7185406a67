#pragma once

// Exact sparse Laurent polynomials in v (VPoly) and in v, z (VZPoly).
//
// Terms are kept sorted by exponent with no zero coefficients, so two
// polynomials are equal iff their term vectors are equal. For VZPoly the
// ordering is lexicographic on (z-exponent, v-exponent).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace plink {

using BigInt = boost::multiprecision::cpp_int;

struct VZExp {
  int z = 0;
  int v = 0;

  auto operator<=>(const VZExp&) const = default;
  friend VZExp operator+(VZExp a, VZExp b) { return {a.z + b.z, a.v + b.v}; }
};

template <typename Exp>
class SparsePoly {
 public:
  struct Term {
    Exp exp{};
    BigInt coeff;

    bool operator==(const Term&) const = default;
  };

  SparsePoly() = default;

  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  explicit SparsePoly(std::vector<Term> terms) : terms_(std::move(terms)) { normalize(); }
  SparsePoly(std::initializer_list<Term> terms) : terms_(terms) { normalize(); }

  static SparsePoly constant(BigInt c) { return monomial(std::move(c), Exp{}); }
  static SparsePoly monomial(BigInt c, Exp e) {
    SparsePoly out;
    if (c != 0) out.terms_.push_back({e, std::move(c)});
    return out;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigInt coeff(const Exp& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exp& x) { return t.exp < x; });
    if (it != terms_.end() && it->exp == e) return it->coeff;
    return 0;
  }

  /// Multiplication by the monomial `sign * x^shift`; sign must be +1 or -1.
  SparsePoly shifted(const Exp& shift, int sign = 1) const {
    SparsePoly out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.exp + shift, sign < 0 ? BigInt(-t.coeff) : t.coeff});
    return out;
  }

  SparsePoly scaled(const BigInt& c) const {
    if (c == 0) return {};
    SparsePoly out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.exp, t.coeff * c});
    return out;
  }

  SparsePoly operator-() const { return shifted(Exp{}, -1); }

  SparsePoly& operator+=(const SparsePoly& rhs) {
    *this = merge(*this, rhs, 1);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& rhs) {
    *this = merge(*this, rhs, -1);
    return *this;
  }
  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, 1); }
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, -1); }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.terms_.size() == 1) return a.scaled(b.terms_[0].coeff).shifted(b.terms_[0].exp);
    if (a.terms_.size() == 1) return b.scaled(a.terms_[0].coeff).shifted(a.terms_[0].exp);
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) prod.push_back({s.exp + t.exp, s.coeff * t.coeff});
    return SparsePoly(std::move(prod));
  }
  SparsePoly& operator*=(const SparsePoly& rhs) {
    *this = *this * rhs;
    return *this;
  }

  bool operator==(const SparsePoly&) const = default;

  const Exp& min_exp() const { return terms_.front().exp; }
  const Exp& max_exp() const { return terms_.back().exp; }

 private:
  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
      Exp e = terms_[i].exp;
      BigInt c = std::move(terms_[i].coeff);
      std::size_t j = i + 1;
      for (; j < terms_.size() && terms_[j].exp == e; ++j) c += terms_[j].coeff;
      if (c != 0) terms_[out++] = {e, std::move(c)};
      i = j;
    }
    terms_.resize(out);
  }

  static SparsePoly merge(const SparsePoly& a, const SparsePoly& b, int sign) {
    SparsePoly out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->exp < j->exp)) {
        out.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->exp < i->exp) {
        out.terms_.push_back({j->exp, sign < 0 ? BigInt(-j->coeff) : j->coeff});
        ++j;
      } else {
        BigInt c = sign < 0 ? BigInt(i->coeff - j->coeff) : BigInt(i->coeff + j->coeff);
        if (c != 0) out.terms_.push_back({i->exp, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<Term> terms_;
};

using VPoly = SparsePoly<int>;
using VZPoly = SparsePoly<VZExp>;

// Monomial shorthands.
inline VPoly vmono(BigInt c, int v) { return VPoly::monomial(std::move(c), v); }
inline VZPoly vzmono(BigInt c, int v, int z) { return VZPoly::monomial(std::move(c), VZExp{z, v}); }

/// Exact k-th power; pow(a, 0) == 1.
template <typename Exp>
SparsePoly<Exp> pow(const SparsePoly<Exp>& a, unsigned k) {
  auto result = SparsePoly<Exp>::constant(1);
  auto base = a;
  while (k != 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k != 0) base *= base;
  }
  return result;
}

bool is_prime(std::int64_t n);

/// Replaces every coefficient by its symmetric residue in [-p/2, p/2] and drops zeros.
/// Throws InputError when p is not prime.
template <typename Exp>
SparsePoly<Exp> reduce_mod(const SparsePoly<Exp>& a, std::int64_t p);

extern template VPoly reduce_mod(const VPoly&, std::int64_t);
extern template VZPoly reduce_mod(const VZPoly&, std::int64_t);

/// The v-polynomial multiplying z^e.
VPoly z_coefficient(const VZPoly& a, int e);

/// Lifts a v-polynomial to the z^e slot.
VZPoly with_z(const VPoly& a, int e);

/// Distinct z-exponents present, ascending.
std::vector<int> z_exponents(const VZPoly& a);

struct SubringCheck {
  bool member = true;
  VPoly witness;  ///< the terms whose exponent is not a multiple of p
};

/// Membership of an already reduced polynomial in Z_p[v^{+-p}].
SubringCheck in_vp_subring(const VPoly& a, std::int64_t p);

/// a / (v - v^{-1})^k over the integers. Throws DivisibilityError on a nonzero remainder.
VPoly exact_div_vv(const VPoly& a, unsigned k);

/// v^{-1} - v, the value of the HOMFLYPT difference factor.
inline VPoly vinv_minus_v() { return VPoly{{-1, 1}, {1, -1}}; }

// Canonical text: terms in ascending order, `c*v^a*z^b` with unit coefficients,
// zero exponents and `^1` omitted, e.g. `-3*v^-7 + 6*v^-5 - 3*v^-3`.
std::string to_string(const VPoly& a);
std::string to_string(const VZPoly& a);

/// Parses the canonical format (whitespace-insensitive; factors in any order;
/// `^(-k)` accepted). Throws InputError.
VZPoly parse_vzpoly(std::string_view text);
/// As parse_vzpoly, but rejects any z factor.
VPoly parse_vpoly(std::string_view text);

}  // namespace plink
