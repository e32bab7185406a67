#include "plink/poly.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "plink/error.hpp"

namespace plink {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

template <typename Exp>
SparsePoly<Exp> reduce_mod(const SparsePoly<Exp>& a, std::int64_t p) {
  if (!is_prime(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
  const BigInt mod = p;
  const BigInt half = p / 2;
  std::vector<typename SparsePoly<Exp>::Term> out;
  for (const auto& t : a.terms()) {
    BigInt r = t.coeff % mod;  // truncated; sign follows the dividend
    if (r < 0) r += mod;
    if (r > half) r -= mod;
    if (r != 0) out.push_back({t.exp, std::move(r)});
  }
  return SparsePoly<Exp>(std::move(out));
}

template VPoly reduce_mod(const VPoly&, std::int64_t);
template VZPoly reduce_mod(const VZPoly&, std::int64_t);

VPoly z_coefficient(const VZPoly& a, int e) {
  std::vector<VPoly::Term> out;
  for (const auto& t : a.terms())
    if (t.exp.z == e) out.push_back({t.exp.v, t.coeff});
  return VPoly(std::move(out));
}

VZPoly with_z(const VPoly& a, int e) {
  std::vector<VZPoly::Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) out.push_back({VZExp{e, t.exp}, t.coeff});
  return VZPoly(std::move(out));
}

std::vector<int> z_exponents(const VZPoly& a) {
  std::vector<int> out;
  for (const auto& t : a.terms())
    if (out.empty() || out.back() != t.exp.z) out.push_back(t.exp.z);
  return out;
}

SubringCheck in_vp_subring(const VPoly& a, std::int64_t p) {
  SubringCheck result;
  std::vector<VPoly::Term> bad;
  for (const auto& t : a.terms())
    if (t.exp % p != 0) bad.push_back(t);
  result.member = bad.empty();
  result.witness = VPoly(std::move(bad));
  return result;
}

namespace {

// Divides by (v^2 - 1) a polynomial given as dense coefficients of v^0..v^d.
std::vector<BigInt> divide_by_v2_minus_1(std::vector<BigInt> r) {
  if (r.size() < 3) {
    for (const auto& c : r)
      if (c != 0) throw DivisibilityError("polynomial is not divisible by (v - v^-1)");
    return {};
  }
  std::vector<BigInt> q(r.size() - 2);
  for (std::size_t i = r.size() - 1; i >= 2; --i) {
    q[i - 2] = r[i];
    r[i - 2] += r[i];
  }
  if (r[0] != 0 || r[1] != 0) throw DivisibilityError("polynomial is not divisible by (v - v^-1)");
  return q;
}

}  // namespace

VPoly exact_div_vv(const VPoly& a, unsigned k) {
  if (k == 0 || a.is_zero()) return a;
  // (v - v^-1) = v^-1 (v^2 - 1), so a / (v - v^-1)^k = v^k * a / (v^2 - 1)^k.
  const int lo = a.min_exp();
  const int hi = a.max_exp();
  std::vector<BigInt> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& t : a.terms()) dense[static_cast<std::size_t>(t.exp - lo)] = t.coeff;
  for (unsigned i = 0; i < k; ++i) dense = divide_by_v2_minus_1(std::move(dense));
  std::vector<VPoly::Term> out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) out.push_back({static_cast<int>(i) + lo + static_cast<int>(k), dense[i]});
  return VPoly(std::move(out));
}

namespace {

void append_factor(std::string& body, char var, int e) {
  if (e == 0) return;
  if (!body.empty()) body += '*';
  body += var;
  if (e != 1) body += '^' + std::to_string(e);
}

void append_term(std::string& out, const BigInt& c, int v, int z) {
  std::string body;
  append_factor(body, 'v', v);
  append_factor(body, 'z', z);
  const BigInt mag = c < 0 ? BigInt(-c) : c;
  std::string piece;
  if (body.empty()) {
    piece = mag.str();
  } else if (mag == 1) {
    piece = body;
  } else {
    piece = mag.str() + "*" + body;
  }
  if (out.empty()) {
    out = (c < 0 ? "-" : "") + piece;
  } else {
    out += (c < 0 ? " - " : " + ") + piece;
  }
}

}  // namespace

std::string to_string(const VPoly& a) {
  std::string out;
  for (const auto& t : a.terms()) append_term(out, t.coeff, t.exp, 0);
  return out.empty() ? "0" : out;
}

std::string to_string(const VZPoly& a) {
  std::string out;
  for (const auto& t : a.terms()) append_term(out, t.coeff, t.exp.v, t.exp.z);
  return out.empty() ? "0" : out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  VZPoly parse() {
    std::vector<VZPoly::Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      terms.push_back(parse_term(sign));
      first = false;
      skip_ws();
    }
    return VZPoly(std::move(terms));
  }

 private:
  VZPoly::Term parse_term(int sign) {
    BigInt coeff = sign;
    VZExp exp;
    bool need_factor = true;
    while (need_factor) {
      skip_ws();
      if (at_end()) fail("unexpected end of input");
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_unsigned();
      } else if (c == 'v' || c == 'z') {
        get();
        int e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          get();
          e = parse_exponent();
        }
        (c == 'v' ? exp.v : exp.z) += e;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_ws();
      need_factor = !at_end() && peek() == '*';
      if (need_factor) get();
    }
    return {exp, coeff};
  }

  BigInt parse_unsigned() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  int parse_exponent() {
    skip_ws();
    bool paren = !at_end() && peek() == '(';
    if (paren) {
      get();
      skip_ws();
    }
    int sign = 1;
    if (!at_end() && (peek() == '-' || peek() == '+')) sign = get() == '-' ? -1 : 1;
    BigInt mag = parse_unsigned();
    if (mag > 1000000) fail("exponent out of range");
    if (paren) {
      skip_ws();
      if (at_end() || get() != ')') fail("expected ')'");
    }
    return sign * static_cast<int>(mag);
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

VZPoly parse_vzpoly(std::string_view text) { return PolyParser(text).parse(); }

VPoly parse_vpoly(std::string_view text) {
  VZPoly p = parse_vzpoly(text);
  std::vector<VPoly::Term> out;
  for (const auto& t : p.terms()) {
    if (t.exp.z != 0) throw InputError("unexpected z factor in a one-variable polynomial");
    out.push_back({t.exp.v, t.coeff});
  }
  return VPoly(std::move(out));
}

}  // namespace plink
