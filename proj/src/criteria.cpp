#include "plink/criteria.hpp"

#include "plink/error.hpp"

namespace plink {

const char* to_string(FailureClass f) {
  switch (f) {
    case FailureClass::None: return "none";
    case FailureClass::Subring: return "subring";
    case FailureClass::Divisibility: return "divisibility";
  }
  return "none";
}

bool CriterionReport::condition2_pass() const {
  for (const auto& c : condition2)
    if (!c.pass) return false;
  return true;
}

CriterionReport check_theorem(const VZPoly& P, int n, int p, int r, std::string link_id) {
  if (p < 3 || !is_prime(p)) throw InputError("p must be an odd prime, got " + std::to_string(p));
  if (r < 1) throw InputError("axis multiplicity must be positive");
  if (n < 1) throw InputError("component count must be positive");
  if (!P.is_zero() && P.min_exp().z < 1 - n)
    throw InputError("polynomial has z-exponent " + std::to_string(P.min_exp().z) + " below 1-n for n=" +
                     std::to_string(n));

  CriterionReport rep;
  rep.link_id = std::move(link_id);
  rep.n = n;
  rep.p = p;
  rep.r = r;
  rep.applicable = ((n - r) % p + p) % p == 0;

  auto& c1 = rep.condition1;
  c1.exponent = 1 - n;
  c1.coefficient = z_coefficient(P, c1.exponent);
  try {
    c1.divided = exact_div_vv(c1.coefficient, static_cast<unsigned>(r - 1));
    c1.reduced = reduce_mod(c1.divided, p);
    auto sub = in_vp_subring(c1.reduced, p);
    c1.pass = sub.member;
    c1.witness = std::move(sub.witness);
    c1.failure = c1.pass ? FailureClass::None : FailureClass::Subring;
  } catch (const DivisibilityError&) {
    c1.pass = false;
    c1.failure = FailureClass::Divisibility;
    c1.divided = VPoly();
    c1.reduced = VPoly();
    c1.witness = c1.coefficient;
  }

  for (int i = 1; i <= (p - 1) / 2; ++i) {
    Condition2 c;
    c.i = i;
    c.exponent = 1 - n + 2 * i;
    c.coefficient = z_coefficient(P, c.exponent);
    c.reduced = reduce_mod(c.coefficient, p);
    c.pass = c.reduced.is_zero();
    rep.condition2.push_back(std::move(c));
  }
  return rep;
}

nlohmann::ordered_json to_json(const CriterionReport& rep) {
  nlohmann::ordered_json j;
  j["link_id"] = rep.link_id;
  j["n"] = rep.n;
  j["p"] = rep.p;
  j["r"] = rep.r;
  j["applicable"] = rep.applicable;
  const auto& c1 = rep.condition1;
  j["condition1"] = {
      {"pass", c1.pass},
      {"failure", to_string(c1.failure)},
      {"exponent", c1.exponent},
      {"coefficient", to_string(c1.coefficient)},
      {"divided", to_string(c1.divided)},
      {"reduced", to_string(c1.reduced)},
      {"witness", nlohmann::ordered_json::array()},
  };
  for (const auto& t : c1.witness.terms())
    j["condition1"]["witness"].push_back({{"exponent", t.exp}, {"coefficient", t.coeff.str()}});
  auto c2 = nlohmann::ordered_json::array();
  for (const auto& c : rep.condition2)
    c2.push_back({{"i", c.i},
                  {"exponent", c.exponent},
                  {"pass", c.pass},
                  {"coefficient", to_string(c.coefficient)},
                  {"reduced", to_string(c.reduced)}});
  j["condition2"] = std::move(c2);
  j["pass"] = rep.pass();
  return j;
}

VPoly lemma31_lowest(const LinkDiagram& d, const HomflyOptions& options) {
  const int n = d.component_count();
  const auto lk = linking_data(d);
  VPoly out = pow(vinv_minus_v(), static_cast<unsigned>(n - 1)).shifted(2 * lk.total);
  for (int c = 0; c < n; ++c) out *= z_coefficient(homfly(sublink(d, {c}), options), 0);
  return out;
}

VZPoly lemma32_residual(const EquivariantTriple& t, int p, const HomflyOptions& options) {
  const VZPoly lhs = homfly(t.plus, options).shifted(VZExp{0, -p}) - homfly(t.minus, options).shifted(VZExp{0, p});
  return reduce_mod(lhs - homfly(t.zero, options).shifted(VZExp{p, 0}), p);
}

}  // namespace plink
