#pragma once

// Congruence obstructions for extended strongly periodic links and the two
// identities used to cross-check them.

#include <string>
#include <vector>

#include "json.hpp"
#include "plink/homfly.hpp"
#include "plink/periodic.hpp"
#include "plink/poly.hpp"

namespace plink {

enum class FailureClass { None, Subring, Divisibility };

const char* to_string(FailureClass f);

struct Condition1 {
  bool pass = false;
  FailureClass failure = FailureClass::None;
  int exponent = 0;  ///< z-exponent examined, 1-n
  VPoly coefficient;  ///< P_{1-n}
  VPoly divided;      ///< P_{1-n} / (v - v^-1)^(r-1); zero on divisibility failure
  VPoly reduced;      ///< divided mod p
  VPoly witness;      ///< offending terms; the undivided coefficient on divisibility failure
};

struct Condition2 {
  int i = 0;
  int exponent = 0;  ///< 1-n+2i
  bool pass = false;
  VPoly coefficient;
  VPoly reduced;  ///< residual mod p, the witness when nonzero
};

struct CriterionReport {
  std::string link_id;
  int n = 0;
  int p = 3;
  int r = 1;
  bool applicable = false;  ///< n == r (mod p)
  Condition1 condition1;
  std::vector<Condition2> condition2;  ///< i = 1..(p-1)/2

  bool condition2_pass() const;
  bool pass() const { return condition1.pass && condition2_pass(); }
};

/// Throws InputError for a bad p or r, or when P has z-exponents below 1-n.
CriterionReport check_theorem(const VZPoly& P, int n, int p, int r = 1, std::string link_id = {});

nlohmann::ordered_json to_json(const CriterionReport& rep);

/// v^(2 lambda) (v^-1 - v)^(n-1) times the z^0 coefficients of each component's polynomial.
VPoly lemma31_lowest(const LinkDiagram& d, const HomflyOptions& options = {});

/// (v^-p P(plus) - v^p P(minus) - z^p P(zero)) mod p.
VZPoly lemma32_residual(const EquivariantTriple& t, int p, const HomflyOptions& options = {});

}  // namespace plink
