#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <thread>

#include "plink/error.hpp"
#include "plink/homfly.hpp"
#include "plink/suites.hpp"

using namespace plink;

namespace {

LinkDiagram closure(const char* w) { return braid_closure(parse_braid(w)); }
VZPoly VZ(const char* s) { return parse_vzpoly(s); }
VZPoly mono(int c, int v, int z) { return vzmono(c, v, z); }

// P(v, z) -> P(-v^-1, z), the effect of mirroring.
VZPoly mirror_sub(const VZPoly& p) {
  std::vector<VZPoly::Term> t;
  for (const auto& x : p.terms()) t.push_back({VZExp{x.exp.z, -x.exp.v}, x.exp.v % 2 ? BigInt(-x.coeff) : x.coeff});
  return VZPoly(std::move(t));
}

}  // namespace

TEST_CASE("hand skein values") {
  // Unknot and the two-step skein expansions P+ = v^2 P- + v z P0.
  const VZPoly one = VZPoly::constant(1);
  const VZPoly delta = mono(1, -1, -1) - mono(1, 1, -1);
  const VZPoly hopf = mono(1, 2, 0) * delta + mono(1, 1, 1) * one;
  const VZPoly trefoil = mono(1, 2, 0) * one + mono(1, 1, 1) * hopf;

  CHECK(homfly(LinkDiagram()) == one);
  CHECK(homfly(LinkDiagram::unlink(2)) == delta);
  CHECK(homfly(closure("2: 1 1")) == hopf);
  CHECK(homfly(closure("2: 1 1 1")) == trefoil);

  CHECK(hopf == VZ("v*z + v*z^-1 - v^3*z^-1"));
  CHECK(trefoil == VZ("2*v^2 - v^4 + v^2*z^2"));
  CHECK(homfly(closure("2: 1 -1")) == delta);
  CHECK(homfly(parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]")) == mirror_sub(trefoil));
}

TEST_CASE("figure eight is amphichiral") {
  const auto p = homfly(closure("3: 1 -2 1 -2"));
  CHECK(p == VZ("v^-2 - 1 + v^2 - z^2"));
  CHECK(mirror_sub(p) == p);
}

TEST_CASE("homfly_coeffs") {
  const auto h = homfly_coeffs(closure("2: 1 1"));
  CHECK(h.size() == 2);
  CHECK(h.at(0) == parse_vpoly("v - v^3"));
  CHECK(h.at(1) == parse_vpoly("v"));
  const auto u = homfly_coeffs(LinkDiagram::unlink(4));
  CHECK(u.size() == 1);
  CHECK(u.at(0) == pow(vinv_minus_v(), 3));
  const auto k = homfly_coeffs(LinkDiagram());
  CHECK(k.size() == 1);
  CHECK(k.at(0) == VPoly::constant(1));
  CHECK_THROWS_AS(coeffs_of(VZ("z^-2"), 2), InputError);
}

TEST_CASE("simplify") {
  const auto a = simplify(closure("2: 1"));
  CHECK(a.crossing_count() == 0);
  CHECK(a.component_count() == 1);
  const auto b = simplify(closure("2: 1 -1"));
  CHECK(b.crossing_count() == 0);
  CHECK(b.free_loop_count() == 2);
  const auto t = closure("2: 1 1 1");
  CHECK(simplify(t) == t);
  const auto f8 = closure("3: 1 -2 1 -2");
  CHECK(simplify(f8).crossing_count() == 4);
  const auto tangle = closure("4: 1 2 -2 3 -1 -3 2");
  CHECK(homfly(simplify(tangle)) == homfly(tangle));
  CHECK(simplify(tangle).crossing_count() < tangle.crossing_count());
}

TEST_CASE("crossing limit") {
  const auto d = closure("2: 1 1 1 1 1 1 1");
  CHECK_THROWS_AS(homfly(d, HomflyOptions{6}), ResourceError);
  CHECK_NOTHROW(homfly(d, HomflyOptions{7}));
  HomflyEngine e(HomflyOptions{3});
  CHECK_THROWS_AS(e.compute(d), ResourceError);

  ::setenv("PLINK_CROSSING_LIMIT", "40", 1);
  CHECK(default_crossing_limit() == 40);
  ::setenv("PLINK_CROSSING_LIMIT", "junk", 1);
  CHECK(default_crossing_limit() == 24);
  ::unsetenv("PLINK_CROSSING_LIMIT");
  CHECK(default_crossing_limit() == 24);
}

TEST_CASE("memo does not change results") {
  std::mt19937_64 rng(3);
  HomflyEngine e;
  for (int k = 0; k < 30; ++k) {
    const auto d = braid_closure(random_braid(rng, 2, 4, 1, 10));
    const auto first = e.compute(d);
    e.clear_memo();
    REQUIRE(HomflyEngine().compute(d) == first);
    REQUIRE(e.compute(d) == first);
    REQUIRE(homfly(d) == first);
  }
  CHECK(e.stats().nodes > 0);
}

TEST_CASE("engine invariant suites") {
  const auto skein = skein_consistency_suite(101, 100, 10);
  CHECK(skein.cases >= 100);
  CHECK_MESSAGE(skein.ok(), skein.line());
  const auto markov = markov_suite(102, 20);
  CHECK_MESSAGE(markov.ok(), markov.line());
  const auto split = split_union_suite(103, 20);
  CHECK_MESSAGE(split.ok(), split.line());
  const auto axis = axis_convention_suite(104, 20);
  CHECK_MESSAGE(axis.ok(), axis.line());
}

TEST_CASE("symmetries on random closures") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 60; ++k) {
    const BraidWord b = random_braid(rng, 2, 4, 1, 9);
    CAPTURE(format_braid(b));
    const auto d = braid_closure(b);
    const auto p = homfly(d);
    const int n = d.component_count();
    REQUIRE(homfly(mirror(d)) == mirror_sub(p));
    REQUIRE(homfly(reverse_components(d, std::vector<bool>(static_cast<std::size_t>(n), true))) == p);
    REQUIRE(homfly(parse_pd(format_pd(d))) == p);
    for (int e : z_exponents(p)) {
      REQUIRE(e >= 1 - n);
      REQUIRE((e - (1 - n)) % 2 == 0);
    }
    REQUIRE(p.min_exp().z == 1 - n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    const int c = pick(rng);
    REQUIRE(homfly(sublink(reverse_component(d, c), {c})) == homfly(sublink(d, {c})));
  }
}

TEST_CASE("canonical key ignores labels and component order") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 100; ++k) {
    const auto d = split_union(braid_closure(random_braid(rng, 2, 4, 1, 8)), braid_closure(random_braid(rng, 2, 3, 0, 4)));
    // Rebuild with shuffled edge ids and crossing order.
    std::vector<int> ids(static_cast<std::size_t>(d.edge_count()));
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    auto xs = d.crossings();
    std::shuffle(xs.begin(), xs.end(), rng);
    DiagramBuilder b;
    for (int e = 0; e < d.edge_count(); ++e) b.new_edge();
    for (const auto& x : xs)
      b.add_crossing({ids[static_cast<std::size_t>(x.pd[0] - 1)], ids[static_cast<std::size_t>(x.pd[1] - 1)],
                      ids[static_cast<std::size_t>(x.pd[2] - 1)], ids[static_cast<std::size_t>(x.pd[3] - 1)]},
                     x.sign);
    b.add_free_loops(d.free_loop_count());
    const auto e = b.build();
    REQUIRE(e.component_count() == d.component_count());
    REQUIRE(canonical_key(e) == canonical_key(d));
    REQUIRE(homfly(e) == homfly(d));
  }
  CHECK(canonical_key(braid_closure(parse_braid("2: 1 1 1"))) != canonical_key(braid_closure(parse_braid("2: -1 -1 -1"))));
  CHECK(canonical_key(LinkDiagram::unlink(2)) != canonical_key(LinkDiagram::unlink(3)));
}

TEST_CASE("per-thread engines agree") {
  std::mt19937_64 rng(12);
  std::vector<LinkDiagram> ds;
  for (int k = 0; k < 20; ++k) ds.push_back(braid_closure(random_braid(rng, 2, 4, 4, 10)));
  std::vector<VZPoly> a(ds.size()), b(ds.size());
  std::thread t1([&] { for (std::size_t i = 0; i < ds.size(); ++i) a[i] = homfly(ds[i]); });
  std::thread t2([&] { for (std::size_t i = ds.size(); i-- > 0;) b[i] = homfly(ds[i]); });
  t1.join();
  t2.join();
  CHECK(a == b);
}
