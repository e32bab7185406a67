#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "plink/diagram.hpp"
#include "plink/error.hpp"
#include "plink/suites.hpp"

using namespace plink;

namespace {

LinkDiagram closure(const char* w) { return braid_closure(parse_braid(w)); }

// Label-independent data: sizes, loops, linking matrix and writhe.
bool same_shape(const LinkDiagram& a, const LinkDiagram& b) {
  const auto la = linking_data(a), lb = linking_data(b);
  return a.crossing_count() == b.crossing_count() && a.component_count() == b.component_count() &&
         a.free_loop_count() == b.free_loop_count() && la.lk == lb.lk && la.writhe == lb.writhe;
}

}  // namespace

TEST_CASE("parse_pd") {
  const auto d = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]");
  CHECK(d.crossing_count() == 3);
  CHECK(d.component_count() == 1);
  CHECK(d.components()[0].length == 6);
  CHECK(d.next_edge(6) == 1);

  const auto u = parse_pd("PD[]", 1);
  CHECK(u.crossing_count() == 0);
  CHECK(u.component_count() == 1);
  CHECK(parse_pd("PD[] + 2 loops").component_count() == 2);

  const auto kink = parse_pd("PD[X[1,1,2,2]]");
  CHECK(kink.crossing_count() == 1);
  CHECK(kink.component_count() == 1);

  CHECK_THROWS_AS(parse_pd("PD[X[1,1,1,2]]"), InputError);
  CHECK_THROWS_AS(parse_pd("PD[X[1,2,3]]"), InputError);
  CHECK_THROWS_AS(parse_pd("PD[X[1,4,2,5],X[3,6,4,1]]"), InputError);
  CHECK_THROWS_AS(parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]"), InputError);
  CHECK_THROWS_AS(parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]] junk"), InputError);
}

TEST_CASE("PD signs follow the under and over directions") {
  // Hopf links with both orientations of the second component.
  const auto pos = parse_pd("PD[X[4,2,3,1],X[2,4,1,3]]");
  const auto neg = parse_pd("PD[X[4,1,3,2],X[2,3,1,4]]");
  CHECK(linking_data(pos).lk[0][1] == 1);
  CHECK(linking_data(neg).lk[0][1] == -1);
}

TEST_CASE("parse_braid") {
  const auto b = parse_braid("2: 1 1");
  CHECK(b.strands == 2);
  CHECK(b.letters == std::vector<BraidLetter>{{1, 1}, {1, 1}});
  const auto c = parse_braid("3: 1 2");
  CHECK(c.letters == std::vector<BraidLetter>{{1, 1}, {2, 1}});
  CHECK(parse_braid("3: 1, -2").letters[1] == BraidLetter{2, -1});
  CHECK(parse_braid("3:").letters.empty());
  CHECK_THROWS_AS(parse_braid("3: 3"), InputError);
  CHECK_THROWS_AS(parse_braid("3: 0"), InputError);
  CHECK_THROWS_AS(parse_braid("3: -3"), InputError);
  CHECK_THROWS_AS(parse_braid("1 2"), InputError);
  CHECK(format_braid(parse_braid("4: 1 -2 3")) == "4: 1 -2 3");
}

TEST_CASE("closures and component counts") {
  const auto hopf = closure("2: 1 1");
  CHECK(hopf.crossing_count() == 2);
  CHECK(hopf.component_count() == 2);
  const auto t33 = closure("3: 1 2 1 2 1 2");
  CHECK(t33.crossing_count() == 6);
  CHECK(t33.component_count() == 3);
  const auto id = closure("3:");
  CHECK(id.crossing_count() == 0);
  CHECK(id.component_count() == 3);
  CHECK(id.free_loop_count() == 3);
  CHECK(LinkDiagram().component_count() == 1);
  CHECK(closure("3: 1").free_loop_count() == 1);
}

TEST_CASE("braid_power") {
  CHECK(braid_power(parse_braid("3: 1 2"), 3) == parse_braid("3: 1 2 1 2 1 2"));
  const auto b = parse_braid("4: 1 -3 2");
  CHECK(braid_power(b, 1) == b);
  CHECK(braid_power(parse_braid("3:"), 5) == parse_braid("3:"));
  CHECK(braid_cycles(parse_braid("3: 1 2")) == std::vector<int>{3});
  CHECK(braid_cycles(parse_braid("3:")) == std::vector<int>{1, 1, 1});
}

TEST_CASE("linking data") {
  const auto hopf = linking_data(closure("2: 1 1"));
  CHECK(hopf.lk[0][1] == 1);
  CHECK(hopf.total == 1);
  CHECK(hopf.writhe == 2);
  const auto t33 = linking_data(closure("3: 1 2 1 2 1 2"));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(t33.lk[i][j] == (i == j ? 0 : 1));
  CHECK(t33.total == 3);
  const auto un = linking_data(LinkDiagram::unlink(2));
  CHECK(un.lk[0][1] == 0);
  CHECK(un.total == 0);
}

TEST_CASE("sublink") {
  const auto hopf = closure("2: 1 1");
  const auto s = sublink(hopf, {0});
  CHECK(s.crossing_count() == 0);
  CHECK(s.component_count() == 1);
  CHECK(sublink(hopf, {0, 1}) == hopf);
  const auto t33 = closure("3: 1 2 1 2 1 2");
  for (int c = 0; c < 3; ++c) {
    const auto k = sublink(t33, {c});
    CHECK(k.component_count() == 1);
    CHECK(k.crossing_count() == 0);
  }
  const auto trefoil_and_loop = split_union(closure("2: 1 1 1"), LinkDiagram());
  CHECK(sublink(trefoil_and_loop, {0}).crossing_count() == 3);
  CHECK(sublink(trefoil_and_loop, {1}).free_loop_count() == 1);
}

TEST_CASE("reverse_component") {
  const auto hopf = closure("2: 1 1");
  const auto r = reverse_component(hopf, 1);
  CHECK(linking_data(r).lk[0][1] == -1);
  CHECK(reverse_component(r, 1) == hopf);
  const auto with_loop = split_union(hopf, LinkDiagram());
  CHECK(linking_data(reverse_component(with_loop, 2)).lk == linking_data(with_loop).lk);
  const auto trefoil = closure("2: 1 1 1");
  CHECK(linking_data(reverse_component(trefoil, 0)).writhe == 3);
  CHECK(reverse_components(hopf, {false, true}) == r);
}

TEST_CASE("axis cabling") {
  const auto a = add_axis_cable(parse_braid("3:"), 1);
  CHECK(a.component_count() == 4);
  CHECK(a.crossing_count() == 6);
  CHECK(a.axis_components() == std::vector<int>{3});
  const auto la = linking_data(a);
  for (int c = 0; c < 3; ++c) CHECK(la.lk[3][c] == 1);
  CHECK(la.total == 3);

  const auto t = add_axis_cable(parse_braid("3: 1 2 1 2 1 2"), 1);
  CHECK(t.component_count() == 4);
  CHECK(t.crossing_count() == 12);
  CHECK(linking_data(t).total == 6);

  const auto two = add_axis_cable(parse_braid("3:"), 2);
  CHECK(two.component_count() == 5);
  CHECK(two.axis_components().size() == 2);
  const auto l2 = linking_data(two);
  const auto ax = two.axis_components();
  CHECK(l2.lk[static_cast<std::size_t>(ax[0])][static_cast<std::size_t>(ax[1])] == 0);

  const auto under = add_axis_cable(parse_braid("3: 1 2 1 2 1 2"), 1, AxisConvention::UnderFirst);
  CHECK(linking_data(under).lk == linking_data(t).lk);
  CHECK_THROWS_AS(add_axis_cable(parse_braid("3:"), 0), InputError);
}

TEST_CASE("switching and smoothing") {
  const auto trefoil = closure("2: 1 1 1");
  const auto sw = with_crossing_switched(trefoil, 1);
  CHECK(sw.crossings()[1].sign == -1);
  CHECK(with_crossing_switched(sw, 1) == trefoil);
  const auto sm = with_crossing_smoothed(trefoil, 0);
  CHECK(sm.crossing_count() == 2);
  CHECK(sm.component_count() == 2);
  CHECK(mirror(mirror(trefoil)) == trefoil);
  CHECK(linking_data(mirror(trefoil)).writhe == -3);
  const auto loops = with_crossing_smoothed(closure("2: 1"), 0);
  CHECK(loops.component_count() == 2);
  CHECK(loops.free_loop_count() == 2);
}

TEST_CASE("split_union") {
  const auto d = split_union(closure("2: 1 1"), closure("2: 1 1 1"));
  CHECK(d.component_count() == 3);
  CHECK(d.crossing_count() == 5);
  CHECK(linking_data(d).total == 1);
  const auto with_axis = split_union(add_axis_cable(parse_braid("2:"), 1), LinkDiagram());
  CHECK(with_axis.axis_components() == std::vector<int>{2});
}

TEST_CASE("builder rejects inconsistent orientation") {
  DiagramBuilder b;
  const int e1 = b.new_edge(), e2 = b.new_edge();
  b.add_crossing({e1, e1, e2, e2}, 1);
  CHECK_NOTHROW(b.build());
  DiagramBuilder bad;
  const int a = bad.new_edge(), c = bad.new_edge(), e = bad.new_edge(), f = bad.new_edge();
  // a enters both crossings as the under-strand.
  bad.add_crossing({a, c, e, f}, 1);
  bad.add_crossing({a, f, e, c}, 1);
  CHECK_THROWS_AS(bad.build(), InputError);
}

TEST_CASE("random braid invariants") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 300; ++k) {
    const BraidWord b = random_braid(rng, 1, 5, 0, 12);
    CAPTURE(format_braid(b));
    const auto d = braid_closure(b);
    REQUIRE(d.component_count() == static_cast<int>(braid_cycles(b).size()));
    REQUIRE(parse_braid(format_braid(b)) == b);
    REQUIRE(parse_pd(format_pd(d)) == d.with_axis_flags(std::vector<bool>(static_cast<std::size_t>(d.component_count()), false)));

    const auto ld = linking_data(d);
    const int n = d.component_count();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) REQUIRE(ld.lk[i][j] == ld.lk[j][i]);

    std::uniform_int_distribution<int> pick(0, n - 1);
    const int c = pick(rng);
    const auto lr = linking_data(reverse_component(d, c));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) REQUIRE(lr.lk[i][j] == ((i == c) != (j == c) ? -ld.lk[i][j] : ld.lk[i][j]));
    REQUIRE(lr.writhe - ld.writhe == 2 * (lr.total - ld.total));
    REQUIRE(reverse_component(reverse_component(d, c), c) == d);

    // Keeping c and one other component: sublink commutes with reversing c.
    const int other = pick(rng);
    std::vector<int> keep{std::min(c, other), std::max(c, other)};
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    const int pos = c == keep[0] ? 0 : 1;
    REQUIRE(same_shape(sublink(reverse_component(d, c), keep), reverse_component(sublink(d, keep), pos)));

    std::uniform_int_distribution<int> mult(1, 3);
    const int r = mult(rng);
    const auto a = add_axis_cable(b, r);
    REQUIRE(a.component_count() == n + r);
    REQUIRE(a.crossing_count() == d.crossing_count() + static_cast<std::size_t>(2 * b.strands * r));
    const auto la = linking_data(a);
    for (int g : a.axis_components()) {
      int sum = 0;
      for (int i = 0; i < n; ++i) sum += la.lk[static_cast<std::size_t>(g)][static_cast<std::size_t>(i)];
      REQUIRE(sum == b.strands);
    }
    REQUIRE(parse_pd(format_pd(a)).component_count() == a.component_count());
  }
}
