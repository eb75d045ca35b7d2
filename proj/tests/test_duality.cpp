#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "vendor/doctest.h"

#include "nelson/axioms.hpp"
#include "nelson/duality.hpp"
#include "nelson/free_algebra.hpp"
#include "nelson/json_io.hpp"

#include <string>
#include <vector>

using namespace nelson;

namespace {

const std::string kData = NELSON_DATA_DIR "/";

Bitset set_of(std::size_t universe, std::initializer_list<std::size_t> bits) {
  Bitset s(universe);
  for (std::size_t b : bits) s.set(b);
  return s;
}

std::vector<FiniteNelsonAlgebra> corpus() {
  std::vector<FiniteNelsonAlgebra> out;
  for (std::uint32_t n = 2; n <= 8; ++n) out.push_back(make_chain(n));
  out.push_back(product({make_chain(2), make_chain(2)}));
  out.push_back(product({make_chain(5), make_chain(3)}));
  out.push_back(product({make_chain(5), make_chain(2), make_chain(2)}));
  return out;
}

}  // namespace

TEST_CASE("spectrum of C3: two points, swapped by phi") {
  SpectrumResult sp = spectrum(make_chain(3));
  REQUIRE(sp.points.size() == 2);
  CHECK(sp.points[0] == set_of(3, {2}));
  CHECK(sp.points[1] == set_of(3, {1, 2}));
  CHECK(sp.space.phi == std::vector<std::uint32_t>{1, 0});
  CHECK(sp.space.leq(0, 1));
  CHECK(!sp.space.leq(1, 0));
  CHECK(sp.space.label(0) == "{2}");
  CHECK(sp.space.label(1) == "{1,2}");
}

TEST_CASE("spectrum of a non-algebra is rejected") {
  FiniteNelsonAlgebra bad = read_algebra_file(kData + "corrupt_b.json");
  CHECK_THROWS_AS(spectrum(bad), format_error);
}

TEST_CASE("spectrum sizes across the corpus") {
  // Chains C_n have n-1 prime filters; products add componentwise.
  for (std::uint32_t n = 2; n <= 8; ++n)
    CHECK(spectrum(make_chain(n)).points.size() == n - 1);
  CHECK(spectrum(product({make_chain(5), make_chain(3)})).points.size() ==
        4 + 2);
  CHECK(spectrum(product({make_chain(5), make_chain(2), make_chain(2)}))
            .points.size() == 4 + 1 + 1);
}

TEST_CASE("up_sets of the 2-chain spectrum space") {
  NelsonSpace s = spectrum(make_chain(3)).space;
  std::vector<Bitset> us = up_sets(s);
  REQUIRE(us.size() == 3);  // {}, {p1}, {p0,p1}
  CHECK(us[0] == set_of(2, {}));
  CHECK(us[1] == set_of(2, {1}));
  CHECK(us[2] == set_of(2, {0, 1}));
}

TEST_CASE("up_sets respects its cap") {
  NelsonSpace s = free_space(2).space;  // 46 points, far over any small cap
  CHECK_THROWS_AS(up_sets(s, 10), resource_error);
}

TEST_CASE("down_closure and phi_image") {
  NelsonSpace s = spectrum(make_chain(4)).space;  // 3-point chain space
  CHECK(down_closure(s, set_of(3, {1})) == set_of(3, {0, 1}));
  CHECK(down_closure(s, set_of(3, {})) == set_of(3, {}));
  // phi reverses the chain of points.
  CHECK(phi_image(s, set_of(3, {0})) == set_of(3, {2}));
  CHECK(phi_image(s, set_of(3, {1})) == set_of(3, {1}));
}

TEST_CASE("dual algebra of the C3 spectrum is C3 again, with the frozen tables") {
  SpectrumResult sp = spectrum(make_chain(3));
  DualAlgebraResult d = dual_algebra(sp.space);
  REQUIRE(d.algebra.size() == 3);
  // Carrier sets in canonical order: {}, {p1}, {p0,p1}.
  CHECK(d.carrier_sets[0] == set_of(2, {}));
  CHECK(d.carrier_sets[1] == set_of(2, {1}));
  CHECK(d.carrier_sets[2] == set_of(2, {0, 1}));
  CHECK(d.algebra.top() == 2);
  // The distinguishing value: 1 -> 1/2 lands on {p1}, not on the top.
  CHECK(d.algebra.imp(2, 1) == 1);
  CHECK(d.algebra.neg(1) == 1);
  CHECK(is_nelson_algebra(d.algebra));
  CHECK(find_isomorphism(d.algebra, make_chain(3)).has_value());
}

TEST_CASE("C5 dual implication oracle: 3/4 -> 1/4 = {p3}") {
  SpectrumResult sp = spectrum(make_chain(5));
  DualAlgebraResult d = dual_algebra(sp.space);
  REQUIRE(d.algebra.size() == 5);
  // Find the dual images of 3 and 1 under x |-> {P : x in P}.
  auto image_of = [&](elem x) {
    Bitset u(sp.points.size());
    for (std::size_t i = 0; i < sp.points.size(); ++i)
      if (sp.points[i].test(x)) u.set(i);
    for (std::size_t i = 0; i < d.carrier_sets.size(); ++i)
      if (d.carrier_sets[i] == u) return static_cast<elem>(i);
    FAIL("image not found among up-sets");
    return static_cast<elem>(0);
  };
  elem three = image_of(3), one = image_of(1);
  elem r = d.algebra.imp(three, one);
  // In C5, 3/4 -> 1/4 = 1/4, whose dual image is the one-point up-set
  // holding only the largest prime filter {1/4, 1/2, 3/4, 1}.
  CHECK(r == image_of(1));
  Bitset result = d.carrier_sets[r];
  REQUIRE(result.count() == 1);
  std::size_t pt = result.members()[0];
  CHECK(sp.points[pt] == set_of(5, {1, 2, 3, 4}));
}

TEST_CASE("dual budget is enforced") {
  NelsonSpace s = free_space(2).space;
  DualBudget tiny;
  tiny.max_size = 100;
  CHECK_THROWS_AS(dual_algebra(s, tiny), resource_error);
}

TEST_CASE("algebra roundtrip on the corpus and the twist algebra") {
  for (const FiniteNelsonAlgebra& a : corpus()) {
    RoundtripResult r = roundtrip_check(a);
    CHECK(r.dual.algebra.size() == a.size());
    CHECK(is_homomorphism(a, r.dual.algebra, r.iso));
    CHECK(is_surjective(r.dual.algebra, r.iso));
  }
  FiniteNelsonAlgebra tw = read_algebra_file(kData + "twist11.json");
  CHECK(roundtrip_check(tw).dual.algebra.size() == 11);
}

TEST_CASE("space roundtrip on spectra and free spaces") {
  for (const FiniteNelsonAlgebra& a :
       {make_chain(2), make_chain(5), product({make_chain(3), make_chain(3)})}) {
    NelsonSpace s = spectrum(a).space;
    SpaceRoundtripResult r = space_roundtrip_check(s);
    CHECK(r.respec.space.size == s.size);
  }
  SpaceRoundtripResult r1 = space_roundtrip_check(free_space(1).space);
  CHECK(r1.dual.algebra.size() == 48);
  CHECK(r1.respec.space.size == 8);
}

TEST_CASE("product spectra are disjoint unions of factor spectra") {
  FiniteNelsonAlgebra c5 = make_chain(5);
  FiniteNelsonAlgebra c3 = make_chain(3);
  NelsonSpace joint = spectrum(product({c5, c3})).space;
  NelsonSpace split =
      disjoint_union({spectrum(c5).space, spectrum(c3).space});
  CHECK(find_space_isomorphism(joint, split).has_value());

  FiniteNelsonAlgebra c2 = make_chain(2);
  NelsonSpace joint3 = spectrum(product({c5, c2, c2})).space;
  NelsonSpace split3 = disjoint_union(
      {spectrum(c5).space, spectrum(c2).space, spectrum(c2).space});
  CHECK(find_space_isomorphism(joint3, split3).has_value());
}

TEST_CASE("duality is contravariantly functorial on a three-object diagram") {
  // f : C5 ->> C3 collapses the chain; g : C3 -> C5 embeds it back as
  // {0, 2, 4}.  (No homomorphism C3 -> C2 exists: the middle element is a
  // negation fixed point and C2 has none.)
  FiniteNelsonAlgebra c5 = make_chain(5);
  FiniteNelsonAlgebra c3 = make_chain(3);
  Homomorphism f{{0, 0, 1, 2, 2}};
  Homomorphism g{{0, 2, 4}};
  REQUIRE(is_homomorphism(c5, c3, f));
  REQUIRE(is_homomorphism(c3, c5, g));

  SpectrumResult s5 = spectrum(c5), s3 = spectrum(c3);
  SpaceMorphism df = dual_of_hom(c5, c3, f, s5, s3);
  SpaceMorphism dg = dual_of_hom(c3, c5, g, s3, s5);
  CHECK(is_space_morphism(s3.space, s5.space, df));
  CHECK(is_space_morphism(s5.space, s3.space, dg));

  // dual(g o f) = dual(f) o dual(g).
  Homomorphism gf = compose(f, g);
  SpaceMorphism dgf = dual_of_hom(c5, c5, gf, s5, s5);
  for (std::uint32_t p = 0; p < s5.space.size; ++p)
    CHECK(dgf(p) == df(dg(p)));

  // And back down: the double dual of f agrees with f under the roundtrip
  // isomorphisms.
  RoundtripResult r5 = roundtrip_check(c5);
  RoundtripResult r3 = roundtrip_check(c3);
  Homomorphism ddf = dual_of_morphism(s3.space, s5.space, df, r3.dual, r5.dual);
  for (elem x = 0; x < c5.size(); ++x)
    CHECK(ddf(r5.iso(x)) == r3.iso(f(x)));
}

TEST_CASE("dual_of_hom validates its input") {
  FiniteNelsonAlgebra c5 = make_chain(5);
  FiniteNelsonAlgebra c3 = make_chain(3);
  SpectrumResult s5 = spectrum(c5), s3 = spectrum(c3);
  Homomorphism wrong{{0, 0, 1}};  // wrong domain size
  CHECK_THROWS_AS(dual_of_hom(c5, c3, wrong, s5, s3), format_error);
}
