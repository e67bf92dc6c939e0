#include <doctest.h>

#include "oracles.hpp"
#include "permchain/builders.hpp"
#include "permchain/formations.hpp"

using namespace permchain;

TEST_CASE("classical families") {
  CHECK(build(GroupSpec{"", CyclicSpec{6}}).order() == 6);
  CHECK(build(GroupSpec{"", CyclicSpec{1}}).order() == 1);
  CHECK(build(GroupSpec{"", DihedralSpec{4}}).order() == 8);
  CHECK(build(GroupSpec{"", SymmetricSpec{5}}).order() == 120);
  CHECK(build(GroupSpec{"", AlternatingSpec{5}}).order() == 60);
  CHECK(build(GroupSpec{"", AlternatingSpec{4}}).order() == 12);
  CHECK(is_abelian(build(GroupSpec{"", CyclicSpec{6}})));
}

TEST_CASE("affine constructions") {
  PermGroup agl13 = build(GroupSpec{"", AffineSpec{3, 1, {{{2}}}}});
  CHECK(agl13.order() == 6);
  CHECK(agl13.degree() == 3);
  CHECK(agl13.order() == oracles::bfs_closure(3, agl13.generators()).size());

  PermGroup ex41 = build(builtin_catalog().at("A4_as_example41"));
  CHECK(ex41.order() == 12);
  CHECK(derived_subgroup(ex41).order() == 4);

  CHECK_THROWS_AS(build(GroupSpec{"", AffineSpec{4, 1, {{{3}}}}}), invalid_input);   // composite p
  CHECK_THROWS_AS(build(GroupSpec{"", AffineSpec{3, 2, {{{1, 1}, {1, 1}}}}}), invalid_input);
  CHECK_THROWS_AS(build(GroupSpec{"", AffineSpec{2, 63, {}}}, Caps{}), cap_exceeded);
}

TEST_CASE("the Example 4.2 instance has order 1176") {
  PermGroup g = build(builtin_catalog().at("SL23_affine7"));
  CHECK(g.degree() == 49);
  CHECK(g.order() == 1176);
  // the linear part alone is SL(2,3)
  std::vector<Perm> linear(g.generators().end() - 3, g.generators().end());
  CHECK(PermGroup(49, linear).order() == 24);
}

TEST_CASE("catalog contents") {
  const auto& cat = builtin_catalog();
  for (const char* name : {"S3", "S4", "S5", "A4", "A5", "D8", "Q8", "SL23", "SL23_affine7",
                           "A4_as_example41", "C1", "C32", "D6", "D64", "F20", "F21"})
    CHECK(cat.count(name) == 1);
  CHECK(build(cat.at("A4")).order() == 12);
  CHECK(build(cat.at("Q8")).order() == 8);
  CHECK(build(cat.at("Q8")).degree() == 8);
  CHECK(build(cat.at("SL23")).order() == 24);
  CHECK(build(cat.at("D8")).degree() == 4);
  CHECK(build(cat.at("F9_SL23")).order() == 216);
  CHECK(build(cat.at("F25_Q8")).order() == 200);
  CHECK(build(cat.at("F27_C13")).order() == 351);
  CHECK(build(cat.at("F81_C5")).order() == 405);
  CHECK(build(cat.at("F169_C8")).order() == 1352);
}

TEST_CASE("direct products") {
  PermGroup g = build(builtin_catalog().at("A4xC2"));
  CHECK(g.order() == 24);
  CHECK(g.degree() == 6);
  // factors centralize each other
  PermGroup a4_part = build(builtin_catalog().at("A4"));
  for (const Perm& x : g.generators())
    for (const Perm& y : g.generators()) {
      bool x_left = true, y_left = true;
      for (Point p = 4; p < 6; ++p) {
        if (x[p] != p) x_left = false;
        if (y[p] != p) y_left = false;
      }
      if (x_left != y_left) CHECK(x * y == y * x);
    }
  CHECK(build(builtin_catalog().at("A4xA4")).order() == 144);
  (void)a4_part;
}

TEST_CASE("affine translation subgroup is a normal complemented p-subgroup") {
  PermGroup g = build(builtin_catalog().at("F9_Q8"));
  CHECK(g.order() == 72);
  std::vector<Perm> translations(g.generators().begin(), g.generators().begin() + 2);
  PermGroup t(9, translations);
  CHECK(t.order() == 9);
  CHECK(is_normal_in(t, g));
  std::vector<Perm> linear(g.generators().begin() + 2, g.generators().end());
  PermGroup q8(9, linear);
  CHECK(q8.order() == 8);
  CHECK(intersection(t, q8).trivial());
}
