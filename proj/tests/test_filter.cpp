#include "doctest.h"
#include "helpers.hpp"

using namespace mptest;

TEST_CASE("omega enumeration") {
  BaseRing z4 = zring(4);
  auto zero_om = omega(zero_module(z4));
  REQUIRE(zero_om.size() == 1);
  CHECK(zero_om[0].size() == 4);  // only the whole ring

  auto m_om = omega(zmod_over(4, 2));
  REQUIRE(m_om.size() == 2);
  CHECK(m_om[0].elements == std::vector<int>{0, 2});
  CHECK(m_om[1].elements == std::vector<int>{0, 1, 2, 3});

  // R as a module over itself: ann(1) = 0 pulls in every ideal.
  CHECK(omega(ring_as_module(z4)).size() == left_ideals(z4).size());
}

TEST_CASE("filter closure") {
  CHECK(filter_closure(zmod(2)).exponent == 2);
  CHECK(filter_closure(direct_sum(zint(), {zmod(2), zmod(3)}).sum).exponent == 6);
  CHECK(filter_closure(zero_module(zint())).exponent == 1);

  AnnFilter f = filter_closure(zmod_over(4, 2));
  REQUIRE(f.base.size() == 2);
  CHECK(f.base[0].elements == std::vector<int>{0, 2});
  CHECK(f.base[1].elements == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("filter membership over the integers") {
  AnnFilter f = filter_closure(zmod(2));
  CHECK_FALSE(filter_contains(f, LeftIdeal{zint(), {}, 4}));
  CHECK(filter_contains(f, LeftIdeal{zint(), {}, 2}));
  CHECK(filter_contains(f, LeftIdeal{zint(), {}, 1}));
  CHECK_FALSE(filter_contains(f, LeftIdeal{zint(), {}, 0}));  // zero ideal never a member

  // Zero module: the filter is the whole ring only.
  AnnFilter z = filter_closure(zero_module(zint()));
  CHECK(filter_contains(z, LeftIdeal{zint(), {}, 1}));
  CHECK_FALSE(filter_contains(z, LeftIdeal{zint(), {}, 2}));
}

TEST_CASE("filter properties: upward and intersection closure") {
  std::vector<FinModule> mods = {zmod_over(4, 2), ring_as_module(zring(4)),
                                 ring_as_module(zring(6)),
                                 ring_as_module(make_product_ring(zring(2), zring(2))),
                                 zero_module(zring(6))};
  for (const FinModule& m : mods) {
    AnnFilter f = filter_closure(m);
    auto ideals = left_ideals(m.ring());
    for (const LeftIdeal& k1 : ideals) {
      if (!filter_contains(f, k1)) continue;
      for (const LeftIdeal& k2 : ideals) {
        if (ideal_subset(k1, k2)) CHECK(filter_contains(f, k2));
        if (filter_contains(f, k2)) CHECK(filter_contains(f, intersect_ideals(k1, k2)));
      }
    }
    for (int x = 0; x < m.order(); ++x) CHECK(filter_contains(f, annihilator(m, x)));
  }

  // Annihilator membership over Z too.
  for (const FinModule& m : {zmod(6), direct_sum(zint(), {zmod(2), zmod(4)}).sum}) {
    AnnFilter f = filter_closure(m);
    for (int x = 0; x < m.order(); ++x) CHECK(filter_contains(f, annihilator(m, x)));
  }
}

TEST_CASE("integer and finite realizations agree") {
  // The same abelian group as a Z-module and as a Z_e-module (e = exponent):
  // membership of dZ matches membership of the ideal generated by d.
  struct Case {
    FinModule over_z;
    FinModule over_ring;
  };
  std::vector<Case> cases = {
      {zmod(2), zmod_over(2, 2)},
      {zmod(4), zmod_over(4, 4)},
      {zmod(6), zmod_over(6, 6)},
      {direct_sum(zint(), {zmod(2), zmod(4)}).sum,
       direct_sum(zring(4), {zmod_over(4, 2), zmod_over(4, 4)}).sum},
  };
  for (const Case& c : cases) {
    long long e = c.over_z.exponent();
    AnnFilter fz = filter_closure(c.over_z);
    AnnFilter fr = filter_closure(c.over_ring);
    for (long long d = 1; d <= e; ++d) {
      if (e % d != 0 && d != 1) continue;
      bool in_z = filter_contains(fz, LeftIdeal{zint(), {}, d});
      bool in_r =
          filter_contains(fr, principal_ideal(c.over_ring.ring(), d % c.over_ring.ring().order()));
      CHECK(in_z == in_r);
    }
  }
}
