#include "doctest.h"
#include "helpers.hpp"

using namespace mptest;

TEST_CASE("direct sums") {
  BaseRing z = zint();
  DirectSum empty = direct_sum(z, {});
  CHECK(empty.sum.order() == 1);
  CHECK(validate(empty.sum).ok());

  DirectSum klein = direct_sum(z, {zmod(2), zmod(2)});
  CHECK(klein.sum.order() == 4);
  CHECK(klein.sum.exponent() == 2);
  CHECK(validate(klein.sum).ok());
  for (const ModHom& h : klein.injections) CHECK(validate(h).ok());
  for (const ModHom& h : klein.projections) CHECK(validate(h).ok());
  for (std::size_t i = 0; i < 2; ++i) {
    for (int x = 0; x < 2; ++x) {
      CHECK(klein.projections[i].apply(klein.injections[i].apply(x)) == x);
    }
  }

  // The non-regular witness module over Z_4.
  BaseRing z4 = zring(4);
  FinModule rmod = ring_as_module(z4);
  Submodule two = submodule_generated(rmod, {2});
  DirectSum w = direct_sum(z4, {submodule_view(two), rmod});
  CHECK(w.sum.order() == 8);
  CHECK(validate(w.sum).ok());

  Caps tight;
  tight.max_direct_sum_order = 16;
  CHECK_THROWS_AS(direct_sum(z, std::vector<FinModule>(5, zmod(2)), tight), CapacityError);
}

TEST_CASE("submodule enumeration matches the subset-scan oracle") {
  // Frozen small cases.
  auto z4subs = submodules(zmod(4));
  REQUIRE(z4subs.size() == 3);
  CHECK(z4subs[0].elements == std::vector<int>{0});
  CHECK(z4subs[1].elements == std::vector<int>{0, 2});
  CHECK(z4subs[2].elements == std::vector<int>{0, 1, 2, 3});

  CHECK(submodules(direct_sum(zint(), {zmod(2), zmod(2)}).sum).size() == 5);
  CHECK(submodules(zero_module(zint())).size() == 1);

  std::vector<FinModule> samples = {
      zmod(8),
      direct_sum(zint(), {zmod(2), zmod(4)}).sum,
      direct_sum(zint(), {zmod(2), zmod(2), zmod(2)}).sum,
      ring_as_module(zring(4)),
      ring_as_module(make_product_ring(zring(2), zring(2))),
      ring_as_module(zring(6)),
      zmod_over(4, 2),
  };
  for (const FinModule& m : samples) {
    auto got = submodules(m);
    auto want = naive_closed_subsets(m);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].elements == want[i]);
    for (const Submodule& s : got) CHECK(validate(s).ok());
  }

  Caps tight;
  tight.max_module_order = 4;
  CHECK_THROWS_AS(submodules(zmod(8), tight), CapacityError);
}

TEST_CASE("quotients") {
  FinModule z4 = zmod(4);
  Submodule two = submodule_generated(z4, {2});
  FinModule q = quotient_module(z4, two);
  CHECK(q.order() == 2);
  CHECK(validate(q).ok());
  CHECK(is_module_iso(q, zmod(2)).has_value());

  // Quotient of a Z_4-module keeps the ring action.
  FinModule rmod = ring_as_module(zring(4));
  FinModule q2 = quotient_module(rmod, submodule_generated(rmod, {2}));
  CHECK(q2.order() == 2);
  CHECK(validate(q2).ok());
  CHECK(is_module_iso(q2, zmod_over(4, 2)).has_value());
}

TEST_CASE("module isomorphism search") {
  FinModule z4 = zmod(4);
  auto self = is_module_iso(z4, z4);
  REQUIRE(self.has_value());
  for (int x = 0; x < 4; ++x) CHECK(self->apply(x) == x);  // identity comes first

  FinModule klein = direct_sum(zint(), {zmod(2), zmod(2)}).sum;
  CHECK_FALSE(is_module_iso(z4, klein).has_value());

  Submodule two = submodule_generated(z4, {2});
  FinModule view = submodule_view(two);
  auto iso = is_module_iso(view, zmod(2));
  REQUIRE(iso.has_value());
  CHECK(iso->apply(1) == 1);  // view element 1 is parent 2
  CHECK(validate(*iso).ok());

  CHECK_THROWS_AS(is_module_iso(z4, zmod_over(4, 4)), std::invalid_argument);
}

TEST_CASE("module iso is reflexive and symmetric across a zoo slice") {
  std::vector<FinModule> mods;
  for (int n = 1; n <= 8; ++n) mods.push_back(zmod(n));
  mods.push_back(direct_sum(zint(), {zmod(2), zmod(2)}).sum);
  mods.push_back(direct_sum(zint(), {zmod(2), zmod(4)}).sum);
  for (const FinModule& a : mods) {
    CHECK(is_module_iso(a, a).has_value());
    for (const FinModule& b : mods) {
      bool ab = is_module_iso(a, b).has_value();
      bool ba = is_module_iso(b, a).has_value();
      CHECK(ab == ba);
      if (auto w = is_module_iso(a, b)) CHECK(validate(*w).ok());
    }
  }
}

TEST_CASE("closure and generated submodules") {
  FinModule z4 = zmod(4);
  CHECK(closure(z4, {2}) == std::vector<int>{0, 2});
  CHECK(closure(z4, {}) == std::vector<int>{0});
  CHECK(closure(z4, {3}) == std::vector<int>{0, 1, 2, 3});
  CHECK(submodule_generated(z4, {2}).elements == std::vector<int>{0, 2});

  // Over a finite ring the closure also absorbs the action.
  FinModule rmod = ring_as_module(make_product_ring(zring(2), zring(2)));
  auto e1 = closure(rmod, {2});  // element (1,0)
  CHECK(e1 == std::vector<int>{0, 2});
}

TEST_CASE("module hom enumeration") {
  FinModule klein = direct_sum(zint(), {zmod(2), zmod(2)}).sum;
  auto homs = module_homs(klein, zmod(2));
  CHECK(homs.size() == 4);  // linear maps F_2^2 -> F_2
  for (const ModHom& h : homs) CHECK(validate(h).ok());

  auto to_z3 = module_homs(zmod(2), zmod(3));
  CHECK(to_z3.size() == 1);  // only the zero map across coprime orders
}

TEST_CASE("product modules") {
  BaseRing z2 = zring(2), z3 = zring(3);
  BaseRing p = make_product_ring(z2, z3);
  FinModule m = product_module(p, z2, z3, ring_as_module(z2), ring_as_module(z3));
  CHECK(m.order() == 6);
  CHECK(validate(m).ok());
  CHECK_THROWS_AS(product_module(p, z2, z3, ring_as_module(z3), ring_as_module(z3)),
                  std::invalid_argument);
}

TEST_CASE("constructor outputs validate") {
  std::vector<FinModule> mods = {
      zmod(1), zmod(6), zmod_over(4, 2), zmod_over(6, 3), ring_as_module(zring(8)),
      submodule_view(submodule_generated(zmod(8), {2})),
      quotient_module(zmod(8), submodule_generated(zmod(8), {4})),
  };
  for (const FinModule& m : mods) CHECK(validate(m).ok());
  CHECK_THROWS_AS(cyclic_module(zring(4), 3), std::invalid_argument);  // 3 does not divide 4
}
