#include "doctest.h"
#include "helpers.hpp"

using namespace mptest;

TEST_CASE("cyclic ring construction") {
  BaseRing z1 = zring(1);
  CHECK(z1.order() == 1);
  CHECK(z1.table().zero == z1.table().one);
  CHECK(validate(z1.table()).ok());

  BaseRing z4 = zring(4);
  CHECK(z4.table().mulv(2, 2) == 0);
  CHECK(z4.table().addv(3, 2) == 1);
  CHECK(validate(z4.table()).ok());
  CHECK(z4.label() == "Z_4");

  CHECK_THROWS_AS(make_cyclic_ring(0), std::invalid_argument);
  CHECK_THROWS_AS(make_cyclic_ring(65), CapacityError);
}

TEST_CASE("product rings") {
  BaseRing z2 = zring(2), z3 = zring(3);
  BaseRing p = make_product_ring(z2, z3);
  CHECK(p.order() == 6);
  CHECK(validate(p.table()).ok());
  CHECK_THROWS_AS(make_product_ring(z2, zint()), std::invalid_argument);

  // Componentwise arithmetic: (1,2)+(1,2) = (0,1), (1,2)*(1,2) = (1,1).
  int x = 1 * 3 + 2;
  CHECK(p.table().addv(x, x) == 0 * 3 + 1);
  CHECK(p.table().mulv(x, x) == 1 * 3 + 1);
}

TEST_CASE("Z_6 is isomorphic to Z_2 x Z_3") {
  BaseRing z6 = zring(6);
  BaseRing p = make_product_ring(zring(2), zring(3));
  auto iso = is_ring_iso(z6, p);
  REQUIRE(iso.has_value());
  // The witness is a ring isomorphism.
  const RingTable& a = z6.table();
  const RingTable& b = p.table();
  const std::vector<int>& f = *iso;
  std::vector<char> hit(static_cast<std::size_t>(b.order), 0);
  for (int v : f) hit[static_cast<std::size_t>(v)] = 1;
  CHECK(std::count(hit.begin(), hit.end(), 1) == b.order);
  CHECK(f[static_cast<std::size_t>(a.zero)] == b.zero);
  CHECK(f[static_cast<std::size_t>(a.one)] == b.one);
  for (int i = 0; i < a.order; ++i) {
    for (int j = 0; j < a.order; ++j) {
      CHECK(f[static_cast<std::size_t>(a.addv(i, j))] ==
            b.addv(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)]));
      CHECK(f[static_cast<std::size_t>(a.mulv(i, j))] ==
            b.mulv(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)]));
    }
  }
  CHECK(is_ring_iso(p, z6).has_value());
  CHECK_FALSE(is_ring_iso(zring(4), make_product_ring(zring(2), zring(2))).has_value());
}

TEST_CASE("idempotents of Z_2 x Z_2") {
  BaseRing p = make_product_ring(zring(2), zring(2));
  const RingTable& t = p.table();
  int idempotents = 0, nonzero = 0;
  for (int e = 0; e < t.order; ++e) {
    if (t.mulv(e, e) == e) {
      ++idempotents;
      if (e != t.zero) ++nonzero;
    }
  }
  CHECK(idempotents == 4);
  CHECK(nonzero == 3);
}

TEST_CASE("Z_1 x R is isomorphic to R") {
  BaseRing r = zring(5);
  BaseRing p = make_product_ring(zring(1), r);
  CHECK(p.order() == 5);
  CHECK(is_ring_iso(p, r).has_value());
}

TEST_CASE("ring iso is reflexive and symmetric on the small catalog") {
  std::vector<BaseRing> rings = {zring(1), zring(2), zring(4), zring(6),
                                 make_product_ring(zring(2), zring(2)),
                                 make_product_ring(zring(2), zring(3))};
  for (const BaseRing& a : rings) {
    CHECK(is_ring_iso(a, a).has_value());
    for (const BaseRing& b : rings) {
      CHECK(is_ring_iso(a, b).has_value() == is_ring_iso(b, a).has_value());
    }
  }
}
