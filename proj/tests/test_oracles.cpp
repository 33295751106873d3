#include "doctest.h"
#include "helpers.hpp"

using namespace mptest;

TEST_CASE("free-module oracle finds the rank-1 obstruction") {
  FinModule a = zmod_over(4, 2);  // Z_2 as a Z_4-module
  FpOracleResult res = bounded_fp_oracle(a, 1, 2);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->k.elements == std::vector<int>{0, 2});
  // The non-extendable map sends 2 to 1.
  CHECK(res.witness->map.apply(res.witness->k.index_of(2)) == 1);
}

TEST_CASE("free-module oracle finds nothing for injective targets") {
  FinModule r4 = ring_as_module(zring(4));
  FpOracleResult res = bounded_fp_oracle(r4, 2, 2);
  CHECK_FALSE(res.witness.has_value());
  CHECK(res.maps_checked > 0);
}

TEST_CASE("free-module oracle is sound on absolutely pure modules") {
  for (const FinModule& a : {ring_as_module(zring(6)), zmod_over(6, 2), zmod_over(6, 3)}) {
    REQUIRE(is_absolutely_pure(a).holds);
    CHECK_FALSE(bounded_fp_oracle(a, 2, 2).witness.has_value());
  }
}

TEST_CASE("equation oracle examples") {
  FinModule z4 = zmod(4);
  Submodule two = submodule_generated(z4, {2});
  auto w = bounded_equational_purity(two, 3, 3);
  REQUIRE(w.has_value());
  CHECK(w->vars == 1);
  CHECK(w->rows.size() == 1);
  CHECK(w->rows[0].coeffs == std::vector<long long>{2});
  CHECK(w->rows[0].rhs == 2);
  CHECK(revalidate_equation_witness(two, *w));

  // Pure pairs produce no witness.
  FinModule klein = direct_sum(zint(), {zmod(2), zmod(2)}).sum;
  CHECK_FALSE(bounded_equational_purity(submodule_from_elements(klein, {0, 2}), 3, 3).has_value());
  CHECK_FALSE(bounded_equational_purity(submodule_from_elements(z4, {0}), 3, 3).has_value());
  CHECK_FALSE(
      bounded_equational_purity(submodule_from_elements(z4, {0, 1, 2, 3}), 3, 3).has_value());
}

TEST_CASE("summand reduction agrees with the equation oracle on a small slice") {
  // The full |B| <= 12 sweep runs in the acceptance suite; this covers the
  // integer side up to order 8 plus the Z_4 side.
  std::vector<FinModule> parents;
  for (const FinModule& m : module_zoo(zint(), 8)) parents.push_back(m);
  for (const FinModule& m : module_zoo(zring(4), 8)) parents.push_back(m);
  for (const FinModule& b : parents) {
    for (const Submodule& a : submodules(b)) {
      PurityVerdict v = is_pure(a);
      auto w = bounded_equational_purity(a, 3, 3);
      CHECK(v.holds == !w.has_value());
      if (w) CHECK(revalidate_equation_witness(a, *w));
    }
  }
}
