#include "doctest.h"
#include "helpers.hpp"

using namespace mptest;

namespace {

// The non-regular witness module 2Z_4 + Z_4 over the ring Z_4.
FinModule regchar_witness() {
  BaseRing z4 = zring(4);
  FinModule rmod = ring_as_module(z4);
  Submodule two = submodule_generated(rmod, {2});
  return direct_sum(z4, {submodule_view(two), rmod}).sum;
}

}  // namespace

TEST_CASE("extension scans") {
  BaseRing z4 = zring(4);
  FinModule rmod = ring_as_module(z4);

  // A zero map extends via the zero element.
  LeftIdeal two = principal_ideal(z4, 2);
  auto homs = hom_set(two, rmod);
  auto w = extends_to_ring(homs[0]);
  REQUIRE(w.has_value());
  CHECK(w->element == rmod.zero());

  // f : 2Z -> Z_2 with f(2) = 1 has no extension.
  IdealHom f{LeftIdeal{zint(), {}, 2}, zmod(2), {}, 1};
  CHECK_FALSE(extends_to_ring(f).has_value());

  // The obstruction map 2 -> (2,0) into 2Z_4 + Z_4.
  FinModule m = regchar_witness();
  IdealHom g{two, m, {m.zero(), 4}, 0};  // (2,0) sits at index 1*4+0
  REQUIRE(validate(g).ok());
  CHECK_FALSE(extends_to_ring(g).has_value());
}

TEST_CASE("self purity versus purity separates") {
  FinModule z4 = zmod(4);
  Submodule two = submodule_generated(z4, {2});

  PurityVerdict sp = is_self_pure(two);
  CHECK(sp.holds);

  PurityVerdict p = is_pure(two);
  CHECK_FALSE(p.holds);
  REQUIRE(p.equations.has_value());
  CHECK(p.equations->vars == 1);
  REQUIRE(p.equations->rows.size() == 1);
  CHECK(p.equations->rows[0].coeffs == std::vector<long long>{2});
  CHECK(p.equations->rows[0].rhs == 2);
  CHECK(revalidate_equation_witness(two, *p.equations));
}

TEST_CASE("self purity edge cases") {
  FinModule z4 = zmod(4);
  Submodule whole = submodule_from_elements(z4, {0, 1, 2, 3});
  CHECK(is_self_pure(whole).holds);
  Submodule zero = submodule_from_elements(z4, {0});
  CHECK(is_self_pure(zero).holds);
}

TEST_CASE("relative purity with respect to a third module") {
  FinModule z4 = zmod(4);
  Submodule two = submodule_generated(z4, {2});

  // Relative to the zero module only the zero map qualifies.
  CHECK(is_M_pure(two, zero_module(zint())).holds);

  // Relative to Z_4 the kernel condition admits the obstruction.
  PurityVerdict v = is_M_pure(two, z4);
  CHECK_FALSE(v.holds);
  REQUIRE(v.failing.has_value());
  CHECK(v.failing->ideal.gen == 2);
  CHECK(v.failing->map.gen_image == 1);  // view element 1 is parent 2
  CHECK(kernel(v.failing->map).gen == 4);

  CHECK_THROWS_AS(is_M_pure(two, zmod_over(4, 2)), std::invalid_argument);
}

TEST_CASE("M-purity relative to the submodule itself is self purity") {
  std::vector<FinModule> parents = {zmod(4), zmod(8), direct_sum(zint(), {zmod(2), zmod(4)}).sum,
                                    ring_as_module(zring(4)),
                                    direct_sum(zring(4), {zmod_over(4, 2), zmod_over(4, 4)}).sum};
  for (const FinModule& b : parents) {
    for (const Submodule& a : submodules(b)) {
      CHECK(is_M_pure(a, submodule_view(a)).holds == is_self_pure(a).holds);
    }
  }
}

TEST_CASE("absolute self purity") {
  CHECK(is_absolutely_self_pure(zmod(2)).holds);
  CHECK(is_absolutely_self_pure(zero_module(zint())).holds);
  CHECK(is_absolutely_self_pure(zero_module(zring(4))).holds);

  FinModule m = regchar_witness();
  PropertyVerdict v = is_absolutely_self_pure(m);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->ideal.elements == std::vector<int>{0, 2});
  CHECK(v.witness->map.apply(2) == 4);  // 2 -> (2,0)
  CHECK(kernel(v.witness->map).elements == std::vector<int>{0});
  // The kernel contains ann((0,1)) = 0.
  CHECK(ideal_subset(annihilator(m, 1), kernel(v.witness->map)));
  CHECK(revalidate_failing_pair(*v.witness, m));
}

TEST_CASE("quasi injectivity") {
  CHECK(is_quasi_injective(zmod(2)).holds);
  CHECK(is_quasi_injective(zmod(4)).holds);
  CHECK_FALSE(is_quasi_injective(regchar_witness()).holds);
}

TEST_CASE("injectivity by the full extension test") {
  CHECK(is_injective_baer(zero_module(zint())).holds);

  PropertyVerdict z2 = is_injective_baer(zmod(2));
  CHECK_FALSE(z2.holds);
  REQUIRE(z2.witness.has_value());
  CHECK(z2.witness->ideal.gen == 2);
  CHECK(z2.witness->map.gen_image == 1);

  CHECK(is_injective_baer(ring_as_module(zring(4))).holds);  // self-injective
  CHECK_FALSE(is_injective_baer(zmod_over(4, 2)).holds);
}

TEST_CASE("absolute purity via the finite-module reduction") {
  CHECK_FALSE(is_absolutely_pure(zmod(2)).holds);
  CHECK(is_absolutely_pure(zero_module(zint())).holds);
  for (const FinModule& m : {ring_as_module(zring(6)), zmod_over(6, 2), zmod_over(6, 3)}) {
    CHECK(is_absolutely_pure(m).holds);
  }
}

TEST_CASE("integer quantifier bound agrees with a wide sweep") {
  std::vector<FinModule> mods = {zmod(2), zmod(4), zmod(6), zmod(8), zmod(12),
                                 direct_sum(zint(), {zmod(2), zmod(2)}).sum,
                                 direct_sum(zint(), {zmod(2), zmod(4)}).sum,
                                 direct_sum(zint(), {zmod(2), zmod(6)}).sum};
  for (const FinModule& m : mods) {
    AnnFilter filt = filter_closure(m);
    auto bounded = find_unextendable(m, &filt, integer_scan_gens(filt.exponent));
    std::vector<long long> wide;
    for (long long n = 0; n <= 4 * filt.exponent; ++n) wide.push_back(n);
    auto swept = find_unextendable(m, &filt, wide);
    CHECK(bounded.has_value() == swept.has_value());
    if (bounded && swept) {
      CHECK(bounded->ideal.gen == swept->ideal.gen);
      CHECK(bounded->map.gen_image == swept->map.gen_image);
    }
  }
}

TEST_CASE("purity by complement search") {
  FinModule z4 = zmod(4);
  Submodule whole = submodule_from_elements(z4, {0, 1, 2, 3});
  PurityVerdict v = is_pure(whole);
  CHECK(v.holds);
  REQUIRE(v.complement.has_value());
  CHECK(v.complement->elements == std::vector<int>{0});

  FinModule klein = direct_sum(zint(), {zmod(2), zmod(2)}).sum;
  Submodule first = submodule_from_elements(klein, {0, 2});  // Z_2 + 0
  PurityVerdict kv = is_pure(first);
  CHECK(kv.holds);
  REQUIRE(kv.complement.has_value());
  CHECK(kv.complement->elements == std::vector<int>{0, 1});  // 0 + Z_2

  CHECK_FALSE(is_pure(submodule_generated(z4, {2})).holds);
}

TEST_CASE("pure implies self pure across a zoo slice") {
  std::vector<FinModule> parents = {zmod(8), direct_sum(zint(), {zmod(2), zmod(4)}).sum,
                                    ring_as_module(zring(4)), regchar_witness()};
  for (const FinModule& b : parents) {
    for (const Submodule& a : submodules(b)) {
      if (is_pure(a).holds) CHECK(is_self_pure(a).holds);
    }
  }
}

TEST_CASE("ring regularity and semisimplicity") {
  CHECK(is_regular_ring(zring(6)).holds);
  CHECK(is_regular_ring(zring(2)).holds);
  CHECK(is_regular_ring(zring(1)).holds);

  RingPropertyVerdict z4 = is_regular_ring(zring(4));
  CHECK_FALSE(z4.holds);
  REQUIRE(z4.witness.has_value());
  CHECK(z4.witness->elements == std::vector<int>{0, 2});

  RingPropertyVerdict z8 = is_regular_ring(zring(8));
  CHECK_FALSE(z8.holds);
  CHECK(z8.witness->elements == std::vector<int>{0, 2, 4, 6});

  CHECK(is_semisimple_ring(zring(6)).holds);
  CHECK_FALSE(is_semisimple_ring(zring(4)).holds);
  CHECK(is_semisimple_ring(make_product_ring(zring(2), zring(2))).holds);
}

TEST_CASE("classification records") {
  ClassificationRecord z2 = classify(zmod(2));
  CHECK_FALSE(z2.injective);
  CHECK_FALSE(z2.absolutely_pure);
  CHECK(z2.quasi_injective);
  CHECK(z2.absolutely_self_pure);

  ClassificationRecord zero = classify(zero_module(zint()));
  CHECK(zero.injective);
  CHECK(zero.absolutely_pure);
  CHECK(zero.quasi_injective);
  CHECK(zero.absolutely_self_pure);

  ClassificationRecord w = classify(regchar_witness());
  CHECK_FALSE(w.injective);
  CHECK_FALSE(w.absolutely_pure);
  CHECK_FALSE(w.quasi_injective);
  CHECK_FALSE(w.absolutely_self_pure);
  REQUIRE(w.absolutely_self_pure_witness.has_value());
}

TEST_CASE("identical inputs produce identical witnesses") {
  FinModule m = regchar_witness();
  auto a = is_absolutely_self_pure(m);
  auto b = is_absolutely_self_pure(m);
  REQUIRE(a.witness.has_value());
  REQUIRE(b.witness.has_value());
  CHECK(describe(*a.witness) == describe(*b.witness));

  Submodule two = submodule_generated(zmod(4), {2});
  auto e1 = bounded_equational_purity(two, 3, 3);
  auto e2 = bounded_equational_purity(two, 3, 3);
  REQUIRE(e1.has_value());
  REQUIRE(e2.has_value());
  CHECK(e1->rows[0].coeffs == e2->rows[0].coeffs);
  CHECK(e1->rows[0].rhs == e2->rows[0].rhs);
}
