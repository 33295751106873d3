#include "doctest.h"
#include "helpers.hpp"

using namespace mptest;

namespace {

bool has_axiom(const ValidationReport& rep, const std::string& axiom) {
  for (const ValidationIssue& i : rep.issues) {
    if (i.axiom == axiom && i.kind == IssueKind::Axiom) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("corrupted ring tables are reported with witnesses") {
  RingTable t = zring(4).table();
  CHECK(validate(t).ok());

  RingTable broken = t;
  broken.mul[1 * 4 + 1] = 0;  // 1*1 = 0
  auto rep = validate(broken);
  CHECK_FALSE(rep.ok());
  CHECK(has_axiom(rep, "mul-identity"));
}

TEST_CASE("dimension mismatch is distinct from axiom failure") {
  RingTable t = zring(2).table();
  t.add.pop_back();
  auto rep = validate(t);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.issues[0].kind == IssueKind::Dimension);

  FinModuleData d = zmod(2).data();
  d.action = {0, 0};  // integer-ring modules carry none
  auto rep2 = validate(FinModule(std::move(d)));
  REQUIRE_FALSE(rep2.ok());
  CHECK(rep2.issues[0].kind == IssueKind::Dimension);
}

TEST_CASE("non-linear ideal maps are caught") {
  BaseRing z4 = zring(4);
  LeftIdeal two = principal_ideal(z4, 2);
  IdealHom f{two, ring_as_module(z4), {0, 1}, 0};  // 2 -> 1
  auto rep = validate(f);
  CHECK_FALSE(rep.ok());
  CHECK(has_axiom(rep, "linearity"));
  CHECK(has_axiom(rep, "additivity"));
}

TEST_CASE("corrupted module actions are caught") {
  FinModuleData d = zmod_over(4, 2).data();
  d.action[1 * 2 + 1] = 0;  // 1*1 = 0 breaks the identity axiom
  auto rep = validate(FinModule(std::move(d)));
  CHECK_FALSE(rep.ok());
  CHECK(has_axiom(rep, "action-identity"));
}

TEST_CASE("non-closed submodules are caught") {
  FinModule z4 = zmod(4);
  Submodule bad = submodule_from_elements(z4, {0, 1});
  auto rep = validate(bad);
  CHECK_FALSE(rep.ok());
  CHECK(has_axiom(rep, "closed-under-addition"));

  Submodule good = submodule_from_elements(z4, {0, 2});
  CHECK(validate(good).ok());
}

TEST_CASE("mod hom validation") {
  FinModule z2 = zmod(2);
  ModHom ok{z2, zmod(4), {0, 2}};
  CHECK(validate(ok).ok());
  ModHom bad{z2, zmod(4), {0, 1}};
  CHECK_FALSE(validate(bad).ok());
}
