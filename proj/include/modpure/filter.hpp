#pragma once

#include <vector>

#include "modpure/caps.hpp"
#include "modpure/ideal.hpp"
#include "modpure/module.hpp"

namespace modpure {

// The filter generated by the annihilators of a module's elements, stored by
// its base rather than enumerated in full. Over a finite ring the base is the
// intersection closure of the annihilator set; membership is containment of
// some base element. Over the integers the filter is determined by the module
// exponent: nZ belongs iff n >= 1 divides it. The zero ideal is never a
// member over the integers, since a finite intersection of annihilators of a
// finite module is a nonzero ideal; the zero module gets exponent 1.
struct AnnFilter {
  BaseRing ring;
  std::vector<LeftIdeal> base;
  long long exponent = 1;
};

// All left ideals of a finite ring containing the annihilator of some
// element; a subset of left_ideals(ring).
std::vector<LeftIdeal> omega(const FinModule& m, const Caps& caps = {});

AnnFilter filter_closure(const FinModule& m, const Caps& caps = {});

bool filter_contains(const AnnFilter& f, const LeftIdeal& k);

}  // namespace modpure
