#pragma once

#include <string>
#include <vector>

#include "modpure/caps.hpp"
#include "modpure/module.hpp"
#include "modpure/ring.hpp"

namespace modpure {

// A left ideal: an explicit element set over a finite ring, or nZ over the
// integers (gen = 0 is the zero ideal, gen = 1 the whole ring).
struct LeftIdeal {
  BaseRing ring;
  std::vector<int> elements;  // finite: sorted, closed
  long long gen = 0;          // integers only

  int size() const { return static_cast<int>(elements.size()); }
  bool contains(int e) const;
  std::string describe() const;

  friend bool operator==(const LeftIdeal& a, const LeftIdeal& b);
};

std::vector<LeftIdeal> left_ideals(const BaseRing& r, const Caps& caps = {});
LeftIdeal zero_ideal(const BaseRing& r);
LeftIdeal whole_ring_ideal(const BaseRing& r);
// Finite rings: {s*x : s in R} for the element index x. Integers: |x| Z.
LeftIdeal principal_ideal(const BaseRing& r, long long x);
LeftIdeal annihilator(const FinModule& m, int elem);
LeftIdeal intersect_ideals(const LeftIdeal& a, const LeftIdeal& b);
bool ideal_subset(const LeftIdeal& a, const LeftIdeal& b);
std::vector<int> greedy_ideal_generators(const LeftIdeal& l);

// A module map out of a left ideal. Finite rings: images parallel to
// domain.elements. Integers: the single image of the generator (for gen = 0
// the map is forced to be zero).
struct IdealHom {
  LeftIdeal domain;
  FinModule codomain;
  std::vector<int> map;
  int gen_image = 0;

  int apply(int l) const;  // finite rings: image of ideal element l
};

// All R-linear maps L -> M, in a deterministic order: maps are produced by a
// depth-first scan over images of the greedy generators, image indices
// ascending.
std::vector<IdealHom> hom_set(const LeftIdeal& l, const FinModule& m, const Caps& caps = {});

LeftIdeal kernel(const IdealHom& f);

// Reinterpret a map into a submodule view as a map into the parent module.
IdealHom into_parent(const IdealHom& f, const Submodule& s);

}  // namespace modpure
