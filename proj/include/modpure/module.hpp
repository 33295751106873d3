#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modpure/caps.hpp"
#include "modpure/ring.hpp"

namespace modpure {

struct FinModuleData {
  BaseRing ring;
  int order = 0;
  std::vector<int> add;  // order*order, row-major
  int zero = 0;
  std::vector<int> action;  // finite ring: ring.order()*order; empty over Z
  std::string label;
};

// A finite left module with exact tables. Values are immutable and cheap to
// copy (shared representation). Over the integer ring the scalar action is
// derived from repeated addition and no action table is stored.
class FinModule {
 public:
  FinModule() = default;
  explicit FinModule(FinModuleData d);

  const FinModuleData& data() const { return *d_; }
  const BaseRing& ring() const { return d_->ring; }
  int order() const { return d_->order; }
  int zero() const { return d_->zero; }
  const std::string& label() const { return d_->label; }

  int addv(int a, int b) const {
    return d_->add[static_cast<std::size_t>(a) * d_->order + b];
  }
  int neg(int a) const;
  // Scalar action of ring element index r (finite base ring only).
  int act_ring(int r, int m) const {
    return d_->action[static_cast<std::size_t>(r) * d_->order + m];
  }
  // n-fold addition; the scalar action of the integer ring.
  int act_int(long long n, int m) const;
  int add_order(int m) const;
  long long exponent() const;

  friend bool operator==(const FinModule& a, const FinModule& b);
  friend bool operator!=(const FinModule& a, const FinModule& b) { return !(a == b); }

 private:
  std::shared_ptr<const FinModuleData> d_;
};

// A submodule recorded as a sorted set of parent element indices.
struct Submodule {
  FinModule parent;
  std::vector<int> elements;

  int size() const { return static_cast<int>(elements.size()); }
  bool contains(int e) const;
  int index_of(int e) const;  // position within elements, -1 if absent
};

struct ModHom {
  FinModule domain;
  FinModule codomain;
  std::vector<int> map;  // size domain.order()

  int apply(int m) const { return map[static_cast<std::size_t>(m)]; }
};

FinModule zero_module(const BaseRing& r);

// Cyclic module of order d with the index-reduction action r*x = (r mod d)*x.
// Over a finite ring this requires reduction mod d to be a ring homomorphism
// of the index structure (true for make_cyclic_ring outputs when d divides n).
FinModule cyclic_module(const BaseRing& r, long long d, const Caps& caps = {});

// The ring acting on itself by left multiplication (finite rings only).
FinModule ring_as_module(const BaseRing& r);

struct DirectSum {
  FinModule sum;
  std::vector<ModHom> injections;
  std::vector<ModHom> projections;
};
DirectSum direct_sum(const BaseRing& r, const std::vector<FinModule>& parts,
                     const Caps& caps = {});

// Module over a product ring with componentwise structure; `left` must live
// over the first factor and `right` over the second.
FinModule product_module(const BaseRing& product_ring, const BaseRing& r1, const BaseRing& r2,
                         const FinModule& left, const FinModule& right, const Caps& caps = {});

FinModule submodule_view(const Submodule& s);
ModHom submodule_inclusion(const Submodule& s);
FinModule quotient_module(const FinModule& m, const Submodule& s);

// Closure of `seed` under addition (and ring action when finite); contains
// zero. Returned sorted.
std::vector<int> closure(const FinModule& m, const std::vector<int>& seed);

Submodule submodule_from_elements(const FinModule& m, std::vector<int> elements);
Submodule submodule_generated(const FinModule& m, const std::vector<int>& gens);

// Every submodule exactly once, sorted by size then lexicographically.
std::vector<Submodule> submodules(const FinModule& m, const Caps& caps = {});

// Greedy generating set: repeatedly adjoin the smallest element index not in
// the closure of the ones picked so far.
std::vector<int> greedy_module_generators(const FinModule& m);

// Isomorphism witness, found by backtracking over generator images pruned by
// additive-order and annihilator profiles. Smallest-index witness.
std::optional<ModHom> is_module_iso(const FinModule& a, const FinModule& b);

// All module homomorphisms k -> a (R-linear; over Z additive maps).
std::vector<ModHom> module_homs(const FinModule& k, const FinModule& a, const Caps& caps = {});

}  // namespace modpure
