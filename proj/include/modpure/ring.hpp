#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modpure/caps.hpp"

namespace modpure {

// A finite unital ring given by full addition/multiplication tables over
// element indices 0..order-1.
struct RingTable {
  int order = 0;
  std::vector<int> add;  // order*order, row-major
  std::vector<int> mul;
  int zero = 0;
  int one = 0;
  std::string label;

  int addv(int a, int b) const { return add[static_cast<std::size_t>(a) * order + b]; }
  int mulv(int a, int b) const { return mul[static_cast<std::size_t>(a) * order + b]; }
  int neg(int a) const;
};

// Either a finite RingTable or the ring of integers. The integer variant
// never enumerates elements; its ideals use the generator parametrization nZ.
class BaseRing {
 public:
  BaseRing() = default;  // integers
  static BaseRing integers();
  static BaseRing finite(RingTable table);

  bool is_integers() const { return table_ == nullptr; }
  bool is_finite() const { return table_ != nullptr; }
  const RingTable& table() const;
  int order() const { return table().order; }
  std::string label() const;

  friend bool operator==(const BaseRing& a, const BaseRing& b);
  friend bool operator!=(const BaseRing& a, const BaseRing& b) { return !(a == b); }

 private:
  std::shared_ptr<const RingTable> table_;
};

BaseRing make_cyclic_ring(int n, const Caps& caps = {});
BaseRing make_product_ring(const BaseRing& r1, const BaseRing& r2, const Caps& caps = {});

// Ring isomorphism witness as an element bijection, image indexed by source
// element. Backtracking over additive-order-compatible assignments.
std::optional<std::vector<int>> is_ring_iso(const BaseRing& r1, const BaseRing& r2);

}  // namespace modpure
