#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "modpure/caps.hpp"
#include "modpure/module.hpp"
#include "modpure/ring.hpp"

namespace modpure {

struct RingSpec {
  enum class Kind { Integers, Cyclic, Product };
  Kind kind = Kind::Integers;
  int n = 0;  // cyclic order, or first product factor
  int m = 0;  // second product factor

  std::string label() const;
  static RingSpec parse(const std::string& text);  // "integers" | "Z_4" | "Z_2xZ_3"
};

BaseRing build_ring(const RingSpec& spec, const Caps& caps = {});

// Scope for zoo generation and the theorem checks. Generation under a fixed
// scope is reproducible; the seed is reserved for optional randomized
// supplements and does not affect the canonical lists.
struct ZooScope {
  std::vector<RingSpec> rings;
  int module_order_cap = 16;
  int free_rank_cap = 2;
  int chain_depth = 3;
  int copies = 3;
  std::vector<std::pair<int, int>> product_pairs = {{2, 3}, {4, 2}};
  std::uint64_t seed = 0;
  Caps caps;

  static ZooScope default_scope();
};

// Z_n for n <= max_order, then products Z_i x Z_j (2 <= i <= j, ij within the
// bound), then the integer ring.
std::vector<BaseRing> ring_catalog(int max_order, const Caps& caps = {});

// Pairwise non-isomorphic modules over r with order <= cap. Over Z: one group
// per invariant-factor chain. Over a finite ring: submodule and quotient
// closure of the free modules R^k (k <= free_rank_cap), then direct sums,
// deduplicated by is_module_iso.
std::vector<FinModule> module_zoo(const BaseRing& r, int cap, int free_rank_cap = 2,
                                  const Caps& caps = {});

// Ascending (non-strict) chains of submodules of b, lengths 1..depth,
// enumerated over the canonical submodule list.
std::vector<std::vector<Submodule>> chains(const FinModule& b, int depth, const Caps& caps = {});

}  // namespace modpure
