#pragma once

// Shared builders and brute-force oracles. The oracles enumerate raw subsets
// and raw functions so they stay independent of the closure/propagation code
// they cross-check.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "modpure/filter.hpp"
#include "modpure/ideal.hpp"
#include "modpure/module.hpp"
#include "modpure/purity.hpp"
#include "modpure/ring.hpp"
#include "modpure/validate.hpp"

namespace mptest {

using namespace modpure;

inline BaseRing zring(int n) { return make_cyclic_ring(n); }
inline BaseRing zint() { return BaseRing::integers(); }

// Z_n as a module over the integers.
inline FinModule zmod(int n) { return cyclic_module(zint(), n); }

// Z_d as a module over the ring Z_n (canonical reduction action).
inline FinModule zmod_over(int ring_n, int d) { return cyclic_module(zring(ring_n), d); }

// All submodule element sets of m, by scanning every subset. Exponential:
// keep m.order() <= 16.
inline std::vector<std::vector<int>> naive_closed_subsets(const FinModule& m) {
  if (m.order() > 16) throw std::invalid_argument("naive subset scan capped at order 16");
  std::vector<std::vector<int>> out;
  int n = m.order();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask & (1u << m.zero()))) continue;
    std::vector<int> els;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) els.push_back(i);
    }
    bool closed = true;
    for (int a : els) {
      for (int b : els) closed = closed && (mask & (1u << m.addv(a, b)));
      if (m.ring().is_finite()) {
        for (int r = 0; r < m.ring().order() && closed; ++r) {
          closed = closed && (mask & (1u << m.act_ring(r, a)));
        }
      }
      if (!closed) break;
    }
    if (closed) out.push_back(std::move(els));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

inline std::vector<std::vector<int>> naive_left_ideals(const BaseRing& r) {
  return naive_closed_subsets(ring_as_module(r));
}

// All linear maps L -> M over a finite ring, by filtering every function.
// Exponential: keep |M|^|L| small.
inline std::vector<std::vector<int>> naive_homs(const LeftIdeal& l, const FinModule& m) {
  double size = 1;
  for (int i = 0; i < l.size(); ++i) size *= m.order();
  if (size > 2e6) throw std::invalid_argument("naive hom scan too large");
  const RingTable& ring = l.ring.table();
  std::vector<std::vector<int>> out;
  std::vector<int> f(static_cast<std::size_t>(l.size()), 0);
  auto pos = [&](int e) {
    auto it = std::lower_bound(l.elements.begin(), l.elements.end(), e);
    return static_cast<int>(it - l.elements.begin());
  };
  for (;;) {
    bool linear = true;
    for (int i = 0; i < l.size() && linear; ++i) {
      int a = l.elements[static_cast<std::size_t>(i)];
      for (int j = 0; j < l.size() && linear; ++j) {
        int b = l.elements[static_cast<std::size_t>(j)];
        linear = f[static_cast<std::size_t>(pos(ring.addv(a, b)))] ==
                 m.addv(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)]);
      }
      for (int r = 0; r < ring.order && linear; ++r) {
        linear = f[static_cast<std::size_t>(pos(ring.mulv(r, a)))] ==
                 m.act_ring(r, f[static_cast<std::size_t>(i)]);
      }
    }
    if (linear) out.push_back(f);
    int i = l.size() - 1;
    while (i >= 0 && f[static_cast<std::size_t>(i)] == m.order() - 1) {
      f[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++f[static_cast<std::size_t>(i)];
  }
  return out;
}

// Re-checks an equation witness from scratch: constants inside the submodule,
// the stored parent solution satisfies every row, and no assignment inside
// the submodule does.
inline bool revalidate_equation_witness(const Submodule& a, const EquationWitness& w) {
  const FinModule& b = a.parent;
  auto row_value = [&](const EquationRow& row, const std::vector<int>& xs) {
    int val = b.zero();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      int cx = b.ring().is_finite()
                   ? b.act_ring(static_cast<int>(row.coeffs[i]), xs[i])
                   : b.act_int(row.coeffs[i], xs[i]);
      val = b.addv(val, cx);
    }
    return val;
  };
  for (const EquationRow& row : w.rows) {
    if (static_cast<int>(row.coeffs.size()) != w.vars) return false;
    if (!a.contains(row.rhs)) return false;
    if (row_value(row, w.solution_in_parent) != row.rhs) return false;
  }
  // Exhaustive scan over submodule assignments.
  std::vector<int> idx(static_cast<std::size_t>(w.vars), 0);
  for (;;) {
    std::vector<int> xs;
    for (int i : idx) xs.push_back(a.elements[static_cast<std::size_t>(i)]);
    bool all = true;
    for (const EquationRow& row : w.rows) all = all && row_value(row, xs) == row.rhs;
    if (all) return false;  // solvable inside the submodule: not a witness
    int i = w.vars - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == a.size() - 1) {
      idx[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
  }
  return true;
}

// Re-checks a failing pair from scratch: the map validates, its kernel lies
// in the filter of `filter_module`, and no extension element exists.
inline bool revalidate_failing_pair(const FailingPair& fail, const FinModule& filter_module) {
  if (!validate(fail.map).ok()) return false;
  if (!filter_contains(filter_closure(filter_module), kernel(fail.map))) return false;
  return !extends_to_ring(fail.map).has_value();
}

}  // namespace mptest
