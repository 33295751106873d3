#include "modpure/zoo.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "modpure/util.hpp"

namespace modpure {

std::string RingSpec::label() const {
  switch (kind) {
    case Kind::Integers:
      return "integers";
    case Kind::Cyclic:
      return "Z_" + std::to_string(n);
    case Kind::Product:
      return "Z_" + std::to_string(n) + "xZ_" + std::to_string(m);
  }
  return "?";
}

RingSpec RingSpec::parse(const std::string& text) {
  if (text == "integers" || text == "Z") return RingSpec{Kind::Integers, 0, 0};
  auto parse_cyclic = [](const std::string& s) -> int {
    if (s.rfind("Z_", 0) != 0) return -1;
    try {
      std::size_t used = 0;
      int v = std::stoi(s.substr(2), &used);
      if (used != s.size() - 2 || v <= 0) return -1;
      return v;
    } catch (const std::exception&) {
      return -1;
    }
  };
  auto x = text.find('x');
  if (x == std::string::npos) {
    int n = parse_cyclic(text);
    if (n > 0) return RingSpec{Kind::Cyclic, n, 0};
  } else {
    int n = parse_cyclic(text.substr(0, x));
    int m = parse_cyclic(text.substr(x + 1));
    if (n > 0 && m > 0) return RingSpec{Kind::Product, n, m};
  }
  throw std::invalid_argument("cannot parse ring spec '" + text +
                              "' (expected integers, Z_n or Z_nxZ_m)");
}

BaseRing build_ring(const RingSpec& spec, const Caps& caps) {
  switch (spec.kind) {
    case RingSpec::Kind::Integers:
      return BaseRing::integers();
    case RingSpec::Kind::Cyclic:
      return make_cyclic_ring(spec.n, caps);
    case RingSpec::Kind::Product:
      return make_product_ring(make_cyclic_ring(spec.n, caps), make_cyclic_ring(spec.m, caps),
                               caps);
  }
  throw std::logic_error("unhandled ring spec");
}

ZooScope ZooScope::default_scope() {
  ZooScope s;
  s.rings = {RingSpec{RingSpec::Kind::Integers, 0, 0}, RingSpec{RingSpec::Kind::Cyclic, 2, 0},
             RingSpec{RingSpec::Kind::Cyclic, 4, 0},   RingSpec{RingSpec::Kind::Cyclic, 6, 0},
             RingSpec{RingSpec::Kind::Cyclic, 8, 0},   RingSpec{RingSpec::Kind::Product, 2, 2}};
  return s;
}

std::vector<BaseRing> ring_catalog(int max_order, const Caps& caps) {
  std::vector<BaseRing> out;
  for (int n = 1; n <= max_order; ++n) out.push_back(make_cyclic_ring(n, caps));
  for (int i = 2; i <= max_order; ++i) {
    for (int j = i; static_cast<long long>(i) * j <= max_order; ++j) {
      out.push_back(make_product_ring(make_cyclic_ring(i, caps), make_cyclic_ring(j, caps), caps));
    }
  }
  out.push_back(BaseRing::integers());
  return out;
}

namespace {

// Abelian groups of order n, one per invariant-factor chain d1 | d2 | ... .
void invariant_factor_chains(long long n, long long min_d,
                             std::vector<long long>& current,
                             std::vector<std::vector<long long>>& out) {
  if (n == 1) {
    out.push_back(current);
    return;
  }
  for (long long d : divisors(n)) {
    if (d < 2 || d < min_d || d % min_d != 0) continue;
    current.push_back(d);
    invariant_factor_chains(n / d, d, current, out);
    current.pop_back();
  }
}

std::vector<FinModule> integers_zoo(const BaseRing& r, int cap, const Caps& caps) {
  std::vector<FinModule> out;
  for (int n = 1; n <= cap; ++n) {
    std::vector<std::vector<long long>> decomps;
    std::vector<long long> current;
    invariant_factor_chains(n, 1, current, decomps);
    for (const auto& factors : decomps) {
      std::vector<FinModule> parts;
      for (long long d : factors) parts.push_back(cyclic_module(r, d, caps));
      out.push_back(direct_sum(r, parts, caps).sum);
    }
  }
  return out;
}

bool iso_to_any(const FinModule& m, const std::vector<FinModule>& list) {
  for (const FinModule& x : list) {
    if (is_module_iso(m, x)) return true;
  }
  return false;
}

std::vector<FinModule> finite_ring_zoo(const BaseRing& r, int cap, int free_rank_cap,
                                       const Caps& caps) {
  std::vector<FinModule> out;
  FinModule rmod = ring_as_module(r);
  for (int rank = 0; rank <= free_rank_cap; ++rank) {
    long long order = 1;
    for (int i = 0; i < rank; ++i) order *= rmod.order();
    if (order > caps.max_module_order) break;  // free module too large to enumerate
    FinModule free =
        rank == 0 ? zero_module(r) : direct_sum(r, std::vector<FinModule>(rank, rmod), caps).sum;
    for (const Submodule& s : submodules(free, caps)) {
      if (s.size() <= cap) {
        FinModule view = s.size() == free.order() ? free
                         : s.size() == 1         ? zero_module(r)
                                                 : submodule_view(s);
        if (!iso_to_any(view, out)) out.push_back(view);
      }
      if (free.order() / s.size() <= cap) {
        FinModule quot = s.size() == 1             ? free
                         : s.size() == free.order() ? zero_module(r)
                                                    : quotient_module(free, s);
        if (!iso_to_any(quot, out)) out.push_back(quot);
      }
    }
  }
  // Close under direct sums within the order cap.
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i; j < out.size(); ++j) {
      long long order = static_cast<long long>(out[i].order()) * out[j].order();
      if (order > cap) continue;
      FinModule sum = direct_sum(r, {out[i], out[j]}, caps).sum;
      if (!iso_to_any(sum, out)) out.push_back(sum);
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const FinModule& a, const FinModule& b) { return a.order() < b.order(); });
  return out;
}

}  // namespace

std::vector<FinModule> module_zoo(const BaseRing& r, int cap, int free_rank_cap,
                                  const Caps& caps) {
  if (cap < 1) throw std::invalid_argument("module order cap must be positive");
  if (cap > caps.max_module_order) {
    throw CapacityError("zoo order cap " + std::to_string(cap) + " exceeds module cap " +
                        std::to_string(caps.max_module_order));
  }
  if (r.is_integers()) return integers_zoo(r, cap, caps);
  return finite_ring_zoo(r, cap, free_rank_cap, caps);
}

std::vector<std::vector<Submodule>> chains(const FinModule& b, int depth, const Caps& caps) {
  if (depth < 1) throw std::invalid_argument("chain depth must be positive");
  auto subs = submodules(b, caps);
  // Strictly ascending: distinct submodules in the canonical order nest
  // properly whenever the later one contains the earlier one.
  std::vector<std::vector<int>> index_chains;
  std::vector<int> current;
  std::function<void(int, int)> extend = [&](int from, int remaining) {
    if (!current.empty()) index_chains.push_back(current);
    if (remaining == 0) return;
    for (int j = from; j < static_cast<int>(subs.size()); ++j) {
      if (!current.empty()) {
        const auto& prev = subs[static_cast<std::size_t>(current.back())].elements;
        const auto& next = subs[static_cast<std::size_t>(j)].elements;
        if (!std::includes(next.begin(), next.end(), prev.begin(), prev.end())) continue;
      }
      current.push_back(j);
      extend(j + 1, remaining - 1);
      current.pop_back();
    }
  };
  extend(0, depth);
  std::stable_sort(index_chains.begin(), index_chains.end(),
                   [](const auto& a, const auto& b2) { return a.size() < b2.size(); });
  std::vector<std::vector<Submodule>> out;
  out.reserve(index_chains.size());
  for (const auto& idxs : index_chains) {
    std::vector<Submodule> chain;
    for (int i : idxs) chain.push_back(subs[static_cast<std::size_t>(i)]);
    out.push_back(std::move(chain));
  }
  return out;
}

}  // namespace modpure
