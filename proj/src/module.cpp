#include "modpure/module.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "modpure/util.hpp"

namespace modpure {

FinModule::FinModule(FinModuleData d) : d_(std::make_shared<const FinModuleData>(std::move(d))) {}

int FinModule::neg(int a) const {
  for (int b = 0; b < order(); ++b) {
    if (addv(a, b) == zero()) return b;
  }
  throw std::logic_error("module table has no additive inverse for element " + std::to_string(a));
}

int FinModule::act_int(long long n, int m) const {
  if (n == 0) return zero();
  bool negate = n < 0;
  unsigned long long k = negate ? 0ULL - static_cast<unsigned long long>(n)
                                : static_cast<unsigned long long>(n);
  int base = m;
  int acc = zero();
  while (k) {
    if (k & 1ULL) acc = addv(acc, base);
    base = addv(base, base);
    k >>= 1;
  }
  return negate ? neg(acc) : acc;
}

int FinModule::add_order(int m) const {
  int acc = m;
  int ord = 1;
  while (acc != zero()) {
    acc = addv(acc, m);
    ++ord;
  }
  return ord;
}

long long FinModule::exponent() const {
  long long e = 1;
  for (int m = 0; m < order(); ++m) e = lcm_ll(e, add_order(m));
  return e;
}

bool operator==(const FinModule& a, const FinModule& b) {
  if (a.d_ == b.d_) return true;
  const FinModuleData& x = *a.d_;
  const FinModuleData& y = *b.d_;
  return x.ring == y.ring && x.order == y.order && x.zero == y.zero && x.add == y.add &&
         x.action == y.action && x.label == y.label;
}

bool Submodule::contains(int e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

int Submodule::index_of(int e) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), e);
  if (it == elements.end() || *it != e) return -1;
  return static_cast<int>(it - elements.begin());
}

FinModule zero_module(const BaseRing& r) {
  FinModuleData d;
  d.ring = r;
  d.order = 1;
  d.add = {0};
  d.zero = 0;
  if (r.is_finite()) d.action.assign(static_cast<std::size_t>(r.order()), 0);
  d.label = "0";
  return FinModule(std::move(d));
}

FinModule cyclic_module(const BaseRing& r, long long d, const Caps& caps) {
  if (d <= 0) throw std::invalid_argument("cyclic module order must be positive");
  if (d > caps.max_module_order) {
    throw CapacityError("cyclic module order " + std::to_string(d) + " exceeds cap " +
                        std::to_string(caps.max_module_order));
  }
  int n = static_cast<int>(d);
  FinModuleData out;
  out.ring = r;
  out.order = n;
  out.zero = 0;
  out.add.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) out.add[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  }
  if (r.is_finite()) {
    const RingTable& t = r.table();
    // Index reduction mod d must be a ring homomorphism onto Z_d, otherwise
    // the canonical action below is not well defined.
    auto red = [&](int x) { return x % n; };
    if (red(t.one) != 1 % n || red(t.zero) != 0) {
      throw std::invalid_argument("ring " + t.label + " has no canonical reduction onto Z_" +
                                  std::to_string(n));
    }
    for (int a = 0; a < t.order; ++a) {
      for (int b = 0; b < t.order; ++b) {
        if (red(t.addv(a, b)) != (red(a) + red(b)) % n ||
            red(t.mulv(a, b)) != (red(a) * red(b)) % n) {
          throw std::invalid_argument("ring " + t.label + " has no canonical reduction onto Z_" +
                                      std::to_string(n));
        }
      }
    }
    out.action.resize(static_cast<std::size_t>(t.order) * n);
    for (int s = 0; s < t.order; ++s) {
      for (int m = 0; m < n; ++m) {
        out.action[static_cast<std::size_t>(s) * n + m] = (red(s) * m) % n;
      }
    }
  }
  out.label = "Z_" + std::to_string(n);
  return FinModule(std::move(out));
}

FinModule ring_as_module(const BaseRing& r) {
  const RingTable& t = r.table();
  FinModuleData d;
  d.ring = r;
  d.order = t.order;
  d.add = t.add;
  d.zero = t.zero;
  d.action = t.mul;
  d.label = t.label;
  return FinModule(std::move(d));
}

DirectSum direct_sum(const BaseRing& r, const std::vector<FinModule>& parts, const Caps& caps) {
  long long order = 1;
  for (const FinModule& p : parts) {
    if (p.ring() != r) throw std::invalid_argument("direct sum parts must share the base ring");
    order *= p.order();
    if (order > caps.max_direct_sum_order) {
      throw CapacityError("direct sum order exceeds cap " +
                          std::to_string(caps.max_direct_sum_order));
    }
  }
  int n = static_cast<int>(order);
  std::size_t k = parts.size();

  auto encode = [&](const std::vector<int>& coords) {
    int idx = 0;
    for (std::size_t i = 0; i < k; ++i) idx = idx * parts[i].order() + coords[i];
    return idx;
  };
  auto decode = [&](int idx) {
    std::vector<int> coords(k);
    for (std::size_t i = k; i-- > 0;) {
      coords[i] = idx % parts[i].order();
      idx /= parts[i].order();
    }
    return coords;
  };

  FinModuleData d;
  d.ring = r;
  d.order = n;
  d.add.resize(static_cast<std::size_t>(n) * n);
  std::vector<int> zc(k);
  for (std::size_t i = 0; i < k; ++i) zc[i] = parts[i].zero();
  d.zero = encode(zc);
  for (int a = 0; a < n; ++a) {
    auto ca = decode(a);
    for (int b = 0; b < n; ++b) {
      auto cb = decode(b);
      std::vector<int> cs(k);
      for (std::size_t i = 0; i < k; ++i) cs[i] = parts[i].addv(ca[i], cb[i]);
      d.add[static_cast<std::size_t>(a) * n + b] = encode(cs);
    }
  }
  if (r.is_finite()) {
    int ro = r.order();
    d.action.resize(static_cast<std::size_t>(ro) * n);
    for (int s = 0; s < ro; ++s) {
      for (int m = 0; m < n; ++m) {
        auto cm = decode(m);
        std::vector<int> cs(k);
        for (std::size_t i = 0; i < k; ++i) cs[i] = parts[i].act_ring(s, cm[i]);
        d.action[static_cast<std::size_t>(s) * n + m] = encode(cs);
      }
    }
  }
  if (parts.empty()) {
    d.label = "0";
  } else {
    d.label = parts[0].label();
    for (std::size_t i = 1; i < k; ++i) d.label += "+" + parts[i].label();
  }
  FinModule sum(std::move(d));

  DirectSum result;
  result.sum = sum;
  for (std::size_t i = 0; i < k; ++i) {
    ModHom inj;
    inj.domain = parts[i];
    inj.codomain = sum;
    inj.map.resize(static_cast<std::size_t>(parts[i].order()));
    for (int x = 0; x < parts[i].order(); ++x) {
      auto coords = zc;
      coords[i] = x;
      inj.map[static_cast<std::size_t>(x)] = encode(coords);
    }
    result.injections.push_back(std::move(inj));

    ModHom proj;
    proj.domain = sum;
    proj.codomain = parts[i];
    proj.map.resize(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) proj.map[static_cast<std::size_t>(m)] = decode(m)[i];
    result.projections.push_back(std::move(proj));
  }
  return result;
}

FinModule product_module(const BaseRing& product_ring, const BaseRing& r1, const BaseRing& r2,
                         const FinModule& left, const FinModule& right, const Caps& caps) {
  if (!product_ring.is_finite() || !r1.is_finite() || !r2.is_finite()) {
    throw std::invalid_argument("product module requires finite rings");
  }
  if (left.ring() != r1 || right.ring() != r2) {
    throw std::invalid_argument("product module components live over the wrong rings");
  }
  if (product_ring != make_product_ring(r1, r2, caps)) {
    throw std::invalid_argument("ring is not the product of the given factors");
  }
  long long order = static_cast<long long>(left.order()) * right.order();
  if (order > caps.max_module_order) {
    throw CapacityError("product module order exceeds cap " +
                        std::to_string(caps.max_module_order));
  }
  int n = static_cast<int>(order);
  int n2 = right.order();
  int ro2 = r2.order();
  FinModuleData d;
  d.ring = product_ring;
  d.order = n;
  d.zero = left.zero() * n2 + right.zero();
  d.add.resize(static_cast<std::size_t>(n) * n);
  for (int a1 = 0; a1 < left.order(); ++a1) {
    for (int b1 = 0; b1 < n2; ++b1) {
      for (int a2 = 0; a2 < left.order(); ++a2) {
        for (int b2 = 0; b2 < n2; ++b2) {
          d.add[static_cast<std::size_t>(a1 * n2 + b1) * n + (a2 * n2 + b2)] =
              left.addv(a1, a2) * n2 + right.addv(b1, b2);
        }
      }
    }
  }
  int ro = product_ring.order();
  d.action.resize(static_cast<std::size_t>(ro) * n);
  for (int s = 0; s < ro; ++s) {
    int s1 = s / ro2;
    int s2 = s % ro2;
    for (int a = 0; a < left.order(); ++a) {
      for (int b = 0; b < n2; ++b) {
        d.action[static_cast<std::size_t>(s) * n + (a * n2 + b)] =
            left.act_ring(s1, a) * n2 + right.act_ring(s2, b);
      }
    }
  }
  d.label = left.label() + "x" + right.label();
  return FinModule(std::move(d));
}

FinModule submodule_view(const Submodule& s) {
  const FinModule& p = s.parent;
  int n = s.size();
  FinModuleData d;
  d.ring = p.ring();
  d.order = n;
  d.zero = s.index_of(p.zero());
  if (d.zero < 0) throw std::logic_error("submodule does not contain zero");
  d.add.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int sum = s.index_of(p.addv(s.elements[i], s.elements[j]));
      if (sum < 0) throw std::logic_error("submodule element set is not closed under addition");
      d.add[static_cast<std::size_t>(i) * n + j] = sum;
    }
  }
  if (p.ring().is_finite()) {
    int ro = p.ring().order();
    d.action.resize(static_cast<std::size_t>(ro) * n);
    for (int r = 0; r < ro; ++r) {
      for (int i = 0; i < n; ++i) {
        int img = s.index_of(p.act_ring(r, s.elements[i]));
        if (img < 0) throw std::logic_error("submodule element set is not closed under action");
        d.action[static_cast<std::size_t>(r) * n + i] = img;
      }
    }
  }
  d.label = p.label() + "{" + join_ints(s.elements, ",") + "}";
  return FinModule(std::move(d));
}

ModHom submodule_inclusion(const Submodule& s) {
  ModHom h;
  h.domain = submodule_view(s);
  h.codomain = s.parent;
  h.map = s.elements;
  return h;
}

FinModule quotient_module(const FinModule& m, const Submodule& s) {
  if (s.parent != m) throw std::invalid_argument("quotient by a submodule of a different module");
  int n = m.order();
  // Coset representative: smallest element index in x + S.
  std::vector<int> rep(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    int best = x;
    for (int e : s.elements) best = std::min(best, m.addv(x, e));
    rep[static_cast<std::size_t>(x)] = best;
  }
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (rep[static_cast<std::size_t>(x)] == x) reps.push_back(x);
  }
  auto rep_index = [&](int x) {
    auto it = std::lower_bound(reps.begin(), reps.end(), rep[static_cast<std::size_t>(x)]);
    return static_cast<int>(it - reps.begin());
  };
  int q = static_cast<int>(reps.size());
  FinModuleData d;
  d.ring = m.ring();
  d.order = q;
  d.zero = rep_index(m.zero());
  d.add.resize(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      d.add[static_cast<std::size_t>(i) * q + j] = rep_index(m.addv(reps[i], reps[j]));
    }
  }
  if (m.ring().is_finite()) {
    int ro = m.ring().order();
    d.action.resize(static_cast<std::size_t>(ro) * q);
    for (int r = 0; r < ro; ++r) {
      for (int i = 0; i < q; ++i) {
        d.action[static_cast<std::size_t>(r) * q + i] = rep_index(m.act_ring(r, reps[i]));
      }
    }
  }
  d.label = m.label() + "/{" + join_ints(s.elements, ",") + "}";
  return FinModule(std::move(d));
}

std::vector<int> closure(const FinModule& m, const std::vector<int>& seed) {
  std::vector<char> in(static_cast<std::size_t>(m.order()), 0);
  std::vector<int> queue;
  auto push = [&](int x) {
    if (!in[static_cast<std::size_t>(x)]) {
      in[static_cast<std::size_t>(x)] = 1;
      queue.push_back(x);
    }
  };
  push(m.zero());
  for (int x : seed) {
    if (x < 0 || x >= m.order()) throw std::invalid_argument("closure seed element out of range");
    push(x);
  }
  bool finite = m.ring().is_finite();
  int ro = finite ? m.ring().order() : 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int x = queue[i];
    for (std::size_t j = 0; j <= i; ++j) push(m.addv(x, queue[j]));
    if (finite) {
      for (int r = 0; r < ro; ++r) push(m.act_ring(r, x));
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

Submodule submodule_from_elements(const FinModule& m, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (int e : elements) {
    if (e < 0 || e >= m.order()) throw std::invalid_argument("submodule element out of range");
  }
  return Submodule{m, std::move(elements)};
}

Submodule submodule_generated(const FinModule& m, const std::vector<int>& gens) {
  return Submodule{m, closure(m, gens)};
}

std::vector<Submodule> submodules(const FinModule& m, const Caps& caps) {
  if (m.order() > caps.max_module_order) {
    throw CapacityError("module order " + std::to_string(m.order()) +
                        " exceeds cap for submodule enumeration");
  }
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  queue.push_back(closure(m, {}));
  seen.insert(queue[0]);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    std::vector<int> base = queue[i];
    for (int x = 0; x < m.order(); ++x) {
      if (std::binary_search(base.begin(), base.end(), x)) continue;
      auto ext = base;
      ext.push_back(x);
      auto cl = closure(m, ext);
      if (seen.insert(cl).second) queue.push_back(std::move(cl));
    }
  }
  std::vector<std::vector<int>> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Submodule> out;
  out.reserve(sorted.size());
  for (auto& els : sorted) out.push_back(Submodule{m, std::move(els)});
  return out;
}

std::vector<int> greedy_module_generators(const FinModule& m) {
  std::vector<int> gens;
  auto closed = closure(m, gens);
  while (static_cast<int>(closed.size()) != m.order()) {
    int next = -1;
    for (int x = 0; x < m.order(); ++x) {
      if (!std::binary_search(closed.begin(), closed.end(), x)) {
        next = x;
        break;
      }
    }
    gens.push_back(next);
    closed = closure(m, gens);
  }
  return gens;
}

namespace {

// Per-element invariant used to prune hom/iso searches: additive order plus,
// over a finite ring, the annihilator set of the element.
struct ElementProfile {
  int add_order = 0;
  std::vector<int> ann;

  bool operator<(const ElementProfile& o) const {
    if (add_order != o.add_order) return add_order < o.add_order;
    return ann < o.ann;
  }
  bool operator==(const ElementProfile& o) const {
    return add_order == o.add_order && ann == o.ann;
  }
};

ElementProfile profile_of(const FinModule& m, int x) {
  ElementProfile p;
  p.add_order = m.add_order(x);
  if (m.ring().is_finite()) {
    for (int r = 0; r < m.ring().order(); ++r) {
      if (m.act_ring(r, x) == m.zero()) p.ann.push_back(r);
    }
  }
  return p;
}

// Partial-map propagation shared by iso search and hom enumeration. Derives
// values on the additive (and ring-action) closure of the assigned elements,
// reporting conflicts.
bool propagate_map(const FinModule& dom, const FinModule& cod, std::vector<int>& val,
                   bool require_injective, std::vector<char>* used) {
  std::vector<int> queue;
  for (int x = 0; x < dom.order(); ++x) {
    if (val[static_cast<std::size_t>(x)] != -1) queue.push_back(x);
  }
  bool finite = dom.ring().is_finite();
  int ro = finite ? dom.ring().order() : 0;
  auto derive = [&](int s, int v) {
    int& slot = val[static_cast<std::size_t>(s)];
    if (slot == -1) {
      if (require_injective) {
        if ((*used)[static_cast<std::size_t>(v)]) return false;
        (*used)[static_cast<std::size_t>(v)] = 1;
      }
      slot = v;
      queue.push_back(s);
      return true;
    }
    return slot == v;
  };
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int x = queue[i];
    for (std::size_t j = 0; j <= i; ++j) {
      int y = queue[j];
      if (!derive(dom.addv(x, y), cod.addv(val[static_cast<std::size_t>(x)],
                                           val[static_cast<std::size_t>(y)]))) {
        return false;
      }
    }
    if (finite) {
      for (int r = 0; r < ro; ++r) {
        if (!derive(dom.act_ring(r, x), cod.act_ring(r, val[static_cast<std::size_t>(x)]))) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

std::optional<ModHom> is_module_iso(const FinModule& a, const FinModule& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("isomorphism test across base rings");
  if (a.order() != b.order()) return std::nullopt;

  std::vector<ElementProfile> pa(static_cast<std::size_t>(a.order())),
      pb(static_cast<std::size_t>(b.order()));
  for (int x = 0; x < a.order(); ++x) pa[static_cast<std::size_t>(x)] = profile_of(a, x);
  for (int x = 0; x < b.order(); ++x) pb[static_cast<std::size_t>(x)] = profile_of(b, x);
  {
    auto sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (!(sa == sb)) return std::nullopt;
  }

  auto gens = greedy_module_generators(a);
  std::vector<int> val(static_cast<std::size_t>(a.order()), -1);
  std::vector<char> used(static_cast<std::size_t>(b.order()), 0);
  val[static_cast<std::size_t>(a.zero())] = b.zero();
  used[static_cast<std::size_t>(b.zero())] = 1;

  std::function<bool(std::size_t)> dfs = [&](std::size_t gi) -> bool {
    if (gi == gens.size()) {
      for (int v : val) {
        if (v == -1) return false;
      }
      return true;
    }
    int g = gens[gi];
    auto saved_val = val;
    auto saved_used = used;
    for (int cand = 0; cand < b.order(); ++cand) {
      if (used[static_cast<std::size_t>(cand)]) continue;
      if (!(pa[static_cast<std::size_t>(g)] == pb[static_cast<std::size_t>(cand)])) continue;
      val[static_cast<std::size_t>(g)] = cand;
      used[static_cast<std::size_t>(cand)] = 1;
      if (propagate_map(a, b, val, true, &used) && dfs(gi + 1)) return true;
      val = saved_val;
      used = saved_used;
    }
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  return ModHom{a, b, val};
}

std::vector<ModHom> module_homs(const FinModule& k, const FinModule& a, const Caps& caps) {
  if (k.ring() != a.ring()) throw std::invalid_argument("hom enumeration across base rings");
  auto gens = greedy_module_generators(k);
  if (static_cast<int>(gens.size()) > caps.max_generators) {
    throw CapacityError("module needs " + std::to_string(gens.size()) +
                        " generators, above cap " + std::to_string(caps.max_generators));
  }
  std::vector<ModHom> out;
  std::vector<int> val(static_cast<std::size_t>(k.order()), -1);
  val[static_cast<std::size_t>(k.zero())] = a.zero();

  std::function<void(std::size_t)> dfs = [&](std::size_t gi) {
    if (gi == gens.size()) {
      out.push_back(ModHom{k, a, val});
      return;
    }
    int g = gens[gi];
    int g_ord = k.add_order(g);
    auto saved = val;
    for (int cand = 0; cand < a.order(); ++cand) {
      if (g_ord % a.add_order(cand) != 0) continue;
      val[static_cast<std::size_t>(g)] = cand;
      if (propagate_map(k, a, val, false, nullptr)) dfs(gi + 1);
      val = saved;
    }
  };
  dfs(0);
  return out;
}

}  // namespace modpure
