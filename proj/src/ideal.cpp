#include "modpure/ideal.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "modpure/util.hpp"

namespace modpure {

bool LeftIdeal::contains(int e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

std::string LeftIdeal::describe() const {
  if (ring.is_integers()) return std::to_string(gen) + "Z";
  return ring.label() + "{" + join_ints(elements, ",") + "}";
}

bool operator==(const LeftIdeal& a, const LeftIdeal& b) {
  if (a.ring != b.ring) return false;
  if (a.ring.is_integers()) return a.gen == b.gen;
  return a.elements == b.elements;
}

std::vector<LeftIdeal> left_ideals(const BaseRing& r, const Caps& caps) {
  if (!r.is_finite()) throw std::invalid_argument("left ideal enumeration needs a finite ring");
  auto subs = submodules(ring_as_module(r), caps);
  std::vector<LeftIdeal> out;
  out.reserve(subs.size());
  for (auto& s : subs) out.push_back(LeftIdeal{r, std::move(s.elements), 0});
  return out;
}

LeftIdeal zero_ideal(const BaseRing& r) {
  if (r.is_integers()) return LeftIdeal{r, {}, 0};
  return LeftIdeal{r, {r.table().zero}, 0};
}

LeftIdeal whole_ring_ideal(const BaseRing& r) {
  if (r.is_integers()) return LeftIdeal{r, {}, 1};
  std::vector<int> all(static_cast<std::size_t>(r.order()));
  for (int i = 0; i < r.order(); ++i) all[static_cast<std::size_t>(i)] = i;
  return LeftIdeal{r, std::move(all), 0};
}

LeftIdeal principal_ideal(const BaseRing& r, long long x) {
  if (r.is_integers()) return LeftIdeal{r, {}, x < 0 ? -x : x};
  const RingTable& t = r.table();
  if (x < 0 || x >= t.order) throw std::invalid_argument("principal ideal generator out of range");
  std::vector<int> els;
  for (int s = 0; s < t.order; ++s) els.push_back(t.mulv(s, static_cast<int>(x)));
  std::sort(els.begin(), els.end());
  els.erase(std::unique(els.begin(), els.end()), els.end());
  return LeftIdeal{r, std::move(els), 0};
}

LeftIdeal annihilator(const FinModule& m, int elem) {
  if (elem < 0 || elem >= m.order()) throw std::invalid_argument("annihilator of an element out of range");
  if (m.ring().is_integers()) {
    return LeftIdeal{m.ring(), {}, m.add_order(elem)};
  }
  std::vector<int> els;
  for (int r = 0; r < m.ring().order(); ++r) {
    if (m.act_ring(r, elem) == m.zero()) els.push_back(r);
  }
  return LeftIdeal{m.ring(), std::move(els), 0};
}

LeftIdeal intersect_ideals(const LeftIdeal& a, const LeftIdeal& b) {
  if (a.ring != b.ring) throw std::invalid_argument("ideal intersection across base rings");
  if (a.ring.is_integers()) return LeftIdeal{a.ring, {}, lcm_ll(a.gen, b.gen)};
  std::vector<int> els;
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(),
                        b.elements.end(), std::back_inserter(els));
  return LeftIdeal{a.ring, std::move(els), 0};
}

bool ideal_subset(const LeftIdeal& a, const LeftIdeal& b) {
  if (a.ring != b.ring) throw std::invalid_argument("ideal comparison across base rings");
  if (a.ring.is_integers()) {
    // aZ <= bZ iff b divides a; every ideal contains 0Z.
    if (a.gen == 0) return true;
    if (b.gen == 0) return false;
    return a.gen % b.gen == 0;
  }
  return std::includes(b.elements.begin(), b.elements.end(), a.elements.begin(),
                       a.elements.end());
}

std::vector<int> greedy_ideal_generators(const LeftIdeal& l) {
  if (l.ring.is_integers()) throw std::invalid_argument("generator scan needs a finite ring");
  FinModule rm = ring_as_module(l.ring);
  std::vector<int> gens;
  auto closed = closure(rm, gens);  // {0}
  for (;;) {
    int next = -1;
    for (int e : l.elements) {
      if (!std::binary_search(closed.begin(), closed.end(), e)) {
        next = e;
        break;
      }
    }
    if (next == -1) break;
    gens.push_back(next);
    closed = closure(rm, gens);
  }
  return gens;
}

int IdealHom::apply(int l) const {
  auto it = std::lower_bound(domain.elements.begin(), domain.elements.end(), l);
  if (it == domain.elements.end() || *it != l) {
    throw std::invalid_argument("element outside the map domain");
  }
  return map[static_cast<std::size_t>(it - domain.elements.begin())];
}

std::vector<IdealHom> hom_set(const LeftIdeal& l, const FinModule& m, const Caps& caps) {
  if (l.ring != m.ring()) throw std::invalid_argument("hom enumeration across base rings");
  std::vector<IdealHom> out;
  if (l.ring.is_integers()) {
    if (l.gen == 0) {
      out.push_back(IdealHom{l, m, {}, m.zero()});
      return out;
    }
    // n k -> k a is linear for every image a.
    for (int a = 0; a < m.order(); ++a) out.push_back(IdealHom{l, m, {}, a});
    return out;
  }

  const RingTable& ring = l.ring.table();
  auto gens = greedy_ideal_generators(l);
  if (static_cast<int>(gens.size()) > caps.max_generators) {
    throw CapacityError("ideal needs " + std::to_string(gens.size()) + " generators, above cap " +
                        std::to_string(caps.max_generators));
  }

  // Propagate a partial assignment (indexed by ring element, -1 unknown)
  // through sums and left multiples; reject on conflict.
  auto propagate = [&](std::vector<int>& val) {
    std::vector<int> queue;
    for (int e : l.elements) {
      if (val[static_cast<std::size_t>(e)] != -1) queue.push_back(e);
    }
    auto derive = [&](int s, int v) {
      int& slot = val[static_cast<std::size_t>(s)];
      if (slot == -1) {
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
        if (!derive(ring.addv(x, y),
                    m.addv(val[static_cast<std::size_t>(x)], val[static_cast<std::size_t>(y)]))) {
          return false;
        }
      }
      for (int r = 0; r < ring.order; ++r) {
        if (!derive(ring.mulv(r, x), m.act_ring(r, val[static_cast<std::size_t>(x)]))) {
          return false;
        }
      }
    }
    return true;
  };

  std::vector<int> val(static_cast<std::size_t>(ring.order), -1);
  val[static_cast<std::size_t>(ring.zero)] = m.zero();

  std::function<void(std::size_t)> dfs = [&](std::size_t gi) {
    if (gi == gens.size()) {
      std::vector<int> images;
      images.reserve(l.elements.size());
      for (int e : l.elements) {
        int v = val[static_cast<std::size_t>(e)];
        if (v == -1) throw std::logic_error("generator closure failed to cover the ideal");
        images.push_back(v);
      }
      out.push_back(IdealHom{l, m, std::move(images), 0});
      return;
    }
    auto saved = val;
    for (int cand = 0; cand < m.order(); ++cand) {
      val[static_cast<std::size_t>(gens[gi])] = cand;
      if (propagate(val)) dfs(gi + 1);
      val = saved;
    }
  };
  dfs(0);
  return out;
}

LeftIdeal kernel(const IdealHom& f) {
  if (f.domain.ring.is_integers()) {
    long long ord = f.domain.gen == 0 ? 1 : f.codomain.add_order(f.gen_image);
    return LeftIdeal{f.domain.ring, {}, f.domain.gen * ord};
  }
  std::vector<int> els;
  for (std::size_t i = 0; i < f.domain.elements.size(); ++i) {
    if (f.map[i] == f.codomain.zero()) els.push_back(f.domain.elements[i]);
  }
  return LeftIdeal{f.domain.ring, std::move(els), 0};
}

IdealHom into_parent(const IdealHom& f, const Submodule& s) {
  IdealHom out;
  out.domain = f.domain;
  out.codomain = s.parent;
  if (f.domain.ring.is_integers()) {
    out.gen_image = s.elements[static_cast<std::size_t>(f.gen_image)];
    return out;
  }
  out.map.reserve(f.map.size());
  for (int v : f.map) out.map.push_back(s.elements[static_cast<std::size_t>(v)]);
  return out;
}

}  // namespace modpure
