#include "modpure/ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace modpure {

int RingTable::neg(int a) const {
  for (int b = 0; b < order; ++b) {
    if (addv(a, b) == zero) return b;
  }
  throw std::logic_error("ring table has no additive inverse for element " + std::to_string(a));
}

BaseRing BaseRing::integers() { return BaseRing{}; }

BaseRing BaseRing::finite(RingTable table) {
  BaseRing r;
  r.table_ = std::make_shared<const RingTable>(std::move(table));
  return r;
}

const RingTable& BaseRing::table() const {
  if (!table_) throw std::logic_error("the integer ring has no element table");
  return *table_;
}

std::string BaseRing::label() const { return table_ ? table_->label : "Z"; }

bool operator==(const BaseRing& a, const BaseRing& b) {
  if (a.table_ == b.table_) return true;
  if (!a.table_ || !b.table_) return false;
  const RingTable& x = *a.table_;
  const RingTable& y = *b.table_;
  return x.order == y.order && x.zero == y.zero && x.one == y.one && x.add == y.add &&
         x.mul == y.mul;
}

BaseRing make_cyclic_ring(int n, const Caps& caps) {
  if (n <= 0) throw std::invalid_argument("cyclic ring order must be positive");
  if (n > caps.max_ring_order) {
    throw CapacityError("cyclic ring order " + std::to_string(n) + " exceeds cap " +
                        std::to_string(caps.max_ring_order));
  }
  RingTable t;
  t.order = n;
  t.add.resize(static_cast<std::size_t>(n) * n);
  t.mul.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      t.add[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
      t.mul[static_cast<std::size_t>(a) * n + b] = (a * b) % n;
    }
  }
  t.zero = 0;
  t.one = n == 1 ? 0 : 1;
  t.label = "Z_" + std::to_string(n);
  return BaseRing::finite(std::move(t));
}

BaseRing make_product_ring(const BaseRing& r1, const BaseRing& r2, const Caps& caps) {
  if (!r1.is_finite() || !r2.is_finite()) {
    throw std::invalid_argument("product ring requires finite factors");
  }
  const RingTable& a = r1.table();
  const RingTable& b = r2.table();
  long long order = static_cast<long long>(a.order) * b.order;
  if (order > caps.max_ring_order) {
    throw CapacityError("product ring order " + std::to_string(order) + " exceeds cap " +
                        std::to_string(caps.max_ring_order));
  }
  int n = static_cast<int>(order);
  // Pair (x, y) gets index x*|r2| + y.
  RingTable t;
  t.order = n;
  t.add.resize(static_cast<std::size_t>(n) * n);
  t.mul.resize(static_cast<std::size_t>(n) * n);
  for (int x1 = 0; x1 < a.order; ++x1) {
    for (int y1 = 0; y1 < b.order; ++y1) {
      for (int x2 = 0; x2 < a.order; ++x2) {
        for (int y2 = 0; y2 < b.order; ++y2) {
          int lhs = x1 * b.order + y1;
          int rhs = x2 * b.order + y2;
          t.add[static_cast<std::size_t>(lhs) * n + rhs] =
              a.addv(x1, x2) * b.order + b.addv(y1, y2);
          t.mul[static_cast<std::size_t>(lhs) * n + rhs] =
              a.mulv(x1, x2) * b.order + b.mulv(y1, y2);
        }
      }
    }
  }
  t.zero = a.zero * b.order + b.zero;
  t.one = a.one * b.order + b.one;
  t.label = a.label + "x" + b.label;
  return BaseRing::finite(std::move(t));
}

namespace {

int additive_order(const RingTable& t, int a) {
  int acc = a;
  int ord = 1;
  while (acc != t.zero) {
    acc = t.addv(acc, a);
    ++ord;
  }
  return ord;
}

struct RingIsoSearch {
  const RingTable& src;
  const RingTable& dst;
  std::vector<int> fwd;   // src -> dst, -1 unknown
  std::vector<char> hit;  // dst elements already used

  bool propagate(std::vector<int>& queue) {
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      for (std::size_t qj = 0; qj <= qi; ++qj) {
        int y = queue[qj];
        if (!derive(src.addv(x, y), dst.addv(fwd[x], fwd[y]), queue)) return false;
        if (!derive(src.mulv(x, y), dst.mulv(fwd[x], fwd[y]), queue)) return false;
        if (!derive(src.mulv(y, x), dst.mulv(fwd[y], fwd[x]), queue)) return false;
      }
    }
    return true;
  }

  bool derive(int s, int d, std::vector<int>& queue) {
    if (fwd[s] == -1) {
      if (hit[d]) return false;  // not injective
      fwd[s] = d;
      hit[d] = 1;
      queue.push_back(s);
      return true;
    }
    return fwd[s] == d;
  }
};

}  // namespace

std::optional<std::vector<int>> is_ring_iso(const BaseRing& r1, const BaseRing& r2) {
  if (r1.is_integers() || r2.is_integers()) {
    if (r1.is_integers() && r2.is_integers()) return std::vector<int>{};
    return std::nullopt;
  }
  const RingTable& a = r1.table();
  const RingTable& b = r2.table();
  if (a.order != b.order) return std::nullopt;

  std::vector<int> ord_a(a.order), ord_b(b.order);
  for (int i = 0; i < a.order; ++i) ord_a[i] = additive_order(a, i);
  for (int i = 0; i < b.order; ++i) ord_b[i] = additive_order(b, i);
  {
    auto pa = ord_a, pb = ord_b;
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    if (pa != pb) return std::nullopt;
  }

  // Greedy generators: smallest element outside the (+,*)-closure so far.
  std::vector<int> gens;
  std::vector<char> closed(a.order, 0);
  auto close_from = [&](std::vector<int> seed) {
    std::fill(closed.begin(), closed.end(), 0);
    std::vector<int> queue;
    auto push = [&](int x) {
      if (!closed[x]) {
        closed[x] = 1;
        queue.push_back(x);
      }
    };
    push(a.zero);
    push(a.one);
    for (int g : seed) push(g);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        push(a.addv(queue[i], queue[j]));
        push(a.mulv(queue[i], queue[j]));
        push(a.mulv(queue[j], queue[i]));
      }
    }
  };
  close_from({});
  for (;;) {
    int next = -1;
    for (int x = 0; x < a.order; ++x) {
      if (!closed[x]) {
        next = x;
        break;
      }
    }
    if (next == -1) break;
    gens.push_back(next);
    close_from(gens);
  }

  RingIsoSearch search{a, b, std::vector<int>(a.order, -1), std::vector<char>(b.order, 0)};

  std::function<bool(std::size_t)> dfs = [&](std::size_t gi) -> bool {
    if (gi == gens.size()) {
      int assigned = 0;
      for (int v : search.fwd) assigned += v != -1;
      return assigned == a.order;
    }
    int g = gens[gi];
    auto saved_fwd = search.fwd;
    auto saved_hit = search.hit;
    for (int cand = 0; cand < b.order; ++cand) {
      if (search.hit[cand] || ord_b[cand] != ord_a[g]) continue;
      search.fwd[g] = cand;
      search.hit[cand] = 1;
      std::vector<int> queue;
      for (int x = 0; x < a.order; ++x) {
        if (search.fwd[x] != -1) queue.push_back(x);
      }
      if (search.propagate(queue) && dfs(gi + 1)) return true;
      search.fwd = saved_fwd;
      search.hit = saved_hit;
    }
    return false;
  };

  // Seed with the forced assignments 0 -> 0, 1 -> 1.
  search.fwd[a.zero] = b.zero;
  search.hit[b.zero] = 1;
  if (a.one != a.zero) {
    if (b.one == b.zero) return std::nullopt;
    search.fwd[a.one] = b.one;
    search.hit[b.one] = 1;
  }
  {
    std::vector<int> queue;
    for (int x = 0; x < a.order; ++x) {
      if (search.fwd[x] != -1) queue.push_back(x);
    }
    if (!search.propagate(queue)) return std::nullopt;
  }
  if (!dfs(0)) return std::nullopt;
  return search.fwd;
}

}  // namespace modpure
