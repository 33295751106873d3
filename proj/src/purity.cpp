#include "modpure/purity.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>

#include "modpure/util.hpp"

namespace modpure {

namespace {

constexpr int kEquationBound = 3;  // default vars/eqs bound for purity witnesses

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::optional<ExtensionWitness> extends_to_ring(const IdealHom& f) {
  const FinModule& m = f.codomain;
  if (f.domain.ring.is_integers()) {
    for (int cand = 0; cand < m.order(); ++cand) {
      if (m.act_int(f.domain.gen, cand) == f.gen_image) return ExtensionWitness{cand};
    }
    return std::nullopt;
  }
  for (int cand = 0; cand < m.order(); ++cand) {
    bool ok = true;
    for (std::size_t i = 0; i < f.domain.elements.size() && ok; ++i) {
      ok = m.act_ring(f.domain.elements[i], cand) == f.map[i];
    }
    if (ok) return ExtensionWitness{cand};
  }
  return std::nullopt;
}

std::vector<long long> integer_scan_gens(long long filter_exponent) {
  std::vector<long long> gens{0, 1};
  for (long long d : divisors(filter_exponent)) gens.push_back(d);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

std::optional<FailingPair> find_unextendable(const FinModule& a, const AnnFilter* filt,
                                             const std::vector<long long>& z_gens,
                                             const Caps& caps) {
  auto scan_ideal = [&](const LeftIdeal& l) -> std::optional<FailingPair> {
    for (const IdealHom& f : hom_set(l, a, caps)) {
      if (filt && !filter_contains(*filt, kernel(f))) continue;
      if (!extends_to_ring(f)) return FailingPair{l, f};
    }
    return std::nullopt;
  };
  if (a.ring().is_finite()) {
    for (const LeftIdeal& l : left_ideals(a.ring(), caps)) {
      if (auto fail = scan_ideal(l)) return fail;
    }
  } else {
    for (long long n : z_gens) {
      if (auto fail = scan_ideal(LeftIdeal{a.ring(), {}, n})) return fail;
    }
  }
  return std::nullopt;
}

std::optional<FailingPair> find_relative_obstruction(const Submodule& a, const AnnFilter& filt,
                                                     const Caps& caps) {
  FinModule view = submodule_view(a);
  auto scan_ideal = [&](const LeftIdeal& l) -> std::optional<FailingPair> {
    for (const IdealHom& f : hom_set(l, view, caps)) {
      if (!filter_contains(filt, kernel(f))) continue;
      if (extends_to_ring(into_parent(f, a)) && !extends_to_ring(f)) return FailingPair{l, f};
    }
    return std::nullopt;
  };
  if (view.ring().is_finite()) {
    for (const LeftIdeal& l : left_ideals(view.ring(), caps)) {
      if (auto fail = scan_ideal(l)) return fail;
    }
  } else {
    for (long long n : integer_scan_gens(filt.exponent)) {
      if (auto fail = scan_ideal(LeftIdeal{view.ring(), {}, n})) return fail;
    }
  }
  return std::nullopt;
}

PurityVerdict is_self_pure(const Submodule& a, const Caps& caps) {
  AnnFilter filt = filter_closure(submodule_view(a), caps);
  PurityVerdict v;
  v.failing = find_relative_obstruction(a, filt, caps);
  v.holds = !v.failing.has_value();
  return v;
}

PurityVerdict is_M_pure(const Submodule& a, const FinModule& m, const Caps& caps) {
  if (a.parent.ring() != m.ring()) {
    throw std::invalid_argument("relative purity across base rings");
  }
  AnnFilter filt = filter_closure(m, caps);
  PurityVerdict v;
  v.failing = find_relative_obstruction(a, filt, caps);
  v.holds = !v.failing.has_value();
  return v;
}

PropertyVerdict is_absolutely_self_pure(const FinModule& a, const Caps& caps) {
  AnnFilter filt = filter_closure(a, caps);
  PropertyVerdict v;
  v.witness = find_unextendable(a, &filt, integer_scan_gens(filt.exponent), caps);
  v.holds = !v.witness.has_value();
  return v;
}

PropertyVerdict is_quasi_injective(const FinModule& a, const Caps& caps) {
  AnnFilter filt = filter_closure(a, caps);
  PropertyVerdict v;
  v.witness = find_unextendable(a, &filt, integer_scan_gens(filt.exponent), caps);
  v.holds = !v.witness.has_value();
  v.notes.push_back(
      "every left ideal of the scanned base rings is finitely generated, so this scan ranges "
      "over the same ideals as the absolute self purity scan");
  return v;
}

PropertyVerdict is_injective_baer(const FinModule& a, const Caps& caps) {
  PropertyVerdict v;
  if (a.ring().is_finite()) {
    v.witness = find_unextendable(a, nullptr, {}, caps);
  } else {
    // n*x depends on n only mod exp(a), so generators up to the exponent
    // exhaust the extension behaviour of every ideal nZ.
    std::vector<long long> gens;
    for (long long n = 0; n <= a.exponent(); ++n) gens.push_back(n);
    v.witness = find_unextendable(a, nullptr, gens, caps);
  }
  v.holds = !v.witness.has_value();
  return v;
}

PropertyVerdict is_absolutely_pure(const FinModule& a, const Caps& caps) {
  PropertyVerdict v = is_injective_baer(a, caps);
  v.notes.push_back(
      "decided via the injectivity test: a finite module is pure-injective, so it is pure in "
      "an essential extension only when the extension adds nothing");
  return v;
}

FpOracleResult bounded_fp_oracle(const FinModule& a, int max_rank, int max_gens,
                                 const Caps& caps) {
  if (!a.ring().is_finite()) {
    throw std::invalid_argument("the free-module oracle needs a finite base ring");
  }
  FpOracleResult res;
  res.max_rank = max_rank;
  res.max_gens = max_gens;
  FinModule rmod = ring_as_module(a.ring());
  for (int rank = 1; rank <= max_rank; ++rank) {
    long long free_order = 1;
    for (int i = 0; i < rank; ++i) free_order *= rmod.order();
    if (free_order > caps.max_module_order) {
      throw CapacityError("free module of rank " + std::to_string(rank) + " exceeds cap " +
                          std::to_string(caps.max_module_order));
    }
    DirectSum free = direct_sum(a.ring(), std::vector<FinModule>(rank, rmod), caps);
    for (const Submodule& k : submodules(free.sum, caps)) {
      FinModule view = submodule_view(k);
      if (static_cast<int>(greedy_module_generators(view).size()) > max_gens) continue;
      for (const ModHom& h : module_homs(view, a, caps)) {
        ++res.maps_checked;
        // g(x) = sum_i coord_i(x) * m_i over candidate tuples (m_1..m_k).
        long long tuples = 1;
        for (int i = 0; i < rank; ++i) tuples *= a.order();
        bool extends = false;
        for (long long t = 0; t < tuples && !extends; ++t) {
          std::vector<int> images(static_cast<std::size_t>(rank));
          long long rest = t;
          for (int i = rank - 1; i >= 0; --i) {
            images[static_cast<std::size_t>(i)] = static_cast<int>(rest % a.order());
            rest /= a.order();
          }
          bool match = true;
          for (int pos = 0; pos < k.size() && match; ++pos) {
            int x = k.elements[static_cast<std::size_t>(pos)];
            int val = a.zero();
            for (int i = 0; i < rank; ++i) {
              int coord = free.projections[static_cast<std::size_t>(i)].apply(x);
              val = a.addv(val, a.act_ring(coord, images[static_cast<std::size_t>(i)]));
            }
            match = val == h.apply(pos);
          }
          extends = match;
        }
        if (!extends) {
          res.witness = FpWitness{free.sum, k, h};
          return res;
        }
      }
    }
  }
  return res;
}

namespace {

// Fixed-size bitset over candidate solution tuples.
struct Bits {
  std::vector<std::uint64_t> w;

  static Bits empty(int n) {
    Bits b;
    b.w.assign(static_cast<std::size_t>((n + 63) / 64), 0);
    return b;
  }
  static Bits full(int n) {
    Bits b = empty(n);
    for (int i = 0; i < n; ++i) b.set(i);
    return b;
  }
  void set(int i) { w[static_cast<std::size_t>(i >> 6)] |= 1ULL << (i & 63); }
  bool none() const {
    for (std::uint64_t x : w) {
      if (x) return false;
    }
    return true;
  }
  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] & o.w[i]) return true;
    }
    return false;
  }
  Bits and_with(const Bits& o) const {
    Bits out = *this;
    for (std::size_t i = 0; i < w.size(); ++i) out.w[i] &= o.w[i];
    return out;
  }
  int first() const {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i]) return static_cast<int>(i * 64 + static_cast<std::size_t>(__builtin_ctzll(w[i])));
    }
    return -1;
  }
  bool operator==(const Bits& o) const { return w == o.w; }
  bool operator<(const Bits& o) const { return w < o.w; }
};

}  // namespace

std::optional<EquationWitness> bounded_equational_purity(const Submodule& a, int max_vars,
                                                         int max_eqs, const Caps& caps) {
  const FinModule& b = a.parent;
  // Over Z a coefficient acts through its residue mod exp(B), so residues
  // exhaust all integer coefficients.
  long long scalars =
      b.ring().is_finite() ? b.ring().order() : std::max<long long>(1, b.exponent());
  for (int vars = 1; vars <= max_vars; ++vars) {
    long long space = 1;
    for (int i = 0; i < vars; ++i) space *= b.order();
    if (space > (1LL << 22)) {
      throw CapacityError("equation solution space too large at " + std::to_string(vars) +
                          " variables");
    }
    long long tuples = 1;
    for (int i = 0; i < vars; ++i) tuples *= scalars;
    if (tuples * a.size() > 300000) {
      throw CapacityError("equation row space too large at " + std::to_string(vars) +
                          " variables");
    }
    int n = static_cast<int>(space);

    Bits inside = Bits::empty(n);  // tuples with every coordinate inside the submodule
    for (int idx = 0; idx < n; ++idx) {
      int rest = idx;
      bool ok = true;
      for (int i = 0; i < vars; ++i) {
        ok = ok && a.contains(rest % b.order());
        rest /= b.order();
      }
      if (ok) inside.set(idx);
    }

    // Distinct single-row solution sets, keyed by bitset, first row kept.
    std::vector<Bits> sets;
    std::vector<EquationRow> tags;
    std::map<Bits, int> seen_rows;
    std::vector<int> values(static_cast<std::size_t>(n));
    for (long long t = 0; t < tuples; ++t) {
      std::vector<long long> coeffs(static_cast<std::size_t>(vars));
      long long rest = t;
      for (int i = vars - 1; i >= 0; --i) {
        coeffs[static_cast<std::size_t>(i)] = rest % scalars;
        rest /= scalars;
      }
      for (int idx = 0; idx < n; ++idx) {
        int r = idx;
        int val = b.zero();
        for (int i = vars - 1; i >= 0; --i) {
          int x = r % b.order();
          r /= b.order();
          int cx = b.ring().is_finite()
                       ? b.act_ring(static_cast<int>(coeffs[static_cast<std::size_t>(i)]), x)
                       : b.act_int(coeffs[static_cast<std::size_t>(i)], x);
          val = b.addv(val, cx);
        }
        values[static_cast<std::size_t>(idx)] = val;
      }
      for (int rhs : a.elements) {
        Bits sol = Bits::empty(n);
        bool any = false;
        for (int idx = 0; idx < n; ++idx) {
          if (values[static_cast<std::size_t>(idx)] == rhs) {
            sol.set(idx);
            any = true;
          }
        }
        if (!any) continue;  // unsolvable in the parent: never part of a witness
        if (!sol.intersects(inside)) {
          EquationWitness w;
          w.vars = vars;
          w.rows.push_back(EquationRow{coeffs, rhs});
          int pick = sol.first();
          w.solution_in_parent.assign(static_cast<std::size_t>(vars), 0);
          for (int i = vars - 1; i >= 0; --i) {
            w.solution_in_parent[static_cast<std::size_t>(i)] = pick % b.order();
            pick /= b.order();
          }
          return w;
        }
        if (seen_rows.emplace(sol, static_cast<int>(sets.size())).second) {
          sets.push_back(std::move(sol));
          tags.push_back(EquationRow{coeffs, rhs});
        }
      }
    }

    if (max_eqs < 2) continue;
    std::map<Bits, int> visited;  // intersection state -> smallest next index explored
    std::function<std::optional<std::vector<int>>(const Bits&, int, int)> dfs =
        [&](const Bits& cur, int start, int depth) -> std::optional<std::vector<int>> {
      for (int j = start; j < static_cast<int>(sets.size()); ++j) {
        Bits inter = cur.and_with(sets[static_cast<std::size_t>(j)]);
        if (inter == cur || inter.none()) continue;
        if (!inter.intersects(inside)) return std::vector<int>{j};
        if (depth + 1 < max_eqs) {
          auto it = visited.find(inter);
          if (it != visited.end() && it->second <= j + 1) continue;
          visited[inter] = j + 1;
          if (auto rest_rows = dfs(inter, j + 1, depth + 1)) {
            rest_rows->insert(rest_rows->begin(), j);
            return rest_rows;
          }
        }
      }
      return std::nullopt;
    };
    if (auto combo = dfs(Bits::full(n), 0, 0)) {
      EquationWitness w;
      w.vars = vars;
      Bits cur = Bits::full(n);
      for (int j : *combo) {
        w.rows.push_back(tags[static_cast<std::size_t>(j)]);
        cur = cur.and_with(sets[static_cast<std::size_t>(j)]);
      }
      int pick = cur.first();
      w.solution_in_parent.assign(static_cast<std::size_t>(vars), 0);
      for (int i = vars - 1; i >= 0; --i) {
        w.solution_in_parent[static_cast<std::size_t>(i)] = pick % b.order();
        pick /= b.order();
      }
      return w;
    }
  }
  return std::nullopt;
}

PurityVerdict is_pure(const Submodule& a, const Caps& caps) {
  PurityVerdict v;
  for (const Submodule& c : submodules(a.parent, caps)) {
    if (static_cast<long long>(c.size()) * a.size() !=
        static_cast<long long>(a.parent.order())) {
      continue;
    }
    if (intersect_sorted(a.elements, c.elements).size() == 1) {
      v.holds = true;
      v.complement = c;
      return v;
    }
  }
  v.holds = false;
  v.equations = bounded_equational_purity(a, kEquationBound, kEquationBound, caps);
  if (!v.equations) {
    v.notes.push_back("no equation witness within vars=eqs=" + std::to_string(kEquationBound));
  }
  return v;
}

namespace {

bool summand_among(const LeftIdeal& l, const std::vector<LeftIdeal>& ideals, int ring_order) {
  for (const LeftIdeal& c : ideals) {
    if (static_cast<long long>(c.size()) * l.size() != ring_order) continue;
    std::vector<int> common;
    std::set_intersection(l.elements.begin(), l.elements.end(), c.elements.begin(),
                          c.elements.end(), std::back_inserter(common));
    if (common.size() == 1) return true;
  }
  return false;
}

}  // namespace

RingPropertyVerdict is_regular_ring(const BaseRing& r, const Caps& caps) {
  if (!r.is_finite()) throw std::invalid_argument("regularity scan needs a finite ring");
  auto ideals = left_ideals(r, caps);
  for (int x = 0; x < r.order(); ++x) {
    LeftIdeal l = principal_ideal(r, x);
    if (!summand_among(l, ideals, r.order())) return RingPropertyVerdict{false, l};
  }
  return RingPropertyVerdict{true, std::nullopt};
}

RingPropertyVerdict is_semisimple_ring(const BaseRing& r, const Caps& caps) {
  if (!r.is_finite()) throw std::invalid_argument("semisimplicity scan needs a finite ring");
  auto ideals = left_ideals(r, caps);
  RingPropertyVerdict v{true, std::nullopt};
  for (const LeftIdeal& l : ideals) {
    if (!summand_among(l, ideals, r.order())) {
      v = RingPropertyVerdict{false, l};
      break;
    }
  }
  // A finite ring is noetherian, so the two notions must coincide; a mismatch
  // is an implementation bug.
  if (is_regular_ring(r, caps).holds != v.holds) {
    throw std::logic_error("regularity and semisimplicity disagree on a finite ring");
  }
  return v;
}

ClassificationRecord classify(const FinModule& a, const Caps& caps) {
  ClassificationRecord rec;
  rec.label = a.label();
  PropertyVerdict inj = is_injective_baer(a, caps);
  PropertyVerdict ap = is_absolutely_pure(a, caps);
  PropertyVerdict qi = is_quasi_injective(a, caps);
  PropertyVerdict asp = is_absolutely_self_pure(a, caps);
  rec.injective = inj.holds;
  rec.absolutely_pure = ap.holds;
  rec.quasi_injective = qi.holds;
  rec.absolutely_self_pure = asp.holds;
  rec.injective_witness = std::move(inj.witness);
  rec.absolutely_pure_witness = std::move(ap.witness);
  rec.quasi_injective_witness = std::move(qi.witness);
  rec.absolutely_self_pure_witness = std::move(asp.witness);
  for (auto& n : ap.notes) rec.notes.push_back(std::move(n));
  bool implications_ok =
      (!rec.injective || (rec.absolutely_pure && rec.quasi_injective && rec.absolutely_self_pure)) &&
      (!rec.quasi_injective || rec.absolutely_self_pure) &&
      (!rec.absolutely_pure || rec.absolutely_self_pure);
  if (!implications_ok) {
    throw std::logic_error("classification flags violate the property hierarchy for " +
                           rec.label);
  }
  return rec;
}

}  // namespace modpure
