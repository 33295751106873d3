#include "modpure/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "modpure/util.hpp"
#include "modpure/validate.hpp"

namespace modpure {

namespace {

using Clock = std::chrono::steady_clock;

struct SlotResult {
  long long instances = 0;
  long long skipped = 0;
  std::vector<TheoremViolation> violations;
};

void merge_slots(TheoremReport& rep, const std::vector<SlotResult>& slots, long long* skipped) {
  for (const SlotResult& s : slots) {
    rep.instances += s.instances;
    if (skipped) *skipped += s.skipped;
    for (const TheoremViolation& v : s.violations) {
      if (rep.violations.size() < 100) rep.violations.push_back(v);
    }
  }
}

Submodule restrict_to(const Submodule& inner, const Submodule& outer) {
  FinModule view = submodule_view(outer);
  std::vector<int> els;
  els.reserve(inner.elements.size());
  for (int e : inner.elements) els.push_back(outer.index_of(e));
  return Submodule{view, std::move(els)};
}

// Memoized self-purity of nested element sets within one parent module.
struct SelfPureCache {
  std::map<std::pair<std::vector<int>, std::vector<int>>, bool> memo;
  const Caps& caps;

  bool self_pure(const Submodule& inner, const Submodule& outer) {
    auto key = std::make_pair(inner.elements, outer.elements);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool value = is_self_pure(restrict_to(inner, outer), caps).holds;
    memo.emplace(std::move(key), value);
    return value;
  }
};

std::string set_text(const std::vector<int>& els) { return "{" + join_ints(els, ",") + "}"; }

bool has_complement(const Submodule& s, const std::vector<Submodule>& subs) {
  for (const Submodule& c : subs) {
    if (static_cast<long long>(c.size()) * s.size() != s.parent.order()) continue;
    std::vector<int> common;
    std::set_intersection(s.elements.begin(), s.elements.end(), c.elements.begin(),
                          c.elements.end(), std::back_inserter(common));
    if (common.size() == 1) return true;
  }
  return false;
}

}  // namespace

std::string describe(const FailingPair& fail) {
  std::ostringstream os;
  os << "ideal " << fail.ideal.describe() << ", map ";
  if (fail.ideal.ring.is_integers()) {
    os << fail.ideal.gen << " -> " << fail.map.gen_image;
  } else {
    os << "[";
    for (std::size_t i = 0; i < fail.ideal.elements.size(); ++i) {
      if (i) os << ",";
      os << fail.ideal.elements[i] << "->" << fail.map.map[i];
    }
    os << "]";
  }
  os << " into " << fail.map.codomain.label();
  return os.str();
}

TheoremReport check_transitivity(const ZooScope& scope, int jobs) {
  TheoremReport rep;
  rep.id = "sp-transitivity";
  rep.statement = "if A is self pure in B and B is self pure in C then A is self pure in C";
  auto start = Clock::now();
  for (const RingSpec& spec : scope.rings) {
    BaseRing ring = build_ring(spec, scope.caps);
    auto zoo = module_zoo(ring, scope.module_order_cap, scope.free_rank_cap, scope.caps);
    std::vector<SlotResult> slots(zoo.size());
    parallel_for(static_cast<long long>(zoo.size()), jobs, [&](long long i) {
      const FinModule& parent = zoo[static_cast<std::size_t>(i)];
      SlotResult& slot = slots[static_cast<std::size_t>(i)];
      SelfPureCache cache{{}, scope.caps};
      for (const auto& chain : chains(parent, std::min(3, scope.chain_depth), scope.caps)) {
        if (chain.size() != 3) continue;
        ++slot.instances;
        const Submodule& a = chain[0];
        const Submodule& b = chain[1];
        const Submodule& c = chain[2];
        if (cache.self_pure(a, b) && cache.self_pure(b, c) && !cache.self_pure(a, c)) {
          slot.violations.push_back(TheoremViolation{
              "ring " + spec.label() + ", parent " + parent.label() + ", A=" +
                  set_text(a.elements) + " B=" + set_text(b.elements) + " C=" +
                  set_text(c.elements),
              describe(*is_self_pure(restrict_to(a, c), scope.caps).failing)});
        }
      }
    });
    merge_slots(rep, slots, nullptr);
  }
  rep.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
  return rep;
}

TheoremReport check_restriction(const ZooScope& scope, int jobs) {
  TheoremReport rep;
  rep.id = "sp-restriction";
  rep.statement = "if A <= B <= C and A is self pure in C then A is self pure in B";
  auto start = Clock::now();
  for (const RingSpec& spec : scope.rings) {
    BaseRing ring = build_ring(spec, scope.caps);
    auto zoo = module_zoo(ring, scope.module_order_cap, scope.free_rank_cap, scope.caps);
    std::vector<SlotResult> slots(zoo.size());
    parallel_for(static_cast<long long>(zoo.size()), jobs, [&](long long i) {
      const FinModule& parent = zoo[static_cast<std::size_t>(i)];
      SlotResult& slot = slots[static_cast<std::size_t>(i)];
      SelfPureCache cache{{}, scope.caps};
      for (const auto& chain : chains(parent, std::min(3, scope.chain_depth), scope.caps)) {
        if (chain.size() != 3) continue;
        ++slot.instances;
        const Submodule& a = chain[0];
        const Submodule& b = chain[1];
        const Submodule& c = chain[2];
        if (cache.self_pure(a, c) && !cache.self_pure(a, b)) {
          slot.violations.push_back(TheoremViolation{
              "ring " + spec.label() + ", parent " + parent.label() + ", A=" +
                  set_text(a.elements) + " B=" + set_text(b.elements) + " C=" +
                  set_text(c.elements),
              describe(*is_self_pure(restrict_to(a, b), scope.caps).failing)});
        }
      }
    });
    merge_slots(rep, slots, nullptr);
  }
  rep.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
  return rep;
}

TheoremReport check_summand_closure(const ZooScope& scope, int jobs) {
  TheoremReport rep;
  rep.id = "asp-summand-closure";
  rep.statement = "direct summands of absolutely self pure modules are absolutely self pure";
  auto start = Clock::now();
  for (const RingSpec& spec : scope.rings) {
    BaseRing ring = build_ring(spec, scope.caps);
    auto zoo = module_zoo(ring, scope.module_order_cap, scope.free_rank_cap, scope.caps);
    std::vector<SlotResult> slots(zoo.size());
    parallel_for(static_cast<long long>(zoo.size()), jobs, [&](long long i) {
      const FinModule& m = zoo[static_cast<std::size_t>(i)];
      SlotResult& slot = slots[static_cast<std::size_t>(i)];
      if (!is_absolutely_self_pure(m, scope.caps).holds) return;
      auto subs = submodules(m, scope.caps);
      for (const Submodule& s : subs) {
        if (!has_complement(s, subs)) continue;
        ++slot.instances;
        auto verdict = is_absolutely_self_pure(submodule_view(s), scope.caps);
        if (!verdict.holds) {
          slot.violations.push_back(TheoremViolation{
              "ring " + spec.label() + ", module " + m.label() + ", summand " +
                  set_text(s.elements),
              describe(*verdict.witness)});
        }
      }
    });
    merge_slots(rep, slots, nullptr);
  }
  rep.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
  return rep;
}

TheoremReport check_direct_sum(const ZooScope& scope, int copies, int jobs) {
  TheoremReport rep;
  rep.id = "asp-direct-sum";
  rep.statement =
      "a module is absolutely self pure iff every finite direct sum of copies of it is";
  auto start = Clock::now();
  long long skipped = 0;
  for (const RingSpec& spec : scope.rings) {
    BaseRing ring = build_ring(spec, scope.caps);
    auto zoo = module_zoo(ring, scope.module_order_cap, scope.free_rank_cap, scope.caps);
    std::vector<SlotResult> slots(zoo.size());
    parallel_for(static_cast<long long>(zoo.size()), jobs, [&](long long i) {
      const FinModule& a = zoo[static_cast<std::size_t>(i)];
      SlotResult& slot = slots[static_cast<std::size_t>(i)];
      bool base = is_absolutely_self_pure(a, scope.caps).holds;
      for (int k = 2; k <= copies; ++k) {
        long long order = 1;
        for (int c = 0; c < k; ++c) order *= a.order();
        if (order > scope.caps.max_direct_sum_order) {
          ++slot.skipped;
          continue;
        }
        FinModule sum = direct_sum(ring, std::vector<FinModule>(static_cast<std::size_t>(k), a),
                                   scope.caps)
                            .sum;
        ++slot.instances;
        if (is_absolutely_self_pure(sum, scope.caps).holds != base) {
          slot.violations.push_back(TheoremViolation{
              "ring " + spec.label() + ", module " + a.label() + ", copies " + std::to_string(k),
              base ? "sum lost absolute self purity" : "sum gained absolute self purity"});
        }
      }
    });
    merge_slots(rep, slots, &skipped);
  }
  if (skipped > 0) {
    rep.notes.push_back(std::to_string(skipped) +
                        " instances skipped by the direct-sum order cap");
  }
  rep.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
  return rep;
}

TheoremReport check_noetherian_equivalence(const ZooScope& scope, int jobs) {
  TheoremReport rep;
  rep.id = "noetherian-equivalence";
  rep.statement = "over a left noetherian ring the absolutely self pure modules are the quasi "
                  "injective ones";
  auto start = Clock::now();
  for (const RingSpec& spec : scope.rings) {
    BaseRing ring = build_ring(spec, scope.caps);
    auto zoo = module_zoo(ring, scope.module_order_cap, scope.free_rank_cap, scope.caps);
    std::vector<SlotResult> slots(zoo.size());
    parallel_for(static_cast<long long>(zoo.size()), jobs, [&](long long i) {
      const FinModule& m = zoo[static_cast<std::size_t>(i)];
      SlotResult& slot = slots[static_cast<std::size_t>(i)];
      ++slot.instances;
      auto asp = is_absolutely_self_pure(m, scope.caps);
      auto qi = is_quasi_injective(m, scope.caps);
      if (asp.holds != qi.holds) {
        slot.violations.push_back(TheoremViolation{
            "ring " + spec.label() + ", module " + m.label(),
            describe(asp.holds ? *qi.witness : *asp.witness)});
      }
    });
    merge_slots(rep, slots, nullptr);
  }
  rep.notes.push_back(
      "every scanned base ring is noetherian; the converse direction needs a non-noetherian "
      "ring and is out of desk scope");
  rep.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
  return rep;
}

TheoremReport check_regular_equivalence(const std::vector<RingSpec>& rings, const ZooScope& scope,
                                        int jobs) {
  TheoremReport rep;
  rep.id = "regular-equivalence";
  rep.statement = "a ring is regular iff every module over it is absolutely self pure";
  auto start = Clock::now();
  for (const RingSpec& spec : rings) {
    if (spec.kind == RingSpec::Kind::Integers) continue;
    BaseRing ring = build_ring(spec, scope.caps);
    auto reg = is_regular_ring(ring, scope.caps);
    if (reg.holds) {
      auto zoo = module_zoo(ring, scope.module_order_cap, scope.free_rank_cap, scope.caps);
      std::vector<SlotResult> slots(zoo.size());
      parallel_for(static_cast<long long>(zoo.size()), jobs, [&](long long i) {
        const FinModule& m = zoo[static_cast<std::size_t>(i)];
        SlotResult& slot = slots[static_cast<std::size_t>(i)];
        ++slot.instances;
        auto verdict = is_absolutely_self_pure(m, scope.caps);
        if (!verdict.holds) {
          slot.violations.push_back(
              TheoremViolation{"regular ring " + spec.label() + ", module " + m.label(),
                               describe(*verdict.witness)});
        }
      });
      merge_slots(rep, slots, nullptr);
      continue;
    }
    // Non-regular: build the witness module L + R over a non-summand
    // principal ideal L, extend the identity of L along a |-> (a, 0), and
    // confirm the map qualifies yet has no extension to the ring.
    ++rep.instances;
    const LeftIdeal& l = *reg.witness;
    FinModule rmod = ring_as_module(ring);
    Submodule lsub{rmod, l.elements};
    FinModule lview = submodule_view(lsub);
    DirectSum w = direct_sum(ring, {lview, rmod}, scope.caps);
    auto fail = [&](const std::string& what) {
      rep.violations.push_back(
          TheoremViolation{"non-regular ring " + spec.label() + ", witness ideal " + l.describe(),
                           what});
    };
    IdealHom f;
    f.domain = l;
    f.codomain = w.sum;
    for (int e : l.elements) {
      f.map.push_back(w.injections[0].apply(lsub.index_of(e)));
    }
    if (!validate(f).ok()) fail("witness map fails validation");
    int unit_vector = w.injections[1].apply(rmod.data().ring.table().one);
    LeftIdeal ann_unit = annihilator(w.sum, unit_vector);
    if (!ideal_subset(ann_unit, kernel(f))) {
      fail("witness kernel does not contain the annihilator of (0,1)");
    }
    if (!filter_contains(filter_closure(w.sum, scope.caps), kernel(f))) {
      fail("witness kernel escapes the annihilator filter");
    }
    if (extends_to_ring(f)) fail("witness map unexpectedly extends to the ring");
    auto verdict = is_absolutely_self_pure(w.sum, scope.caps);
    if (verdict.holds) fail("witness module " + w.sum.label() + " is absolutely self pure");
  }
  rep.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
  return rep;
}

TheoremReport check_semisimple(const std::vector<RingSpec>& rings, const ZooScope& scope,
                               int jobs) {
  TheoremReport rep;
  rep.id = "semisimple-equivalence";
  rep.statement = "a ring is semisimple iff every module over it is quasi injective";
  auto start = Clock::now();
  for (const RingSpec& spec : rings) {
    if (spec.kind == RingSpec::Kind::Integers) continue;
    BaseRing ring = build_ring(spec, scope.caps);
    bool ss = is_semisimple_ring(ring, scope.caps).holds;
    auto zoo = module_zoo(ring, scope.module_order_cap, scope.free_rank_cap, scope.caps);
    std::vector<SlotResult> slots(zoo.size());
    std::vector<char> qi_flags(zoo.size(), 0);
    parallel_for(static_cast<long long>(zoo.size()), jobs, [&](long long i) {
      const FinModule& m = zoo[static_cast<std::size_t>(i)];
      SlotResult& slot = slots[static_cast<std::size_t>(i)];
      ++slot.instances;
      auto verdict = is_quasi_injective(m, scope.caps);
      qi_flags[static_cast<std::size_t>(i)] = verdict.holds ? 1 : 0;
      if (ss && !verdict.holds) {
        slot.violations.push_back(
            TheoremViolation{"semisimple ring " + spec.label() + ", module " + m.label(),
                             describe(*verdict.witness)});
      }
    });
    merge_slots(rep, slots, nullptr);
    if (!ss && std::find(qi_flags.begin(), qi_flags.end(), 0) == qi_flags.end()) {
      rep.violations.push_back(
          TheoremViolation{"non-semisimple ring " + spec.label(),
                           "every zoo module is quasi injective; expected a witness"});
    }
  }
  rep.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
  return rep;
}

TheoremReport check_product_decomposition(const RingSpec& r1, const RingSpec& r2,
                                          const ZooScope& scope, int jobs) {
  TheoremReport rep;
  rep.id = "product-decomposition[" + r1.label() + "," + r2.label() + "]";
  rep.statement = "over a product ring the classification flags of a product module are the "
                  "conjunctions of the component flags";
  auto start = Clock::now();
  BaseRing ring1 = build_ring(r1, scope.caps);
  BaseRing ring2 = build_ring(r2, scope.caps);
  BaseRing product = make_product_ring(ring1, ring2, scope.caps);
  auto zoo1 = module_zoo(ring1, scope.module_order_cap, scope.free_rank_cap, scope.caps);
  auto zoo2 = module_zoo(ring2, scope.module_order_cap, scope.free_rank_cap, scope.caps);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < static_cast<int>(zoo1.size()); ++i) {
    for (int j = 0; j < static_cast<int>(zoo2.size()); ++j) {
      if (static_cast<long long>(zoo1[static_cast<std::size_t>(i)].order()) *
              zoo2[static_cast<std::size_t>(j)].order() <=
          scope.module_order_cap) {
        pairs.emplace_back(i, j);
      }
    }
  }
  std::vector<SlotResult> slots(pairs.size());
  parallel_for(static_cast<long long>(pairs.size()), jobs, [&](long long p) {
    auto [i, j] = pairs[static_cast<std::size_t>(p)];
    SlotResult& slot = slots[static_cast<std::size_t>(p)];
    const FinModule& a = zoo1[static_cast<std::size_t>(i)];
    const FinModule& b = zoo2[static_cast<std::size_t>(j)];
    FinModule m = product_module(product, ring1, ring2, a, b, scope.caps);
    ClassificationRecord rm = classify(m, scope.caps);
    ClassificationRecord ra = classify(a, scope.caps);
    ClassificationRecord rb = classify(b, scope.caps);
    ++slot.instances;
    auto expect = [&](const std::string& flag, bool got, bool lhs, bool rhs) {
      if (got != (lhs && rhs)) {
        slot.violations.push_back(TheoremViolation{
            "product " + m.label() + " over " + product.label(),
            flag + " is " + (got ? "true" : "false") + " but components give " +
                ((lhs && rhs) ? "true" : "false")});
      }
    };
    expect("injective", rm.injective, ra.injective, rb.injective);
    expect("absolutely_pure", rm.absolutely_pure, ra.absolutely_pure, rb.absolutely_pure);
    expect("quasi_injective", rm.quasi_injective, ra.quasi_injective, rb.quasi_injective);
    expect("absolutely_self_pure", rm.absolutely_self_pure, ra.absolutely_self_pure,
           rb.absolutely_self_pure);
  });
  merge_slots(rep, slots, nullptr);
  rep.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
  return rep;
}

std::vector<TheoremReport> run_all_theorems(const ZooScope& scope, int jobs) {
  std::vector<TheoremReport> out;
  out.push_back(check_transitivity(scope, jobs));
  out.push_back(check_restriction(scope, jobs));
  out.push_back(check_summand_closure(scope, jobs));
  out.push_back(check_direct_sum(scope, scope.copies, jobs));
  out.push_back(check_noetherian_equivalence(scope, jobs));
  std::vector<RingSpec> finite;
  for (const RingSpec& spec : scope.rings) {
    if (spec.kind != RingSpec::Kind::Integers) finite.push_back(spec);
  }
  out.push_back(check_regular_equivalence(finite, scope, jobs));
  out.push_back(check_semisimple(finite, scope, jobs));
  for (const auto& [n, m] : scope.product_pairs) {
    out.push_back(check_product_decomposition(RingSpec{RingSpec::Kind::Cyclic, n, 0},
                                              RingSpec{RingSpec::Kind::Cyclic, m, 0}, scope,
                                              jobs));
  }
  return out;
}

}  // namespace modpure
