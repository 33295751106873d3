#include "modpure/filter.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace modpure {

std::vector<LeftIdeal> omega(const FinModule& m, const Caps& caps) {
  if (!m.ring().is_finite()) {
    throw std::invalid_argument("omega enumeration needs a finite ring; use filter_contains over Z");
  }
  std::vector<LeftIdeal> anns;
  for (int x = 0; x < m.order(); ++x) anns.push_back(annihilator(m, x));
  std::vector<LeftIdeal> out;
  for (const LeftIdeal& l : left_ideals(m.ring(), caps)) {
    for (const LeftIdeal& a : anns) {
      if (ideal_subset(a, l)) {
        out.push_back(l);
        break;
      }
    }
  }
  return out;
}

AnnFilter filter_closure(const FinModule& m, const Caps&) {
  AnnFilter f;
  f.ring = m.ring();
  if (m.ring().is_integers()) {
    f.exponent = m.exponent();
    return f;
  }
  std::set<std::vector<int>> base;
  for (int x = 0; x < m.order(); ++x) base.insert(annihilator(m, x).elements);
  // Fixpoint of pairwise intersections.
  for (;;) {
    std::set<std::vector<int>> next = base;
    for (const auto& a : base) {
      for (const auto& b : base) {
        std::vector<int> cap;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(cap));
        next.insert(std::move(cap));
      }
    }
    if (next.size() == base.size()) break;
    base = std::move(next);
  }
  std::vector<std::vector<int>> sorted(base.begin(), base.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (auto& els : sorted) f.base.push_back(LeftIdeal{m.ring(), std::move(els), 0});
  return f;
}

bool filter_contains(const AnnFilter& f, const LeftIdeal& k) {
  if (f.ring != k.ring) throw std::invalid_argument("filter membership across base rings");
  if (f.ring.is_integers()) {
    if (k.gen == 0) return false;
    return f.exponent % k.gen == 0;
  }
  for (const LeftIdeal& b : f.base) {
    if (ideal_subset(b, k)) return true;
  }
  return false;
}

}  // namespace modpure
