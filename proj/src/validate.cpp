#include "modpure/validate.hpp"

#include <algorithm>
#include <sstream>

namespace modpure {

namespace {

void issue(ValidationReport& rep, IssueKind kind, const std::string& axiom,
           std::vector<long long> witness, const std::string& message) {
  rep.issues.push_back(ValidationIssue{kind, axiom, std::move(witness), message});
}

// One witness per axiom keeps reports small; scanning continues so every
// violated axiom is listed.
struct AxiomScan {
  ValidationReport& rep;
  std::vector<std::string> seen;

  bool fresh(const std::string& axiom) {
    if (std::find(seen.begin(), seen.end(), axiom) != seen.end()) return false;
    seen.push_back(axiom);
    return true;
  }
  void fail(const std::string& axiom, std::vector<long long> witness, const std::string& msg) {
    if (fresh(axiom)) issue(rep, IssueKind::Axiom, axiom, std::move(witness), msg);
  }
};

bool table_in_range(const std::vector<int>& t, std::size_t expected, int order) {
  if (t.size() != expected) return false;
  for (int v : t) {
    if (v < 0 || v >= order) return false;
  }
  return true;
}

void check_abelian_group(AxiomScan& scan, int order, int zero,
                         const std::function<int(int, int)>& add) {
  for (int a = 0; a < order && scan.rep.issues.size() < 64; ++a) {
    for (int b = 0; b < order; ++b) {
      if (add(a, b) != add(b, a)) {
        scan.fail("add-commutativity", {a, b}, "a+b differs from b+a");
      }
      for (int c = 0; c < order; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) {
          scan.fail("add-associativity", {a, b, c}, "(a+b)+c differs from a+(b+c)");
        }
      }
    }
    if (add(a, zero) != a) scan.fail("add-identity", {a}, "a+0 differs from a");
    bool has_inverse = false;
    for (int b = 0; b < order; ++b) has_inverse |= add(a, b) == zero;
    if (!has_inverse) scan.fail("add-inverse", {a}, "no b with a+b = 0");
  }
}

}  // namespace

ValidationReport validate(const RingTable& t) {
  ValidationReport rep;
  if (t.order <= 0) {
    issue(rep, IssueKind::Dimension, "order", {t.order}, "ring order must be positive");
    return rep;
  }
  std::size_t want = static_cast<std::size_t>(t.order) * t.order;
  if (!table_in_range(t.add, want, t.order) || !table_in_range(t.mul, want, t.order) ||
      t.zero < 0 || t.zero >= t.order || t.one < 0 || t.one >= t.order) {
    issue(rep, IssueKind::Dimension, "tables", {}, "table sizes or entries out of range");
    return rep;
  }
  AxiomScan scan{rep, {}};
  check_abelian_group(scan, t.order, t.zero, [&](int a, int b) { return t.addv(a, b); });
  for (int a = 0; a < t.order; ++a) {
    for (int b = 0; b < t.order; ++b) {
      for (int c = 0; c < t.order; ++c) {
        if (t.mulv(t.mulv(a, b), c) != t.mulv(a, t.mulv(b, c))) {
          scan.fail("mul-associativity", {a, b, c}, "(ab)c differs from a(bc)");
        }
        if (t.mulv(a, t.addv(b, c)) != t.addv(t.mulv(a, b), t.mulv(a, c))) {
          scan.fail("left-distributivity", {a, b, c}, "a(b+c) differs from ab+ac");
        }
        if (t.mulv(t.addv(a, b), c) != t.addv(t.mulv(a, c), t.mulv(b, c))) {
          scan.fail("right-distributivity", {a, b, c}, "(a+b)c differs from ac+bc");
        }
      }
    }
    if (t.mulv(t.one, a) != a || t.mulv(a, t.one) != a) {
      scan.fail("mul-identity", {a}, "1*a or a*1 differs from a");
    }
  }
  return rep;
}

ValidationReport validate(const FinModule& m) {
  ValidationReport rep;
  const FinModuleData& d = m.data();
  if (d.order <= 0) {
    issue(rep, IssueKind::Dimension, "order", {d.order}, "module order must be positive");
    return rep;
  }
  std::size_t want = static_cast<std::size_t>(d.order) * d.order;
  if (!table_in_range(d.add, want, d.order) || d.zero < 0 || d.zero >= d.order) {
    issue(rep, IssueKind::Dimension, "tables", {}, "addition table or zero out of range");
    return rep;
  }
  if (d.ring.is_integers()) {
    if (!d.action.empty()) {
      issue(rep, IssueKind::Dimension, "action", {}, "integer-ring modules carry no action table");
      return rep;
    }
  } else {
    std::size_t want_action = static_cast<std::size_t>(d.ring.order()) * d.order;
    if (!table_in_range(d.action, want_action, d.order)) {
      issue(rep, IssueKind::Dimension, "action", {}, "action table size or entries out of range");
      return rep;
    }
  }
  AxiomScan scan{rep, {}};
  check_abelian_group(scan, d.order, d.zero, [&](int a, int b) { return m.addv(a, b); });
  if (d.ring.is_finite()) {
    const RingTable& t = d.ring.table();
    for (int r = 0; r < t.order; ++r) {
      for (int a = 0; a < d.order; ++a) {
        for (int b = 0; b < d.order; ++b) {
          if (m.act_ring(r, m.addv(a, b)) != m.addv(m.act_ring(r, a), m.act_ring(r, b))) {
            scan.fail("action-add-distributivity", {r, a, b}, "r(a+b) differs from ra+rb");
          }
        }
        for (int s = 0; s < t.order; ++s) {
          if (m.act_ring(t.addv(r, s), a) != m.addv(m.act_ring(r, a), m.act_ring(s, a))) {
            scan.fail("action-ring-add", {r, s, a}, "(r+s)a differs from ra+sa");
          }
          if (m.act_ring(t.mulv(r, s), a) != m.act_ring(r, m.act_ring(s, a))) {
            scan.fail("action-ring-mul", {r, s, a}, "(rs)a differs from r(sa)");
          }
        }
      }
    }
    for (int a = 0; a < d.order; ++a) {
      if (m.act_ring(t.one, a) != a) scan.fail("action-identity", {a}, "1*a differs from a");
    }
  }
  return rep;
}

ValidationReport validate(const Submodule& s) {
  ValidationReport rep;
  const FinModule& p = s.parent;
  for (int e : s.elements) {
    if (e < 0 || e >= p.order()) {
      issue(rep, IssueKind::Dimension, "elements", {e}, "element index out of range");
      return rep;
    }
  }
  if (!std::is_sorted(s.elements.begin(), s.elements.end()) ||
      std::adjacent_find(s.elements.begin(), s.elements.end()) != s.elements.end()) {
    issue(rep, IssueKind::Dimension, "elements", {}, "element set must be sorted and unique");
    return rep;
  }
  AxiomScan scan{rep, {}};
  if (!s.contains(p.zero())) scan.fail("contains-zero", {p.zero()}, "zero is missing");
  for (int a : s.elements) {
    for (int b : s.elements) {
      if (!s.contains(p.addv(a, b))) {
        scan.fail("closed-under-addition", {a, b}, "a+b escapes the element set");
      }
    }
    if (p.ring().is_finite()) {
      for (int r = 0; r < p.ring().order(); ++r) {
        if (!s.contains(p.act_ring(r, a))) {
          scan.fail("closed-under-action", {r, a}, "ra escapes the element set");
        }
      }
    }
  }
  return rep;
}

ValidationReport validate(const LeftIdeal& l) {
  ValidationReport rep;
  if (l.ring.is_integers()) {
    if (l.gen < 0) issue(rep, IssueKind::Dimension, "gen", {l.gen}, "generator must be nonnegative");
    return rep;
  }
  Submodule as_sub{ring_as_module(l.ring), l.elements};
  return validate(as_sub);
}

ValidationReport validate(const IdealHom& f) {
  ValidationReport rep;
  if (f.domain.ring != f.codomain.ring()) {
    issue(rep, IssueKind::Dimension, "rings", {}, "domain and codomain rings differ");
    return rep;
  }
  if (f.domain.ring.is_integers()) {
    if (f.gen_image < 0 || f.gen_image >= f.codomain.order()) {
      issue(rep, IssueKind::Dimension, "image", {f.gen_image}, "image out of range");
      return rep;
    }
    if (f.domain.gen == 0 && f.gen_image != f.codomain.zero()) {
      issue(rep, IssueKind::Axiom, "zero-ideal", {f.gen_image},
            "the zero ideal only carries the zero map");
    }
    return rep;
  }
  if (f.map.size() != f.domain.elements.size()) {
    issue(rep, IssueKind::Dimension, "map", {}, "image list does not match the domain");
    return rep;
  }
  for (int v : f.map) {
    if (v < 0 || v >= f.codomain.order()) {
      issue(rep, IssueKind::Dimension, "map", {v}, "image out of range");
      return rep;
    }
  }
  AxiomScan scan{rep, {}};
  const FinModule& m = f.codomain;
  for (int a : f.domain.elements) {
    for (int b : f.domain.elements) {
      int sum = f.domain.ring.table().addv(a, b);
      if (f.apply(sum) != m.addv(f.apply(a), f.apply(b))) {
        scan.fail("additivity", {a, b}, "f(a+b) differs from f(a)+f(b)");
      }
    }
    for (int r = 0; r < f.domain.ring.order(); ++r) {
      int ra = f.domain.ring.table().mulv(r, a);
      if (f.apply(ra) != m.act_ring(r, f.apply(a))) {
        scan.fail("linearity", {r, a}, "f(ra) differs from r f(a)");
      }
    }
  }
  return rep;
}

ValidationReport validate(const ModHom& h) {
  ValidationReport rep;
  if (h.domain.ring() != h.codomain.ring()) {
    issue(rep, IssueKind::Dimension, "rings", {}, "domain and codomain rings differ");
    return rep;
  }
  if (h.map.size() != static_cast<std::size_t>(h.domain.order())) {
    issue(rep, IssueKind::Dimension, "map", {}, "image list does not match the domain");
    return rep;
  }
  for (int v : h.map) {
    if (v < 0 || v >= h.codomain.order()) {
      issue(rep, IssueKind::Dimension, "map", {v}, "image out of range");
      return rep;
    }
  }
  AxiomScan scan{rep, {}};
  for (int a = 0; a < h.domain.order(); ++a) {
    for (int b = 0; b < h.domain.order(); ++b) {
      if (h.apply(h.domain.addv(a, b)) != h.codomain.addv(h.apply(a), h.apply(b))) {
        scan.fail("additivity", {a, b}, "f(a+b) differs from f(a)+f(b)");
      }
    }
    if (h.domain.ring().is_finite()) {
      for (int r = 0; r < h.domain.ring().order(); ++r) {
        if (h.apply(h.domain.act_ring(r, a)) != h.codomain.act_ring(r, h.apply(a))) {
          scan.fail("equivariance", {r, a}, "f(ra) differs from r f(a)");
        }
      }
    }
  }
  return rep;
}

}  // namespace modpure
