#include "modpure/report.hpp"

#include <iomanip>
#include <sstream>

#include "modpure/util.hpp"

namespace modpure {

Json to_json(const Caps& caps) {
  Json j;
  j["max_ring_order"] = caps.max_ring_order;
  j["max_module_order"] = caps.max_module_order;
  j["max_generators"] = caps.max_generators;
  j["max_direct_sum_order"] = caps.max_direct_sum_order;
  return j;
}

Json to_json(const LeftIdeal& l) {
  Json j;
  j["ring"] = l.ring.label();
  if (l.ring.is_integers()) {
    j["gen"] = l.gen;
  } else {
    j["elements"] = l.elements;
  }
  return j;
}

Json to_json(const IdealHom& f) {
  Json j;
  j["domain"] = to_json(f.domain);
  j["codomain"] = f.codomain.label();
  if (f.domain.ring.is_integers()) {
    j["image_of_gen"] = f.gen_image;
  } else {
    Json images = Json::array();
    for (std::size_t i = 0; i < f.domain.elements.size(); ++i) {
      images.push_back(Json::array({f.domain.elements[i], f.map[i]}));
    }
    j["images"] = images;
  }
  return j;
}

Json to_json(const FailingPair& fail) {
  Json j;
  j["ideal"] = to_json(fail.ideal);
  j["map"] = to_json(fail.map);
  return j;
}

Json to_json(const EquationWitness& w) {
  Json j;
  j["vars"] = w.vars;
  Json rows = Json::array();
  for (const EquationRow& row : w.rows) {
    Json r;
    r["coeffs"] = row.coeffs;
    r["rhs"] = row.rhs;
    rows.push_back(r);
  }
  j["rows"] = rows;
  j["solution_in_parent"] = w.solution_in_parent;
  return j;
}

Json to_json(const Submodule& s) {
  Json j;
  j["parent"] = s.parent.label();
  j["elements"] = s.elements;
  return j;
}

Json to_json(const PurityVerdict& v) {
  Json j;
  j["holds"] = v.holds;
  if (v.complement) j["complement"] = to_json(*v.complement);
  if (v.failing) j["failing"] = to_json(*v.failing);
  if (v.equations) j["equations"] = to_json(*v.equations);
  if (!v.notes.empty()) j["notes"] = v.notes;
  return j;
}

Json to_json(const PropertyVerdict& v) {
  Json j;
  j["holds"] = v.holds;
  if (v.witness) j["witness"] = to_json(*v.witness);
  if (!v.notes.empty()) j["notes"] = v.notes;
  return j;
}

Json to_json(const ClassificationRecord& rec) {
  Json j;
  j["label"] = rec.label;
  Json flags;
  flags["injective"] = rec.injective;
  flags["absolutely_pure"] = rec.absolutely_pure;
  flags["quasi_injective"] = rec.quasi_injective;
  flags["absolutely_self_pure"] = rec.absolutely_self_pure;
  j["flags"] = flags;
  Json witnesses;
  if (rec.injective_witness) witnesses["injective"] = to_json(*rec.injective_witness);
  if (rec.absolutely_pure_witness) {
    witnesses["absolutely_pure"] = to_json(*rec.absolutely_pure_witness);
  }
  if (rec.quasi_injective_witness) {
    witnesses["quasi_injective"] = to_json(*rec.quasi_injective_witness);
  }
  if (rec.absolutely_self_pure_witness) {
    witnesses["absolutely_self_pure"] = to_json(*rec.absolutely_self_pure_witness);
  }
  j["witnesses"] = witnesses;
  j["notes"] = rec.notes;
  return j;
}

Json to_json(const ValidationReport& rep) {
  Json j;
  j["ok"] = rep.ok();
  Json issues = Json::array();
  for (const ValidationIssue& issue : rep.issues) {
    Json i;
    i["kind"] = issue.kind == IssueKind::Dimension ? "dimension" : "axiom";
    i["axiom"] = issue.axiom;
    i["witness"] = issue.witness;
    i["message"] = issue.message;
    issues.push_back(i);
  }
  j["issues"] = issues;
  return j;
}

Json to_json(const TheoremReport& rep) {
  Json j;
  j["id"] = rep.id;
  j["statement"] = rep.statement;
  j["instances"] = rep.instances;
  Json violations = Json::array();
  for (const TheoremViolation& v : rep.violations) {
    Json jv;
    jv["instance"] = v.instance;
    jv["witness"] = v.witness;
    violations.push_back(jv);
  }
  j["violations"] = violations;
  j["notes"] = rep.notes;
  j["elapsed_us"] = rep.elapsed_us;
  return j;
}

Json scope_json(const ZooScope& scope) {
  Json j;
  Json rings = Json::array();
  for (const RingSpec& spec : scope.rings) rings.push_back(spec.label());
  j["rings"] = rings;
  j["module_order_cap"] = scope.module_order_cap;
  j["free_rank_cap"] = scope.free_rank_cap;
  j["chain_depth"] = scope.chain_depth;
  j["copies"] = scope.copies;
  Json pairs = Json::array();
  for (const auto& [n, m] : scope.product_pairs) pairs.push_back(Json::array({n, m}));
  j["product_pairs"] = pairs;
  j["seed"] = scope.seed;
  j["caps"] = to_json(scope.caps);
  return j;
}

namespace {

std::string flag_text(bool b) { return b ? "yes" : "no"; }

std::string witness_text(const FailingPair& fail) { return describe(fail); }

}  // namespace

std::string render_text(const ClassificationRecord& rec) {
  std::ostringstream os;
  os << "module " << rec.label << "\n";
  auto line = [&](const std::string& name, bool flag, const std::optional<FailingPair>& w) {
    os << "  " << std::left << std::setw(22) << name << flag_text(flag);
    if (!flag && w) os << "   witness: " << witness_text(*w);
    os << "\n";
  };
  line("injective", rec.injective, rec.injective_witness);
  line("absolutely pure", rec.absolutely_pure, rec.absolutely_pure_witness);
  line("quasi injective", rec.quasi_injective, rec.quasi_injective_witness);
  line("absolutely self pure", rec.absolutely_self_pure, rec.absolutely_self_pure_witness);
  for (const std::string& n : rec.notes) os << "  note: " << n << "\n";
  return os.str();
}

std::string render_text(const PurityVerdict& v, const std::string& property) {
  std::ostringstream os;
  os << property << ": " << (v.holds ? "holds" : "fails") << "\n";
  if (v.complement) {
    os << "  complement: {" << join_ints(v.complement->elements, ",") << "}\n";
  }
  if (v.failing) os << "  witness: " << witness_text(*v.failing) << "\n";
  if (v.equations) {
    const EquationWitness& w = *v.equations;
    os << "  equation witness (" << w.vars << " vars):\n";
    for (const EquationRow& row : w.rows) {
      os << "    ";
      for (std::size_t i = 0; i < row.coeffs.size(); ++i) {
        if (i) os << " + ";
        os << row.coeffs[i] << "*x" << i + 1;
      }
      os << " = " << row.rhs << "\n";
    }
    os << "    solvable in the parent at (" << join_ints(w.solution_in_parent, ",")
       << "), unsolvable in the submodule\n";
  }
  for (const std::string& n : v.notes) os << "  note: " << n << "\n";
  return os.str();
}

std::string render_text(const std::vector<TheoremReport>& reports) {
  std::ostringstream os;
  os << std::left << std::setw(26) << "theorem" << std::right << std::setw(12) << "instances"
     << std::setw(12) << "violations" << std::setw(12) << "elapsed" << "\n";
  for (const TheoremReport& rep : reports) {
    os << std::left << std::setw(26) << rep.id << std::right << std::setw(12) << rep.instances
       << std::setw(12) << rep.violations.size() << std::setw(10) << rep.elapsed_us / 1000
       << "ms" << "\n";
    for (const TheoremViolation& v : rep.violations) {
      os << "    VIOLATION (implementation bug): " << v.instance << " -- " << v.witness << "\n";
    }
    for (const std::string& n : rep.notes) os << "    note: " << n << "\n";
  }
  return os.str();
}

std::string render_text(const ValidationReport& rep, const std::string& subject) {
  std::ostringstream os;
  if (rep.ok()) {
    os << subject << ": ok\n";
    return os.str();
  }
  os << subject << ": " << rep.issues.size() << " issue(s)\n";
  for (const ValidationIssue& issue : rep.issues) {
    os << "  [" << (issue.kind == IssueKind::Dimension ? "dimension" : "axiom") << "] "
       << issue.axiom << " witness=(";
    for (std::size_t i = 0; i < issue.witness.size(); ++i) {
      if (i) os << ",";
      os << issue.witness[i];
    }
    os << ") " << issue.message << "\n";
  }
  return os.str();
}

}  // namespace modpure
