#include "modpure/commands.hpp"

#include <sstream>

namespace modpure {

namespace {

constexpr const char* kSchema = "modpure-report/1";

// Every structure must validate before any task runs.
bool emit_validation_failures(const InputDocument& doc, const CmdOptions& opt,
                              std::ostream& out) {
  auto reports = validate_document(doc);
  bool ok = true;
  for (const auto& [name, rep] : reports) ok = ok && rep.ok();
  if (ok) return false;
  if (opt.format == "json") {
    Json root;
    root["schema"] = kSchema;
    root["command"] = "validate";
    root["ok"] = false;
    Json entries = Json::array();
    for (const auto& [name, rep] : reports) {
      Json e;
      e["name"] = name;
      e["report"] = to_json(rep);
      entries.push_back(e);
    }
    root["entries"] = entries;
    out << root.dump(2) << "\n";
  } else {
    for (const auto& [name, rep] : reports) {
      if (!rep.ok()) out << render_text(rep, name);
    }
  }
  return true;
}

const ModuleEntry& require_module(const InputDocument& doc, const std::string& name) {
  const ModuleEntry* e = doc.find_module(name);
  if (!e) throw InputError("module '" + name + "' is not defined in the input document");
  return *e;
}

int run_check(const InputDocument& doc, const std::string& property, const std::string& sub_name,
              const std::string& parent_name, const std::string& relative_to,
              const CmdOptions& opt, std::ostream& out) {
  const ModuleEntry& sub = require_module(doc, sub_name);
  require_module(doc, parent_name);
  if (!sub.submodule || sub.parent != parent_name) {
    throw InputError("'" + sub_name + "' is not declared as a submodule of '" + parent_name +
                     "'");
  }
  PurityVerdict verdict;
  if (property == "self-pure") {
    verdict = is_self_pure(*sub.submodule, opt.caps);
  } else if (property == "pure") {
    verdict = is_pure(*sub.submodule, opt.caps);
  } else if (property == "M-pure") {
    const ModuleEntry& rel = require_module(doc, relative_to);
    verdict = is_M_pure(*sub.submodule, rel.module, opt.caps);
  } else {
    throw InputError("unknown property '" + property + "' (self-pure, M-pure or pure)");
  }
  if (opt.format == "json") {
    Json root;
    root["schema"] = kSchema;
    root["command"] = "check";
    root["property"] = property;
    root["submodule"] = sub_name;
    root["parent"] = parent_name;
    if (!relative_to.empty()) root["relative_to"] = relative_to;
    root["config"] = to_json(opt.caps);
    root["result"] = to_json(verdict);
    out << root.dump(2) << "\n";
  } else {
    out << render_text(verdict, property + " " + sub_name + " <= " + parent_name);
  }
  return kExitOk;
}

}  // namespace

int cmd_classify(const InputDocument& doc, const std::string& module_name, const CmdOptions& opt,
                 std::ostream& out) {
  if (emit_validation_failures(doc, opt, out)) return kExitValidation;
  std::vector<std::string> names;
  if (!module_name.empty()) {
    names.push_back(module_name);
  } else {
    for (const Json& t : doc.tasks) {
      if (t.value("cmd", "") == "classify") names.push_back(t["module"].get<std::string>());
    }
    if (names.empty()) {
      throw InputError("no module named on the command line and no classify tasks in the input");
    }
  }
  for (const std::string& name : names) {
    const ModuleEntry& entry = require_module(doc, name);
    ClassificationRecord rec = classify(entry.module, opt.caps);
    if (opt.format == "json") {
      Json root;
      root["schema"] = kSchema;
      root["command"] = "classify";
      root["module"] = name;
      root["config"] = to_json(opt.caps);
      root["result"] = to_json(rec);
      out << root.dump(2) << "\n";
    } else {
      out << render_text(rec);
    }
  }
  return kExitOk;
}

int cmd_check(const InputDocument& doc, const std::string& property, const std::string& sub_name,
              const std::string& parent_name, const std::string& relative_to,
              const CmdOptions& opt, std::ostream& out) {
  if (emit_validation_failures(doc, opt, out)) return kExitValidation;
  if (!sub_name.empty()) {
    return run_check(doc, property, sub_name, parent_name, relative_to, opt, out);
  }
  bool ran = false;
  int rc = kExitOk;
  for (const Json& t : doc.tasks) {
    if (t.value("cmd", "") != "check") continue;
    ran = true;
    rc = run_check(doc, t["property"].get<std::string>(), t["sub"].get<std::string>(),
                   t["in"].get<std::string>(), t.value("relative_to", ""), opt, out);
    if (rc != kExitOk) return rc;
  }
  if (!ran) {
    throw InputError("no pair named on the command line and no check tasks in the input");
  }
  return rc;
}

int cmd_verify_theorems(const CmdOptions& opt, std::ostream& out) {
  auto reports = run_all_theorems(opt.scope, opt.jobs);
  long long violations = 0;
  for (const TheoremReport& rep : reports) violations += static_cast<long long>(rep.violations.size());
  if (opt.format == "json") {
    Json root;
    root["schema"] = kSchema;
    root["command"] = "verify-theorems";
    root["config"] = scope_json(opt.scope);
    Json list = Json::array();
    for (const TheoremReport& rep : reports) list.push_back(to_json(rep));
    root["reports"] = list;
    root["violations_total"] = violations;
    out << root.dump(2) << "\n";
  } else {
    out << render_text(reports);
    if (violations > 0) {
      out << "TOTAL VIOLATIONS: " << violations
          << " (a violation of a proven statement signals an implementation bug)\n";
    }
  }
  return violations == 0 ? kExitOk : kExitViolation;
}

int cmd_zoo_list(const std::string& ring_spec, int catalog_max, const CmdOptions& opt,
                 std::ostream& out) {
  if (!ring_spec.empty()) {
    BaseRing ring = build_ring(RingSpec::parse(ring_spec), opt.caps);
    auto zoo = module_zoo(ring, opt.scope.module_order_cap, opt.scope.free_rank_cap, opt.caps);
    if (opt.format == "json") {
      Json root;
      root["schema"] = kSchema;
      root["command"] = "zoo-list";
      root["ring"] = ring.label();
      root["module_order_cap"] = opt.scope.module_order_cap;
      Json list = Json::array();
      for (const FinModule& m : zoo) {
        Json e;
        e["label"] = m.label();
        e["order"] = m.order();
        e["exponent"] = m.exponent();
        list.push_back(e);
      }
      root["modules"] = list;
      out << root.dump(2) << "\n";
    } else {
      out << "modules over " << ring.label() << " up to order " << opt.scope.module_order_cap
          << " (" << zoo.size() << ")\n";
      for (const FinModule& m : zoo) {
        out << "  " << m.label() << "  order " << m.order() << "  exponent " << m.exponent()
            << "\n";
      }
    }
    return kExitOk;
  }

  auto catalog = ring_catalog(catalog_max, opt.caps);
  std::vector<std::string> iso_notes(catalog.size());
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (is_ring_iso(catalog[i], catalog[j])) {
        iso_notes[i] = catalog[j].label();
        break;
      }
    }
  }
  if (opt.format == "json") {
    Json root;
    root["schema"] = kSchema;
    root["command"] = "zoo-list";
    root["max_order"] = catalog_max;
    Json list = Json::array();
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      Json e;
      e["label"] = catalog[i].label();
      e["order"] = catalog[i].is_finite() ? Json(catalog[i].order()) : Json(nullptr);
      if (!iso_notes[i].empty()) e["isomorphic_to"] = iso_notes[i];
      list.push_back(e);
    }
    root["rings"] = list;
    out << root.dump(2) << "\n";
  } else {
    out << "ring catalog up to order " << catalog_max << " (" << catalog.size() << ")\n";
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      out << "  " << catalog[i].label();
      if (!iso_notes[i].empty()) out << "  (isomorphic to " << iso_notes[i] << ")";
      out << "\n";
    }
  }
  return kExitOk;
}

int cmd_validate(const InputDocument& doc, const CmdOptions& opt, std::ostream& out) {
  auto reports = validate_document(doc);
  bool ok = true;
  for (const auto& [name, rep] : reports) ok = ok && rep.ok();
  if (opt.format == "json") {
    Json root;
    root["schema"] = kSchema;
    root["command"] = "validate";
    root["ok"] = ok;
    Json entries = Json::array();
    for (const auto& [name, rep] : reports) {
      Json e;
      e["name"] = name;
      e["report"] = to_json(rep);
      entries.push_back(e);
    }
    root["entries"] = entries;
    out << root.dump(2) << "\n";
  } else {
    for (const auto& [name, rep] : reports) out << render_text(rep, name);
    out << (ok ? "all structures valid\n" : "validation failed\n");
  }
  return ok ? kExitOk : kExitValidation;
}

}  // namespace modpure
