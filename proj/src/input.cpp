#include "modpure/input.hpp"

#include <fstream>

namespace modpure {

const BaseRing* InputDocument::find_ring(const std::string& name) const {
  for (const auto& [n, r] : rings) {
    if (n == name) return &r;
  }
  return nullptr;
}

const ModuleEntry* InputDocument::find_module(const std::string& name) const {
  for (const ModuleEntry& e : modules) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

namespace {

std::vector<int> parse_square_table(const Json& j, int rows, int cols, const std::string& what) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) {
    throw InputError(what + " must be a " + std::to_string(rows) + "-row array");
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(rows) * cols);
  for (const Json& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      throw InputError(what + " rows must have " + std::to_string(cols) + " entries");
    }
    for (const Json& v : row) {
      if (!v.is_number_integer()) throw InputError(what + " entries must be integers");
      out.push_back(v.get<int>());
    }
  }
  return out;
}

BaseRing parse_ring_expr(const InputDocument& doc, const std::string& name, const Json& expr,
                         const Caps& caps) {
  if (expr.is_string()) {
    if (expr.get<std::string>() == "integers") return BaseRing::integers();
    throw InputError("ring " + name + ": unknown ring keyword '" + expr.get<std::string>() + "'");
  }
  if (!expr.is_object()) throw InputError("ring " + name + ": expected an object or 'integers'");
  if (expr.contains("cyclic")) {
    if (!expr["cyclic"].is_number_integer()) {
      throw InputError("ring " + name + ": cyclic takes an integer order");
    }
    return make_cyclic_ring(expr["cyclic"].get<int>(), caps);
  }
  if (expr.contains("product")) {
    const Json& p = expr["product"];
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      throw InputError("ring " + name + ": product takes two ring names");
    }
    const BaseRing* a = doc.find_ring(p[0].get<std::string>());
    const BaseRing* b = doc.find_ring(p[1].get<std::string>());
    if (!a || !b) throw InputError("ring " + name + ": product factor not defined yet");
    return make_product_ring(*a, *b, caps);
  }
  if (expr.contains("table")) {
    const Json& t = expr["table"];
    if (!t.is_object() || !t.contains("order") || !t["order"].is_number_integer()) {
      throw InputError("ring " + name + ": table needs an integer order");
    }
    RingTable table;
    table.order = t["order"].get<int>();
    if (table.order <= 0) throw InputError("ring " + name + ": order must be positive");
    if (table.order > caps.max_ring_order) {
      throw CapacityError("ring " + name + " exceeds the ring order cap");
    }
    table.add = parse_square_table(t.at("add"), table.order, table.order, "ring " + name + " add");
    table.mul = parse_square_table(t.at("mul"), table.order, table.order, "ring " + name + " mul");
    table.zero = t.value("zero", 0);
    table.one = t.value("one", table.order == 1 ? 0 : 1);
    table.label = t.value("label", name);
    return BaseRing::finite(std::move(table));
  }
  throw InputError("ring " + name + ": expected cyclic, product, table or 'integers'");
}

ModuleEntry parse_module_expr(const InputDocument& doc, const std::string& name, const Json& expr,
                              const Caps& caps) {
  if (!expr.is_object()) throw InputError("module " + name + ": expected an object");
  ModuleEntry entry;
  entry.name = name;

  if (expr.contains("submodule_of")) {
    if (!expr["submodule_of"].is_string()) {
      throw InputError("module " + name + ": submodule_of takes a module name");
    }
    entry.parent = expr["submodule_of"].get<std::string>();
    const ModuleEntry* parent = doc.find_module(entry.parent);
    if (!parent) throw InputError("module " + name + ": parent '" + entry.parent + "' not defined yet");
    std::vector<int> elements;
    if (expr.contains("elements")) {
      for (const Json& v : expr["elements"]) elements.push_back(v.get<int>());
      entry.submodule = submodule_from_elements(parent->module, std::move(elements));
    } else if (expr.contains("generators")) {
      for (const Json& v : expr["generators"]) elements.push_back(v.get<int>());
      entry.submodule = submodule_generated(parent->module, elements);
    } else {
      throw InputError("module " + name + ": submodule_of needs elements or generators");
    }
    entry.module = submodule_view(*entry.submodule);
    return entry;
  }

  if (expr.contains("sum")) {
    const Json& parts = expr["sum"];
    if (!parts.is_array() || parts.empty()) {
      throw InputError("module " + name + ": sum takes a nonempty list of module names");
    }
    std::vector<FinModule> modules;
    for (const Json& p : parts) {
      const ModuleEntry* e = p.is_string() ? doc.find_module(p.get<std::string>()) : nullptr;
      if (!e) throw InputError("module " + name + ": sum part not defined yet");
      modules.push_back(e->module);
    }
    entry.module = direct_sum(modules[0].ring(), modules, caps).sum;
    return entry;
  }

  if (!expr.contains("ring") || !expr["ring"].is_string()) {
    throw InputError("module " + name + ": needs a ring reference");
  }
  const BaseRing* ring = doc.find_ring(expr["ring"].get<std::string>());
  if (!ring) throw InputError("module " + name + ": ring '" + expr["ring"].get<std::string>() +
                              "' not defined yet");

  if (expr.contains("cyclic")) {
    const Json& list = expr["cyclic"];
    if (!list.is_array() || list.empty()) {
      throw InputError("module " + name + ": cyclic takes a nonempty list of orders");
    }
    std::vector<FinModule> parts;
    for (const Json& d : list) {
      if (!d.is_number_integer()) throw InputError("module " + name + ": cyclic orders must be integers");
      parts.push_back(cyclic_module(*ring, d.get<long long>(), caps));
    }
    entry.module = parts.size() == 1 ? parts[0] : direct_sum(*ring, parts, caps).sum;
    return entry;
  }

  if (expr.contains("order")) {
    FinModuleData d;
    d.ring = *ring;
    d.order = expr["order"].get<int>();
    if (d.order <= 0) throw InputError("module " + name + ": order must be positive");
    if (d.order > caps.max_module_order) {
      throw CapacityError("module " + name + " exceeds the module order cap");
    }
    d.add = parse_square_table(expr.at("add"), d.order, d.order, "module " + name + " add");
    d.zero = expr.value("zero", 0);
    if (ring->is_finite()) {
      d.action = parse_square_table(expr.at("action"), ring->order(), d.order,
                                    "module " + name + " action");
    } else if (expr.contains("action")) {
      throw InputError("module " + name + ": integer-ring modules take no action table");
    }
    d.label = expr.value("label", name);
    entry.module = FinModule(std::move(d));
    return entry;
  }

  throw InputError("module " + name + ": expected cyclic, sum, submodule_of or an explicit table");
}

void check_tasks(const InputDocument& doc, const Json& tasks) {
  if (!tasks.is_array()) throw InputError("tasks must be an array");
  for (const Json& t : tasks) {
    if (!t.is_object() || !t.contains("cmd") || !t["cmd"].is_string()) {
      throw InputError("each task needs a cmd string");
    }
    std::string cmd = t["cmd"].get<std::string>();
    if (cmd == "classify") {
      if (!t.contains("module") || !doc.find_module(t["module"].get<std::string>())) {
        throw InputError("classify task references an unknown module");
      }
    } else if (cmd == "check") {
      std::string property = t.value("property", "");
      if (property != "self-pure" && property != "M-pure" && property != "pure") {
        throw InputError("check task property must be self-pure, M-pure or pure");
      }
      if (!t.contains("sub") || !doc.find_module(t["sub"].get<std::string>())) {
        throw InputError("check task references an unknown submodule");
      }
      if (!t.contains("in") || !doc.find_module(t["in"].get<std::string>())) {
        throw InputError("check task references an unknown parent module");
      }
      if (property == "M-pure" &&
          (!t.contains("relative_to") || !doc.find_module(t["relative_to"].get<std::string>()))) {
        throw InputError("M-pure check task needs a resolvable relative_to module");
      }
    } else if (cmd == "verify-theorems") {
      // scope options are read by the command itself
    } else {
      throw InputError("unknown task cmd '" + cmd + "'");
    }
  }
}

}  // namespace

InputDocument parse_input(const Json& doc, const Caps& caps) {
  if (!doc.is_object()) throw InputError("input document must be a JSON object");
  InputDocument out;
  if (doc.contains("rings")) {
    if (!doc["rings"].is_object()) throw InputError("rings must be an object of named expressions");
    for (const auto& [name, expr] : doc["rings"].items()) {
      if (out.find_ring(name)) throw InputError("duplicate ring name " + name);
      out.rings.emplace_back(name, parse_ring_expr(out, name, expr, caps));
    }
  }
  if (doc.contains("modules")) {
    if (!doc["modules"].is_object()) {
      throw InputError("modules must be an object of named expressions");
    }
    for (const auto& [name, expr] : doc["modules"].items()) {
      if (out.find_module(name)) throw InputError("duplicate module name " + name);
      out.modules.push_back(parse_module_expr(out, name, expr, caps));
    }
  }
  if (doc.contains("tasks")) {
    check_tasks(out, doc["tasks"]);
    out.tasks = doc["tasks"];
  }
  return out;
}

InputDocument load_input_file(const std::string& path, const Caps& caps) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("input is not valid JSON: ") + e.what());
  }
  return parse_input(doc, caps);
}

std::vector<std::pair<std::string, ValidationReport>> validate_document(const InputDocument& doc) {
  std::vector<std::pair<std::string, ValidationReport>> out;
  for (const auto& [name, ring] : doc.rings) {
    if (ring.is_finite()) {
      out.emplace_back("ring " + name, validate(ring.table()));
    } else {
      out.emplace_back("ring " + name, ValidationReport{});
    }
  }
  for (const ModuleEntry& e : doc.modules) {
    out.emplace_back("module " + e.name, validate(e.module));
    if (e.submodule) {
      out.emplace_back("module " + e.name + " (as submodule of " + e.parent + ")",
                       validate(*e.submodule));
    }
  }
  return out;
}

}  // namespace modpure
