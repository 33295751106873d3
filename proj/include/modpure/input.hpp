#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modpure/report.hpp"

namespace modpure {

// Raised for malformed documents and unresolved references; the CLI maps it
// to the validation-failure exit code.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

struct ModuleEntry {
  std::string name;
  FinModule module;  // for submodule definitions this is the induced view
  std::optional<Submodule> submodule;
  std::string parent;  // parent module name when defined as a submodule
};

struct InputDocument {
  std::vector<std::pair<std::string, BaseRing>> rings;
  std::vector<ModuleEntry> modules;
  Json tasks = Json::array();

  const BaseRing* find_ring(const std::string& name) const;
  const ModuleEntry* find_module(const std::string& name) const;
};

// Parses a document of the form
//   {"rings": {name: expr, ...}, "modules": {name: expr, ...}, "tasks": [...]}
// Ring expressions: "integers", {"cyclic": n}, {"product": [ref, ref]},
// {"table": {...}}. Module expressions: {"ring": ref, "cyclic": [d, ...]},
// {"sum": [ref, ...]}, {"submodule_of": ref, "elements": [...]} or
// {"submodule_of": ref, "generators": [...]}, or an explicit table
// {"ring": ref, "order": n, "add": [[...]], "zero": z, "action": [[...]]}.
// Names resolve to earlier definitions only.
InputDocument parse_input(const Json& doc, const Caps& caps = {});

InputDocument load_input_file(const std::string& path, const Caps& caps = {});

// Validation reports for every declared structure, in declaration order.
std::vector<std::pair<std::string, ValidationReport>> validate_document(const InputDocument& doc);

}  // namespace modpure
