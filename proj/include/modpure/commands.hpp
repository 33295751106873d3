#pragma once

#include <ostream>
#include <string>

#include "modpure/input.hpp"
#include "modpure/report.hpp"
#include "modpure/zoo.hpp"

namespace modpure {

// Exit codes shared by the CLI: 0 success, 2 validation failure, 3 capacity
// overflow, 4 theorem violation (an implementation bug).
constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitViolation = 4;

struct CmdOptions {
  std::string format = "text";  // text | json
  Caps caps;
  ZooScope scope = ZooScope::default_scope();
  int jobs = 1;
};

int cmd_classify(const InputDocument& doc, const std::string& module_name, const CmdOptions& opt,
                 std::ostream& out);
int cmd_check(const InputDocument& doc, const std::string& property, const std::string& sub_name,
              const std::string& parent_name, const std::string& relative_to,
              const CmdOptions& opt, std::ostream& out);
int cmd_verify_theorems(const CmdOptions& opt, std::ostream& out);
int cmd_zoo_list(const std::string& ring_spec, int catalog_max, const CmdOptions& opt,
                 std::ostream& out);
int cmd_validate(const InputDocument& doc, const CmdOptions& opt, std::ostream& out);

}  // namespace modpure
