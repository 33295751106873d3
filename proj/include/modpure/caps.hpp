#pragma once

#include <stdexcept>
#include <string>

namespace modpure {

// Enumeration size limits. Exceeding a cap raises CapacityError; results are
// never silently truncated.
struct Caps {
  int max_ring_order = 64;
  int max_module_order = 64;
  int max_generators = 4;
  int max_direct_sum_order = 256;
};

class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace modpure
