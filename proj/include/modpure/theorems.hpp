#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modpure/purity.hpp"
#include "modpure/zoo.hpp"

namespace modpure {

// A violation is treated as an implementation bug, never as a mathematical
// discovery: every checked statement is proven.
struct TheoremViolation {
  std::string instance;
  std::string witness;
};

struct TheoremReport {
  std::string id;
  std::string statement;
  long long instances = 0;
  std::vector<TheoremViolation> violations;
  std::vector<std::string> notes;
  std::int64_t elapsed_us = 0;

  bool ok() const { return violations.empty(); }
};

TheoremReport check_transitivity(const ZooScope& scope, int jobs = 1);
TheoremReport check_restriction(const ZooScope& scope, int jobs = 1);
TheoremReport check_summand_closure(const ZooScope& scope, int jobs = 1);
TheoremReport check_direct_sum(const ZooScope& scope, int copies, int jobs = 1);
TheoremReport check_noetherian_equivalence(const ZooScope& scope, int jobs = 1);
TheoremReport check_regular_equivalence(const std::vector<RingSpec>& rings, const ZooScope& scope,
                                        int jobs = 1);
TheoremReport check_semisimple(const std::vector<RingSpec>& rings, const ZooScope& scope,
                               int jobs = 1);
TheoremReport check_product_decomposition(const RingSpec& r1, const RingSpec& r2,
                                          const ZooScope& scope, int jobs = 1);

std::vector<TheoremReport> run_all_theorems(const ZooScope& scope, int jobs = 1);

std::string describe(const FailingPair& fail);

}  // namespace modpure
