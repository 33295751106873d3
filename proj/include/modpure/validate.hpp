#pragma once

#include <string>
#include <vector>

#include "modpure/ideal.hpp"
#include "modpure/module.hpp"
#include "modpure/ring.hpp"

namespace modpure {

enum class IssueKind { Dimension, Axiom };

struct ValidationIssue {
  IssueKind kind = IssueKind::Axiom;
  std::string axiom;                // e.g. "mul-identity"
  std::vector<long long> witness;   // offending element indices
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

ValidationReport validate(const RingTable& t);
ValidationReport validate(const FinModule& m);
ValidationReport validate(const Submodule& s);
ValidationReport validate(const LeftIdeal& l);
ValidationReport validate(const IdealHom& f);
ValidationReport validate(const ModHom& h);

}  // namespace modpure
