#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modpure/caps.hpp"
#include "modpure/filter.hpp"
#include "modpure/ideal.hpp"
#include "modpure/module.hpp"

namespace modpure {

// Maps R -> M are exactly l |-> l*m, so an extension of f : L -> M is an
// element m with l*m = f(l) for every l in L.
struct ExtensionWitness {
  int element = 0;
};

std::optional<ExtensionWitness> extends_to_ring(const IdealHom& f);

// A qualifying map that fails to extend: the ideal together with the map.
struct FailingPair {
  LeftIdeal ideal;
  IdealHom map;
};

struct PropertyVerdict {
  bool holds = true;
  std::optional<FailingPair> witness;
  std::vector<std::string> notes;
};

struct EquationRow {
  std::vector<long long> coeffs;  // finite rings: element indices; over Z: 0..exp(B)-1
  int rhs = 0;                    // parent element index, always inside the submodule
};

struct EquationWitness {
  int vars = 0;
  std::vector<EquationRow> rows;
  std::vector<int> solution_in_parent;  // one solution over the ambient module
};

struct PurityVerdict {
  bool holds = true;
  std::optional<Submodule> complement;    // summand witness
  std::optional<FailingPair> failing;     // self/M-purity obstruction
  std::optional<EquationWitness> equations;
  std::vector<std::string> notes;
};

// Generator list for the integer-ring quantifier: 0, 1 and the divisors of
// the filter exponent. A qualifying nonzero map n Z -> A has kernel
// (n*ord(a))Z, so membership in the filter forces n to divide the exponent;
// a wider sweep is cross-checked in the tests.
std::vector<long long> integer_scan_gens(long long filter_exponent);

// Scans fg left ideals (all ideals of a finite ring; `z_gens` over Z) and all
// maps into `a` whose kernel lies in `filt` (no kernel condition when null),
// returning the first map with no extension to the whole ring. Deterministic:
// ideals in enumeration order, maps in hom_set order.
std::optional<FailingPair> find_unextendable(const FinModule& a, const AnnFilter* filt,
                                             const std::vector<long long>& z_gens,
                                             const Caps& caps = {});

// Same scan, but hunting for a qualifying map into the submodule that extends
// into the parent while extending nowhere inside the submodule itself.
std::optional<FailingPair> find_relative_obstruction(const Submodule& a, const AnnFilter& filt,
                                                     const Caps& caps = {});

PurityVerdict is_self_pure(const Submodule& a, const Caps& caps = {});
PurityVerdict is_M_pure(const Submodule& a, const FinModule& m, const Caps& caps = {});

PropertyVerdict is_absolutely_self_pure(const FinModule& a, const Caps& caps = {});
PropertyVerdict is_quasi_injective(const FinModule& a, const Caps& caps = {});
PropertyVerdict is_injective_baer(const FinModule& a, const Caps& caps = {});
PropertyVerdict is_absolutely_pure(const FinModule& a, const Caps& caps = {});

// Bounded refutation search for absolute purity over a finite ring: maps from
// fg submodules of free modules R^k that do not extend to the free module.
// A witness is conclusive; absence within the bounds is not.
struct FpWitness {
  FinModule free_module;
  Submodule k;
  ModHom map;  // view of k -> a
};
struct FpOracleResult {
  std::optional<FpWitness> witness;
  long long maps_checked = 0;
  int max_rank = 0;
  int max_gens = 0;
};
FpOracleResult bounded_fp_oracle(const FinModule& a, int max_rank, int max_gens,
                                 const Caps& caps = {});

// Purity via the direct-summand reduction (valid for finite modules, which
// are pure-injective). A failed verdict carries an equation-system witness
// found by the bounded oracle when one exists within the default bounds.
PurityVerdict is_pure(const Submodule& a, const Caps& caps = {});

// Enumerates linear systems sum_j r_ij x_j = a_i with constants inside the
// submodule that are solvable in the parent; returns the first one (in
// coefficient-lexicographic order) with no solution inside the submodule.
std::optional<EquationWitness> bounded_equational_purity(const Submodule& a, int max_vars,
                                                         int max_eqs, const Caps& caps = {});

struct RingPropertyVerdict {
  bool holds = true;
  std::optional<LeftIdeal> witness;  // non-summand (principal) ideal
};
RingPropertyVerdict is_regular_ring(const BaseRing& r, const Caps& caps = {});
RingPropertyVerdict is_semisimple_ring(const BaseRing& r, const Caps& caps = {});

struct ClassificationRecord {
  std::string label;
  bool injective = false;
  bool absolutely_pure = false;
  bool quasi_injective = false;
  bool absolutely_self_pure = false;
  std::optional<FailingPair> injective_witness;
  std::optional<FailingPair> absolutely_pure_witness;
  std::optional<FailingPair> quasi_injective_witness;
  std::optional<FailingPair> absolutely_self_pure_witness;
  std::vector<std::string> notes;
};

ClassificationRecord classify(const FinModule& a, const Caps& caps = {});

}  // namespace modpure
