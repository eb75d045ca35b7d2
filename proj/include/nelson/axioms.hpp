// The two equational axiomatizations of Nelson algebras, the five-valued
// characteristic identity with its equivalent forms, the derived calculation
// rules, and the classification predicates built on them.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nelson/algebra.hpp"
#include "nelson/term.hpp"

namespace nelson {

// Two independent axiom sets define the same class of algebras; both are
// first-class so their co-extensionality can be tested.  `main_eight` is the
// 8-identity set, `brignole_ten` the 10-identity set.
enum class AxiomVariant { main_eight, brignole_ten };

const char* variant_name(AxiomVariant v);  // "main" / "brignole"

// The axiom identities of a variant, in their conventional order.
std::vector<Identity> axiom_identities(AxiomVariant v);

// ((x->z)->y) -> (((y->x)->y)->y) = 1: holds exactly on the five-valued
// algebras (the variety generated by the 5-element chain).
Identity five_valued_characteristic();

// Five further identities, each equivalent to the characteristic one on
// Nelson algebras; named five-valued-form-1 .. -5.
std::vector<Identity> five_valued_equivalents();

// (x->y) \/ (y->x) = 1.
Identity linearity_identity();

struct IdentityCheck {
  Identity identity;
  std::optional<std::vector<elem>> violation;  // canonical-first, if any

  bool holds() const { return !violation.has_value(); }
};

struct AxiomReport {
  AxiomVariant variant;
  std::vector<IdentityCheck> results;

  bool all_hold() const;
};

// Checks every axiom of the variant exhaustively.  Works on raw tables:
// only shape validity (already enforced by the algebra type) is assumed.
AxiomReport check_axioms(const FiniteNelsonAlgebra& a, AxiomVariant v);

bool is_nelson_algebra(const FiniteNelsonAlgebra& a);  // main_eight all hold
bool is_five_valued(const FiniteNelsonAlgebra& a);
bool is_linear(const FiniteNelsonAlgebra& a);

// Derived calculation rules.  The plain identities are checked exhaustively;
// conditional rules are checked as quantified implications over all tuples;
// the one set-level rule sweeps all subset pairs up to
// `exhaustive_subset_limit` carrier elements and falls back to seeded random
// subset pairs above it.
struct DerivedRuleOptions {
  std::uint32_t exhaustive_subset_limit = 12;
  std::uint64_t sample_count = 10000;
  std::uint64_t seed = 0x9E3779B97F4A7C15ull;
};

struct DerivedRuleResult {
  std::string name;
  std::string kind;  // "identity", "conditional", "biconditional", "set-level"
  bool holds = false;
  std::string witness;  // empty when the rule holds

  // True when the rule was decided by sampling rather than a full sweep.
  bool sampled = false;
};

std::vector<DerivedRuleResult> check_derived_rules(
    const FiniteNelsonAlgebra& a, const DerivedRuleOptions& options = {});

bool all_derived_rules_hold(const FiniteNelsonAlgebra& a);

}  // namespace nelson
