// Terms in the signature (1, 0, ~, /\, \/, ->) over indexed variables, their
// evaluation in a finite algebra, and identities (pairs of terms) with an
// exhaustive counterexample search.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nelson/algebra.hpp"

namespace nelson {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { variable, top, bottom, neg, meet, join, imp };

  Kind kind;
  int var = -1;          // variable index, Kind::variable only
  std::string var_name;  // print name, Kind::variable only
  TermPtr left, right;   // right is null for neg
};

// Default print names: x, y, z, w, then v4, v5, ...
std::string default_variable_name(int index);

TermPtr make_variable(int index);
TermPtr make_variable(int index, std::string name);
TermPtr make_top();
TermPtr make_bottom();
TermPtr make_neg(TermPtr a);
TermPtr make_meet(TermPtr a, TermPtr b);
TermPtr make_join(TermPtr a, TermPtr b);
TermPtr make_imp(TermPtr a, TermPtr b);

// 1 + the largest variable index occurring in the term (0 for closed terms).
int variable_count(const Term& t);

elem evaluate(const Term& t, const FiniteNelsonAlgebra& a,
              const std::vector<elem>& assignment);

// Renders with minimal parentheses; precedence ~ > /\ > \/ > ->, with ->
// associating to the right and /\ , \/ to the left.
std::string to_string(const Term& t);

struct Identity {
  std::string name;
  TermPtr lhs, rhs;

  int variable_count() const;
};

// First assignment (in lexicographic order, the last variable varying
// fastest) where the two sides differ; nullopt when the identity holds.
std::optional<std::vector<elem>> find_identity_violation(
    const FiniteNelsonAlgebra& a, const Identity& identity);

// As above but restricted to `samples` pseudo-random assignments drawn from
// the given seed; used where the carrier is too large to sweep.
std::optional<std::vector<elem>> find_identity_violation_sampled(
    const FiniteNelsonAlgebra& a, const Identity& identity,
    std::uint64_t seed, std::uint64_t samples);

}  // namespace nelson
