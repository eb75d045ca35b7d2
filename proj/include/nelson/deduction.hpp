// Filters, prime filters, deductive systems and their taxonomy, the
// Birula-Rasiowa involution, quotients with their chain classification, and
// the subdirect representation embedding.

#pragma once

#include <optional>
#include <vector>

#include "nelson/algebra.hpp"
#include "nelson/bitset.hpp"

namespace nelson {

bool is_filter(const FiniteNelsonAlgebra& a, const Bitset& s);
bool is_prime_filter(const FiniteNelsonAlgebra& a, const Bitset& s);

// Contains top and is closed under modus ponens (x, x->y in D imply y in D).
bool is_deductive_system(const FiniteNelsonAlgebra& a, const Bitset& s);

// All filters / prime filters, sorted by canonical bitset value.  In a
// finite lattice every filter is principal, so these lists are linear in the
// carrier, not exponential.
std::vector<Bitset> filters(const FiniteNelsonAlgebra& a);
std::vector<Bitset> prime_filters(const FiniteNelsonAlgebra& a);

// P |-> complement of { x : ~x in P }.  An involutive order
// anti-isomorphism on prime filters; rejects non-prime input.
Bitset birula_rasiowa(const FiniteNelsonAlgebra& a, const Bitset& p);

// Least deductive system containing the seed.
Bitset generated_ds(const FiniteNelsonAlgebra& a, const std::vector<elem>& seed);

struct DeductiveSystemInfo {
  Bitset ds;
  bool is_proper = false;
  bool is_maximal = false;
  bool is_irreducible = false;
  bool is_completely_irreducible = false;
  std::optional<elem> bounded_to;  // set iff completely irreducible
};

// Every deductive system with its taxonomy, canonical order.  The budget
// caps the filter count the enumeration is willing to walk.
std::vector<DeductiveSystemInfo> deductive_systems(
    const FiniteNelsonAlgebra& a, std::uint64_t filter_budget = 1u << 20);

// { P prime : P subseteq birula_rasiowa(P) } — the irreducible deductive
// systems, by the prime-filter characterization.  Polynomial; the scalable
// path for large algebras.
std::vector<Bitset> irreducibles_via_primes(const FiniteNelsonAlgebra& a);

// True iff every completely irreducible DS is maximal or has exactly one
// proper DS strictly above it.  On Nelson algebras this is equivalent to
// five-valuedness; exposed so the equivalence is testable on a corpus.
bool five_valued_ds_condition(const FiniteNelsonAlgebra& a);

struct QuotientResult {
  FiniteNelsonAlgebra quotient;
  Homomorphism natural_epi;
  std::vector<std::vector<elem>> classes;  // sorted by least member
};

// Quotient by the congruence  x ~ y  iff  x->y, y->x, ~x->~y, ~y->~x all
// lie in D.  Class indices are assigned by ascending least member.
QuotientResult quotient(const FiniteNelsonAlgebra& a, const Bitset& ds);

enum class ChainTag { c2, c3, c4, c5 };
const char* chain_tag_name(ChainTag t);
std::uint32_t chain_tag_size(ChainTag t);

struct QuotientClassification {
  ChainTag tag;
  Bitset maximal;  // the unique maximal DS above the input
  // Predicted congruence classes, top class first; concatenation is a
  // partition of the carrier.
  std::vector<std::vector<elem>> predicted_classes;
};

// For a five-valued algebra and an irreducible D, predicts the isomorphism
// type of the quotient (a chain with 2..5 elements) and its classes from
// the position of D relative to its maximal extension M and the involution
// image of M — without building the quotient.
QuotientClassification classify_quotient_by_irreducible(
    const FiniteNelsonAlgebra& a, const Bitset& d);

struct RepresentationResult {
  std::vector<Bitset> family;  // irreducible DS used, canonical order
  std::vector<FiniteNelsonAlgebra> factors;  // quotients, same order
  FiniteNelsonAlgebra product_algebra;
  Homomorphism embedding;  // injective into product_algebra
};

// Subdirect representation x |-> (class of x in A/D) over D in the
// irreducible family; injective because the family intersects to {top}.
RepresentationResult representation_embedding(const FiniteNelsonAlgebra& a,
                                              std::uint32_t max_product_size =
                                                  kMaxCarrier + 1u);

// Given epimorphisms h1 : a -> b1 and h2 : a -> b2 with
// kernel(h1) included in kernel(h2), the unique h : b1 -> b2 with
// h(h1(x)) = h2(x); an isomorphism when the kernels coincide.
Homomorphism factor_epimorphism(const FiniteNelsonAlgebra& a,
                                const FiniteNelsonAlgebra& b1,
                                const Homomorphism& h1,
                                const FiniteNelsonAlgebra& b2,
                                const Homomorphism& h2);

}  // namespace nelson
