// Duality between finite Nelson algebras and finite Nelson spaces:
// spectrum (prime filters ordered by inclusion, phi from the involution
// P |-> complement of ~P), dual algebra (up-sets under the pointwise
// operations), contravariant action on maps, and both roundtrips.

#pragma once

#include <cstdint>
#include <vector>

#include "nelson/algebra.hpp"
#include "nelson/bitset.hpp"
#include "nelson/space.hpp"

namespace nelson {

struct SpectrumResult {
  NelsonSpace space;           // point i corresponds to points[i]
  std::vector<Bitset> points;  // prime filters in canonical order
};

// Prime-filter space of a Nelson algebra.  The result is validated; a
// violation (possible only for tables that are not a Nelson algebra)
// surfaces as format_error.
SpectrumResult spectrum(const FiniteNelsonAlgebra& a);

struct DualBudget {
  // Cap on the number of up-sets: the dual algebra stores quadratic
  // operation tables, so the carrier is kept deliberately small.
  std::size_t max_size = 4096;
};

struct DualAlgebraResult {
  FiniteNelsonAlgebra algebra;       // element i corresponds to carrier_sets[i]
  std::vector<Bitset> carrier_sets;  // up-sets in canonical order
};

// Algebra of up-sets of a Nelson space: meet/join are intersection/union,
// ~U is the complement of phi[U], and U -> V is the complement of the
// down-closure of U n phi[U] n (X \ V).
DualAlgebraResult dual_algebra(const NelsonSpace& s, const DualBudget& budget = {});

// All up-sets of the order, canonically ordered; throws resource_error
// past max_size.
std::vector<Bitset> up_sets(const NelsonSpace& s, std::size_t max_size = 100000);

// Down-closure and phi-image of a point set.
Bitset down_closure(const NelsonSpace& s, const Bitset& u);
Bitset phi_image(const NelsonSpace& s, const Bitset& u);

// Dual of a homomorphism h : A -> B: the space morphism
// spectrum(B) -> spectrum(A), P |-> h^{-1}(P).  Verified before returning.
SpaceMorphism dual_of_hom(const FiniteNelsonAlgebra& a, const FiniteNelsonAlgebra& b,
                          const Homomorphism& h, const SpectrumResult& spec_a,
                          const SpectrumResult& spec_b);

// Dual of a space morphism f : S -> T: the homomorphism
// dual_algebra(T) -> dual_algebra(S), U |-> f^{-1}(U).  Verified.
Homomorphism dual_of_morphism(const NelsonSpace& s, const NelsonSpace& t,
                              const SpaceMorphism& f, const DualAlgebraResult& dual_s,
                              const DualAlgebraResult& dual_t);

struct RoundtripResult {
  SpectrumResult spec;
  DualAlgebraResult dual;
  Homomorphism iso;  // x |-> the up-set {P : x in P}, as an index map
};

// A  ~~>  dual_algebra(spectrum(A)) via x |-> {P : x in P}; throws
// format_error if the map fails to be an isomorphism.
RoundtripResult roundtrip_check(const FiniteNelsonAlgebra& a);

struct SpaceRoundtripResult {
  DualAlgebraResult dual;
  SpectrumResult respec;  // spectrum of the dual algebra
  SpaceMorphism iso;      // p |-> the prime filter {U : p in U}
};

// S  ~~>  spectrum(dual_algebra(S)) via p |-> {U : p in U}; throws
// format_error if the map fails to be an isomorphism.
SpaceRoundtripResult space_roundtrip_check(const NelsonSpace& s,
                                           const DualBudget& budget = {});

}  // namespace nelson
