// The free five-valued Nelson algebra on n generators, realized through its
// dual space: index functions (five-valued digit assignments to the
// generators), the free space with its mirror involution, generator up-sets,
// cardinality counts, the evaluation rule, and extension of generator
// assignments to homomorphisms.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nelson/algebra.hpp"
#include "nelson/bitset.hpp"
#include "nelson/duality.hpp"
#include "nelson/space.hpp"

namespace nelson {

using big_int = boost::multiprecision::cpp_int;

// A digit 0..4 per generator: simultaneously an assignment of the
// generators into the five-element chain and a point name of the free
// space.  Rendered as a digit string, e.g. "042".
struct IndexFunction {
  std::vector<std::uint8_t> digits;

  std::string to_string() const;
  std::uint32_t base5_index() const;  // first digit most significant

  bool operator==(const IndexFunction& o) const { return digits == o.digits; }
  bool operator!=(const IndexFunction& o) const { return digits != o.digits; }
};

IndexFunction function_of_index(std::uint32_t generators, std::uint32_t index);

// Which chain the function's digit set lands in:
//   two   — digits within {0,4}
//   three — digits within {0,2,4}, at least one 2
//   four  — digits within {0,1,3,4}, at least one of 1,3
//   five  — at least one of 1,3 and at least one 2
enum class FunctionClass { two, three, four, five };
const char* function_class_name(FunctionClass c);
FunctionClass classify_function(const IndexFunction& f);

// Digits within {0,2,4}: the functions that label components and appear as
// maximal points of the inner part of the free space.
bool is_outer(const IndexFunction& f);

// Digitwise projection 0,1 -> 0;  2 -> 2;  3,4 -> 4.  Idempotent onto the
// outer functions.
IndexFunction outer_projection(const IndexFunction& f);

// The mirror order on the outer shell: h sits strictly below f when h != f,
// h_i tracks f_i digitwise (f_i = 0 -> h_i in {0,1}; f_i = 2 -> h_i = 2;
// f_i = 4 -> h_i in {3,4}).  f must be outer.
bool strictly_below(const IndexFunction& h, const IndexFunction& f);

// Dual space of the free five-valued algebra on n generators.  Point
// base5(h) is the inner point named by h; the mirrors of the non-Boolean
// functions follow, in the same base-5 order.  phi swaps a point with its
// mirror and fixes the Boolean inner points.
struct FreeSpaceDescription {
  std::uint32_t generators = 0;
  NelsonSpace space;
  std::vector<std::uint32_t> mirror_index;  // 5^n entries; UINT32_MAX when Boolean
  std::vector<Bitset> generator_sets;       // up-set U_i representing generator i
};

// n in 1..4 (the leq table is quadratic in 2*5^n - 2^n points).
FreeSpaceDescription free_space(std::uint32_t generators);

struct FreeComponent {
  IndexFunction maximal;              // outer function labeling the component
  std::vector<std::uint32_t> points;  // ascending point indices
};

// Connected components, sorted by the digit string of their maximal
// function.  There are 3^n of them.
std::vector<FreeComponent> free_components(const FreeSpaceDescription& fs);

// Number of up-sets, by divide and conquer on a maximal point p:
//   count(P) = count(P minus {p}) + count(P minus down(p)),
// memoized on the remaining point set.
big_int count_up_sets_of(const NelsonSpace& s);

// Cardinality of the free algebra on n generators, closed form:
//   2^(2^(2n)) * prod_{k=1..n} (2^(2^(n-k)) + 1)^(C(n,k) * 2^(n-k)).
// n in 1..10: the result has about 5^n bits, so larger n exceed the
// numeric budget (n = 10 already prints ~2.9 million digits).
big_int count_free(std::uint32_t generators);

// The same cardinality as the product of per-component up-set counts of the
// free space; n in 1..4.
big_int count_via_components(std::uint32_t generators);

// Value at the assignment f of the free-algebra element represented by the
// up-set u: walk the chain  P_f <= P_{outer f} <= mirror(outer f) <=
// mirror(f)  from the bottom; the first chain point inside u scores
// 4, 3, 2, 1 respectively, and 0 when u misses the chain.
std::uint8_t evaluate_up_set(const FreeSpaceDescription& fs, const Bitset& u,
                             const IndexFunction& f);

// Extends generator images to the homomorphism from the materialized free
// algebra (the dual algebra of its space, carrier indices aligned with
// `materialized.carrier_sets`) into a five-valued target.  The map sends an
// up-set to the unique target element whose digit under every irreducible
// deductive system of the target matches the up-set's evaluation; the
// result is verified to be a homomorphism agreeing with `images` on the
// generators.
Homomorphism extend_map(const FreeSpaceDescription& fs,
                        const DualAlgebraResult& materialized,
                        const FiniteNelsonAlgebra& target,
                        const std::vector<elem>& images);

}  // namespace nelson
