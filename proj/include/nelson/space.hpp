// Finite Nelson spaces: posets with an involutive dual-order isomorphism
// phi, phi-comparability, and the interpolation property.  Validation,
// the X+/X- covers, connected components, morphisms, and isomorphism search.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nelson/common.hpp"

namespace nelson {

struct NelsonSpace {
  std::uint32_t size = 0;
  std::vector<bool> leq_table;         // row-major, leq_table[x*size+y] = x <= y
  std::vector<std::uint32_t> phi;      // involutive point permutation
  std::vector<std::string> labels;     // optional point names (may be empty)

  bool leq(std::uint32_t x, std::uint32_t y) const {
    return leq_table[static_cast<std::size_t>(x) * size + y];
  }
  std::string label(std::uint32_t x) const {
    return labels.empty() ? cat("p", x) : labels[x];
  }
};

// First violated space axiom, or nullopt.  `axiom` is one of: shape,
// reflexive, antisymmetric, transitive, involution, anti-isomorphism,
// comparability, interpolation.
struct SpaceViolation {
  std::string axiom;
  std::string detail;
};
std::optional<SpaceViolation> validate_space(const NelsonSpace& s);
void require_valid_space(const NelsonSpace& s);  // throws format_error

// Points with x <= phi(x) / phi(x) <= x; their union covers the space and
// phi-fixed points lie in both.
std::vector<std::uint32_t> x_plus(const NelsonSpace& s);
std::vector<std::uint32_t> x_minus(const NelsonSpace& s);

// Connected components of the comparability graph, each sorted ascending,
// listed by ascending least point.  Components are phi-closed.
std::vector<std::vector<std::uint32_t>> components(const NelsonSpace& s);

// Induced subspace on a phi-closed point set (ascending order expected);
// point i of the result corresponds to points[i].
NelsonSpace restrict_space(const NelsonSpace& s,
                           const std::vector<std::uint32_t>& points);

// Disjoint union with no cross order; phi acts per part.
NelsonSpace disjoint_union(const std::vector<NelsonSpace>& parts);

struct SpaceMorphism {
  std::vector<std::uint32_t> map;  // source point -> target point

  std::uint32_t operator()(std::uint32_t x) const { return map[x]; }
};

// Order-preserving and phi-equivariant; on failure names the reason.
bool is_space_morphism(const NelsonSpace& source, const NelsonSpace& target,
                       const SpaceMorphism& f, std::string* why = nullptr);

bool is_space_isomorphism(const NelsonSpace& source, const NelsonSpace& target,
                          const SpaceMorphism& f);

// Backtracking search with degree/phi invariants; practical for the small
// spaces this library produces.
std::optional<SpaceMorphism> find_space_isomorphism(const NelsonSpace& a,
                                                    const NelsonSpace& b);

}  // namespace nelson
