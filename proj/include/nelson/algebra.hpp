// Finite Nelson algebras as explicit operation tables, plus the basic
// constructions: chains, finite products, generated subalgebras,
// homomorphisms and isomorphism search.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nelson/bitset.hpp"
#include "nelson/common.hpp"

namespace nelson {

// Carrier is 0..size-1.  Only the shape is validated here (table lengths and
// entry ranges); whether the tables satisfy the algebra laws is a separate
// question answered by check_axioms, so corrupted tables can be represented
// and examined.
class FiniteNelsonAlgebra {
 public:
  FiniteNelsonAlgebra(std::uint32_t size, elem top, std::vector<elem> neg,
                      std::vector<elem> meet, std::vector<elem> join,
                      std::vector<elem> imp);

  std::uint32_t size() const { return size_; }
  elem top() const { return top_; }
  elem bottom() const { return neg_[top_]; }

  elem neg(elem a) const { return neg_[a]; }
  elem meet(elem a, elem b) const { return meet_[a * size_ + b]; }
  elem join(elem a, elem b) const { return join_[a * size_ + b]; }
  elem imp(elem a, elem b) const { return imp_[a * size_ + b]; }

  // The lattice order induced by meet.  Meaningful once the absorption and
  // distribution laws hold; callers that only have raw tables should treat
  // it as "meet(a,b) == a" and nothing more.
  bool leq(elem a, elem b) const { return meet(a, b) == a; }

  const std::vector<elem>& neg_table() const { return neg_; }
  const std::vector<elem>& meet_table() const { return meet_; }
  const std::vector<elem>& join_table() const { return join_; }
  const std::vector<elem>& imp_table() const { return imp_; }

 private:
  std::uint32_t size_;
  elem top_;
  std::vector<elem> neg_, meet_, join_, imp_;
};

// The n-element chain 0 < 1 < ... < n-1 with involutive negation
// j -> n-1-j and the implication
//   a -> b  =  top            if a <= b or a <= neg(a),
//           =  neg(a) join b  otherwise.
FiniteNelsonAlgebra make_chain(std::uint32_t n);

// Direct product with pointwise operations.  Tuples are indexed row-major
// with the first factor most significant; tuple_index/tuple_of convert.
// Refuses products whose carrier exceeds max_size (the operation tables are
// quadratic in it).
FiniteNelsonAlgebra product(const std::vector<FiniteNelsonAlgebra>& factors,
                            std::uint32_t max_size = 4096);
elem tuple_index(const std::vector<FiniteNelsonAlgebra>& factors,
                 const std::vector<elem>& tuple);
std::vector<elem> tuple_of(const std::vector<FiniteNelsonAlgebra>& factors,
                           elem index);

// A homomorphism is carried as its value table; source/target travel
// alongside in function signatures so the struct stays copyable and cheap.
struct Homomorphism {
  std::vector<elem> map;

  elem operator()(elem x) const { return map[x]; }
};

struct HomomorphismViolation {
  std::string op;  // "top", "neg", "meet", "join", "imp"
  elem x = 0, y = 0;
  elem got = 0, want = 0;

  std::string describe() const;
};

bool is_homomorphism(const FiniteNelsonAlgebra& source,
                     const FiniteNelsonAlgebra& target, const Homomorphism& h,
                     HomomorphismViolation* why = nullptr);

bool is_surjective(const FiniteNelsonAlgebra& target, const Homomorphism& h);

// Kernel {x : h(x) = top}, as a subset of the source carrier.
Bitset kernel(const FiniteNelsonAlgebra& source,
              const FiniteNelsonAlgebra& target, const Homomorphism& h);

Homomorphism compose(const Homomorphism& first, const Homomorphism& second);

// Subalgebra generated by `seeds` (always contains top and bottom).
// `elements` lists the members by ascending ambient index; `algebra` is the
// re-indexed table algebra and `inclusion` the embedding into the ambient.
struct Subalgebra {
  FiniteNelsonAlgebra algebra;
  std::vector<elem> elements;
  Homomorphism inclusion;
};

Subalgebra generated_subalgebra(const FiniteNelsonAlgebra& ambient,
                                const std::vector<elem>& seeds);

// Small generating set, greedy: preferring a single generator, then growing
// by the least element outside the current closure.
std::vector<elem> small_generating_set(const FiniteNelsonAlgebra& a);

// Isomorphism search: backtracks over images of a small generating set of
// `a`, forcing the rest of the map through the operations.  Practical for
// the sizes this library materializes (generated algebras, chains,
// products of chains).
std::optional<Homomorphism> find_isomorphism(const FiniteNelsonAlgebra& a,
                                             const FiniteNelsonAlgebra& b);

}  // namespace nelson
