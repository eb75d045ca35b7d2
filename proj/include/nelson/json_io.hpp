// JSON serialization of algebras and spaces.
//
// Algebra: {"size": m, "top": t, "neg": [...], "meet": [[...]], "join":
// [[...]], "imp": [[...]]} — binary operations as size rows of size entries.
// Space: {"size": k, "leq": [[bool...]], "phi": [...]}.
//
// Readers reject unknown fields and report the offending field path;
// writers emit the fields in the order above, deterministically.

#pragma once

#include <iosfwd>
#include <string>

#include "nelson/algebra.hpp"
#include "nelson/space.hpp"

namespace nelson {

// `origin` names the source in error messages (a path or "<stdin>").
FiniteNelsonAlgebra read_algebra_json(std::istream& in, const std::string& origin);
FiniteNelsonAlgebra read_algebra_file(const std::string& path);

NelsonSpace read_space_json(std::istream& in, const std::string& origin);
NelsonSpace read_space_file(const std::string& path);

std::string algebra_to_json(const FiniteNelsonAlgebra& a);
std::string space_to_json(const NelsonSpace& s);

}  // namespace nelson
