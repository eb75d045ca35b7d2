#include "nelson/term.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace nelson {

std::string default_variable_name(int index) {
  static const char* kFirst[] = {"x", "y", "z", "w"};
  if (index >= 0 && index < 4) return kFirst[index];
  return cat("v", index);
}

TermPtr make_variable(int index) {
  return make_variable(index, default_variable_name(index));
}

TermPtr make_variable(int index, std::string name) {
  if (index < 0) throw format_error("variable index must be non-negative");
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::variable;
  t->var = index;
  t->var_name = std::move(name);
  return t;
}

namespace {

TermPtr make_leaf(Term::Kind kind) {
  auto t = std::make_shared<Term>();
  t->kind = kind;
  return t;
}

TermPtr make_node(Term::Kind kind, TermPtr a, TermPtr b) {
  if (!a || (!b && kind != Term::Kind::neg)) {
    throw format_error("term node built from a null child");
  }
  auto t = std::make_shared<Term>();
  t->kind = kind;
  t->left = std::move(a);
  t->right = std::move(b);
  return t;
}

}  // namespace

TermPtr make_top() { return make_leaf(Term::Kind::top); }
TermPtr make_bottom() { return make_leaf(Term::Kind::bottom); }
TermPtr make_neg(TermPtr a) {
  return make_node(Term::Kind::neg, std::move(a), nullptr);
}
TermPtr make_meet(TermPtr a, TermPtr b) {
  return make_node(Term::Kind::meet, std::move(a), std::move(b));
}
TermPtr make_join(TermPtr a, TermPtr b) {
  return make_node(Term::Kind::join, std::move(a), std::move(b));
}
TermPtr make_imp(TermPtr a, TermPtr b) {
  return make_node(Term::Kind::imp, std::move(a), std::move(b));
}

int variable_count(const Term& t) {
  switch (t.kind) {
    case Term::Kind::variable:
      return t.var + 1;
    case Term::Kind::top:
    case Term::Kind::bottom:
      return 0;
    case Term::Kind::neg:
      return variable_count(*t.left);
    default:
      return std::max(variable_count(*t.left), variable_count(*t.right));
  }
}

elem evaluate(const Term& t, const FiniteNelsonAlgebra& a,
              const std::vector<elem>& assignment) {
  switch (t.kind) {
    case Term::Kind::variable:
      if (static_cast<std::size_t>(t.var) >= assignment.size()) {
        throw format_error(cat("assignment provides ", assignment.size(),
                               " values but the term uses variable ",
                               t.var_name));
      }
      return assignment[t.var];
    case Term::Kind::top:
      return a.top();
    case Term::Kind::bottom:
      return a.bottom();
    case Term::Kind::neg:
      return a.neg(evaluate(*t.left, a, assignment));
    case Term::Kind::meet:
      return a.meet(evaluate(*t.left, a, assignment),
                    evaluate(*t.right, a, assignment));
    case Term::Kind::join:
      return a.join(evaluate(*t.left, a, assignment),
                    evaluate(*t.right, a, assignment));
    case Term::Kind::imp:
      return a.imp(evaluate(*t.left, a, assignment),
                   evaluate(*t.right, a, assignment));
  }
  throw std::logic_error("unreachable term kind");
}

namespace {

// Precedence levels for printing: -> 0, | 1, & 2, ~ 3, atoms 4.
int precedence(Term::Kind k) {
  switch (k) {
    case Term::Kind::imp:
      return 0;
    case Term::Kind::join:
      return 1;
    case Term::Kind::meet:
      return 2;
    case Term::Kind::neg:
      return 3;
    default:
      return 4;
  }
}

void render(const Term& t, int min_level, std::ostringstream& out) {
  const int level = precedence(t.kind);
  const bool parens = level < min_level;
  if (parens) out << '(';
  switch (t.kind) {
    case Term::Kind::variable:
      out << t.var_name;
      break;
    case Term::Kind::top:
      out << '1';
      break;
    case Term::Kind::bottom:
      out << '0';
      break;
    case Term::Kind::neg:
      out << '~';
      render(*t.left, 3, out);
      break;
    case Term::Kind::meet:
      render(*t.left, 2, out);
      out << " /\\ ";
      render(*t.right, 3, out);
      break;
    case Term::Kind::join:
      render(*t.left, 1, out);
      out << " \\/ ";
      render(*t.right, 2, out);
      break;
    case Term::Kind::imp:
      render(*t.left, 1, out);
      out << " -> ";
      render(*t.right, 0, out);
      break;
  }
  if (parens) out << ')';
}

}  // namespace

std::string to_string(const Term& t) {
  std::ostringstream out;
  render(t, 0, out);
  return out.str();
}

int Identity::variable_count() const {
  return std::max(nelson::variable_count(*lhs), nelson::variable_count(*rhs));
}

std::optional<std::vector<elem>> find_identity_violation(
    const FiniteNelsonAlgebra& a, const Identity& identity) {
  const int vars = identity.variable_count();
  std::vector<elem> assignment(static_cast<std::size_t>(vars), 0);
  while (true) {
    if (evaluate(*identity.lhs, a, assignment) !=
        evaluate(*identity.rhs, a, assignment)) {
      return assignment;
    }
    // Advance the odometer, last variable fastest.
    int pos = vars - 1;
    while (pos >= 0) {
      if (assignment[pos] + 1u < a.size()) {
        ++assignment[pos];
        break;
      }
      assignment[pos] = 0;
      --pos;
    }
    if (pos < 0) return std::nullopt;
  }
}

std::optional<std::vector<elem>> find_identity_violation_sampled(
    const FiniteNelsonAlgebra& a, const Identity& identity,
    std::uint64_t seed, std::uint64_t samples) {
  const int vars = identity.variable_count();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, a.size() - 1);
  std::vector<elem> assignment(static_cast<std::size_t>(vars), 0);
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (int i = 0; i < vars; ++i) {
      assignment[i] = static_cast<elem>(pick(rng));
    }
    if (evaluate(*identity.lhs, a, assignment) !=
        evaluate(*identity.rhs, a, assignment)) {
      return assignment;
    }
  }
  return std::nullopt;
}

}  // namespace nelson
