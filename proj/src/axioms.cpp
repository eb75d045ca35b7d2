#include "nelson/axioms.hpp"

#include <algorithm>
#include <random>

#include "nelson/bitset.hpp"

namespace nelson {

namespace {

TermPtr X() { return make_variable(0); }
TermPtr Y() { return make_variable(1); }
TermPtr Z() { return make_variable(2); }

// Weak negation: x -> 0.
TermPtr wneg(TermPtr t) { return make_imp(std::move(t), make_bottom()); }

Identity ident(std::string name, TermPtr lhs, TermPtr rhs) {
  return Identity{std::move(name), std::move(lhs), std::move(rhs)};
}

}  // namespace

const char* variant_name(AxiomVariant v) {
  return v == AxiomVariant::main_eight ? "main" : "brignole";
}

std::vector<Identity> axiom_identities(AxiomVariant v) {
  std::vector<Identity> out;
  const Identity absorption =
      ident("absorption", make_meet(X(), make_join(X(), Y())), X());
  const Identity meet_distribution =
      ident("meet-distribution", make_meet(X(), make_join(Y(), Z())),
            make_join(make_meet(Z(), X()), make_meet(Y(), X())));
  const Identity involution =
      ident("involution", make_neg(make_neg(X())), X());
  const Identity de_morgan =
      ident("de-morgan", make_neg(make_meet(X(), Y())),
            make_join(make_neg(X()), make_neg(Y())));
  const Identity kleene =
      ident("kleene", make_meet(X(), make_neg(X())),
            make_meet(make_meet(X(), make_neg(X())),
                      make_join(Y(), make_neg(Y()))));
  const Identity imp_reflexive =
      ident("implication-reflexive", make_imp(X(), X()), make_top());
  const Identity imp_weak_equivalence =
      ident("implication-weak-equivalence", make_meet(X(), make_imp(X(), Y())),
            make_meet(X(), make_join(make_neg(X()), Y())));
  if (v == AxiomVariant::main_eight) {
    out.push_back(absorption);
    out.push_back(meet_distribution);
    out.push_back(involution);
    out.push_back(de_morgan);
    out.push_back(kleene);
    out.push_back(imp_reflexive);
    out.push_back(ident("implication-currying",
                        make_imp(X(), make_imp(Y(), Z())),
                        make_imp(make_meet(X(), Y()), Z())));
    out.push_back(imp_weak_equivalence);
  } else {
    out.push_back(ident("top-absorbing", make_join(X(), make_top()),
                        make_top()));
    out.push_back(absorption);
    out.push_back(meet_distribution);
    out.push_back(involution);
    out.push_back(de_morgan);
    out.push_back(kleene);
    out.push_back(imp_reflexive);
    out.push_back(ident("implication-lower-bound",
                        make_meet(make_join(make_neg(X()), Y()),
                                  make_imp(X(), Y())),
                        make_join(make_neg(X()), Y())));
    out.push_back(imp_weak_equivalence);
    out.push_back(ident("implication-meet-splitting",
                        make_imp(X(), make_meet(Y(), Z())),
                        make_meet(make_imp(X(), Y()), make_imp(X(), Z()))));
  }
  return out;
}

Identity five_valued_characteristic() {
  // ((x->z)->y) -> (((y->x)->y)->y) = 1
  TermPtr lhs = make_imp(
      make_imp(make_imp(X(), Z()), Y()),
      make_imp(make_imp(make_imp(Y(), X()), Y()), Y()));
  return ident("five-valued-characteristic", std::move(lhs), make_top());
}

std::vector<Identity> five_valued_equivalents() {
  std::vector<Identity> out;
  // x \/ (y->0) \/ (x->y) = 1
  out.push_back(ident("five-valued-form-1",
                      make_join(make_join(X(), wneg(Y())), make_imp(X(), Y())),
                      make_top()));
  // y = ((x->z)->y) /\ ((y->x)->y)
  out.push_back(ident("five-valued-form-2", Y(),
                      make_meet(make_imp(make_imp(X(), Z()), Y()),
                                make_imp(make_imp(Y(), X()), Y()))));
  // y = ((x->0)->y) /\ ((y->x)->y)
  out.push_back(ident("five-valued-form-3", Y(),
                      make_meet(make_imp(wneg(X()), Y()),
                                make_imp(make_imp(Y(), X()), Y()))));
  // ((y->x)->y) -> (((x->0)->y)->y) = 1
  out.push_back(ident("five-valued-form-4",
                      make_imp(make_imp(make_imp(Y(), X()), Y()),
                               make_imp(make_imp(wneg(X()), Y()), Y())),
                      make_top()));
  // ((x->0)->y) -> (((y->x)->y)->y) = 1
  out.push_back(ident("five-valued-form-5",
                      make_imp(make_imp(wneg(X()), Y()),
                               make_imp(make_imp(make_imp(Y(), X()), Y()),
                                        Y())),
                      make_top()));
  return out;
}

Identity linearity_identity() {
  return ident("linearity",
               make_join(make_imp(X(), Y()), make_imp(Y(), X())), make_top());
}

bool AxiomReport::all_hold() const {
  return std::all_of(results.begin(), results.end(),
                     [](const IdentityCheck& c) { return c.holds(); });
}

AxiomReport check_axioms(const FiniteNelsonAlgebra& a, AxiomVariant v) {
  AxiomReport report{v, {}};
  for (Identity& identity : axiom_identities(v)) {
    IdentityCheck check{identity, find_identity_violation(a, identity)};
    report.results.push_back(std::move(check));
  }
  return report;
}

bool is_nelson_algebra(const FiniteNelsonAlgebra& a) {
  return check_axioms(a, AxiomVariant::main_eight).all_hold();
}

bool is_five_valued(const FiniteNelsonAlgebra& a) {
  return !find_identity_violation(a, five_valued_characteristic()).has_value();
}

bool is_linear(const FiniteNelsonAlgebra& a) {
  return !find_identity_violation(a, linearity_identity()).has_value();
}

namespace {

std::string describe_assignment(const std::vector<elem>& assignment) {
  std::ostringstream out;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (i) out << ' ';
    out << default_variable_name(static_cast<int>(i)) << '=' << assignment[i];
  }
  return out.str();
}

DerivedRuleResult check_rule_identity(const FiniteNelsonAlgebra& a,
                                      std::string name,
                                      const Identity& identity) {
  DerivedRuleResult r{std::move(name), "identity", true, "", false};
  if (auto w = find_identity_violation(a, identity)) {
    r.holds = false;
    r.witness = describe_assignment(*w);
  }
  return r;
}

std::string subset_to_string(const Bitset& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  s.for_each([&](std::uint32_t x) {
    if (!first) out << ',';
    first = false;
    out << x;
  });
  out << '}';
  return out.str();
}

// Image of a subset under the negation map.
Bitset neg_image(const FiniteNelsonAlgebra& a, const Bitset& s) {
  Bitset out(a.size());
  s.for_each([&](std::uint32_t x) { out.set(a.neg(static_cast<elem>(x))); });
  return out;
}

DerivedRuleResult check_negation_over_intersection(
    const FiniteNelsonAlgebra& a, const DerivedRuleOptions& options) {
  DerivedRuleResult r{"negation-distributes-over-intersection", "set-level",
                      true, "", false};
  const std::uint32_t m = a.size();
  auto test_pair = [&](const Bitset& x, const Bitset& y) {
    const Bitset lhs = neg_image(a, x & y);
    const Bitset rhs = neg_image(a, x) & neg_image(a, y);
    if (lhs != rhs) {
      r.holds = false;
      r.witness = cat("X=", subset_to_string(x), " Y=", subset_to_string(y));
      return false;
    }
    return true;
  };
  if (m <= options.exhaustive_subset_limit) {
    // Precompute the negation image of every subset, then sweep all pairs.
    const std::uint32_t count = 1u << m;
    std::vector<std::uint32_t> img(count, 0);
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      std::uint32_t out = 0;
      for (std::uint32_t x = 0; x < m; ++x) {
        if (mask & (1u << x)) out |= 1u << a.neg(static_cast<elem>(x));
      }
      img[mask] = out;
    }
    for (std::uint32_t xm = 0; xm < count; ++xm) {
      for (std::uint32_t ym = xm; ym < count; ++ym) {
        if (img[xm & ym] != (img[xm] & img[ym])) {
          Bitset x(m), y(m);
          for (std::uint32_t i = 0; i < m; ++i) {
            if (xm & (1u << i)) x.set(i);
            if (ym & (1u << i)) y.set(i);
          }
          test_pair(x, y);  // records the witness
          return r;
        }
      }
    }
    return r;
  }
  r.sampled = true;
  std::mt19937_64 rng(options.seed);
  for (std::uint64_t s = 0; s < options.sample_count; ++s) {
    Bitset x(m), y(m);
    for (std::uint32_t i = 0; i < m; ++i) {
      const std::uint64_t bits = rng();
      if (bits & 1) x.set(i);
      if (bits & 2) y.set(i);
    }
    if (!test_pair(x, y)) return r;
  }
  return r;
}

}  // namespace

std::vector<DerivedRuleResult> check_derived_rules(
    const FiniteNelsonAlgebra& a, const DerivedRuleOptions& options) {
  std::vector<DerivedRuleResult> out;
  const std::uint32_t m = a.size();
  const elem top = a.top();

  out.push_back(check_rule_identity(
      a, "join-antecedent-splits",
      ident("", make_imp(make_join(X(), Y()), Z()),
            make_meet(make_imp(X(), Z()), make_imp(Y(), Z())))));
  out.push_back(check_rule_identity(
      a, "antecedent-exchange",
      ident("", make_imp(X(), make_imp(Y(), Z())),
            make_imp(Y(), make_imp(X(), Z())))));
  out.push_back(check_rule_identity(
      a, "implication-self-distribution",
      ident("", make_imp(X(), make_imp(Y(), Z())),
            make_imp(make_imp(X(), Y()), make_imp(X(), Z())))));

  {  // (x->0) <= x->y for all x, y
    DerivedRuleResult r{"weak-negation-below-implication", "conditional", true,
                        "", false};
    for (std::uint32_t x = 0; x < m && r.holds; ++x) {
      const elem wx = a.imp(static_cast<elem>(x), a.bottom());
      for (std::uint32_t y = 0; y < m; ++y) {
        if (!a.leq(wx, a.imp(static_cast<elem>(x), static_cast<elem>(y)))) {
          r.holds = false;
          r.witness = cat("x=", x, " y=", y);
          break;
        }
      }
    }
    out.push_back(std::move(r));
  }

  out.push_back(check_rule_identity(
      a, "contradiction-implies-everything",
      ident("", make_imp(make_meet(X(), make_neg(X())), Y()), make_top())));

  {  // ~x <= x->y and y <= x->y
    DerivedRuleResult r{"negation-and-consequent-below-implication",
                        "conditional", true, "", false};
    for (std::uint32_t x = 0; x < m && r.holds; ++x) {
      for (std::uint32_t y = 0; y < m; ++y) {
        const elem i = a.imp(static_cast<elem>(x), static_cast<elem>(y));
        if (!a.leq(a.neg(static_cast<elem>(x)), i) ||
            !a.leq(static_cast<elem>(y), i)) {
          r.holds = false;
          r.witness = cat("x=", x, " y=", y);
          break;
        }
      }
    }
    out.push_back(std::move(r));
  }

  {  // x <= y implies y->z <= x->z
    DerivedRuleResult r{"antecedent-antitone", "conditional", true, "", false};
    for (std::uint32_t x = 0; x < m && r.holds; ++x) {
      for (std::uint32_t y = 0; y < m && r.holds; ++y) {
        if (!a.leq(static_cast<elem>(x), static_cast<elem>(y))) continue;
        for (std::uint32_t z = 0; z < m; ++z) {
          if (!a.leq(a.imp(static_cast<elem>(y), static_cast<elem>(z)),
                     a.imp(static_cast<elem>(x), static_cast<elem>(z)))) {
            r.holds = false;
            r.witness = cat("x=", x, " y=", y, " z=", z);
            break;
          }
        }
      }
    }
    out.push_back(std::move(r));
  }

  out.push_back(check_rule_identity(
      a, "top-antecedent-identity", ident("", make_imp(make_top(), X()), X())));

  {  // x <= y implies x->y = 1
    DerivedRuleResult r{"order-gives-top-implication", "conditional", true, "",
                        false};
    for (std::uint32_t x = 0; x < m && r.holds; ++x) {
      for (std::uint32_t y = 0; y < m; ++y) {
        if (a.leq(static_cast<elem>(x), static_cast<elem>(y)) &&
            a.imp(static_cast<elem>(x), static_cast<elem>(y)) != top) {
          r.holds = false;
          r.witness = cat("x=", x, " y=", y);
          break;
        }
      }
    }
    out.push_back(std::move(r));
  }

  {  // x = y iff all four unit implications
    DerivedRuleResult r{"equality-via-unit-implications", "biconditional",
                        true, "", false};
    for (std::uint32_t x = 0; x < m && r.holds; ++x) {
      for (std::uint32_t y = 0; y < m; ++y) {
        const elem ex = static_cast<elem>(x), ey = static_cast<elem>(y);
        const bool four = a.imp(ex, ey) == top && a.imp(ey, ex) == top &&
                          a.imp(a.neg(ey), a.neg(ex)) == top &&
                          a.imp(a.neg(ex), a.neg(ey)) == top;
        if (four != (x == y)) {
          r.holds = false;
          r.witness = cat("x=", x, " y=", y);
          break;
        }
      }
    }
    out.push_back(std::move(r));
  }

  out.push_back(check_negation_over_intersection(a, options));

  out.push_back(check_rule_identity(
      a, "implication-contraction",
      ident("", make_imp(X(), make_imp(X(), Y())), make_imp(X(), Y()))));

  return out;
}

bool all_derived_rules_hold(const FiniteNelsonAlgebra& a) {
  const auto results = check_derived_rules(a);
  return std::all_of(results.begin(), results.end(),
                     [](const DerivedRuleResult& r) { return r.holds; });
}

}  // namespace nelson
