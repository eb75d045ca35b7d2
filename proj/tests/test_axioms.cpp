#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "vendor/doctest.h"

#include "nelson/axioms.hpp"
#include "nelson/json_io.hpp"

#include <random>
#include <string>
#include <vector>

using namespace nelson;

namespace {

const std::string kData = NELSON_DATA_DIR "/";

std::vector<FiniteNelsonAlgebra> valid_corpus() {
  std::vector<FiniteNelsonAlgebra> out;
  for (std::uint32_t n = 2; n <= 8; ++n) out.push_back(make_chain(n));
  out.push_back(product({make_chain(2), make_chain(2)}));
  out.push_back(product({make_chain(5), make_chain(3)}));
  out.push_back(product({make_chain(5), make_chain(2), make_chain(2)}));
  return out;
}

// Flat copies of the tables, for mutation.
struct Tables {
  std::uint32_t n;
  elem top;
  std::vector<elem> neg, meet, join, imp;
};

Tables tables_of(const FiniteNelsonAlgebra& a) {
  Tables t;
  t.n = a.size();
  t.top = a.top();
  t.neg = a.neg_table();
  t.meet = a.meet_table();
  t.join = a.join_table();
  t.imp = a.imp_table();
  return t;
}

FiniteNelsonAlgebra build(const Tables& t) {
  return FiniteNelsonAlgebra(t.n, t.top, t.neg, t.meet, t.join, t.imp);
}

}  // namespace

TEST_CASE("main axioms hold on the valid corpus") {
  for (const FiniteNelsonAlgebra& a : valid_corpus()) {
    AxiomReport r = check_axioms(a, AxiomVariant::main_eight);
    CHECK(r.results.size() == 8);
    CHECK(r.all_hold());
    CHECK(is_nelson_algebra(a));
  }
}

TEST_CASE("brignole axioms hold on the valid corpus and have ten members") {
  for (const FiniteNelsonAlgebra& a : valid_corpus()) {
    AxiomReport r = check_axioms(a, AxiomVariant::brignole_ten);
    CHECK(r.results.size() == 10);
    CHECK(r.all_hold());
  }
}

TEST_CASE("variant names") {
  CHECK(std::string(variant_name(AxiomVariant::main_eight)) == "main");
  CHECK(std::string(variant_name(AxiomVariant::brignole_ten)) == "brignole");
}

TEST_CASE("the two axiom sets agree on valid algebras and on mutations") {
  // Deterministic mutation sweep: single-cell edits of every table of C5 and
  // C2xC2, plus a seeded batch on C6.  The two axiomatizations must accept
  // or reject each table together.
  std::vector<FiniteNelsonAlgebra> pool = {
      make_chain(5), product({make_chain(2), make_chain(2)})};
  std::mt19937_64 rng(12345);
  int mutants = 0;

  auto agree = [](const FiniteNelsonAlgebra& a) {
    bool main_ok = check_axioms(a, AxiomVariant::main_eight).all_hold();
    bool brig_ok = check_axioms(a, AxiomVariant::brignole_ten).all_hold();
    CHECK(main_ok == brig_ok);
    return main_ok;
  };

  for (const FiniteNelsonAlgebra& base : pool) {
    Tables t0 = tables_of(base);
    for (int table = 0; table < 4 && mutants < 40; ++table) {
      std::vector<elem>* tab = table == 0   ? &t0.neg
                               : table == 1 ? &t0.meet
                               : table == 2 ? &t0.join
                                            : &t0.imp;
      for (std::size_t cell = 0; cell < tab->size() && mutants < 40;
           cell += 3) {
        Tables t = t0;
        std::vector<elem>* mtab = table == 0   ? &t.neg
                                  : table == 1 ? &t.meet
                                  : table == 2 ? &t.join
                                               : &t.imp;
        (*mtab)[cell] = static_cast<elem>(((*mtab)[cell] + 1) % t.n);
        agree(build(t));
        ++mutants;
      }
    }
  }
  CHECK(mutants >= 20);

  // Seeded random multi-cell corruptions of C6.
  for (int i = 0; i < 20; ++i) {
    Tables t = tables_of(make_chain(6));
    for (int edits = 0; edits < 3; ++edits) {
      std::vector<elem>* tab = (rng() % 2) ? &t.meet : &t.imp;
      (*tab)[rng() % tab->size()] = static_cast<elem>(rng() % t.n);
    }
    agree(build(t));
  }
}

TEST_CASE("five-valuedness matches the chain length cutoff") {
  for (std::uint32_t n = 2; n <= 8; ++n)
    CHECK(is_five_valued(make_chain(n)) == (n <= 5));
}

TEST_CASE("the characteristic identity fails on C6 with the canonical-first witness") {
  FiniteNelsonAlgebra c6 = make_chain(6);
  std::optional<std::vector<elem>> w =
      find_identity_violation(c6, five_valued_characteristic());
  REQUIRE(w.has_value());
  CHECK(*w == std::vector<elem>{3, 4, 0});
}

TEST_CASE("five-valued equivalent forms agree with the characteristic identity") {
  std::vector<std::string> names = {"c2", "c3", "c4", "c5", "c6",
                                    "c7", "c8", "c2xc2", "c5xc3",
                                    "c5xc2xc2", "corrupt_a", "corrupt_b"};
  CHECK(names.size() >= 12);
  for (const std::string& nm : names) {
    FiniteNelsonAlgebra a = read_algebra_file(kData + nm + ".json");
    bool nt3 = !find_identity_violation(a, five_valued_characteristic());
    for (const Identity& fn : five_valued_equivalents()) {
      bool h = !find_identity_violation(a, fn);
      CHECK(h == nt3);
    }
  }
}

TEST_CASE("corrupted fixtures are recognized as corrupted") {
  CHECK(!is_nelson_algebra(read_algebra_file(kData + "corrupt_a.json")));
  CHECK(!is_nelson_algebra(read_algebra_file(kData + "corrupt_b.json")));
}

TEST_CASE("linearity survives products of chains but not the twist algebra") {
  for (std::uint32_t n = 2; n <= 8; ++n) CHECK(is_linear(make_chain(n)));
  // (x->y) \/ (y->x) = 1 holds componentwise, so products of chains keep it.
  CHECK(is_linear(product({make_chain(2), make_chain(2)})));
  CHECK(is_linear(product({make_chain(5), make_chain(3)})));
  // The 11-element twist algebra has two incomparable "positive" elements
  // whose implications join below top.
  CHECK(!is_linear(read_algebra_file(kData + "twist11.json")));
}

TEST_CASE("linearity identity reports a witness on a non-linear algebra") {
  FiniteNelsonAlgebra tw = read_algebra_file(kData + "twist11.json");
  std::optional<std::vector<elem>> w =
      find_identity_violation(tw, linearity_identity());
  REQUIRE(w.has_value());
  CHECK(*w == std::vector<elem>{5, 7});
}

TEST_CASE("the twist algebra is Nelson but not five-valued") {
  FiniteNelsonAlgebra tw = read_algebra_file(kData + "twist11.json");
  CHECK(tw.size() == 11);
  CHECK(is_nelson_algebra(tw));
  CHECK(check_axioms(tw, AxiomVariant::brignole_ten).all_hold());
  CHECK(!is_five_valued(tw));
  CHECK(all_derived_rules_hold(tw));
}

TEST_CASE("derived calculation rules hold on the corpus") {
  for (const FiniteNelsonAlgebra& a : valid_corpus()) {
    for (const DerivedRuleResult& r : check_derived_rules(a)) {
      INFO(r.name, ": ", r.witness);
      CHECK(r.holds);
      // Only the set-level rule has a subset-pair domain; it samples once
      // the carrier exceeds the default exhaustive_subset_limit of 12.
      if (a.size() <= 12)
        CHECK(!r.sampled);
      else
        CHECK(r.sampled == (r.name == "negation-distributes-over-intersection"));
    }
    CHECK(all_derived_rules_hold(a));
  }
}

TEST_CASE("set-level rule falls back to sampling above the subset limit") {
  FiniteNelsonAlgebra p = product({make_chain(5), make_chain(2), make_chain(2)});
  DerivedRuleOptions opt;
  opt.exhaustive_subset_limit = 8;  // force the sampled path (carrier 20)
  opt.sample_count = 500;
  bool saw_sampled = false;
  for (const DerivedRuleResult& r : check_derived_rules(p, opt)) {
    CHECK(r.holds);
    if (r.sampled) saw_sampled = true;
  }
  CHECK(saw_sampled);
}

TEST_CASE("derived rules detect corrupted tables") {
  FiniteNelsonAlgebra bad = read_algebra_file(kData + "corrupt_b.json");
  bool all = true;
  for (const DerivedRuleResult& r : check_derived_rules(bad))
    if (!r.holds) {
      all = false;
      CHECK(!r.witness.empty());
    }
  CHECK(!all);
}

TEST_CASE("axiom report carries canonical-first violations") {
  FiniteNelsonAlgebra bad = read_algebra_file(kData + "corrupt_a.json");
  AxiomReport r = check_axioms(bad, AxiomVariant::main_eight);
  CHECK(!r.all_hold());
  for (const IdentityCheck& c : r.results)
    if (!c.holds())
      CHECK(c.violation->size() ==
            static_cast<std::size_t>(c.identity.variable_count()));
}
