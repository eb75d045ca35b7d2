#include "nelson/deduction.hpp"

#include <algorithm>
#include <stdexcept>

#include "nelson/axioms.hpp"

namespace nelson {

namespace {

void require_subset_shape(const FiniteNelsonAlgebra& a, const Bitset& s,
                          const char* what) {
  if (s.universe() != a.size()) {
    throw format_error(cat(what, " is over a universe of ", s.universe(),
                           " but the algebra has ", a.size(), " elements"));
  }
}

}  // namespace

bool is_filter(const FiniteNelsonAlgebra& a, const Bitset& s) {
  require_subset_shape(a, s, "subset");
  if (!s.test(a.top())) return false;
  bool ok = true;
  s.for_each([&](std::uint32_t x) {
    if (!ok) return;
    s.for_each([&](std::uint32_t y) {
      if (!ok) return;
      if (!s.test(a.meet(static_cast<elem>(x), static_cast<elem>(y)))) {
        ok = false;  // not meet-closed
      }
    });
    for (std::uint32_t y = 0; y < a.size() && ok; ++y) {
      if (a.leq(static_cast<elem>(x), static_cast<elem>(y)) && !s.test(y)) {
        ok = false;  // not upward closed
      }
    }
  });
  return ok;
}

bool is_prime_filter(const FiniteNelsonAlgebra& a, const Bitset& s) {
  if (!is_filter(a, s)) return false;
  if (s.count() == a.size()) return false;  // must be proper
  for (std::uint32_t x = 0; x < a.size(); ++x) {
    for (std::uint32_t y = 0; y < a.size(); ++y) {
      if (s.test(a.join(static_cast<elem>(x), static_cast<elem>(y))) &&
          !s.test(x) && !s.test(y)) {
        return false;
      }
    }
  }
  return true;
}

bool is_deductive_system(const FiniteNelsonAlgebra& a, const Bitset& s) {
  require_subset_shape(a, s, "subset");
  if (!s.test(a.top())) return false;
  bool ok = true;
  s.for_each([&](std::uint32_t x) {
    if (!ok) return;
    for (std::uint32_t y = 0; y < a.size(); ++y) {
      if (s.test(a.imp(static_cast<elem>(x), static_cast<elem>(y))) &&
          !s.test(y)) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

namespace {

// Principal filter [x) = { y : x <= y }.
Bitset principal_filter(const FiniteNelsonAlgebra& a, elem x) {
  Bitset out(a.size());
  for (std::uint32_t y = 0; y < a.size(); ++y) {
    if (a.leq(x, static_cast<elem>(y))) out.set(y);
  }
  return out;
}

void sort_canonical(std::vector<Bitset>& sets) {
  std::sort(sets.begin(), sets.end(),
            [](const Bitset& l, const Bitset& r) { return l.value_less(r); });
}

}  // namespace

std::vector<Bitset> filters(const FiniteNelsonAlgebra& a) {
  // In a finite lattice every filter contains the meet of its members, so
  // the filters are exactly the principal up-sets.
  std::vector<Bitset> out;
  out.reserve(a.size());
  for (std::uint32_t x = 0; x < a.size(); ++x) {
    out.push_back(principal_filter(a, static_cast<elem>(x)));
  }
  sort_canonical(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Bitset> prime_filters(const FiniteNelsonAlgebra& a) {
  std::vector<Bitset> out;
  for (Bitset& f : filters(a)) {
    if (is_prime_filter(a, f)) out.push_back(std::move(f));
  }
  return out;  // filters() already emits canonical order
}

Bitset birula_rasiowa(const FiniteNelsonAlgebra& a, const Bitset& p) {
  require_subset_shape(a, p, "prime filter");
  if (!is_prime_filter(a, p)) {
    throw format_error("birula_rasiowa requires a prime filter");
  }
  Bitset out(a.size());
  for (std::uint32_t x = 0; x < a.size(); ++x) {
    if (!p.test(a.neg(static_cast<elem>(x)))) out.set(x);
  }
  return out;
}

Bitset generated_ds(const FiniteNelsonAlgebra& a,
                    const std::vector<elem>& seed) {
  Bitset d(a.size());
  d.set(a.top());
  for (elem s : seed) {
    if (s >= a.size()) throw format_error(cat("seed ", s, " outside carrier"));
    d.set(s);
  }
  // Close under modus ponens to a fixpoint.
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::uint32_t x = 0; x < a.size(); ++x) {
      if (!d.test(x)) continue;
      for (std::uint32_t y = 0; y < a.size(); ++y) {
        if (!d.test(y) &&
            d.test(a.imp(static_cast<elem>(x), static_cast<elem>(y)))) {
          d.set(y);
          grew = true;
        }
      }
    }
  }
  return d;
}

std::vector<DeductiveSystemInfo> deductive_systems(
    const FiniteNelsonAlgebra& a, std::uint64_t filter_budget) {
  if (a.size() > filter_budget) {
    throw resource_error(cat("deductive-system enumeration over ", a.size(),
                             " filters exceeds the budget of ", filter_budget));
  }
  std::vector<Bitset> ds_sets;
  for (Bitset& f : filters(a)) {
    if (is_deductive_system(a, f)) ds_sets.push_back(std::move(f));
  }

  const std::size_t n = ds_sets.size();
  std::vector<DeductiveSystemInfo> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    DeductiveSystemInfo& info = out[i];
    info.ds = ds_sets[i];
    info.is_proper = info.ds.count() < a.size();

    // Maximal: proper, and the only DS strictly above is the whole carrier.
    if (info.is_proper) {
      info.is_maximal = true;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        if (ds_sets[i].is_subset_of(ds_sets[j]) &&
            ds_sets[j].count() < a.size()) {
          info.is_maximal = false;
          break;
        }
      }
    }

    // Irreducible: proper and not a binary intersection of strictly larger
    // deductive systems.
    if (info.is_proper) {
      info.is_irreducible = true;
      for (std::size_t j = 0; j < n && info.is_irreducible; ++j) {
        if (!(ds_sets[i].is_subset_of(ds_sets[j])) || ds_sets[j] == ds_sets[i])
          continue;
        for (std::size_t k = j + 1; k < n; ++k) {
          if (!(ds_sets[i].is_subset_of(ds_sets[k])) ||
              ds_sets[k] == ds_sets[i])
            continue;
          if ((ds_sets[j] & ds_sets[k]) == ds_sets[i]) {
            info.is_irreducible = false;
            break;
          }
        }
      }
    }

    // Completely irreducible <=> bounded to some element: d lies in every DS
    // strictly above but not in the DS itself.
    if (info.is_proper) {
      Bitset above = Bitset(a.size()).complement();  // intersect from full
      bool any_above = false;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        if (ds_sets[i].is_subset_of(ds_sets[j])) {
          above &= ds_sets[j];
          any_above = true;
        }
      }
      if (any_above) {
        const Bitset gap = above - ds_sets[i];
        if (!gap.empty()) {
          info.is_completely_irreducible = true;
          info.bounded_to = static_cast<elem>(gap.first());
        }
      }
    }
  }
  return out;
}

std::vector<Bitset> irreducibles_via_primes(const FiniteNelsonAlgebra& a) {
  std::vector<Bitset> out;
  for (const Bitset& p : prime_filters(a)) {
    if (p.is_subset_of(birula_rasiowa(a, p))) out.push_back(p);
  }
  return out;
}

bool five_valued_ds_condition(const FiniteNelsonAlgebra& a) {
  const auto infos = deductive_systems(a);
  for (const DeductiveSystemInfo& info : infos) {
    if (!info.is_completely_irreducible || info.is_maximal) continue;
    std::size_t strictly_above_proper = 0;
    for (const DeductiveSystemInfo& other : infos) {
      if (!other.is_proper || other.ds == info.ds) continue;
      if (info.ds.is_subset_of(other.ds)) ++strictly_above_proper;
    }
    if (strictly_above_proper != 1) return false;
  }
  return true;
}

QuotientResult quotient(const FiniteNelsonAlgebra& a, const Bitset& ds) {
  require_subset_shape(a, ds, "deductive system");
  if (!is_deductive_system(a, ds)) {
    throw format_error("quotient requires a deductive system");
  }
  const std::uint32_t m = a.size();
  auto congruent = [&](elem x, elem y) {
    return ds.test(a.imp(x, y)) && ds.test(a.imp(y, x)) &&
           ds.test(a.imp(a.neg(x), a.neg(y))) &&
           ds.test(a.imp(a.neg(y), a.neg(x)));
  };

  // Class index by ascending least member.
  constexpr elem kUnset = static_cast<elem>(-1);
  std::vector<elem> cls(m, kUnset);
  std::vector<std::vector<elem>> classes;
  std::vector<elem> reps;
  for (std::uint32_t x = 0; x < m; ++x) {
    if (cls[x] != kUnset) continue;
    const elem id = static_cast<elem>(classes.size());
    classes.emplace_back();
    reps.push_back(static_cast<elem>(x));
    for (std::uint32_t y = x; y < m; ++y) {
      if (cls[y] == kUnset && congruent(static_cast<elem>(x),
                                        static_cast<elem>(y))) {
        cls[y] = id;
        classes.back().push_back(static_cast<elem>(y));
      }
    }
  }

  const std::uint32_t q = static_cast<std::uint32_t>(classes.size());
  std::vector<elem> neg(q), meet(static_cast<std::size_t>(q) * q),
      join(static_cast<std::size_t>(q) * q), imp(static_cast<std::size_t>(q) * q);
  for (std::uint32_t i = 0; i < q; ++i) {
    neg[i] = cls[a.neg(reps[i])];
    for (std::uint32_t j = 0; j < q; ++j) {
      const std::size_t at = static_cast<std::size_t>(i) * q + j;
      meet[at] = cls[a.meet(reps[i], reps[j])];
      join[at] = cls[a.join(reps[i], reps[j])];
      imp[at] = cls[a.imp(reps[i], reps[j])];
    }
  }
  FiniteNelsonAlgebra quot(q, cls[a.top()], std::move(neg), std::move(meet),
                           std::move(join), std::move(imp));

  // The relation must actually be a congruence: representatives may not
  // disagree with any other members of their classes.
  for (std::uint32_t x = 0; x < m; ++x) {
    const elem ex = static_cast<elem>(x);
    if (cls[a.neg(ex)] != quot.neg(cls[x])) {
      throw format_error("relation induced by the subset is not a congruence");
    }
    for (std::uint32_t y = 0; y < m; ++y) {
      const elem ey = static_cast<elem>(y);
      if (cls[a.meet(ex, ey)] != quot.meet(cls[x], cls[y]) ||
          cls[a.join(ex, ey)] != quot.join(cls[x], cls[y]) ||
          cls[a.imp(ex, ey)] != quot.imp(cls[x], cls[y])) {
        throw format_error(
            "relation induced by the subset is not a congruence");
      }
    }
  }

  return QuotientResult{std::move(quot), Homomorphism{std::move(cls)},
                        std::move(classes)};
}

const char* chain_tag_name(ChainTag t) {
  switch (t) {
    case ChainTag::c2:
      return "C2";
    case ChainTag::c3:
      return "C3";
    case ChainTag::c4:
      return "C4";
    case ChainTag::c5:
      return "C5";
  }
  throw std::logic_error("unreachable chain tag");
}

std::uint32_t chain_tag_size(ChainTag t) {
  switch (t) {
    case ChainTag::c2:
      return 2;
    case ChainTag::c3:
      return 3;
    case ChainTag::c4:
      return 4;
    case ChainTag::c5:
      return 5;
  }
  throw std::logic_error("unreachable chain tag");
}

namespace {

std::vector<elem> members_of(const Bitset& s) {
  std::vector<elem> out;
  s.for_each([&](std::uint32_t x) { out.push_back(static_cast<elem>(x)); });
  return out;
}

// { ~x : x in s }.
Bitset neg_image_set(const FiniteNelsonAlgebra& a, const Bitset& s) {
  Bitset out(a.size());
  s.for_each([&](std::uint32_t x) { out.set(a.neg(static_cast<elem>(x))); });
  return out;
}

// phi as a set map (coincides with birula_rasiowa on prime filters).
Bitset phi_set(const FiniteNelsonAlgebra& a, const Bitset& s) {
  Bitset out(a.size());
  for (std::uint32_t x = 0; x < a.size(); ++x) {
    if (!s.test(a.neg(static_cast<elem>(x)))) out.set(x);
  }
  return out;
}

}  // namespace

QuotientClassification classify_quotient_by_irreducible(
    const FiniteNelsonAlgebra& a, const Bitset& d) {
  require_subset_shape(a, d, "deductive system");
  if (!is_five_valued(a)) {
    throw format_error("classification requires a five-valued algebra");
  }
  if (!is_deductive_system(a, d)) {
    throw format_error("classification requires a deductive system");
  }
  const auto irreducibles = irreducibles_via_primes(a);
  if (std::find(irreducibles.begin(), irreducibles.end(), d) ==
      irreducibles.end()) {
    throw format_error("classification requires an irreducible deductive system");
  }

  // Unique maximal DS above d.
  const auto infos = deductive_systems(a);
  std::vector<Bitset> maximal_above;
  for (const DeductiveSystemInfo& info : infos) {
    if (info.is_maximal && d.is_subset_of(info.ds)) {
      maximal_above.push_back(info.ds);
    }
  }
  if (maximal_above.size() != 1) {
    throw format_error(cat("expected a unique maximal deductive system above ",
                           "the input, found ", maximal_above.size()));
  }
  const Bitset m = maximal_above.front();
  const Bitset phi_m = phi_set(a, m);
  const Bitset phi_d = phi_set(a, d);

  const bool d_equals_m = d == m;
  const bool m_phi_fixed = m == phi_m;

  QuotientClassification result;
  result.maximal = m;
  if (d_equals_m && m_phi_fixed) {
    result.tag = ChainTag::c2;
    result.predicted_classes = {members_of(d), members_of(neg_image_set(a, d))};
  } else if (d_equals_m) {
    result.tag = ChainTag::c3;
    result.predicted_classes = {members_of(m), members_of(phi_m - m),
                                members_of(neg_image_set(a, m))};
  } else if (m_phi_fixed) {
    result.tag = ChainTag::c4;
    result.predicted_classes = {members_of(d), members_of(m - d),
                                members_of(phi_d - m),
                                members_of(neg_image_set(a, d))};
  } else {
    result.tag = ChainTag::c5;
    result.predicted_classes = {
        members_of(d), members_of(m - d), members_of(phi_m - m),
        members_of(phi_d - phi_m), members_of(neg_image_set(a, d))};
  }

  // The strata must partition the carrier; anything else means the theorem
  // hypotheses were violated upstream.
  Bitset seen(a.size());
  std::size_t total = 0;
  for (const auto& stratum : result.predicted_classes) {
    for (elem x : stratum) {
      if (seen.test(x)) {
        throw format_error("predicted classes overlap; input is outside the "
                           "classification theorem's hypotheses");
      }
      seen.set(x);
    }
    total += stratum.size();
  }
  if (total != a.size()) {
    throw format_error("predicted classes do not cover the carrier; input is "
                       "outside the classification theorem's hypotheses");
  }
  return result;
}

RepresentationResult representation_embedding(const FiniteNelsonAlgebra& a,
                                              std::uint32_t max_product_size) {
  if (a.size() < 2) {
    throw format_error("representation requires a non-trivial algebra");
  }
  std::vector<Bitset> family = irreducibles_via_primes(a);
  if (family.empty()) {
    throw format_error("no irreducible deductive systems found");
  }
  std::vector<FiniteNelsonAlgebra> factors;
  std::vector<Homomorphism> epis;
  factors.reserve(family.size());
  for (const Bitset& d : family) {
    QuotientResult q = quotient(a, d);
    factors.push_back(std::move(q.quotient));
    epis.push_back(std::move(q.natural_epi));
  }
  FiniteNelsonAlgebra prod = product(factors, max_product_size);

  Homomorphism embedding;
  embedding.map.resize(a.size());
  std::vector<elem> tuple(factors.size());
  for (std::uint32_t x = 0; x < a.size(); ++x) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      tuple[i] = epis[i](static_cast<elem>(x));
    }
    embedding.map[x] = tuple_index(factors, tuple);
  }

  std::vector<bool> hit(prod.size(), false);
  for (elem v : embedding.map) {
    if (hit[v]) {
      throw format_error("representation map is not injective; the "
                         "irreducible family does not separate points");
    }
    hit[v] = true;
  }
  return RepresentationResult{std::move(family), std::move(factors),
                              std::move(prod), std::move(embedding)};
}

Homomorphism factor_epimorphism(const FiniteNelsonAlgebra& a,
                                const FiniteNelsonAlgebra& b1,
                                const Homomorphism& h1,
                                const FiniteNelsonAlgebra& b2,
                                const Homomorphism& h2) {
  if (!is_homomorphism(a, b1, h1) || !is_surjective(b1, h1)) {
    throw format_error("first map is not an epimorphism");
  }
  if (!is_homomorphism(a, b2, h2) || !is_surjective(b2, h2)) {
    throw format_error("second map is not an epimorphism");
  }
  for (std::uint32_t x = 0; x < a.size(); ++x) {
    if (h1(static_cast<elem>(x)) == b1.top() &&
        h2(static_cast<elem>(x)) != b2.top()) {
      throw format_error(cat("kernel inclusion fails at element ", x,
                             ": first map sends it to top, second does not"));
    }
  }
  constexpr elem kUnset = static_cast<elem>(-1);
  Homomorphism h;
  h.map.assign(b1.size(), kUnset);
  for (std::uint32_t x = 0; x < a.size(); ++x) {
    const elem b = h1(static_cast<elem>(x));
    const elem v = h2(static_cast<elem>(x));
    if (h.map[b] == kUnset) {
      h.map[b] = v;
    } else if (h.map[b] != v) {
      throw format_error(cat("factoring is ill-defined at element ", x,
                             ": the two maps disagree across a fiber"));
    }
  }
  HomomorphismViolation why;
  if (!is_homomorphism(b1, b2, h, &why)) {
    throw format_error(cat("factored map is not a homomorphism: ",
                           why.describe()));
  }
  return h;
}

}  // namespace nelson
