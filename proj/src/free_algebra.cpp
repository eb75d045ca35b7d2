#include "nelson/free_algebra.hpp"

#include <algorithm>
#include <unordered_map>

#include "nelson/axioms.hpp"
#include "nelson/deduction.hpp"

namespace nelson {

std::string IndexFunction::to_string() const {
  std::string out;
  out.reserve(digits.size());
  for (std::uint8_t d : digits) out.push_back(static_cast<char>('0' + d));
  return out;
}

std::uint32_t IndexFunction::base5_index() const {
  std::uint32_t value = 0;
  for (std::uint8_t d : digits) value = value * 5 + d;
  return value;
}

IndexFunction function_of_index(std::uint32_t generators, std::uint32_t index) {
  IndexFunction f;
  f.digits.assign(generators, 0);
  for (std::uint32_t i = generators; i-- > 0;) {
    f.digits[i] = static_cast<std::uint8_t>(index % 5);
    index /= 5;
  }
  return f;
}

const char* function_class_name(FunctionClass c) {
  switch (c) {
    case FunctionClass::two: return "two";
    case FunctionClass::three: return "three";
    case FunctionClass::four: return "four";
    case FunctionClass::five: return "five";
  }
  return "?";
}

FunctionClass classify_function(const IndexFunction& f) {
  bool has_odd = false, has_middle = false;
  for (std::uint8_t d : f.digits) {
    if (d == 1 || d == 3) has_odd = true;
    if (d == 2) has_middle = true;
  }
  if (has_odd) return has_middle ? FunctionClass::five : FunctionClass::four;
  return has_middle ? FunctionClass::three : FunctionClass::two;
}

bool is_outer(const IndexFunction& f) {
  for (std::uint8_t d : f.digits)
    if (d == 1 || d == 3) return false;
  return true;
}

IndexFunction outer_projection(const IndexFunction& f) {
  IndexFunction out = f;
  for (std::uint8_t& d : out.digits) d = d <= 1 ? 0 : d == 2 ? 2 : 4;
  return out;
}

bool strictly_below(const IndexFunction& h, const IndexFunction& f) {
  if (!is_outer(f)) throw format_error("strictly_below requires an outer bound");
  if (h.digits.size() != f.digits.size())
    throw format_error("functions have different arities");
  if (h == f) return false;
  for (std::size_t i = 0; i < f.digits.size(); ++i) {
    switch (f.digits[i]) {
      case 0:
        if (h.digits[i] > 1) return false;
        break;
      case 2:
        if (h.digits[i] != 2) return false;
        break;
      default:  // 4
        if (h.digits[i] < 3) return false;
        break;
    }
  }
  return true;
}

FreeSpaceDescription free_space(std::uint32_t generators) {
  if (generators == 0) throw format_error("free algebra needs at least one generator");
  if (generators > 4)
    throw resource_error(cat("free space on ", generators,
                             " generators is too large to build explicitly"));
  std::uint32_t inner = 1;
  for (std::uint32_t i = 0; i < generators; ++i) inner *= 5;

  FreeSpaceDescription fs;
  fs.generators = generators;
  std::vector<IndexFunction> funcs(inner);
  std::vector<std::uint32_t> po(inner);        // base-5 index of the outer projection
  std::vector<bool> outer(inner);
  fs.mirror_index.assign(inner, UINT32_MAX);
  std::uint32_t total = inner;
  for (std::uint32_t h = 0; h < inner; ++h) {
    funcs[h] = function_of_index(generators, h);
    po[h] = outer_projection(funcs[h]).base5_index();
    outer[h] = is_outer(funcs[h]);
    if (classify_function(funcs[h]) != FunctionClass::two) fs.mirror_index[h] = total++;
  }

  NelsonSpace& s = fs.space;
  s.size = total;
  s.leq_table.assign(static_cast<std::size_t>(total) * total, false);
  s.phi.resize(total);
  s.labels.resize(total);

  std::vector<std::uint32_t> func_of(total);  // base-5 index behind each point
  for (std::uint32_t h = 0; h < inner; ++h) {
    func_of[h] = h;
    s.labels[h] = funcs[h].to_string();
    if (fs.mirror_index[h] != UINT32_MAX) {
      func_of[fs.mirror_index[h]] = h;
      s.labels[fs.mirror_index[h]] = cat("m:", funcs[h].to_string());
      s.phi[h] = fs.mirror_index[h];
      s.phi[fs.mirror_index[h]] = h;
    } else {
      s.phi[h] = h;
    }
  }

  auto set_leq = [&](std::uint32_t a, std::uint32_t b) {
    s.leq_table[static_cast<std::size_t>(a) * total + b] = true;
  };
  for (std::uint32_t a = 0; a < total; ++a) {
    const bool a_mirror = a >= inner;
    const std::uint32_t h = func_of[a];
    for (std::uint32_t b = 0; b < total; ++b) {
      const bool b_mirror = b >= inner;
      const std::uint32_t g = func_of[b];
      if (a == b) {
        set_leq(a, b);
      } else if (!a_mirror && !b_mirror) {
        if (g == po[h] && g != h) set_leq(a, b);
      } else if (!a_mirror && b_mirror) {
        if (po[h] == po[g]) set_leq(a, b);
      } else if (a_mirror && b_mirror) {
        if (outer[h] && strictly_below(funcs[g], funcs[h])) set_leq(a, b);
      }
      // mirror below inner: never
    }
  }

  fs.generator_sets.reserve(generators);
  for (std::uint32_t i = 0; i < generators; ++i) {
    Bitset u(total);
    for (std::uint32_t h = 0; h < inner; ++h) {
      if (funcs[h].digits[i] == 4) u.set(h);
      if (funcs[h].digits[i] != 0 && fs.mirror_index[h] != UINT32_MAX)
        u.set(fs.mirror_index[h]);
    }
    fs.generator_sets.push_back(std::move(u));
  }
  return fs;
}

std::vector<FreeComponent> free_components(const FreeSpaceDescription& fs) {
  std::uint32_t inner = 1;
  for (std::uint32_t i = 0; i < fs.generators; ++i) inner *= 5;
  std::vector<FreeComponent> out;
  for (auto& part : components(fs.space)) {
    FreeComponent c;
    std::uint32_t any = part.front();
    std::uint32_t h = any < inner ? any : [&] {
      for (std::uint32_t k = 0; k < inner; ++k)
        if (fs.mirror_index[k] == any) return k;
      throw std::logic_error("mirror point without a function");
    }();
    c.maximal = outer_projection(function_of_index(fs.generators, h));
    c.points = std::move(part);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const FreeComponent& a, const FreeComponent& b) {
    return a.maximal.base5_index() < b.maximal.base5_index();
  });
  return out;
}

namespace {

big_int count_up_sets_rec(const NelsonSpace& s, const Bitset& rem,
                          std::unordered_map<Bitset, big_int, BitsetHash>& memo) {
  if (rem.empty()) return 1;
  if (auto it = memo.find(rem); it != memo.end()) return it->second;
  if (memo.size() > (std::size_t{1} << 22))
    throw resource_error("up-set counting exceeded its memo budget");

  // pivot: a maximal remaining point with the largest remaining down-set
  std::vector<std::size_t> pts = rem.members();
  std::size_t pivot = Bitset::npos;
  std::size_t best = 0;
  for (std::size_t p : pts) {
    bool maximal = true;
    for (std::size_t q : pts)
      if (q != p && s.leq(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q))) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    std::size_t down = 0;
    for (std::size_t q : pts)
      if (s.leq(static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(p))) ++down;
    if (pivot == Bitset::npos || down > best) {
      pivot = p;
      best = down;
    }
  }
  if (pivot == Bitset::npos) throw format_error("order relation has a cycle");

  Bitset without_pivot = rem;
  without_pivot.set(pivot, false);
  Bitset without_down = rem;
  for (std::size_t q : pts)
    if (s.leq(static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(pivot)))
      without_down.set(q, false);

  big_int result = count_up_sets_rec(s, without_pivot, memo) +
                   count_up_sets_rec(s, without_down, memo);
  memo.emplace(rem, result);
  return result;
}

}  // namespace

big_int count_up_sets_of(const NelsonSpace& s) {
  std::unordered_map<Bitset, big_int, BitsetHash> memo;
  return count_up_sets_rec(s, Bitset::full(s.size), memo);
}

big_int count_free(std::uint32_t generators) {
  if (generators == 0) throw format_error("free algebra needs at least one generator");
  // The count has about 5^n bits; past n = 10 even printing the decimal
  // expansion stops being interactive (n = 10 is ~2.9 million digits).
  if (generators > 10)
    throw resource_error(cat("cardinality of the free algebra on ", generators,
                             " generators exceeds the numeric budget"));
  const std::uint32_t n = generators;
  big_int result = big_int(1) << (std::size_t{1} << (2 * n));
  // binomial(n, k) incrementally: C(n,0) = 1, C(n,k) = C(n,k-1)*(n-k+1)/k
  std::uint64_t binom = 1;
  for (std::uint32_t k = 1; k <= n; ++k) {
    binom = binom * (n - k + 1) / k;
    big_int base = (big_int(1) << (std::size_t{1} << (n - k))) + 1;
    std::uint64_t exponent = binom << (n - k);
    result *= boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
  }
  return result;
}

big_int count_via_components(std::uint32_t generators) {
  FreeSpaceDescription fs = free_space(generators);
  big_int result = 1;
  for (auto& component : free_components(fs))
    result *= count_up_sets_of(restrict_space(fs.space, component.points));
  return result;
}

std::uint8_t evaluate_up_set(const FreeSpaceDescription& fs, const Bitset& u,
                             const IndexFunction& f) {
  if (f.digits.size() != fs.generators)
    throw format_error(cat("assignment has ", f.digits.size(), " digits, expected ",
                           fs.generators));
  if (u.universe() != fs.space.size)
    throw format_error("up-set universe does not match the space");
  const std::uint32_t inner_f = f.base5_index();
  const std::uint32_t inner_po = outer_projection(f).base5_index();
  if (u.test(inner_f)) return 4;
  if (u.test(inner_po)) return 3;
  const std::uint32_t mirror_po = fs.mirror_index[inner_po];
  if (mirror_po != UINT32_MAX && u.test(mirror_po)) return 2;
  const std::uint32_t mirror_f = fs.mirror_index[inner_f];
  if (mirror_f != UINT32_MAX && u.test(mirror_f)) return 1;
  return 0;
}

namespace {

// Digit strata matching classify_quotient_by_irreducible's class order
// (top class first).
const std::vector<std::uint8_t>& strata_digits(ChainTag tag) {
  static const std::vector<std::uint8_t> two{4, 0};
  static const std::vector<std::uint8_t> three{4, 2, 0};
  static const std::vector<std::uint8_t> four{4, 3, 1, 0};
  static const std::vector<std::uint8_t> five{4, 3, 2, 1, 0};
  switch (tag) {
    case ChainTag::c2: return two;
    case ChainTag::c3: return three;
    case ChainTag::c4: return four;
    case ChainTag::c5: return five;
  }
  throw std::logic_error("unknown chain tag");
}

}  // namespace

Homomorphism extend_map(const FreeSpaceDescription& fs,
                        const DualAlgebraResult& materialized,
                        const FiniteNelsonAlgebra& target,
                        const std::vector<elem>& images) {
  if (images.size() != fs.generators)
    throw format_error(cat("got ", images.size(), " generator images, expected ",
                           fs.generators));
  for (elem v : images)
    if (v >= target.size())
      throw format_error(cat("generator image ", v, " is out of range"));
  if (!is_five_valued(target))
    throw format_error("target algebra is not five-valued");
  if (materialized.carrier_sets.empty() ||
      materialized.carrier_sets.front().universe() != fs.space.size)
    throw format_error("materialized algebra does not match the free space");

  // one digit valuation per irreducible deductive system of the target
  std::vector<std::vector<std::uint8_t>> valuation;
  std::vector<IndexFunction> assignments;
  for (const Bitset& d : irreducibles_via_primes(target)) {
    QuotientClassification cls = classify_quotient_by_irreducible(target, d);
    const std::vector<std::uint8_t>& digits = strata_digits(cls.tag);
    std::vector<std::uint8_t> v(target.size(), 0);
    for (std::size_t stratum = 0; stratum < cls.predicted_classes.size(); ++stratum)
      for (elem x : cls.predicted_classes[stratum]) v[x] = digits[stratum];
    IndexFunction f;
    f.digits.resize(fs.generators);
    for (std::uint32_t i = 0; i < fs.generators; ++i) f.digits[i] = v[images[i]];
    valuation.push_back(std::move(v));
    assignments.push_back(std::move(f));
  }

  Homomorphism h;
  h.map.reserve(materialized.carrier_sets.size());
  for (const Bitset& u : materialized.carrier_sets) {
    std::optional<elem> match;
    for (elem t = 0; t < target.size(); ++t) {
      bool all = true;
      for (std::size_t d = 0; d < valuation.size() && all; ++d)
        all = valuation[d][t] == evaluate_up_set(fs, u, assignments[d]);
      if (!all) continue;
      if (match)
        throw format_error(cat("extension is ambiguous: elements ", *match, " and ", t,
                               " both match an up-set"));
      match = t;
    }
    if (!match) throw format_error("extension has no matching target element for an up-set");
    h.map.push_back(*match);
  }

  HomomorphismViolation violation;
  if (!is_homomorphism(materialized.algebra, target, h, &violation))
    throw format_error(cat("extension is not a homomorphism: ", violation.describe()));
  std::unordered_map<Bitset, std::size_t, BitsetHash> index;
  for (std::size_t i = 0; i < materialized.carrier_sets.size(); ++i)
    index.emplace(materialized.carrier_sets[i], i);
  for (std::uint32_t i = 0; i < fs.generators; ++i) {
    auto it = index.find(fs.generator_sets[i]);
    if (it == index.end())
      throw format_error(cat("generator ", i, " is not an element of the materialized algebra"));
    if (h.map[it->second] != images[i])
      throw format_error(cat("extension disagrees with the requested image of generator ", i));
  }
  return h;
}

}  // namespace nelson
