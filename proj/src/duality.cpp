#include "nelson/duality.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "nelson/deduction.hpp"

namespace nelson {
namespace {

using SetIndex = std::unordered_map<Bitset, std::uint32_t, BitsetHash>;

SetIndex index_sets(const std::vector<Bitset>& sets) {
  SetIndex index;
  index.reserve(sets.size() * 2);
  for (std::uint32_t i = 0; i < sets.size(); ++i) index.emplace(sets[i], i);
  return index;
}

std::string set_label(const Bitset& b, const char* prefix) {
  std::string out = "{";
  bool first = true;
  b.for_each([&](std::size_t i) {
    if (!first) out += ',';
    out += prefix;
    out += std::to_string(i);
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace

SpectrumResult spectrum(const FiniteNelsonAlgebra& a) {
  SpectrumResult out;
  out.points = prime_filters(a);
  const auto n = static_cast<std::uint32_t>(out.points.size());
  SetIndex index = index_sets(out.points);

  out.space.size = n;
  out.space.leq_table.assign(static_cast<std::size_t>(n) * n, false);
  out.space.phi.resize(n);
  out.space.labels.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    out.space.labels[i] = set_label(out.points[i], "");
    for (std::uint32_t j = 0; j < n; ++j)
      out.space.leq_table[static_cast<std::size_t>(i) * n + j] =
          out.points[i].is_subset_of(out.points[j]);
    auto it = index.find(birula_rasiowa(a, out.points[i]));
    if (it == index.end())
      throw format_error(cat("the involution image of prime filter ",
                             out.space.labels[i], " is not a prime filter"));
    out.space.phi[i] = it->second;
  }
  require_valid_space(out.space);
  return out;
}

std::vector<Bitset> up_sets(const NelsonSpace& s, std::size_t max_size) {
  // Linear extension of the dual order: repeatedly place the least-index
  // point maximal among the remaining ones.  A point may then be included
  // only when everything strictly above it is already in, so each up-set
  // is produced exactly once.
  std::vector<std::uint32_t> order;
  order.reserve(s.size);
  std::vector<bool> placed(s.size, false);
  for (std::uint32_t step = 0; step < s.size; ++step) {
    std::uint32_t pick = UINT32_MAX;
    for (std::uint32_t x = 0; x < s.size && pick == UINT32_MAX; ++x) {
      if (placed[x]) continue;
      bool maximal = true;
      for (std::uint32_t y = 0; y < s.size && maximal; ++y)
        if (!placed[y] && y != x && s.leq(x, y)) maximal = false;
      if (maximal) pick = x;
    }
    if (pick == UINT32_MAX)
      throw format_error("order relation has a cycle; not a partial order");
    placed[pick] = true;
    order.push_back(pick);
  }

  std::vector<Bitset> out;
  Bitset current(s.size);
  auto enumerate = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      if (out.size() >= max_size)
        throw resource_error(cat("space has more than ", max_size, " up-sets"));
      out.push_back(current);
      return;
    }
    const std::uint32_t p = order[pos];
    self(self, pos + 1);
    bool allowed = true;
    for (std::uint32_t y = 0; y < s.size && allowed; ++y)
      if (y != p && s.leq(p, y) && !current.test(y)) allowed = false;
    if (allowed) {
      current.set(p, true);
      self(self, pos + 1);
      current.set(p, false);
    }
  };
  enumerate(enumerate, 0);
  std::sort(out.begin(), out.end(),
            [](const Bitset& a, const Bitset& b) { return a.value_less(b); });
  return out;
}

Bitset down_closure(const NelsonSpace& s, const Bitset& u) {
  Bitset r(s.size);
  for (std::uint32_t y = 0; y < s.size; ++y)
    for (std::uint32_t x = 0; x < s.size; ++x)
      if (u.test(x) && s.leq(y, x)) {
        r.set(y);
        break;
      }
  return r;
}

Bitset phi_image(const NelsonSpace& s, const Bitset& u) {
  Bitset r(s.size);
  u.for_each([&](std::size_t x) { r.set(s.phi[x]); });
  return r;
}

DualAlgebraResult dual_algebra(const NelsonSpace& s, const DualBudget& budget) {
  require_valid_space(s);
  std::vector<Bitset> carrier = up_sets(s, budget.max_size);
  const auto n = static_cast<std::uint32_t>(carrier.size());
  SetIndex index = index_sets(carrier);
  auto locate = [&](const Bitset& b, const char* op) -> elem {
    auto it = index.find(b);
    if (it == index.end())
      throw std::logic_error(cat("dual ", op, " left the up-set lattice"));
    return static_cast<elem>(it->second);
  };

  std::vector<elem> neg(n), meet(static_cast<std::size_t>(n) * n),
      join(static_cast<std::size_t>(n) * n), imp(static_cast<std::size_t>(n) * n);
  std::vector<Bitset> phi_images;
  phi_images.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) phi_images.push_back(phi_image(s, carrier[i]));
  for (std::uint32_t i = 0; i < n; ++i) {
    neg[i] = locate(phi_images[i].complement(), "negation");
    for (std::uint32_t j = 0; j < n; ++j) {
      const Bitset& u = carrier[i];
      const Bitset& v = carrier[j];
      meet[static_cast<std::size_t>(i) * n + j] = locate(u & v, "meet");
      join[static_cast<std::size_t>(i) * n + j] = locate(u | v, "join");
      imp[static_cast<std::size_t>(i) * n + j] = locate(
          down_closure(s, (u & phi_images[i]) & v.complement()).complement(),
          "implication");
    }
  }
  const elem top = locate(Bitset::full(s.size), "top");
  return DualAlgebraResult{FiniteNelsonAlgebra(n, top, std::move(neg), std::move(meet),
                                               std::move(join), std::move(imp)),
                           std::move(carrier)};
}

SpaceMorphism dual_of_hom(const FiniteNelsonAlgebra& a, const FiniteNelsonAlgebra& b,
                          const Homomorphism& h, const SpectrumResult& spec_a,
                          const SpectrumResult& spec_b) {
  if (h.map.size() != a.size())
    throw format_error(cat("homomorphism has ", h.map.size(), " entries, expected ", a.size()));
  for (elem x = 0; x < a.size(); ++x)
    if (h(x) >= b.size())
      throw format_error(cat("homomorphism image of ", x, " is out of range"));
  SetIndex index = index_sets(spec_a.points);
  SpaceMorphism f;
  f.map.resize(spec_b.space.size);
  for (std::uint32_t i = 0; i < spec_b.space.size; ++i) {
    Bitset preimage(a.size());
    for (elem x = 0; x < a.size(); ++x)
      if (spec_b.points[i].test(h(x))) preimage.set(x);
    auto it = index.find(preimage);
    if (it == index.end())
      throw format_error(cat("preimage of prime filter ", spec_b.space.label(i),
                             " is not a prime filter"));
    f.map[i] = it->second;
  }
  std::string why;
  if (!is_space_morphism(spec_b.space, spec_a.space, f, &why))
    throw format_error(cat("dual of the homomorphism is not a space morphism: ", why));
  return f;
}

Homomorphism dual_of_morphism(const NelsonSpace& s, const NelsonSpace& t,
                              const SpaceMorphism& f, const DualAlgebraResult& dual_s,
                              const DualAlgebraResult& dual_t) {
  std::string why;
  if (!is_space_morphism(s, t, f, &why))
    throw format_error(cat("not a space morphism: ", why));
  SetIndex index = index_sets(dual_s.carrier_sets);
  Homomorphism h;
  h.map.resize(dual_t.carrier_sets.size());
  for (std::uint32_t j = 0; j < dual_t.carrier_sets.size(); ++j) {
    Bitset preimage(s.size);
    for (std::uint32_t x = 0; x < s.size; ++x)
      if (dual_t.carrier_sets[j].test(f(x))) preimage.set(x);
    auto it = index.find(preimage);
    if (it == index.end())
      throw std::logic_error("preimage of an up-set is not an up-set");
    h.map[j] = static_cast<elem>(it->second);
  }
  HomomorphismViolation violation;
  if (!is_homomorphism(dual_t.algebra, dual_s.algebra, h, &violation))
    throw format_error(cat("dual of the space morphism is not a homomorphism: ",
                           violation.describe()));
  return h;
}

RoundtripResult roundtrip_check(const FiniteNelsonAlgebra& a) {
  SpectrumResult spec = spectrum(a);
  DualAlgebraResult dual = dual_algebra(spec.space);
  if (dual.algebra.size() != a.size())
    throw format_error(cat("duality roundtrip failed: algebra has ", a.size(),
                           " elements but the dual of its spectrum has ",
                           dual.algebra.size()));
  SetIndex index = index_sets(dual.carrier_sets);
  Homomorphism iso;
  iso.map.resize(a.size());
  std::vector<bool> hit(a.size(), false);
  for (elem x = 0; x < a.size(); ++x) {
    Bitset sigma(spec.space.size);
    for (std::uint32_t i = 0; i < spec.space.size; ++i)
      if (spec.points[i].test(x)) sigma.set(i);
    auto it = index.find(sigma);
    if (it == index.end())
      throw std::logic_error("sigma image is not an up-set of the spectrum");
    iso.map[x] = static_cast<elem>(it->second);
    if (hit[it->second])
      throw format_error(cat("duality roundtrip failed: elements share the image ",
                             set_label(sigma, "P")));
    hit[it->second] = true;
  }
  HomomorphismViolation violation;
  if (!is_homomorphism(a, dual.algebra, iso, &violation))
    throw format_error(cat("duality roundtrip failed: ", violation.describe()));
  return RoundtripResult{std::move(spec), std::move(dual), std::move(iso)};
}

SpaceRoundtripResult space_roundtrip_check(const NelsonSpace& s, const DualBudget& budget) {
  DualAlgebraResult dual = dual_algebra(s, budget);
  SpectrumResult respec = spectrum(dual.algebra);
  if (respec.space.size != s.size)
    throw format_error(cat("space roundtrip failed: space has ", s.size,
                           " points but the spectrum of its dual has ",
                           respec.space.size));
  SetIndex index = index_sets(respec.points);
  SpaceMorphism iso;
  iso.map.resize(s.size);
  for (std::uint32_t p = 0; p < s.size; ++p) {
    Bitset through(dual.carrier_sets.size());
    for (std::uint32_t j = 0; j < dual.carrier_sets.size(); ++j)
      if (dual.carrier_sets[j].test(p)) through.set(j);
    auto it = index.find(through);
    if (it == index.end())
      throw format_error(cat("space roundtrip failed: the up-sets through ",
                             s.label(p), " do not form a prime filter"));
    iso.map[p] = it->second;
  }
  if (!is_space_isomorphism(s, respec.space, iso))
    throw format_error("space roundtrip failed: the canonical map is not an isomorphism");
  return SpaceRoundtripResult{std::move(dual), std::move(respec), std::move(iso)};
}

}  // namespace nelson
