#include "nelson/space.hpp"

#include <algorithm>
#include <cstddef>

namespace nelson {
namespace {

std::string point_pair(const NelsonSpace& s, std::uint32_t x, std::uint32_t y) {
  return cat(s.label(x), ", ", s.label(y));
}

}  // namespace

std::optional<SpaceViolation> validate_space(const NelsonSpace& s) {
  const std::uint32_t n = s.size;
  if (n == 0) return SpaceViolation{"shape", "space must have at least one point"};
  if (s.leq_table.size() != static_cast<std::size_t>(n) * n)
    return SpaceViolation{"shape", cat("leq table has ", s.leq_table.size(),
                                       " entries, expected ", static_cast<std::size_t>(n) * n)};
  if (s.phi.size() != n)
    return SpaceViolation{"shape", cat("phi has ", s.phi.size(), " entries, expected ", n)};
  for (std::uint32_t x = 0; x < n; ++x)
    if (s.phi[x] >= n)
      return SpaceViolation{"shape", cat("phi(", s.label(x), ") = ", s.phi[x], " is out of range")};
  if (!s.labels.empty() && s.labels.size() != n)
    return SpaceViolation{"shape", cat("labels has ", s.labels.size(), " entries, expected ", n)};

  for (std::uint32_t x = 0; x < n; ++x)
    if (!s.leq(x, x))
      return SpaceViolation{"reflexive", cat("not ", s.label(x), " <= ", s.label(x))};
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      if (x != y && s.leq(x, y) && s.leq(y, x))
        return SpaceViolation{"antisymmetric",
                              cat("distinct points ", point_pair(s, x, y), " are mutually below each other")};
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      if (!s.leq(x, y)) continue;
      for (std::uint32_t z = 0; z < n; ++z)
        if (s.leq(y, z) && !s.leq(x, z))
          return SpaceViolation{"transitive",
                                cat(s.label(x), " <= ", s.label(y), " <= ", s.label(z),
                                    " but not ", s.label(x), " <= ", s.label(z))};
    }

  for (std::uint32_t x = 0; x < n; ++x)
    if (s.phi[s.phi[x]] != x)
      return SpaceViolation{"involution",
                            cat("phi(phi(", s.label(x), ")) = ", s.label(s.phi[s.phi[x]]))};
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      if (s.leq(x, y) != s.leq(s.phi[y], s.phi[x]))
        return SpaceViolation{"anti-isomorphism",
                              cat(s.label(x), " <= ", s.label(y), " does not match phi(",
                                  s.label(y), ") <= phi(", s.label(x), ")")};
  for (std::uint32_t x = 0; x < n; ++x)
    if (!s.leq(x, s.phi[x]) && !s.leq(s.phi[x], x))
      return SpaceViolation{"comparability",
                            cat(s.label(x), " is incomparable with phi(", s.label(x), ")")};

  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      if (!(s.leq(x, s.phi[x]) && s.leq(x, s.phi[y]) && s.leq(y, s.phi[x]) && s.leq(y, s.phi[y])))
        continue;
      bool found = false;
      for (std::uint32_t z = 0; z < n && !found; ++z)
        found = s.leq(x, z) && s.leq(y, z) && s.leq(z, s.phi[x]) && s.leq(z, s.phi[y]);
      if (!found)
        return SpaceViolation{"interpolation",
                              cat("no point lies above ", point_pair(s, x, y), " and below phi(",
                                  s.label(x), "), phi(", s.label(y), ")")};
    }
  return std::nullopt;
}

void require_valid_space(const NelsonSpace& s) {
  if (auto v = validate_space(s))
    throw format_error(cat("not a Nelson space (", v->axiom, "): ", v->detail));
}

std::vector<std::uint32_t> x_plus(const NelsonSpace& s) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < s.size; ++x)
    if (s.leq(x, s.phi[x])) out.push_back(x);
  return out;
}

std::vector<std::uint32_t> x_minus(const NelsonSpace& s) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < s.size; ++x)
    if (s.leq(s.phi[x], x)) out.push_back(x);
  return out;
}

std::vector<std::vector<std::uint32_t>> components(const NelsonSpace& s) {
  std::vector<std::uint32_t> root(s.size);
  for (std::uint32_t x = 0; x < s.size; ++x) root[x] = x;
  // union-find over comparability (phi stays inside by the comparability axiom)
  auto find = [&](std::uint32_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  auto unite = [&](std::uint32_t x, std::uint32_t y) {
    x = find(x);
    y = find(y);
    if (x != y) root[std::max(x, y)] = std::min(x, y);
  };
  for (std::uint32_t x = 0; x < s.size; ++x) {
    unite(x, s.phi[x]);
    for (std::uint32_t y = x + 1; y < s.size; ++y)
      if (s.leq(x, y) || s.leq(y, x)) unite(x, y);
  }
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::size_t> slot(s.size, SIZE_MAX);
  for (std::uint32_t x = 0; x < s.size; ++x) {
    std::uint32_t r = find(x);
    if (slot[r] == SIZE_MAX) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(x);
  }
  return out;
}

NelsonSpace restrict_space(const NelsonSpace& s, const std::vector<std::uint32_t>& points) {
  std::vector<std::uint32_t> index(s.size, UINT32_MAX);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] >= s.size) throw format_error(cat("point ", points[i], " is out of range"));
    index[points[i]] = static_cast<std::uint32_t>(i);
  }
  NelsonSpace out;
  out.size = static_cast<std::uint32_t>(points.size());
  out.leq_table.assign(static_cast<std::size_t>(out.size) * out.size, false);
  out.phi.resize(out.size);
  if (!s.labels.empty()) out.labels.resize(out.size);
  for (std::uint32_t i = 0; i < out.size; ++i) {
    std::uint32_t p = points[i];
    if (index[s.phi[p]] == UINT32_MAX)
      throw format_error(cat("point set is not phi-closed at ", s.label(p)));
    out.phi[i] = index[s.phi[p]];
    if (!s.labels.empty()) out.labels[i] = s.labels[p];
    for (std::uint32_t j = 0; j < out.size; ++j)
      out.leq_table[static_cast<std::size_t>(i) * out.size + j] = s.leq(p, points[j]);
  }
  return out;
}

NelsonSpace disjoint_union(const std::vector<NelsonSpace>& parts) {
  NelsonSpace out;
  for (const NelsonSpace& part : parts) out.size += part.size;
  out.leq_table.assign(static_cast<std::size_t>(out.size) * out.size, false);
  out.phi.resize(out.size);
  out.labels.resize(out.size);
  std::uint32_t offset = 0;
  for (const NelsonSpace& part : parts) {
    for (std::uint32_t x = 0; x < part.size; ++x) {
      out.phi[offset + x] = offset + part.phi[x];
      out.labels[offset + x] = part.label(x);
      for (std::uint32_t y = 0; y < part.size; ++y)
        out.leq_table[static_cast<std::size_t>(offset + x) * out.size + (offset + y)] =
            part.leq(x, y);
    }
    offset += part.size;
  }
  return out;
}

bool is_space_morphism(const NelsonSpace& source, const NelsonSpace& target,
                       const SpaceMorphism& f, std::string* why) {
  auto fail = [&](std::string message) {
    if (why) *why = std::move(message);
    return false;
  };
  if (f.map.size() != source.size)
    return fail(cat("map has ", f.map.size(), " entries, expected ", source.size));
  for (std::uint32_t x = 0; x < source.size; ++x)
    if (f.map[x] >= target.size)
      return fail(cat("image of ", source.label(x), " is out of range"));
  for (std::uint32_t x = 0; x < source.size; ++x)
    for (std::uint32_t y = 0; y < source.size; ++y)
      if (source.leq(x, y) && !target.leq(f.map[x], f.map[y]))
        return fail(cat("order not preserved at ", point_pair(source, x, y)));
  for (std::uint32_t x = 0; x < source.size; ++x)
    if (f.map[source.phi[x]] != target.phi[f.map[x]])
      return fail(cat("phi not preserved at ", source.label(x)));
  return true;
}

bool is_space_isomorphism(const NelsonSpace& source, const NelsonSpace& target,
                          const SpaceMorphism& f) {
  if (source.size != target.size || !is_space_morphism(source, target, f)) return false;
  std::vector<bool> hit(target.size, false);
  for (std::uint32_t x = 0; x < source.size; ++x) {
    if (hit[f.map[x]]) return false;
    hit[f.map[x]] = true;
  }
  // bijective morphism; the inverse must preserve order too
  for (std::uint32_t x = 0; x < source.size; ++x)
    for (std::uint32_t y = 0; y < source.size; ++y)
      if (target.leq(f.map[x], f.map[y]) && !source.leq(x, y)) return false;
  return true;
}

namespace {

// (points below, points above, phi-fixed, x <= phi x, phi x <= x)
std::uint64_t point_invariant(const NelsonSpace& s, std::uint32_t x) {
  std::uint64_t down = 0;
  std::uint64_t up = 0;
  for (std::uint32_t y = 0; y < s.size; ++y) {
    if (s.leq(y, x)) ++down;
    if (s.leq(x, y)) ++up;
  }
  std::uint64_t flags = (s.phi[x] == x ? 4u : 0u) | (s.leq(x, s.phi[x]) ? 2u : 0u) |
                        (s.leq(s.phi[x], x) ? 1u : 0u);
  return (down << 32) | (up << 3) | flags;
}

bool extend_point_map(const NelsonSpace& a, const NelsonSpace& b,
                      const std::vector<std::uint64_t>& inv_a,
                      const std::vector<std::uint64_t>& inv_b,
                      std::vector<std::uint32_t>& map, std::vector<bool>& used,
                      std::uint32_t next) {
  if (next == a.size) return true;
  for (std::uint32_t image = 0; image < b.size; ++image) {
    if (used[image] || inv_a[next] != inv_b[image]) continue;
    bool ok = true;
    for (std::uint32_t prev = 0; prev < next && ok; ++prev) {
      ok = a.leq(prev, next) == b.leq(map[prev], image) &&
           a.leq(next, prev) == b.leq(image, map[prev]);
      if (ok && a.phi[prev] == next) ok = b.phi[map[prev]] == image;
      if (ok && a.phi[next] == prev) ok = b.phi[image] == map[prev];
    }
    if (ok && a.phi[next] == next && b.phi[image] != image) ok = false;
    if (!ok) continue;
    map[next] = image;
    used[image] = true;
    if (extend_point_map(a, b, inv_a, inv_b, map, used, next + 1)) return true;
    used[image] = false;
  }
  return false;
}

}  // namespace

std::optional<SpaceMorphism> find_space_isomorphism(const NelsonSpace& a, const NelsonSpace& b) {
  if (a.size != b.size) return std::nullopt;
  std::vector<std::uint64_t> inv_a(a.size), inv_b(b.size);
  for (std::uint32_t x = 0; x < a.size; ++x) inv_a[x] = point_invariant(a, x);
  for (std::uint32_t x = 0; x < b.size; ++x) inv_b[x] = point_invariant(b, x);
  std::vector<std::uint64_t> sorted_a = inv_a, sorted_b = inv_b;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return std::nullopt;

  SpaceMorphism f;
  f.map.assign(a.size, 0);
  std::vector<bool> used(b.size, false);
  if (!extend_point_map(a, b, inv_a, inv_b, f.map, used, 0)) return std::nullopt;
  if (!is_space_isomorphism(a, b, f))
    throw std::logic_error("isomorphism search produced an inconsistent map");
  return f;
}

}  // namespace nelson
