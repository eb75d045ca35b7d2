#include "nelson/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace nelson {

namespace {

void check_table(const std::vector<elem>& table, std::size_t want,
                 std::uint32_t size, const char* name) {
  if (table.size() != want) {
    throw format_error(cat("operation table '", name, "' has ", table.size(),
                           " entries, expected ", want));
  }
  for (elem v : table) {
    if (v >= size) {
      throw format_error(cat("operation table '", name, "' contains entry ", v,
                             " outside carrier 0..", size - 1));
    }
  }
}

}  // namespace

FiniteNelsonAlgebra::FiniteNelsonAlgebra(std::uint32_t size, elem top,
                                         std::vector<elem> neg,
                                         std::vector<elem> meet,
                                         std::vector<elem> join,
                                         std::vector<elem> imp)
    : size_(size),
      top_(top),
      neg_(std::move(neg)),
      meet_(std::move(meet)),
      join_(std::move(join)),
      imp_(std::move(imp)) {
  if (size_ == 0) throw format_error("algebra carrier must be non-empty");
  if (size_ > kMaxCarrier + 1u) {
    throw resource_error(cat("carrier size ", size_, " exceeds the supported ",
                             "maximum ", kMaxCarrier + 1u));
  }
  if (top_ >= size_) {
    throw format_error(cat("top element ", top_, " outside carrier 0..",
                           size_ - 1));
  }
  check_table(neg_, size_, size_, "neg");
  const std::size_t square = static_cast<std::size_t>(size_) * size_;
  check_table(meet_, square, size_, "meet");
  check_table(join_, square, size_, "join");
  check_table(imp_, square, size_, "imp");
}

FiniteNelsonAlgebra make_chain(std::uint32_t n) {
  if (n < 2) throw format_error("chain must have at least two elements");
  if (n > kMaxCarrier + 1u) {
    throw resource_error(cat("chain size ", n, " exceeds the supported ",
                             "maximum ", kMaxCarrier + 1u));
  }
  const elem top = static_cast<elem>(n - 1);
  std::vector<elem> neg(n), meet(static_cast<std::size_t>(n) * n),
      join(static_cast<std::size_t>(n) * n), imp(static_cast<std::size_t>(n) * n);
  for (std::uint32_t a = 0; a < n; ++a) {
    neg[a] = static_cast<elem>(n - 1 - a);
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      const std::size_t at = static_cast<std::size_t>(a) * n + b;
      meet[at] = static_cast<elem>(std::min(a, b));
      join[at] = static_cast<elem>(std::max(a, b));
      // a -> b is top when a <= b or a <= neg(a); otherwise neg(a) join b.
      if (a <= b || 2 * a <= n - 1) {
        imp[at] = top;
      } else {
        imp[at] = static_cast<elem>(std::max(n - 1 - a, b));
      }
    }
  }
  return FiniteNelsonAlgebra(n, top, std::move(neg), std::move(meet),
                             std::move(join), std::move(imp));
}

elem tuple_index(const std::vector<FiniteNelsonAlgebra>& factors,
                 const std::vector<elem>& tuple) {
  if (tuple.size() != factors.size()) {
    throw format_error(cat("tuple has ", tuple.size(), " coordinates for ",
                           factors.size(), " factors"));
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (tuple[i] >= factors[i].size()) {
      throw format_error(cat("coordinate ", i, " value ", tuple[i],
                             " outside factor carrier 0..",
                             factors[i].size() - 1));
    }
    index = index * factors[i].size() + tuple[i];
  }
  return static_cast<elem>(index);
}

std::vector<elem> tuple_of(const std::vector<FiniteNelsonAlgebra>& factors,
                           elem index) {
  std::vector<elem> tuple(factors.size());
  std::size_t rest = index;
  for (std::size_t i = factors.size(); i-- > 0;) {
    tuple[i] = static_cast<elem>(rest % factors[i].size());
    rest /= factors[i].size();
  }
  if (rest != 0) {
    throw format_error(cat("index ", index, " outside product carrier"));
  }
  return tuple;
}

FiniteNelsonAlgebra product(const std::vector<FiniteNelsonAlgebra>& factors,
                            std::uint32_t max_size) {
  if (factors.empty()) throw format_error("product needs at least one factor");
  std::uint64_t total = 1;
  for (const auto& f : factors) {
    total *= f.size();
    if (total > max_size || total > kMaxCarrier + 1u) {
      throw resource_error(cat("product carrier exceeds the budget of ",
                               std::min<std::uint64_t>(max_size,
                                                       kMaxCarrier + 1u),
                               " elements"));
    }
  }
  const std::uint32_t n = static_cast<std::uint32_t>(total);
  const std::size_t k = factors.size();

  // Decompose every index once; the table fill then works coordinate-wise.
  std::vector<std::vector<elem>> coords(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    coords[a] = tuple_of(factors, static_cast<elem>(a));
  }

  std::vector<elem> tops(k);
  for (std::size_t i = 0; i < k; ++i) tops[i] = factors[i].top();
  const elem top = tuple_index(factors, tops);

  std::vector<elem> neg(n), meet(static_cast<std::size_t>(n) * n),
      join(static_cast<std::size_t>(n) * n), imp(static_cast<std::size_t>(n) * n);
  std::vector<elem> scratch(k);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < k; ++i) scratch[i] = factors[i].neg(coords[a][i]);
    neg[a] = tuple_index(factors, scratch);
    for (std::uint32_t b = 0; b < n; ++b) {
      const std::size_t at = static_cast<std::size_t>(a) * n + b;
      for (std::size_t i = 0; i < k; ++i) {
        scratch[i] = factors[i].meet(coords[a][i], coords[b][i]);
      }
      meet[at] = tuple_index(factors, scratch);
      for (std::size_t i = 0; i < k; ++i) {
        scratch[i] = factors[i].join(coords[a][i], coords[b][i]);
      }
      join[at] = tuple_index(factors, scratch);
      for (std::size_t i = 0; i < k; ++i) {
        scratch[i] = factors[i].imp(coords[a][i], coords[b][i]);
      }
      imp[at] = tuple_index(factors, scratch);
    }
  }
  return FiniteNelsonAlgebra(n, top, std::move(neg), std::move(meet),
                             std::move(join), std::move(imp));
}

std::string HomomorphismViolation::describe() const {
  if (op == "top") {
    return cat("h(top) = ", got, ", expected ", want);
  }
  if (op == "neg") {
    return cat("h(neg ", x, ") = ", want, " but neg h(", x, ") = ", got);
  }
  return cat("h(", x, " ", op, " ", y, ") = ", want, " but h(", x, ") ", op,
             " h(", y, ") = ", got);
}

bool is_homomorphism(const FiniteNelsonAlgebra& source,
                     const FiniteNelsonAlgebra& target, const Homomorphism& h,
                     HomomorphismViolation* why) {
  if (h.map.size() != source.size()) {
    throw format_error(cat("homomorphism table has ", h.map.size(),
                           " entries for a source of size ", source.size()));
  }
  for (elem v : h.map) {
    if (v >= target.size()) {
      throw format_error(cat("homomorphism value ", v,
                             " outside target carrier"));
    }
  }
  auto fail = [&](const char* op, elem x, elem y, elem got, elem want) {
    if (why) *why = HomomorphismViolation{op, x, y, got, want};
    return false;
  };
  if (h(source.top()) != target.top()) {
    return fail("top", 0, 0, h(source.top()), target.top());
  }
  const std::uint32_t n = source.size();
  for (std::uint32_t a = 0; a < n; ++a) {
    const elem ha = h(static_cast<elem>(a));
    if (h(source.neg(static_cast<elem>(a))) != target.neg(ha)) {
      return fail("neg", static_cast<elem>(a), 0, target.neg(ha),
                  h(source.neg(static_cast<elem>(a))));
    }
    for (std::uint32_t b = 0; b < n; ++b) {
      const elem x = static_cast<elem>(a), y = static_cast<elem>(b);
      const elem hb = h(y);
      if (h(source.meet(x, y)) != target.meet(ha, hb)) {
        return fail("meet", x, y, target.meet(ha, hb), h(source.meet(x, y)));
      }
      if (h(source.join(x, y)) != target.join(ha, hb)) {
        return fail("join", x, y, target.join(ha, hb), h(source.join(x, y)));
      }
      if (h(source.imp(x, y)) != target.imp(ha, hb)) {
        return fail("imp", x, y, target.imp(ha, hb), h(source.imp(x, y)));
      }
    }
  }
  return true;
}

bool is_surjective(const FiniteNelsonAlgebra& target, const Homomorphism& h) {
  std::vector<bool> hit(target.size(), false);
  for (elem v : h.map) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

Bitset kernel(const FiniteNelsonAlgebra& source,
              const FiniteNelsonAlgebra& target, const Homomorphism& h) {
  Bitset ker(source.size());
  for (std::uint32_t x = 0; x < source.size(); ++x) {
    if (h(static_cast<elem>(x)) == target.top()) ker.set(x);
  }
  return ker;
}

Homomorphism compose(const Homomorphism& first, const Homomorphism& second) {
  Homomorphism out;
  out.map.reserve(first.map.size());
  for (elem v : first.map) out.map.push_back(second(v));
  return out;
}

namespace {

// Closure of `start` under the four operations, as a membership mask.
std::vector<bool> closure_mask(const FiniteNelsonAlgebra& a,
                               const std::vector<elem>& start) {
  std::vector<bool> in(a.size(), false);
  std::vector<elem> queue;
  auto push = [&](elem x) {
    if (!in[x]) {
      in[x] = true;
      queue.push_back(x);
    }
  };
  push(a.top());
  for (elem s : start) {
    if (s >= a.size()) {
      throw format_error(cat("generator ", s, " outside carrier"));
    }
    push(s);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const elem x = queue[head];
    push(a.neg(x));
    for (std::size_t j = 0; j <= head; ++j) {
      const elem y = queue[j];
      push(a.meet(x, y));
      push(a.join(x, y));
      push(a.imp(x, y));
      push(a.imp(y, x));
    }
  }
  return in;
}

}  // namespace

Subalgebra generated_subalgebra(const FiniteNelsonAlgebra& ambient,
                                const std::vector<elem>& seeds) {
  const std::vector<bool> in = closure_mask(ambient, seeds);
  std::vector<elem> elements;
  std::vector<elem> rank(ambient.size(), 0);
  for (std::uint32_t x = 0; x < ambient.size(); ++x) {
    if (in[x]) {
      rank[x] = static_cast<elem>(elements.size());
      elements.push_back(static_cast<elem>(x));
    }
  }
  const std::uint32_t n = static_cast<std::uint32_t>(elements.size());
  std::vector<elem> neg(n), meet(static_cast<std::size_t>(n) * n),
      join(static_cast<std::size_t>(n) * n), imp(static_cast<std::size_t>(n) * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    neg[i] = rank[ambient.neg(elements[i])];
    for (std::uint32_t j = 0; j < n; ++j) {
      const std::size_t at = static_cast<std::size_t>(i) * n + j;
      meet[at] = rank[ambient.meet(elements[i], elements[j])];
      join[at] = rank[ambient.join(elements[i], elements[j])];
      imp[at] = rank[ambient.imp(elements[i], elements[j])];
    }
  }
  Subalgebra out{FiniteNelsonAlgebra(n, rank[ambient.top()], std::move(neg),
                                     std::move(meet), std::move(join),
                                     std::move(imp)),
                 elements, Homomorphism{elements}};
  return out;
}

std::vector<elem> small_generating_set(const FiniteNelsonAlgebra& a) {
  auto covers_all = [&](const std::vector<bool>& in) {
    return std::all_of(in.begin(), in.end(), [](bool b) { return b; });
  };
  for (std::uint32_t x = 0; x < a.size(); ++x) {
    if (covers_all(closure_mask(a, {static_cast<elem>(x)}))) {
      return {static_cast<elem>(x)};
    }
  }
  std::vector<elem> gens;
  std::vector<bool> in = closure_mask(a, gens);
  while (!covers_all(in)) {
    elem next = 0;
    for (std::uint32_t x = 0; x < a.size(); ++x) {
      if (!in[x]) {
        next = static_cast<elem>(x);
        break;
      }
    }
    gens.push_back(next);
    in = closure_mask(a, gens);
  }
  return gens;
}

namespace {

// Per-element fingerprint preserved by any isomorphism; used to prune the
// candidate images during the backtracking search.
std::uint64_t local_invariant(const FiniteNelsonAlgebra& a, elem x) {
  std::uint64_t up = 0, down = 0;
  for (std::uint32_t y = 0; y < a.size(); ++y) {
    if (a.leq(x, static_cast<elem>(y))) ++up;
    if (a.leq(static_cast<elem>(y), x)) ++down;
  }
  const std::uint64_t negfix = (a.neg(x) == x) ? 1 : 0;
  const std::uint64_t selfimp = a.leq(x, a.neg(x)) ? 1 : 0;
  return (up << 24) | (down << 2) | (negfix << 1) | selfimp;
}

// Extends the partial map over the closure of the assigned generators,
// forcing images through the operations; false on any clash.
bool force_map(const FiniteNelsonAlgebra& a, const FiniteNelsonAlgebra& b,
               const std::vector<elem>& gens, const std::vector<elem>& images,
               Homomorphism* out) {
  constexpr elem kUnset = static_cast<elem>(-1);
  std::vector<elem> map(a.size(), kUnset);
  std::vector<elem> inverse(b.size(), kUnset);
  std::vector<elem> queue;
  auto assign = [&](elem x, elem v) {
    if (map[x] != kUnset) return map[x] == v;
    if (inverse[v] != kUnset) return false;  // injectivity
    map[x] = v;
    inverse[v] = x;
    queue.push_back(x);
    return true;
  };
  if (!assign(a.top(), b.top())) return false;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!assign(gens[i], images[i])) return false;
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const elem x = queue[head];
    if (!assign(a.neg(x), b.neg(map[x]))) return false;
    for (std::size_t j = 0; j <= head; ++j) {
      const elem y = queue[j];
      if (!assign(a.meet(x, y), b.meet(map[x], map[y]))) return false;
      if (!assign(a.join(x, y), b.join(map[x], map[y]))) return false;
      if (!assign(a.imp(x, y), b.imp(map[x], map[y]))) return false;
      if (!assign(a.imp(y, x), b.imp(map[y], map[x]))) return false;
    }
  }
  if (queue.size() != a.size()) return false;  // generators must span
  out->map = std::move(map);
  return true;
}

bool search_images(const FiniteNelsonAlgebra& a, const FiniteNelsonAlgebra& b,
                   const std::vector<elem>& gens,
                   const std::vector<std::vector<elem>>& candidates,
                   std::vector<elem>& images, std::size_t depth,
                   Homomorphism* out) {
  if (depth == gens.size()) {
    return force_map(a, b, gens, images, out);
  }
  for (elem v : candidates[depth]) {
    images[depth] = v;
    if (search_images(a, b, gens, candidates, images, depth + 1, out)) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<Homomorphism> find_isomorphism(const FiniteNelsonAlgebra& a,
                                             const FiniteNelsonAlgebra& b) {
  if (a.size() != b.size()) return std::nullopt;

  std::vector<std::uint64_t> inv_a(a.size()), inv_b(b.size());
  for (std::uint32_t x = 0; x < a.size(); ++x) {
    inv_a[x] = local_invariant(a, static_cast<elem>(x));
  }
  for (std::uint32_t x = 0; x < b.size(); ++x) {
    inv_b[x] = local_invariant(b, static_cast<elem>(x));
  }
  {
    std::vector<std::uint64_t> pa = inv_a, pb = inv_b;
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    if (pa != pb) return std::nullopt;
  }

  const std::vector<elem> gens = small_generating_set(a);
  std::vector<std::vector<elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::uint32_t v = 0; v < b.size(); ++v) {
      if (inv_b[v] == inv_a[gens[i]]) candidates[i].push_back(static_cast<elem>(v));
    }
    if (candidates[i].empty()) return std::nullopt;
  }
  std::vector<elem> images(gens.size());
  Homomorphism h;
  if (search_images(a, b, gens, candidates, images, 0, &h)) {
    // force_map visits every pair, so this can only fire on an internal bug.
    if (!is_homomorphism(a, b, h) || !is_surjective(b, h)) {
      throw std::logic_error("isomorphism search produced a non-isomorphism");
    }
    return h;
  }
  return std::nullopt;
}

}  // namespace nelson
