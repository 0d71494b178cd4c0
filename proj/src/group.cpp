#include "schurlab/group.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <random>
#include <unordered_set>

#include "schurlab/numtheory.hpp"

namespace schurlab {

namespace {

using Mask = std::bitset<kMaxOrder>;

ElementSet from_mask(const Mask& m, int n) {
  ElementSet s;
  for (int x = 0; x < n; ++x)
    if (m.test(static_cast<std::size_t>(x))) s.push_back(x);
  return s;
}

// Closure of `seed` (assumed to contain 0) under multiplication by `gens`.
Mask close(const Group& g, Mask seed, const ElementSet& gens) {
  ElementSet queue = from_mask(seed, g.order());
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (Element s : gens) {
      Element y = g.mul(queue[k], s);
      if (!seed.test(static_cast<std::size_t>(y))) {
        seed.set(static_cast<std::size_t>(y));
        queue.push_back(y);
      }
    }
  return seed;
}

}  // namespace

Group::Group(int order, std::vector<Element> table, std::vector<std::string> labels, std::string spec)
    : n_(order), table_(std::move(table)), labels_(std::move(labels)), spec_(std::move(spec)) {
  if (n_ < 1) throw Error("Group: order must be positive");
  if (n_ > kMaxOrder) throw CapExceeded("Group: order " + std::to_string(n_) + " above limit " + std::to_string(kMaxOrder));
  const auto n = static_cast<std::size_t>(n_);
  if (table_.size() != n * n) throw Error("Group: table size mismatch");
  if (labels_.size() != n) throw Error("Group: label count mismatch");
  for (Element v : table_)
    if (v < 0 || v >= n_) throw Error("Group: table entry out of range");
  // Latin square.
  for (int x = 0; x < n_; ++x) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int y = 0; y < n_; ++y) {
      auto r = static_cast<std::size_t>(mul(x, y)), c = static_cast<std::size_t>(mul(y, x));
      if (row[r] || col[c]) throw Error("Group: table is not a Latin square");
      row[r] = col[c] = 1;
    }
  }
  for (int x = 0; x < n_; ++x)
    if (mul(0, x) != x || mul(x, 0) != x) throw Error("Group: element 0 is not the identity");
  inv_.assign(n, -1);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (mul(x, y) == 0) inv_[static_cast<std::size_t>(x)] = y;
  for (int x = 0; x < n_; ++x)
    if (mul(inv(x), x) != 0) throw Error("Group: inverses are not two-sided");
  if (n_ <= kAssociativityExhaustive) {
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        Element xy = mul(x, y);
        for (int z = 0; z < n_; ++z)
          if (mul(xy, z) != mul(x, mul(y, z))) throw Error("Group: table is not associative");
      }
  } else {
    std::mt19937_64 rng(0x5eedULL + static_cast<unsigned>(n_));
    std::uniform_int_distribution<int> pick(0, n_ - 1);
    for (long long t = 0; t < 10LL * n_ * n_; ++t) {
      int x = pick(rng), y = pick(rng), z = pick(rng);
      if (mul(mul(x, y), z) != mul(x, mul(y, z))) throw Error("Group: table is not associative");
    }
  }
  orders_.assign(n, 1);
  for (int x = 0; x < n_; ++x) {
    Element y = x;
    int k = 1;
    while (y != 0) {
      y = mul(y, x);
      ++k;
    }
    orders_[static_cast<std::size_t>(x)] = x == 0 ? 1 : k;
  }
  // Greedy generating set by index, then drop redundant members.
  Mask h;
  h.set(0);
  for (int x = 1; x < n_; ++x)
    if (!h.test(static_cast<std::size_t>(x))) {
      gens_.push_back(x);
      h = close(*this, h, gens_);
    }
  for (std::size_t i = gens_.size(); i-- > 0;) {
    ElementSet rest = gens_;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    Mask start;
    start.set(0);
    if (static_cast<int>(close(*this, start, rest).count()) == n_) gens_ = std::move(rest);
  }
}

Element Group::pow(Element x, long long k) const {
  int o = element_order(x);
  k %= o;
  if (k < 0) k += o;
  Element r = 0;
  for (long long i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

int Group::exponent() const {
  long long e = 1;
  for (int o : orders_) e = e / gcd(e, o) * o;
  return static_cast<int>(e);
}

bool Group::is_abelian() const {
  for (Element a : gens_)
    for (Element b : gens_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Element Group::find_label(std::string_view label) const {
  for (int x = 0; x < n_; ++x)
    if (labels_[static_cast<std::size_t>(x)] == label) return x;
  return -1;
}

ElementSet Section::preimage(Element q) const {
  ElementSet out;
  for (Element x : upper.elements)
    if (project(x) == q) out.push_back(x);
  return out;
}

// ---------------------------------------------------------------------------

std::vector<ElementSet> conjugacy_classes(const Group& g) {
  const int n = g.order();
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  std::vector<ElementSet> out;
  for (int x = 0; x < n; ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    ElementSet cls{x};
    seen[static_cast<std::size_t>(x)] = 1;
    for (std::size_t k = 0; k < cls.size(); ++k)
      for (Element s : g.generators()) {
        Element y = g.conj(cls[k], s);
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          cls.push_back(y);
        }
      }
    out.push_back(normalized(std::move(cls)));
  }
  return out;
}

ElementSet class_of(const Group& g, Element h, const Subgroup& H) {
  if (!H.contains(h)) throw Error("class_of: element not in subgroup");
  ElementSet out;
  for (Element k : H.elements) out.push_back(g.conj(h, k));
  return normalized(std::move(out));
}

Subgroup generated_subgroup(const Group& g, const ElementSet& x) {
  Mask start;
  start.set(0);
  return Subgroup{from_mask(close(g, start, x), g.order())};
}

bool is_subgroup(const Group& g, const ElementSet& x) {
  if (!contains(x, 0)) return false;
  for (Element a : x)
    for (Element b : x)
      if (!contains(x, g.mul(a, b))) return false;
  return true;
}

bool is_normal(const Group& g, const Subgroup& h) {
  for (Element x : h.elements)
    for (Element s : g.generators())
      if (!h.contains(g.conj(x, s))) return false;
  return true;
}

Subgroup whole(const Group& g) {
  Subgroup s;
  for (int x = 0; x < g.order(); ++x) s.elements.push_back(x);
  return s;
}

Subgroup trivial_subgroup() { return Subgroup{{0}}; }

Section make_section(const Group& g, const Subgroup& upper, const Subgroup& lower) {
  if (!is_subgroup(g, upper.elements)) throw Error("make_section: upper is not a subgroup");
  if (!is_subgroup(g, lower.elements)) throw Error("make_section: lower is not a subgroup");
  if (!is_subset(lower.elements, upper.elements)) throw Error("make_section: lower not contained in upper");
  for (Element l : lower.elements)
    for (Element u : upper.elements)
      if (!lower.contains(g.conj(l, u))) throw Error("make_section: lower is not normal in upper");

  Section s;
  s.upper = upper;
  s.lower = lower;
  s.epimorphism.assign(static_cast<std::size_t>(g.order()), -1);
  // Cosets xL ordered by their minimum element; the coset L comes first.
  std::vector<Element> reps;
  for (Element x : upper.elements) {
    if (s.epimorphism[static_cast<std::size_t>(x)] >= 0) continue;
    Element q = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element l : lower.elements) s.epimorphism[static_cast<std::size_t>(g.mul(x, l))] = q;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<Element> table(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      table[static_cast<std::size_t>(a * m + b)] =
          s.project(g.mul(reps[static_cast<std::size_t>(a)], reps[static_cast<std::size_t>(b)]));
  std::vector<std::string> labels;
  for (Element r : reps) labels.push_back(r == 0 ? std::string("e") : "[" + g.label(r) + "]");
  labels[0] = "e";
  std::string spec = "section(" + g.spec() + ")";
  s.quotient = std::make_shared<const Group>(m, std::move(table), std::move(labels), std::move(spec));
  return s;
}

Section quotient_group(const Group& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw Error("quotient_group: subgroup is not normal");
  return make_section(g, whole(g), n);
}

GroupPtr induced_group(const Group& g, const Subgroup& h) {
  if (!is_subgroup(g, h.elements)) throw Error("induced_group: not a subgroup");
  const int m = h.order();
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < m; ++i) index[static_cast<std::size_t>(h.elements[static_cast<std::size_t>(i)])] = i;
  std::vector<Element> table(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      table[static_cast<std::size_t>(a * m + b)] = index[static_cast<std::size_t>(
          g.mul(h.elements[static_cast<std::size_t>(a)], h.elements[static_cast<std::size_t>(b)]))];
  std::vector<std::string> labels;
  for (Element x : h.elements) labels.push_back(g.label(x));
  return std::make_shared<const Group>(m, std::move(table), std::move(labels), "subgroup(" + g.spec() + ")");
}

Subgroup center(const Group& g) {
  Subgroup z;
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element s : g.generators())
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    if (central) z.elements.push_back(x);
  }
  return z;
}

std::vector<Subgroup> all_subgroups(const Group& g) {
  if (g.order() > kSubgroupSearchCap)
    throw CapExceeded("all_subgroups: order above subgroup-search cap " + std::to_string(kSubgroupSearchCap));
  const int n = g.order();
  struct MaskHash {
    std::size_t operator()(const Mask& m) const { return std::hash<Mask>{}(m); }
  };
  std::unordered_set<Mask, MaskHash> seen;
  std::vector<Mask> found;
  std::vector<Mask> cyclic;
  Mask one;
  one.set(0);
  for (int x = 0; x < n; ++x) {
    Mask c = close(g, one, {x});
    if (seen.insert(c).second) {
      found.push_back(c);
      cyclic.push_back(c);
    }
  }
  // Every subgroup is a join of cyclic subgroups.
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (const Mask& c : cyclic) {
      if ((found[k] | c) == found[k]) continue;
      ElementSet gens = from_mask(found[k] | c, n);
      Mask j = close(g, found[k] | c, gens);
      if (seen.insert(j).second) found.push_back(j);
    }
  }
  std::vector<Subgroup> out;
  for (const Mask& m : found) out.push_back(Subgroup{from_mask(m, n)});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

std::vector<Subgroup> maximal_subgroups(const Group& g) {
  auto subs = all_subgroups(g);
  std::vector<Subgroup> out;
  for (const auto& h : subs) {
    if (h.order() == g.order()) continue;
    bool maximal = true;
    for (const auto& k : subs)
      if (k.order() > h.order() && k.order() < g.order() && is_subset(h.elements, k.elements)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(h);
  }
  return out;
}

std::vector<Subgroup> normal_subgroups(const Group& g) {
  std::vector<Subgroup> out;
  for (auto& h : all_subgroups(g))
    if (is_normal(g, h)) out.push_back(std::move(h));
  return out;
}

Subgroup frattini(const Group& g) {
  auto maxes = maximal_subgroups(g);
  Subgroup f = whole(g);
  for (const auto& m : maxes) f.elements = set_intersection(f.elements, m.elements);
  return f;
}

// ---------------------------------------------------------------------------
// Automorphisms and isomorphisms by backtracking over generator images.

namespace {

// Extends generator images to a map on <gens[0..k)>; returns false on a
// consistency or injectivity failure. `img` is indexed by element of `a`.
bool extend_partial(const Group& a, const Group& b, const std::vector<Element>& gens,
                    const std::vector<Element>& images, std::size_t k, std::vector<Element>& img) {
  img.assign(static_cast<std::size_t>(a.order()), -1);
  std::vector<char> used(static_cast<std::size_t>(b.order()), 0);
  img[0] = 0;
  used[0] = 1;
  std::vector<Element> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Element x = queue[q];
    for (std::size_t t = 0; t < k; ++t) {
      Element y = a.mul(x, gens[t]);
      Element v = b.mul(img[static_cast<std::size_t>(x)], images[t]);
      Element& cur = img[static_cast<std::size_t>(y)];
      if (cur < 0) {
        if (used[static_cast<std::size_t>(v)]) return false;
        cur = v;
        used[static_cast<std::size_t>(v)] = 1;
        queue.push_back(y);
      } else if (cur != v) {
        return false;
      }
    }
  }
  return true;
}

struct HomSearch {
  const Group& a;
  const Group& b;
  std::vector<Element> gens;
  std::vector<Element> images;
  std::vector<Element> scratch;

  // Finds images for gens[k..] making a bijective homomorphism.
  bool complete(std::size_t k) {
    if (!extend_partial(a, b, gens, images, k, scratch)) return false;
    if (k == gens.size()) {
      return std::find(scratch.begin(), scratch.end(), -1) == scratch.end();
    }
    int want = a.element_order(gens[k]);
    for (Element c = 1; c < b.order(); ++c) {
      if (b.element_order(c) != want) continue;
      images[k] = c;
      if (complete(k + 1)) return true;
    }
    return false;
  }
};

}  // namespace

bool is_homomorphism(const Group& a, const Group& b, const std::vector<Element>& map) {
  if (map.size() != static_cast<std::size_t>(a.order())) return false;
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (map[static_cast<std::size_t>(a.mul(x, y))] !=
          b.mul(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)]))
        return false;
  return true;
}

std::optional<std::vector<Element>> find_isomorphism(const Group& a, const Group& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.order() > kMaxOrder) throw CapExceeded("find_isomorphism: order above cap");
  std::vector<int> oa, ob;
  for (int x = 0; x < a.order(); ++x) {
    oa.push_back(a.element_order(x));
    ob.push_back(b.element_order(x));
  }
  std::sort(oa.begin(), oa.end());
  std::sort(ob.begin(), ob.end());
  if (oa != ob) return std::nullopt;
  HomSearch s{a, b, a.generators(), std::vector<Element>(a.generators().size(), 0), {}};
  if (!s.complete(0)) return std::nullopt;
  extend_partial(a, b, s.gens, s.images, s.gens.size(), s.scratch);
  return s.scratch;
}

PermGroup automorphism_group(const Group& g) {
  if (g.order() > kAutomorphismCap)
    throw CapExceeded("automorphism_group: order above cap " + std::to_string(kAutomorphismCap));
  const std::vector<Element>& gens = g.generators();
  const std::size_t k = gens.size();
  const int n = g.order();
  std::vector<Perm> found;

  // Level i: automorphisms fixing gens[0..i) pointwise. Processed deepest
  // first so the orbit test at level i sees a complete deeper stabilizer.
  for (std::size_t i = k; i-- > 0;) {
    auto stab_gens = [&] {
      std::vector<Perm> s;
      for (const Perm& p : found) {
        bool fixes = true;
        for (std::size_t j = 0; j < i && fixes; ++j) fixes = p[gens[j]] == gens[j];
        if (fixes) s.push_back(p);
      }
      return s;
    };
    for (Element c = 1; c < n; ++c) {
      if (c == gens[i] || g.element_order(c) != g.element_order(gens[i])) continue;
      auto orbit = PermGroup(n, stab_gens()).orbit(gens[i]);
      if (contains(orbit, c)) continue;
      HomSearch s{g, g, gens, gens, {}};
      s.images[i] = c;
      // Images of gens[0..i) stay fixed; gens[i] goes to c.
      if (!extend_partial(g, g, gens, s.images, i + 1, s.scratch)) continue;
      if (s.complete(i + 1)) {
        extend_partial(g, g, gens, s.images, k, s.scratch);
        found.emplace_back(s.scratch);
      }
    }
  }
  std::vector<int> base(gens.begin(), gens.end());
  return PermGroup::from_strong_generators(n, std::move(base), std::move(found));
}

Perm conjugation_perm(const Group& g, Element by) {
  std::vector<int> img(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x) img[static_cast<std::size_t>(x)] = g.conj(x, by);
  return Perm(std::move(img));
}

PermGroup inner_automorphisms(const Group& g) {
  std::vector<Perm> gens;
  for (Element s : g.generators()) {
    Perm p = conjugation_perm(g, s);
    if (!p.is_identity()) gens.push_back(std::move(p));
  }
  return PermGroup(g.order(), std::move(gens));
}

bool is_camina_pair(const Group& g, const Subgroup& h) {
  if (!is_subgroup(g, h.elements) || !is_normal(g, h)) throw Error("is_camina_pair: H is not a normal subgroup");
  if (h.order() == 1 || h.order() == g.order()) throw Error("is_camina_pair: H must be proper and nontrivial");
  auto classes = conjugacy_classes(g);
  std::vector<int> class_of_elem(static_cast<std::size_t>(g.order()));
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (Element x : classes[c]) class_of_elem[static_cast<std::size_t>(x)] = static_cast<int>(c);
  for (int x = 0; x < g.order(); ++x) {
    if (h.contains(x)) continue;
    for (Element y : h.elements)
      if (class_of_elem[static_cast<std::size_t>(g.mul(x, y))] != class_of_elem[static_cast<std::size_t>(x)])
        return false;
  }
  return true;
}

bool has_maximal_cyclic_subgroup(const Group& g) {
  long long p = prime_power_base(g.order());
  if (g.order() == 1) throw Error("has_maximal_cyclic_subgroup: trivial group");
  if (p == 0) throw Error("has_maximal_cyclic_subgroup: order is not a prime power");
  for (int x = 0; x < g.order(); ++x)
    if (static_cast<long long>(g.element_order(x)) * p >= g.order()) return true;
  return false;
}

}  // namespace schurlab
