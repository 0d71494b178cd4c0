#include "schurlab/sring.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace schurlab {

struct SRing::Cache {
  std::once_flag once;
  std::optional<StructureConstants> constants;
};

namespace {

std::vector<char> indicator(int n, const ElementSet& x) {
  std::vector<char> in(n, 0);
  for (Element e : x) in[e] = 1;
  return in;
}

std::string set_string(const Group& g, const ElementSet& x) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << g.label(x[i]);
  os << '}';
  return os.str();
}

// Convolution counts of X*Y into `out` (length n, zeroed by the caller).
void convolve(const Group& g, const ElementSet& x, const ElementSet& y, std::vector<std::int64_t>& out) {
  for (Element a : x)
    for (Element b : y) ++out[g.mul(a, b)];
}

}  // namespace

Partition canonical_partition(Partition p) {
  for (auto& b : p) std::sort(b.begin(), b.end());
  p.erase(std::remove_if(p.begin(), p.end(), [](const ElementSet& b) { return b.empty(); }), p.end());
  std::sort(p.begin(), p.end(), [](const ElementSet& a, const ElementSet& b) { return a.front() < b.front(); });
  return p;
}

SRing SRing::trusted(GroupPtr g, Partition canonical_blocks) {
  SRing a;
  const int n = g->order();
  a.group_ = std::move(g);
  a.blocks_ = std::move(canonical_blocks);
  a.block_of_.assign(n, -1);
  for (int i = 0; i < a.rank(); ++i)
    for (Element x : a.blocks_[i]) a.block_of_[x] = i;
  a.inverse_.resize(a.blocks_.size());
  for (int i = 0; i < a.rank(); ++i) a.inverse_[i] = a.block_of_[a.group_->inv(a.blocks_[i].front())];
  a.cache_ = std::make_shared<Cache>();
  return a;
}

SizeMultiset SRing::sizes() const {
  SizeMultiset s;
  for (const auto& b : blocks_) s.push_back(static_cast<int>(b.size()));
  std::sort(s.begin(), s.end());
  return s;
}

const StructureConstants& SRing::structure_constants() const {
  std::call_once(cache_->once, [this] { cache_->constants.emplace(schurlab::structure_constants(*this)); });
  return *cache_->constants;
}

StructureConstants structure_constants(const SRing& a) {
  const Group& g = a.group();
  const int r = a.rank();
  std::vector<std::int64_t> data(static_cast<std::size_t>(r) * r * r, 0);
  std::vector<std::int64_t> counts(g.order());
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < r; ++y) {
      std::fill(counts.begin(), counts.end(), 0);
      convolve(g, a.block(x), a.block(y), counts);
      for (int z = 0; z < r; ++z) data[(static_cast<std::size_t>(x) * r + y) * r + z] = counts[a.block(z).front()];
    }
  return StructureConstants(r, std::move(data));
}

std::string to_string(Rejection::Axiom a) {
  switch (a) {
    case Rejection::Axiom::Identity: return "identity";
    case Rejection::Axiom::Inverse: return "inverse";
    case Rejection::Axiom::Closure: return "closure";
  }
  return "?";
}

PartitionCheck from_partition(GroupPtr gp, Partition p) {
  const Group& g = *gp;
  const int n = g.order();
  std::vector<int> owner(n, -1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].empty()) throw Error("from_partition: empty block");
    for (Element x : p[i]) {
      if (x < 0 || x >= n) throw Error("from_partition: element " + std::to_string(x) + " out of range");
      if (owner[x] >= 0) throw Error("from_partition: element " + std::to_string(x) + " appears twice");
      owner[x] = static_cast<int>(i);
    }
  }
  for (int x = 0; x < n; ++x)
    if (owner[x] < 0) throw Error("from_partition: element " + std::to_string(x) + " is not covered");

  p = canonical_partition(std::move(p));
  PartitionCheck out;
  const int r = static_cast<int>(p.size());

  if (p[0].size() != 1) {
    out.rejection = Rejection{Rejection::Axiom::Identity, {0}, p[0], "the identity is not a block of its own"};
    return out;
  }

  std::vector<int> block_of(n);
  for (int i = 0; i < r; ++i)
    for (Element x : p[i]) block_of[x] = i;

  for (int i = 0; i < r; ++i) {
    const int j = block_of[g.inv(p[i].front())];
    for (Element x : p[i])
      if (block_of[g.inv(x)] != j || p[i].size() != p[j].size()) {
        out.rejection = Rejection{Rejection::Axiom::Inverse, {i, j}, {x, g.inv(x)},
                                  "the inverse of block " + set_string(g, p[i]) + " is not a block"};
        return out;
      }
  }

  std::vector<std::int64_t> counts(n);
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < r; ++y) {
      std::fill(counts.begin(), counts.end(), 0);
      convolve(g, p[x], p[y], counts);
      for (int z = 0; z < r; ++z) {
        const Element z0 = p[z].front();
        for (Element w : p[z])
          if (counts[w] != counts[z0]) {
            std::ostringstream os;
            os << "product of blocks " << x << " and " << y << " hits " << g.label(z0) << " " << counts[z0]
               << " times but " << g.label(w) << " " << counts[w] << " times";
            out.rejection = Rejection{Rejection::Axiom::Closure, {x, y, z}, {z0, w}, os.str()};
            return out;
          }
      }
    }
  out.ring = SRing::trusted(std::move(gp), std::move(p));
  return out;
}

SRing make_sring(GroupPtr g, Partition p) {
  auto check = from_partition(std::move(g), std::move(p));
  if (!check) throw Error("not an S-ring: " + to_string(check.rejection->axiom) + ": " + check.rejection->message);
  return std::move(*check.ring);
}

SRing trivial(GroupPtr g) {
  Partition p{{0}};
  if (g->order() > 1) {
    ElementSet rest;
    for (int x = 1; x < g->order(); ++x) rest.push_back(x);
    p.push_back(std::move(rest));
  }
  return SRing::trusted(std::move(g), std::move(p));
}

SRing full(GroupPtr g) {
  Partition p;
  for (int x = 0; x < g->order(); ++x) p.push_back({x});
  return SRing::trusted(std::move(g), std::move(p));
}

SRing center_sring(GroupPtr g) {
  auto classes = conjugacy_classes(*g);
  return SRing::trusted(std::move(g), canonical_partition(std::move(classes)));
}

bool is_central(const SRing& a) {
  const Group& g = a.group();
  for (int x = 0; x < g.order(); ++x)
    for (Element s : g.generators())
      if (a.block_of(g.conj(x, s)) != a.block_of(x)) return false;
  return true;
}

bool subring_le(const SRing& coarse, const SRing& fine) {
  if (coarse.group().order() != fine.group().order()) throw Error("subring_le: groups differ");
  for (const auto& b : fine.blocks())
    for (Element x : b)
      if (coarse.block_of(x) != coarse.block_of(b.front())) return false;
  return true;
}

Subgroup radical(const Group& g, const ElementSet& x) {
  if (x.empty()) throw Error("radical: empty set");
  const auto in = indicator(g.order(), x);
  Subgroup r;
  for (int h = 0; h < g.order(); ++h) {
    bool ok = true;
    for (Element e : x)
      if (!in[g.mul(h, e)] || !in[g.mul(e, h)]) {
        ok = false;
        break;
      }
    if (ok) r.elements.push_back(h);
  }
  return r;
}

bool is_a_set(const SRing& a, const ElementSet& x) {
  const auto in = indicator(a.group().order(), x);
  for (Element e : x)
    for (Element y : a.block(a.block_of(e)))
      if (!in[y]) return false;
  return true;
}

std::vector<Subgroup> a_subgroups(const SRing& a) {
  const Group& g = a.group();
  if (g.order() > kASubgroupCap) throw CapExceeded("a_subgroups: order above cap");
  // Every A-subgroup is a join of subgroups <X> for basic sets X, and such
  // joins are again A-subgroups.
  std::set<ElementSet> found{{0}};
  std::vector<ElementSet> queue{{0}};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const ElementSet h = queue[k];
    for (int b = 1; b < a.rank(); ++b) {
      if (contains(h, a.block(b).front())) continue;
      ElementSet j = generated_subgroup(g, set_union(h, a.block(b))).elements;
      if (found.insert(j).second) queue.push_back(std::move(j));
    }
  }
  std::vector<Subgroup> out;
  for (auto& s : found) out.push_back(Subgroup{s});
  std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return x.elements < y.elements;
  });
  return out;
}

bool is_primitive(const SRing& a) {
  const Group& g = a.group();
  for (int b = 1; b < a.rank(); ++b)
    if (generated_subgroup(g, a.block(b)).order() != g.order()) return false;
  return true;
}

ElementSet power_set(const Group& g, const ElementSet& x, long long m) {
  ElementSet out;
  for (Element e : x) out.push_back(g.pow(e, m));
  return normalized(std::move(out));
}

bool verify_power_closure(const SRing& a) {
  const Group& g = a.group();
  const int n = g.order();
  for (int m = 2; m < std::max(n, 2); ++m) {
    if (std::gcd(m, n) != 1) continue;
    for (const auto& b : a.blocks()) {
      ElementSet img = power_set(g, b, m);
      if (img != a.block(a.block_of(img.front()))) return false;
    }
  }
  return true;
}

SeparationVerdict separation_check(const SRing& a, int block, const Subgroup& h) {
  const Group& g = a.group();
  SeparationVerdict v;
  if (!is_subgroup(g, h.elements)) {
    v.detail = "H is not a subgroup";
    return v;
  }
  const ElementSet& x = a.block(block);
  const ElementSet inside = set_intersection(x, h.elements);
  const ElementSet outside = set_difference(x, h.elements);
  if (inside.empty() || outside.empty()) {
    v.detail = "X does not meet both H and G\\H";
    return v;
  }
  const Subgroup gen_in = generated_subgroup(g, inside);
  if (!is_subset(gen_in.elements, radical(g, outside).elements)) {
    v.detail = "<X cap H> is not contained in rad(X \\ H)";
    return v;
  }
  v.generated = generated_subgroup(g, x);
  v.rad = radical(g, x);
  const bool shape = x == set_difference(v.generated.elements, v.rad.elements);
  const bool inside_h = is_subset(v.rad.elements, h.elements);
  v.status = shape && inside_h ? SeparationVerdict::Status::Pass : SeparationVerdict::Status::Fail;
  if (!shape) v.detail = "X differs from <X> \\ rad(X)";
  else if (!inside_h) v.detail = "rad(X) is not contained in H";
  return v;
}

namespace {

void require_a_subgroup(const SRing& a, const Subgroup& s, const char* what) {
  if (!is_subgroup(a.group(), s.elements) || !is_a_set(a, s.elements))
    throw Error(std::string(what) + " is not an A-subgroup");
}

}  // namespace

SRing quotient_sring(const SRing& a, const Section& s) {
  require_a_subgroup(a, s.upper, "quotient_sring: U");
  require_a_subgroup(a, s.lower, "quotient_sring: L");
  std::set<ElementSet> images;
  for (const auto& b : a.blocks()) {
    if (!s.upper.contains(b.front())) continue;
    ElementSet img;
    for (Element x : b) img.push_back(s.project(x));
    images.insert(normalized(std::move(img)));
  }
  const int m = s.quotient->order();
  std::vector<int> seen(m, 0);
  for (const auto& img : images)
    for (Element q : img)
      if (seen[q]++) throw Error("quotient_sring: images of basic sets overlap");
  return make_sring(s.quotient, Partition(images.begin(), images.end()));
}

SRing restriction(const SRing& a, const Subgroup& u) {
  require_a_subgroup(a, u, "restriction: U");
  const auto& el = u.elements;
  Partition p;
  for (const auto& b : a.blocks()) {
    if (!u.contains(b.front())) continue;
    ElementSet local;
    for (Element x : b) local.push_back(static_cast<Element>(std::lower_bound(el.begin(), el.end(), x) - el.begin()));
    p.push_back(std::move(local));
  }
  return make_sring(induced_group(a.group(), u), std::move(p));
}

SRing wreath(GroupPtr gp, const Subgroup& h, const SRing& b, const SRing& c) {
  const Group& g = *gp;
  if (!is_normal(g, h)) throw Error("wreath: H is not normal");
  if (b.group().order() != h.order()) throw Error("wreath: B is not over H");
  const Section s = quotient_group(g, h);
  if (c.group().order() != s.quotient->order()) throw Error("wreath: C is not over G/H");
  Partition p;
  for (const auto& blk : b.blocks()) {
    ElementSet img;
    for (Element x : blk) img.push_back(h.elements[x]);
    p.push_back(normalized(std::move(img)));
  }
  for (int i = 1; i < c.rank(); ++i) {
    ElementSet pre;
    for (Element q : c.block(i)) pre = set_union(pre, s.preimage(q));
    p.push_back(std::move(pre));
  }
  return make_sring(std::move(gp), std::move(p));
}

bool is_generalized_wreath(const SRing& a, const Subgroup& u, const Subgroup& l) {
  const Group& g = a.group();
  if (!is_subgroup(g, u.elements) || !is_a_set(a, u.elements)) return false;
  if (!is_subgroup(g, l.elements) || !is_a_set(a, l.elements)) return false;
  if (!is_subset(l.elements, u.elements) || !is_normal(g, l)) return false;
  for (const auto& b : a.blocks()) {
    if (u.contains(b.front())) continue;
    if (!is_subset(l.elements, radical(g, b).elements)) return false;
  }
  return true;
}

std::vector<WreathDecomposition> find_wreath_decompositions(const SRing& a) {
  const Group& g = a.group();
  const auto subs = a_subgroups(a);
  std::vector<WreathDecomposition> out;
  for (const auto& l : subs) {
    if (!is_normal(g, l)) continue;
    for (const auto& u : subs) {
      if (!is_subset(l.elements, u.elements)) continue;
      if (!is_generalized_wreath(a, u, l)) continue;
      out.push_back({u, l, l.order() > 1 && u.order() < g.order()});
    }
  }
  return out;
}

SRing sring_closure(GroupPtr gp, const std::vector<ElementSet>& seeds) {
  const Group& g = *gp;
  const int n = g.order();
  // Colors refine from {e}, G# and seed membership.
  std::vector<int> color(n);
  {
    std::map<std::vector<int>, int> ids;
    for (int x = 0; x < n; ++x) {
      std::vector<int> sig{x == 0 ? 0 : 1};
      for (const auto& s : seeds) sig.push_back(contains(s, x) ? 1 : 0);
      color[x] = ids.emplace(std::move(sig), static_cast<int>(ids.size())).first->second;
    }
  }
  std::vector<std::int64_t> counts(n);
  for (std::size_t ncolors = 0;;) {
    // Cells in canonical order.
    std::vector<ElementSet> cells;
    {
      std::map<int, int> idx;
      for (int x = 0; x < n; ++x) {
        auto [it, fresh] = idx.emplace(color[x], static_cast<int>(cells.size()));
        if (fresh) cells.emplace_back();
        cells[it->second].push_back(x);
      }
      for (std::size_t i = 0; i < cells.size(); ++i)
        for (Element x : cells[i]) color[x] = static_cast<int>(i);
    }
    if (cells.size() == ncolors) break;
    ncolors = cells.size();

    std::vector<std::vector<std::int64_t>> sig(n);
    for (int x = 0; x < n; ++x) sig[x] = {color[x], color[g.inv(x)]};
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (std::size_t j = 0; j < cells.size(); ++j) {
        std::fill(counts.begin(), counts.end(), 0);
        convolve(g, cells[i], cells[j], counts);
        for (int x = 0; x < n; ++x) sig[x].push_back(counts[x]);
      }
    std::map<std::vector<std::int64_t>, int> ids;
    for (int x = 0; x < n; ++x) color[x] = ids.emplace(std::move(sig[x]), static_cast<int>(ids.size())).first->second;
  }
  std::vector<ElementSet> blocks;
  std::map<int, int> idx;
  for (int x = 0; x < n; ++x) {
    auto [it, fresh] = idx.emplace(color[x], static_cast<int>(blocks.size()));
    if (fresh) blocks.emplace_back();
    blocks[it->second].push_back(x);
  }
  return make_sring(std::move(gp), std::move(blocks));
}

SRing double_wreath(const SRing& a, const Subgroup& lower, const Subgroup& upper) {
  const Group& g = a.group();
  require_a_subgroup(a, lower, "double_wreath: L");
  require_a_subgroup(a, upper, "double_wreath: U");
  if (!is_normal(g, upper)) throw Error("double_wreath: U is not normal");
  const Section s = quotient_group(g, upper);
  std::set<ElementSet> blocks;
  for (const auto& b : a.blocks())
    if (lower.contains(b.front())) blocks.insert(b);
  ElementSet ring = set_difference(upper.elements, lower.elements);
  if (!ring.empty()) blocks.insert(ring);
  for (const auto& b : a.blocks()) {
    if (upper.contains(b.front())) continue;
    ElementSet pre;
    for (Element x : b) pre = set_union(pre, s.preimage(s.project(x)));
    blocks.insert(pre);
  }
  return make_sring(a.group_ptr(), Partition(blocks.begin(), blocks.end()));
}

CaminaDecomposition camina_decomposition(const SRing& a, const Subgroup& h) {
  const Group& g = a.group();
  if (!is_camina_pair(g, h)) throw Error("camina_decomposition: not a Camina pair");
  if (!is_central(a)) throw Error("camina_decomposition: S-ring is not central");
  CaminaDecomposition d;
  if (is_a_set(a, h.elements)) {
    d.lower = d.upper = h;
    d.h_is_a_subgroup = true;
  } else {
    int hit = -1;
    for (int b = 1; b < a.rank() && hit < 0; ++b) {
      const auto& x = a.block(b);
      bool in = false, out = false;
      for (Element e : x) (h.contains(e) ? in : out) = true;
      if (in && out) hit = b;
    }
    if (hit < 0) throw Error("camina_decomposition: no basic set crosses H");
    d.upper = generated_subgroup(g, a.block(hit));
    d.lower = radical(g, a.block(hit));
  }
  if (!is_subset(d.lower.elements, h.elements) || !is_subset(h.elements, d.upper.elements))
    throw Error("camina_decomposition: L <= H <= U fails");
  if (!double_wreath(a, d.lower, d.upper).same_partition(a))
    throw Error("camina_decomposition: reconstruction differs from the S-ring");
  return d;
}

std::string to_string(DihedralBranch b) {
  switch (b) {
    case DihedralBranch::WreathRank2: return "wreath-over-L-rank2";
    case DihedralBranch::WreathRank3: return "wreath-over-L-rank3";
    case DihedralBranch::GeneralizedOverA1: return "A-over-A1-generalized-wreath";
  }
  return "?";
}

DihedralStructure dihedral_structure(const SRing& a) {
  const Group& g = a.group();
  if (g.order() % 2 != 0 || g.order() < 6) throw Error("dihedral_structure: order must be 2n with n >= 3");
  const int n = g.order() / 2;
  Element gen = -1;
  for (int x = 0; x < g.order() && gen < 0; ++x)
    if (g.element_order(x) == n) gen = x;
  if (gen < 0) throw Error("dihedral_structure: no element of order n");
  const Subgroup cyc = generated_subgroup(g, {gen});
  for (int x = 0; x < g.order(); ++x)
    if (!cyc.contains(x) && g.element_order(x) != 2) throw Error("dihedral_structure: group is not dihedral");
  if (!is_central(a)) throw Error("dihedral_structure: S-ring is not central");

  DihedralStructure d{};
  for (const auto& s : a_subgroups(a))
    if (is_subset(s.elements, cyc.elements) && s.order() > d.l.order()) d.l = s;

  std::vector<int> outside;
  for (int b = 1; b < a.rank(); ++b)
    if (!d.l.contains(a.block(b).front())) outside.push_back(b);

  const auto fail = [] { return Error("dihedral_structure: no branch applies"); };
  if (outside.size() == 1) {
    if (!is_generalized_wreath(a, d.l, d.l)) throw fail();
    d.branch = DihedralBranch::WreathRank2;
    return d;
  }
  if (outside.size() != 2) throw fail();

  const Section s = quotient_group(g, d.l);
  const auto image = [&](int b) {
    ElementSet img;
    for (Element x : a.block(b)) img.push_back(s.project(x));
    return normalized(std::move(img));
  };
  const ElementSet ix = image(outside[0]), iy = image(outside[1]);
  if (set_intersection(ix, iy).empty()) {
    if (!is_generalized_wreath(a, d.l, d.l)) throw fail();
    d.branch = DihedralBranch::WreathRank3;
    return d;
  }
  if (d.l != cyc || n % 2 != 0) throw fail();
  d.a1 = generated_subgroup(g, {g.pow(gen, 2)});
  if (!is_generalized_wreath(a, cyc, d.a1)) throw fail();
  d.branch = DihedralBranch::GeneralizedOverA1;
  return d;
}

}  // namespace schurlab
