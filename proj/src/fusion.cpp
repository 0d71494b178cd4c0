#include "schurlab/fusion.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "schurlab/numtheory.hpp"

namespace schurlab {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Relabels so that atom 0 gets 0 and the other cells are numbered by their
// first atom. Atom 0 is kept apart whatever its input label.
template <class T>
std::vector<int> normalize(const std::vector<T>& label, int* ncells = nullptr) {
  std::vector<int> out(label.size(), 0);
  std::map<T, int> ids;
  int next = 1;
  for (std::size_t z = 1; z < label.size(); ++z) {
    auto [it, fresh] = ids.emplace(label[z], next);
    if (fresh) ++next;
    out[z] = it->second;
  }
  if (ncells) *ncells = label.empty() ? 0 : next;
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

AtomAlgebra AtomAlgebra::build(GroupPtr gp, std::vector<ElementSet> atoms) {
  const Group& g = *gp;
  AtomAlgebra a;
  a.atoms_ = canonical_partition(std::move(atoms));
  a.k_ = static_cast<int>(a.atoms_.size());
  a.atom_of_.assign(g.order(), -1);
  for (int i = 0; i < a.k_; ++i)
    for (Element x : a.atoms_[i]) a.atom_of_[x] = i;
  a.inverse_.resize(a.k_);
  for (int i = 0; i < a.k_; ++i) a.inverse_[i] = a.atom_of_[g.inv(a.atoms_[i].front())];
  const std::size_t k = a.k_;
  a.coef_.assign(k * k * k, 0);
  for (std::size_t z = 0; z < k; ++z) {
    const Element w = a.atoms_[z].front();
    for (std::size_t i = 0; i < k; ++i)
      for (Element x : a.atoms_[i]) ++a.coef_[(i * k + a.atom_of_[g.mul(g.inv(x), w)]) * k + z];
  }
  a.group_ = std::move(gp);
  return a;
}

AtomAlgebra AtomAlgebra::classes(GroupPtr g) {
  auto cls = conjugacy_classes(*g);
  return build(std::move(g), std::move(cls));
}

AtomAlgebra AtomAlgebra::singletons(GroupPtr g) {
  std::vector<ElementSet> s;
  for (int x = 0; x < g->order(); ++x) s.push_back({x});
  return build(std::move(g), std::move(s));
}

std::vector<int> AtomAlgebra::closure(const std::vector<int>& color) const {
  const std::size_t k = k_;
  int c = 0;
  std::vector<int> col = normalize(color, &c);
  std::vector<std::int64_t> acc(k * k), val;
  std::vector<std::uint64_t> sig(k);
  for (;;) {
    std::vector<std::vector<int>> cells(c);
    for (std::size_t z = 0; z < k; ++z) cells[col[z]].push_back(static_cast<int>(z));
    for (std::size_t z = 0; z < k; ++z)
      sig[z] = mix(static_cast<std::uint64_t>(col[z]) * 0x100000001ULL + static_cast<std::uint64_t>(col[inverse_[z]]));
    val.assign(static_cast<std::size_t>(c) * k, 0);
    for (int x = 1; x < c; ++x) {
      std::fill(acc.begin(), acc.end(), 0);
      for (int i : cells[x]) {
        const int* row = &coef_[static_cast<std::size_t>(i) * k * k];
        for (std::size_t jz = 0; jz < k * k; ++jz) acc[jz] += row[jz];
      }
      std::fill(val.begin(), val.end(), 0);
      for (std::size_t j = 0; j < k; ++j) {
        std::int64_t* v = &val[static_cast<std::size_t>(col[j]) * k];
        const std::int64_t* a = &acc[j * k];
        for (std::size_t z = 0; z < k; ++z) v[z] += a[z];
      }
      for (int y = 1; y < c; ++y) {
        const std::uint64_t tag = mix(static_cast<std::uint64_t>(x) * 7919 + static_cast<std::uint64_t>(y));
        const std::int64_t* v = &val[static_cast<std::size_t>(y) * k];
        for (std::size_t z = 0; z < k; ++z) sig[z] = mix(sig[z] ^ (tag + static_cast<std::uint64_t>(v[z])));
      }
    }
    int c2 = 0;
    std::vector<int> next = normalize(sig, &c2);
    if (c2 == c) break;
    col = std::move(next);
    c = c2;
  }
  return col;
}

bool AtomAlgebra::is_sring(const std::vector<int>& color) const {
  const std::size_t k = k_;
  for (std::size_t z = 1; z < k; ++z)
    if (color[z] == color[0]) return false;
  int c = 0;
  const std::vector<int> col = normalize(color, &c);
  std::vector<int> first(c, -1), inv_cell(c, -1);
  for (std::size_t z = 0; z < k; ++z) {
    if (first[col[z]] < 0) first[col[z]] = static_cast<int>(z);
    const int ic = col[inverse_[z]];
    if (inv_cell[col[z]] < 0) inv_cell[col[z]] = ic;
    else if (inv_cell[col[z]] != ic) return false;
  }
  std::vector<std::vector<int>> cells(c);
  for (std::size_t z = 0; z < k; ++z) cells[col[z]].push_back(static_cast<int>(z));
  std::vector<std::int64_t> val(k);
  for (int x = 1; x < c; ++x)
    for (int y = 1; y < c; ++y) {
      std::fill(val.begin(), val.end(), 0);
      for (int i : cells[x])
        for (int j : cells[y])
          for (std::size_t z = 0; z < k; ++z) val[z] += coef(i, j, static_cast<int>(z));
      for (std::size_t z = 0; z < k; ++z)
        if (val[z] != val[first[col[z]]]) return false;
    }
  return true;
}

Partition AtomAlgebra::expand(const std::vector<int>& color) const {
  int c = 0;
  const std::vector<int> col = normalize(color, &c);
  Partition p(c);
  for (int z = 0; z < k_; ++z) p[col[z]] = set_union(p[col[z]], atoms_[z]);
  return canonical_partition(std::move(p));
}

// ---------------------------------------------------------------------------

std::string to_string(EnumerationMode m) { return m == EnumerationMode::Central ? "central" : "all"; }

namespace {

using Coloring = std::vector<int>;

struct SharedBudget {
  std::uint64_t limit = 0;
  std::atomic<std::uint64_t> used{0};
  void tick() {
    const auto n = used.fetch_add(1, std::memory_order_relaxed) + 1;
    if (limit && n > limit) throw BudgetExhausted("fusion search: node budget exhausted");
  }
};

// Depth-first fusion of search units (disjoint groups of atoms). Every unit
// lies in one block of the result.
class UnitSearch {
 public:
  UnitSearch(const AtomAlgebra& alg, std::vector<std::vector<int>> units, SharedBudget& budget)
      : alg_(alg), units_(std::move(units)), budget_(budget) {
    unit_of_.assign(alg_.size(), -1);
    for (std::size_t u = 0; u < units_.size(); ++u)
      for (int a : units_[u]) unit_of_[a] = static_cast<int>(u);
    unit_inv_.resize(units_.size());
    for (std::size_t u = 0; u < units_.size(); ++u) unit_inv_[u] = unit_of_[alg_.inverse(units_[u].front())];
  }

  std::set<Coloring> run(SearchStats& stats) {
    std::vector<int> blk(units_.size(), -1);
    blk[unit_of_[0]] = 0;
    node(blk, 1);
    stats.nodes += nodes_;
    stats.prunes += prunes_;
    return std::move(found_);
  }

 private:
  void node(std::vector<int>& blk, int nblocks) {
    budget_.tick();
    ++nodes_;
    const int rest = static_cast<int>(units_.size()) + 1;
    Coloring color(alg_.size());
    bool open = false;
    for (int a = 0; a < alg_.size(); ++a) {
      const int b = blk[unit_of_[a]];
      color[a] = b >= 0 ? b : rest;
      if (b < 0) open = true;
    }
    const Coloring cl = alg_.closure(color);
    std::vector<int> cell_of_block(nblocks, -1);
    for (int a = 0; a < alg_.size(); ++a) {
      const int b = color[a];
      if (b == rest) continue;
      if (cell_of_block[b] < 0) cell_of_block[b] = cl[a];
      else if (cell_of_block[b] != cl[a]) {
        ++prunes_;
        return;
      }
    }
    if (!open) {
      if (alg_.is_sring(color)) found_.insert(normalize(color));
      else ++prunes_;
      return;
    }
    std::vector<int> cell_size(alg_.size() + 1, 0);
    for (int a = 0; a < alg_.size(); ++a) ++cell_size[cl[a]];
    int alpha = -1, cell = -1;
    for (std::size_t u = 0; u < units_.size(); ++u) {
      if (blk[u] >= 0) continue;
      const int cu = cl[units_[u].front()];
      for (int a : units_[u])
        if (cl[a] != cu) {
          ++prunes_;  // a unit can never be split
          return;
        }
      if (alpha < 0 || cell_size[cu] < cell_size[cell]) alpha = static_cast<int>(u), cell = cu;
    }
    std::vector<int> cand;
    for (std::size_t u = 0; u < units_.size(); ++u)
      if (blk[u] < 0 && static_cast<int>(u) != alpha && cl[units_[u].front()] == cell) cand.push_back(static_cast<int>(u));
    if (cand.size() > 30) throw CapExceeded("fusion search: branching too wide");
    const std::uint64_t subsets = std::uint64_t{1} << cand.size();
    std::vector<int> xs, xinv;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      xs.assign(1, alpha);
      for (std::size_t i = 0; i < cand.size(); ++i)
        if (mask >> i & 1) xs.push_back(cand[i]);
      xinv.clear();
      for (int u : xs) xinv.push_back(unit_inv_[u]);
      std::sort(xs.begin(), xs.end());
      std::sort(xinv.begin(), xinv.end());
      if (xs == xinv) {
        for (int u : xs) blk[u] = nblocks;
        node(blk, nblocks + 1);
        for (int u : xs) blk[u] = -1;
        continue;
      }
      bool clash = false;
      for (int u : xinv)
        if (blk[u] >= 0 || std::binary_search(xs.begin(), xs.end(), u)) clash = true;
      if (clash) continue;
      for (int u : xs) blk[u] = nblocks;
      for (int u : xinv) blk[u] = nblocks + 1;
      node(blk, nblocks + 2);
      for (int u : xs) blk[u] = -1;
      for (int u : xinv) blk[u] = -1;
    }
  }

  const AtomAlgebra& alg_;
  std::vector<std::vector<int>> units_;
  std::vector<int> unit_of_;
  std::vector<int> unit_inv_;
  SharedBudget& budget_;
  std::set<Coloring> found_;
  std::uint64_t nodes_ = 0, prunes_ = 0;
};

// Power maps x -> x^m, m a unit modulo the exponent, acting on atoms.
struct Multipliers {
  long long modulus = 1;
  std::vector<long long> units;
  std::vector<std::vector<int>> act;  // act[i][atom]
  std::vector<std::vector<int>> subgroups;  // sorted unit indices

  int index_of(long long m) const {
    return static_cast<int>(std::lower_bound(units.begin(), units.end(), m) - units.begin());
  }
};

Multipliers multipliers(const AtomAlgebra& alg) {
  const Group& g = *alg.group();
  Multipliers mu;
  mu.modulus = g.exponent();
  mu.units = mu.modulus == 1 ? std::vector<long long>{0} : units_mod(mu.modulus);
  for (long long m : mu.units) {
    std::vector<int> act(alg.size());
    for (int a = 0; a < alg.size(); ++a) act[a] = alg.atom_of(g.pow(alg.atom(a).front(), m));
    mu.act.push_back(std::move(act));
  }
  const long long e = mu.modulus;
  const auto generated = [&](std::vector<int> gens) {
    std::set<int> s{0};  // the unit 1 (or 0 when e = 1) is first
    std::vector<int> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (int gi : gens) {
        const int p = e == 1 ? 0 : mu.index_of(mu.units[queue[i]] * mu.units[gi] % e);
        if (s.insert(p).second) queue.push_back(p);
      }
    return std::vector<int>(s.begin(), s.end());
  };
  std::set<std::vector<int>> subs{{0}};
  std::vector<std::vector<int>> queue{{0}};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t u = 0; u < mu.units.size(); ++u) {
      if (std::binary_search(queue[i].begin(), queue[i].end(), static_cast<int>(u))) continue;
      std::vector<int> gens = queue[i];
      gens.push_back(static_cast<int>(u));
      auto h = generated(gens);
      if (subs.insert(h).second) queue.push_back(h);
    }
  mu.subgroups.assign(subs.begin(), subs.end());
  return mu;
}

std::vector<std::vector<int>> rational_atoms(const AtomAlgebra& alg, const Multipliers& mu) {
  std::vector<int> seen(alg.size(), 0);
  std::vector<std::vector<int>> out;
  for (int a = 0; a < alg.size(); ++a) {
    if (seen[a]) continue;
    std::set<int> orb;
    for (const auto& act : mu.act) orb.insert(act[a]);
    for (int b : orb) seen[b] = 1;
    out.emplace_back(orb.begin(), orb.end());
  }
  return out;
}

using Tiling = std::vector<std::vector<int>>;  // blocks of atoms, sorted
inline constexpr std::uint64_t kTilingCap = 4'000'000;

// All ways to cut the union of `units` into one orbit of blocks under the
// multipliers, each block meeting every unit in one orbit of a subgroup K.
std::vector<Tiling> tilings(const Multipliers& mu, const std::vector<std::vector<int>>& units) {
  std::set<Tiling> out;
  std::vector<int> all;
  for (const auto& u : units) all.insert(all.end(), u.begin(), u.end());
  std::sort(all.begin(), all.end());
  for (const auto& k : mu.subgroups) {
    bool ok = true;
    for (const auto& u : units)
      for (std::size_t i = 0; i < mu.units.size() && ok; ++i)
        if (mu.act[i][u.front()] == u.front() && !std::binary_search(k.begin(), k.end(), static_cast<int>(i)))
          ok = false;
    if (!ok) continue;
    // K-orbits inside each unit.
    std::vector<std::vector<std::vector<int>>> orbits;
    std::uint64_t combos = 1;
    for (const auto& u : units) {
      std::vector<std::vector<int>> orbs;
      std::set<int> seen;
      for (int a : u) {
        if (seen.count(a)) continue;
        std::set<int> orb;
        for (int i : k) orb.insert(mu.act[i][a]);
        seen.insert(orb.begin(), orb.end());
        orbs.emplace_back(orb.begin(), orb.end());
      }
      if (!orbits.empty()) combos *= orbs.size();
      if (combos > kTilingCap) throw CapExceeded("fusion search: too many multiplier tilings");
      orbits.push_back(std::move(orbs));
    }
    std::vector<std::size_t> pick(units.size(), 0);
    for (;;) {
      std::vector<int> x;
      for (std::size_t i = 0; i < units.size(); ++i) x.insert(x.end(), orbits[i][pick[i]].begin(), orbits[i][pick[i]].end());
      std::sort(x.begin(), x.end());
      std::set<std::vector<int>> translates;
      for (const auto& act : mu.act) {
        std::vector<int> y;
        for (int a : x) y.push_back(act[a]);
        std::sort(y.begin(), y.end());
        translates.insert(std::move(y));
      }
      std::vector<int> cover;
      for (const auto& t : translates) cover.insert(cover.end(), t.begin(), t.end());
      std::sort(cover.begin(), cover.end());
      if (cover == all) out.insert(Tiling(translates.begin(), translates.end()));
      // odometer over units 1..t-1; unit 0 keeps its first orbit
      std::size_t i = 1;
      while (i < units.size() && ++pick[i] == orbits[i].size()) pick[i++] = 0;
      if (i >= units.size()) break;
    }
  }
  return {out.begin(), out.end()};
}

// Refines a rational fusion into all central fusions whose multiplier
// orbits of blocks are its blocks.
class TilingSearch {
 public:
  TilingSearch(const AtomAlgebra& alg, const Multipliers& mu, const std::vector<std::vector<int>>& rational,
               const Coloring& base, SharedBudget& budget)
      : alg_(alg), budget_(budget) {
    int c = 0;
    const Coloring col = normalize(base, &c);
    std::vector<std::vector<int>> unit_cells(c);  // rational atoms by cell
    std::vector<int> unit_of(alg.size());
    for (std::size_t u = 0; u < rational.size(); ++u) {
      for (int a : rational[u]) unit_of[a] = static_cast<int>(u);
      unit_cells[col[rational[u].front()]].push_back(static_cast<int>(u));
    }
    for (int cell = 1; cell < c; ++cell) {
      std::vector<std::vector<int>> units;
      for (int u : unit_cells[cell]) units.push_back(rational[u]);
      zones_.push_back(tilings(mu, units));
    }
    std::stable_sort(zones_.begin(), zones_.end(),
                     [](const std::vector<Tiling>& a, const std::vector<Tiling>& b) { return a.size() < b.size(); });
    color_.assign(alg.size(), 0);
    int id = 1;
    for (const auto& z : zones_) {
      for (const auto& block : z.front())
        for (int a : block) color_[a] = id;
      ++id;
    }
    next_id_ = id;
  }

  std::set<Coloring> run(SearchStats& stats) {
    dfs(0, next_id_);
    stats.nodes += nodes_;
    stats.prunes += prunes_;
    return std::move(found_);
  }

 private:
  void dfs(std::size_t idx, int id) {
    budget_.tick();
    ++nodes_;
    if (idx == zones_.size()) {
      if (alg_.is_sring(color_)) found_.insert(normalize(color_));
      else ++prunes_;
      return;
    }
    if (idx > 0 && zones_[idx - 1].size() > 1) {
      const Coloring cl = alg_.closure(color_);
      std::map<int, int> cell_of;
      for (int a = 0; a < alg_.size(); ++a) {
        if (color_[a] < next_id_) continue;  // untiled zone
        auto [it, fresh] = cell_of.emplace(color_[a], cl[a]);
        if (!fresh && it->second != cl[a]) {
          ++prunes_;
          return;
        }
      }
    }
    const auto& options = zones_[idx];
    std::vector<int> saved;
    for (const auto& block : options.front())
      for (int a : block) saved.push_back(color_[a]);
    for (const auto& t : options) {
      int bid = id;
      for (const auto& block : t) {
        for (int a : block) color_[a] = bid;
        ++bid;
      }
      dfs(idx + 1, bid);
    }
    std::size_t s = 0;
    for (const auto& block : options.front())
      for (int a : block) color_[a] = saved[s++];
  }

  const AtomAlgebra& alg_;
  SharedBudget& budget_;
  std::vector<std::vector<Tiling>> zones_;
  Coloring color_;
  int next_id_ = 0;
  std::set<Coloring> found_;
  std::uint64_t nodes_ = 0, prunes_ = 0;
};

// Runs f(i) for i in [0, count) on `jobs` threads.
template <class F>
void parallel_for(int jobs, std::size_t count, F f) {
  const int t = static_cast<int>(std::min<std::size_t>(std::max(jobs, 1), std::max<std::size_t>(count, 1)));
  if (t <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < t; ++w)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

std::set<Coloring> search_with_multipliers(const AtomAlgebra& alg, const EnumerationOptions& opt, SharedBudget& budget,
                                           SearchStats& stats) {
  const Multipliers mu = multipliers(alg);
  const auto rational = rational_atoms(alg, mu);
  if (static_cast<int>(rational.size()) > opt.cap_atoms)
    throw CapExceeded("enumeration: " + std::to_string(rational.size()) + " search units above cap " +
                      std::to_string(opt.cap_atoms));
  const std::set<Coloring> bases = UnitSearch(alg, rational, budget).run(stats);
  const std::vector<Coloring> list(bases.begin(), bases.end());
  std::vector<std::set<Coloring>> parts(list.size());
  std::vector<SearchStats> part_stats(list.size());
  parallel_for(opt.jobs, list.size(), [&](std::size_t i) {
    parts[i] = TilingSearch(alg, mu, rational, list[i], budget).run(part_stats[i]);
  });
  std::set<Coloring> all;
  for (std::size_t i = 0; i < list.size(); ++i) {
    all.insert(parts[i].begin(), parts[i].end());
    stats.nodes += part_stats[i].nodes;
    stats.prunes += part_stats[i].prunes;
  }
  return all;
}

std::set<Coloring> search_plain(const AtomAlgebra& alg, SharedBudget& budget, SearchStats& stats) {
  std::vector<std::vector<int>> units;
  for (int a = 0; a < alg.size(); ++a) units.push_back({a});
  return UnitSearch(alg, units, budget).run(stats);
}

EnumerationReport make_report(const AtomAlgebra& alg, EnumerationMode mode, const std::set<Coloring>& found,
                              SearchStats stats, std::chrono::steady_clock::time_point t0) {
  EnumerationReport r;
  r.group_spec = alg.group()->spec();
  r.mode = mode;
  for (const auto& c : found) r.rings.push_back(SRing::trusted(alg.group(), alg.expand(c)));
  stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.stats = stats;
  finalize_report(r);
  return r;
}

}  // namespace

RingAnnotation annotate(const SRing& a) {
  RingAnnotation n;
  n.rank = a.rank();
  n.sizes = a.sizes();
  n.central = is_central(a);
  n.primitive = is_primitive(a);
  return n;
}

void finalize_report(EnumerationReport& r) {
  std::sort(r.rings.begin(), r.rings.end(), [](const SRing& x, const SRing& y) {
    if (x.rank() != y.rank()) return x.rank() < y.rank();
    return x.blocks() < y.blocks();
  });
  std::vector<RingAnnotation> notes;
  for (const auto& a : r.rings) notes.push_back(annotate(a));
  r.notes = std::move(notes);
}

EnumerationReport enumerate_central(GroupPtr g, const EnumerationOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const AtomAlgebra alg = AtomAlgebra::classes(std::move(g));
  SharedBudget budget;
  budget.limit = opt.node_budget;
  SearchStats stats;
  std::set<Coloring> found;
  if (opt.use_multipliers) {
    found = search_with_multipliers(alg, opt, budget, stats);
  } else {
    if (alg.size() > opt.cap_atoms)
      throw CapExceeded("enumerate_central: " + std::to_string(alg.size()) + " classes above cap " +
                        std::to_string(opt.cap_atoms));
    found = search_plain(alg, budget, stats);
  }
  return make_report(alg, EnumerationMode::Central, found, stats, t0);
}

EnumerationReport enumerate_all(GroupPtr g, const EnumerationOptions& opt) {
  if (g->order() > opt.cap_order)
    throw CapExceeded("enumerate_all: order " + std::to_string(g->order()) + " above cap " +
                      std::to_string(opt.cap_order));
  if (g->is_abelian()) {
    auto r = enumerate_central(std::move(g), opt);
    r.mode = EnumerationMode::All;
    return r;
  }
  const auto t0 = std::chrono::steady_clock::now();
  const AtomAlgebra alg = AtomAlgebra::singletons(std::move(g));
  SharedBudget budget;
  budget.limit = opt.node_budget;
  SearchStats stats;
  const auto found = search_plain(alg, budget, stats);
  return make_report(alg, EnumerationMode::All, found, stats, t0);
}

EnumerationReport brute_force_partitions(GroupPtr g, EnumerationMode mode) {
  const auto t0 = std::chrono::steady_clock::now();
  const AtomAlgebra alg = mode == EnumerationMode::Central ? AtomAlgebra::classes(g) : AtomAlgebra::singletons(g);
  const int k = alg.size();
  if (k > kBruteForceAtomCap) throw CapExceeded("brute_force_partitions: more than 8 atoms");
  std::set<Coloring> found;
  SearchStats stats;
  // Restricted growth strings over the atoms.
  Coloring lab(k, 0);
  std::vector<int> used(k + 1, 0);
  const auto visit = [&](auto&& self, int i, int m) -> void {
    if (i == k) {
      ++stats.nodes;
      Partition p(m);
      for (int a = 0; a < k; ++a) p[lab[a]] = set_union(p[lab[a]], alg.atom(a));
      if (from_partition(g, p)) found.insert(normalize(lab));
      return;
    }
    for (int b = 0; b <= m && b < k; ++b) {
      lab[i] = b;
      self(self, i + 1, std::max(m, b + 1));
    }
  };
  visit(visit, 0, 0);
  stats.prunes = stats.nodes - found.size();
  return make_report(alg, mode, found, stats, t0);
}

SRing cyclotomic(GroupPtr g, const PermGroup& k) {
  if (k.degree() != g->order()) throw Error("cyclotomic: degree differs from the group order");
  for (const Perm& p : k.generators()) {
    if (p[0] != 0) throw Error("cyclotomic: generator does not fix the identity");
    for (int x = 0; x < g->order(); ++x)
      for (int y = 0; y < g->order(); ++y)
        if (p[g->mul(x, y)] != g->mul(p[x], p[y])) throw Error("cyclotomic: generator is not an automorphism");
  }
  return make_sring(std::move(g), k.orbits());
}

}  // namespace schurlab
