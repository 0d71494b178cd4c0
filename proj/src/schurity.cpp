#include "schurlab/schurity.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

#include "schurlab/numtheory.hpp"

namespace schurlab {

Perm right_mult(const Group& g, Element by) {
  std::vector<int> img(g.order());
  for (int x = 0; x < g.order(); ++x) img[x] = g.mul(x, by);
  return Perm(std::move(img));
}

Perm left_mult(const Group& g, Element by) {
  std::vector<int> img(g.order());
  for (int x = 0; x < g.order(); ++x) img[x] = g.mul(by, x);
  return Perm(std::move(img));
}

PermGroup right_regular(const Group& g) {
  std::vector<Perm> gens;
  for (Element s : g.generators()) gens.push_back(right_mult(g, s));
  return PermGroup(g.order(), std::move(gens));
}

PermGroup left_regular(const Group& g) {
  std::vector<Perm> gens;
  for (Element s : g.generators()) gens.push_back(left_mult(g, s));
  return PermGroup(g.order(), std::move(gens));
}

SRing transitivity_module(const PermGroup& k, GroupPtr g) {
  if (k.degree() != g->order()) throw Error("transitivity_module: degree differs from the group order");
  for (Element s : g->generators())
    if (!k.contains(right_mult(*g, s))) throw Error("transitivity_module: K does not contain G_r");
  return make_sring(std::move(g), k.stabilizer(0).orbits());
}

// ---------------------------------------------------------------------------

ColorGraph::ColorGraph(const SRing& a) : n_(a.group().order()), colors_(a.rank()) {
  const Group& g = a.group();
  col_.resize(static_cast<std::size_t>(n_) * n_);
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v) col_[static_cast<std::size_t>(u) * n_ + v] = static_cast<std::uint16_t>(a.block_of(g.mul(v, g.inv(u))));
}

bool ColorGraph::preserves(const Perm& p) const {
  if (p.degree() != n_) return false;
  for (int u = 0; u < n_; ++u) {
    const int pu = p[u];
    for (int v = 0; v < n_; ++v)
      if ((*this)(pu, p[v]) != (*this)(u, v)) return false;
  }
  return true;
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a), b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  void absorb(const Perm& p) {
    for (int x = 0; x < static_cast<int>(parent.size()); ++x) unite(x, p[x]);
  }
};

// Ordered partition of the vertices with contiguous cells.
struct Cells {
  std::vector<int> elems;
  std::vector<int> start;  // vertex -> start of its cell
  std::vector<int> end;    // cell start -> one past its end
  int count = 0;

  bool discrete() const { return count == static_cast<int>(elems.size()); }
};

class AutSearch {
 public:
  AutSearch(const ColorGraph& cg, std::uint64_t budget) : cg_(cg), n_(cg.size()), budget_(budget) {
    hcol_.resize(cg.colors());
    for (int c = 0; c < cg.colors(); ++c) hcol_[c] = mix(0x5eed0000ULL + static_cast<std::uint64_t>(c));
    key_.resize(n_);
  }

  void add_seed(const Perm& p) {
    if (p[0] == 0 && !p.is_identity() && cg_.preserves(p)) gens_.push_back(p);
  }

  // Runs the search; returns the base points after 0.
  std::vector<int> run() {
    Cells unit;
    unit.elems.resize(n_);
    std::iota(unit.elems.begin(), unit.elems.end(), 0);
    unit.start.assign(n_, 0);
    unit.end.assign(n_, 0);
    unit.end[0] = n_;
    unit.count = 1;
    std::uint64_t t = 0;
    Cells root = n_ > 1 ? individualize(unit, 0, t) : unit;

    // First path.
    Cells p = root;
    traces_.push_back(t);
    while (!p.discrete()) {
      const int s = target(p);
      int beta = n_;
      for (int i = s; i < p.end[s]; ++i) beta = std::min(beta, p.elems[i]);
      path_.push_back(p);
      beta_.push_back(beta);
      std::uint64_t tr = 0;
      p = individualize(p, beta, tr);
      traces_.push_back(tr);
    }
    leaf_ = p.elems;

    for (int d = static_cast<int>(beta_.size()) - 1; d >= 0; --d) {
      const Cells& node = path_[d];
      const int s = target(node);
      std::vector<int> prefix(beta_.begin(), beta_.begin() + d);
      UnionFind uf(n_);
      for (const Perm& g : gens_)
        if (fixes(g, prefix)) uf.absorb(g);
      std::vector<int> failed;
      std::vector<int> cell(node.elems.begin() + s, node.elems.begin() + node.end[s]);
      std::sort(cell.begin(), cell.end());
      for (int v : cell) {
        if (uf.find(v) == uf.find(beta_[d])) continue;
        bool known_bad = false;
        for (int f : failed)
          if (uf.find(f) == uf.find(v)) known_bad = true;
        if (known_bad) continue;
        std::vector<int> path = prefix;
        path.push_back(v);
        std::uint64_t tr = 0;
        Cells child = individualize(node, v, tr);
        auto g = dive(child, tr, d + 1, path);
        if (g) {
          gens_.push_back(*g);
          uf.absorb(*g);
        } else {
          failed.push_back(v);
        }
      }
    }
    return beta_;
  }

  const std::vector<Perm>& generators() const { return gens_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  static bool fixes(const Perm& g, const std::vector<int>& pts) {
    for (int x : pts)
      if (g[x] != x) return false;
    return true;
  }

  // First smallest non-singleton cell.
  int target(const Cells& p) const {
    int best = -1, size = n_ + 1;
    for (int s = 0; s < n_; s = p.end[s]) {
      const int len = p.end[s] - s;
      if (len > 1 && len < size) best = s, size = len;
    }
    return best;
  }

  Cells individualize(const Cells& parent, int v, std::uint64_t& trace) {
    Cells p = parent;
    const int s = p.start[v], e = p.end[s];
    auto it = std::find(p.elems.begin() + s, p.elems.begin() + e, v);
    std::iter_swap(p.elems.begin() + s, it);
    for (int i = s + 1; i < e; ++i) p.start[p.elems[i]] = s + 1;
    p.end[s] = s + 1;
    p.end[s + 1] = e;
    ++p.count;
    trace = mix(static_cast<std::uint64_t>(s));
    refine(p, {s}, trace);
    return p;
  }

  void refine(Cells& p, std::vector<int> queue, std::uint64_t& trace) {
    std::vector<char> queued(n_, 0);
    for (int s : queue) queued[s] = 1;
    for (std::size_t qi = 0; qi < queue.size() && !p.discrete(); ++qi) {
      const int c = queue[qi];
      queued[c] = 0;
      std::fill(key_.begin(), key_.end(), 0);
      for (int i = c; i < p.end[c]; ++i) {
        const int u = p.elems[i];
        for (int v = 0; v < n_; ++v) key_[v] += hcol_[cg_(v, u)];
      }
      trace = mix(trace ^ static_cast<std::uint64_t>(c));
      for (int s = 0; s < n_;) {
        const int e = p.end[s];
        if (e - s > 1) split(p, s, e, queue, queued, trace);
        s = e;
      }
    }
    trace = mix(trace ^ static_cast<std::uint64_t>(p.count));
  }

  void split(Cells& p, int s, int e, std::vector<int>& queue, std::vector<char>& queued, std::uint64_t& trace) {
    auto first = p.elems.begin() + s, last = p.elems.begin() + e;
    bool uniform = true;
    for (auto it = first + 1; it != last; ++it)
      if (key_[*it] != key_[*first]) {
        uniform = false;
        break;
      }
    if (uniform) return;
    std::sort(first, last, [&](int a, int b) { return key_[a] != key_[b] ? key_[a] < key_[b] : a < b; });
    int i = s;
    while (i < e) {
      int j = i + 1;
      while (j < e && key_[p.elems[j]] == key_[p.elems[i]]) ++j;
      for (int k = i; k < j; ++k) p.start[p.elems[k]] = i;
      p.end[i] = j;
      if (i != s) ++p.count;
      trace = mix(trace ^ (static_cast<std::uint64_t>(i) << 32) ^ static_cast<std::uint64_t>(j - i) ^ key_[p.elems[i]]);
      if (!queued[i]) {
        queued[i] = 1;
        queue.push_back(i);
      }
      i = j;
    }
  }

  std::optional<Perm> dive(const Cells& p, std::uint64_t trace, int depth, std::vector<int>& path) {
    if (++nodes_ > budget_ && budget_) throw BudgetExhausted("automorphism search: node budget exhausted");
    if (trace != traces_[depth]) return std::nullopt;
    if (p.discrete()) {
      std::vector<int> img(n_);
      for (int i = 0; i < n_; ++i) img[leaf_[i]] = p.elems[i];
      Perm g(std::move(img));
      if (cg_.preserves(g)) return g;
      return std::nullopt;
    }
    const int s = target(p);
    UnionFind uf(n_);
    for (const Perm& g : gens_)
      if (fixes(g, path)) uf.absorb(g);
    std::vector<int> cell(p.elems.begin() + s, p.elems.begin() + p.end[s]);
    std::sort(cell.begin(), cell.end());
    std::vector<int> tried;
    for (int w : cell) {
      bool seen = false;
      for (int t : tried)
        if (uf.find(t) == uf.find(w)) seen = true;
      if (seen) continue;
      tried.push_back(w);
      std::uint64_t tr = 0;
      Cells child = individualize(p, w, tr);
      path.push_back(w);
      auto g = dive(child, tr, depth + 1, path);
      path.pop_back();
      if (g) return g;
    }
    return std::nullopt;
  }

  const ColorGraph& cg_;
  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint64_t> hcol_;
  std::vector<std::uint64_t> key_;
  std::vector<Cells> path_;
  std::vector<int> beta_;
  std::vector<std::uint64_t> traces_;
  std::vector<int> leaf_;
  std::vector<Perm> gens_;
};

// Automorphisms of G that obviously preserve A: inner ones when A is central,
// power maps fixing every basic set when G is abelian.
void seed(AutSearch& s, const SRing& a) {
  const Group& g = a.group();
  if (is_central(a))
    for (Element x : g.generators()) s.add_seed(conjugation_perm(g, x));
  if (g.is_abelian() && g.exponent() > 2)
    for (long long m : units_mod(g.exponent())) {
      if (m == 1) continue;
      bool fixes = true;
      for (const auto& b : a.blocks())
        if (power_set(g, b, m) != b) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      std::vector<int> img(g.order());
      for (int x = 0; x < g.order(); ++x) img[x] = g.pow(x, m);
      s.add_seed(Perm(std::move(img)));
    }
}

// Orbits of the stabilizer of 0 in <gens>, through Schreier generators.
std::vector<ElementSet> stabilizer_orbits(int n, const std::vector<Perm>& gens) {
  std::vector<int> slot(n, -1);
  std::vector<Perm> trans{Perm::identity(n)};
  std::vector<int> orbit{0};
  slot[0] = 0;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const Perm& s : gens) {
      const int y = s[orbit[i]];
      if (slot[y] < 0) {
        slot[y] = static_cast<int>(trans.size());
        trans.push_back(trans[slot[orbit[i]]] * s);
        orbit.push_back(y);
      }
    }
  UnionFind uf(n);
  for (int x : orbit)
    for (const Perm& s : gens) {
      const Perm sch = trans[slot[x]] * s * trans[slot[s[x]]].inverse();
      uf.absorb(sch);
    }
  std::vector<ElementSet> groups(n);
  for (int x = 0; x < n; ++x) groups[uf.find(x)].push_back(x);
  std::vector<ElementSet> out;
  for (auto& gr : groups)
    if (!gr.empty()) out.push_back(std::move(gr));
  return out;
}

std::vector<Perm> regular_generators(const Group& g) {
  std::vector<Perm> out;
  for (Element s : g.generators()) out.push_back(right_mult(g, s));
  return out;
}

}  // namespace

AutResult automorphism_group(const SRing& a, const AutOptions& opt) {
  const Group& g = a.group();
  if (g.order() > opt.cap_order) throw CapExceeded("automorphism_group: order above cap");
  const ColorGraph cg(a);
  AutSearch search(cg, opt.node_budget);
  seed(search, a);
  std::vector<int> base{0};
  for (int b : search.run()) base.push_back(b);
  std::vector<Perm> gens = regular_generators(g);
  const auto& stab = search.generators();
  gens.insert(gens.end(), stab.begin(), stab.end());
  return AutResult{PermGroup::from_strong_generators(g.order(), std::move(base), std::move(gens)), stab,
                   search.nodes()};
}

std::string to_string(SchurityCertificate::Verdict v) {
  switch (v) {
    case SchurityCertificate::Verdict::Schurian: return "schurian";
    case SchurityCertificate::Verdict::Nonschurian: return "nonschurian";
    case SchurityCertificate::Verdict::Undecided: return "undecided";
  }
  return "?";
}

namespace {

void judge(const SRing& a, SchurityCertificate& c) {
  const int n = a.group().order();
  c.stabilizer_orbits = stabilizer_orbits(n, c.aut_generators);
  c.verdict = SchurityCertificate::Verdict::Schurian;
  for (const auto& orb : c.stabilizer_orbits) {
    const int b = a.block_of(orb.front());
    if (orb.size() != a.block(b).size()) {
      c.verdict = SchurityCertificate::Verdict::Nonschurian;
      c.witness_block = b;
      c.witness_orbit = orb;
      return;
    }
  }
}

}  // namespace

SchurityCertificate is_schurian(const SRing& a, const AutOptions& opt) {
  const Group& g = a.group();
  if (g.order() > opt.cap_order) throw CapExceeded("is_schurian: order above cap");
  SchurityCertificate c;
  const ColorGraph cg(a);
  AutSearch search(cg, opt.node_budget);
  seed(search, a);
  std::vector<int> base{0};
  bool complete = true;
  try {
    for (int b : search.run()) base.push_back(b);
  } catch (const BudgetExhausted&) {
    complete = false;
  }
  c.nodes = search.nodes();
  c.aut_generators = regular_generators(g);
  const auto& stab = search.generators();
  c.aut_generators.insert(c.aut_generators.end(), stab.begin(), stab.end());
  judge(a, c);
  if (complete) {
    c.aut_order = PermGroup::from_strong_generators(g.order(), base, c.aut_generators).order();
  } else if (c.verdict == SchurityCertificate::Verdict::Schurian) {
    // A subgroup of Aut(A) already has the basic sets as orbits.
    c.note = "search budget exhausted; automorphism group order not certified";
  } else {
    c.verdict = SchurityCertificate::Verdict::Undecided;
    c.witness_block = -1;
    c.witness_orbit.clear();
    c.note = "search budget exhausted";
  }
  return c;
}

bool verify_certificate(const SRing& a, const SchurityCertificate& c) {
  const ColorGraph cg(a);
  for (const Perm& p : c.aut_generators)
    if (!cg.preserves(p)) return false;
  const int n = a.group().order();
  for (Element s : a.group().generators())
    if (std::find(c.aut_generators.begin(), c.aut_generators.end(), right_mult(a.group(), s)) ==
        c.aut_generators.end())
      return false;
  const auto orbits = stabilizer_orbits(n, c.aut_generators);
  if (orbits != c.stabilizer_orbits) return false;
  bool equal = true;
  for (const auto& orb : orbits)
    if (orb != a.block(a.block_of(orb.front()))) equal = false;
  switch (c.verdict) {
    case SchurityCertificate::Verdict::Schurian: return equal;
    case SchurityCertificate::Verdict::Nonschurian:
      return !equal && c.witness_block >= 0 && c.witness_block < a.rank() &&
             std::find(orbits.begin(), orbits.end(), c.witness_orbit) != orbits.end() &&
             is_subset(c.witness_orbit, a.block(c.witness_block)) &&
             c.witness_orbit.size() < a.block(c.witness_block).size();
    case SchurityCertificate::Verdict::Undecided: return true;
  }
  return false;
}

// ---------------------------------------------------------------------------

std::string to_string(SchurVerdict::Status s) {
  switch (s) {
    case SchurVerdict::Status::True: return "true";
    case SchurVerdict::Status::False: return "false";
    case SchurVerdict::Status::Undecided: return "undecided";
  }
  return "?";
}

SchurVerdict check_report(EnumerationReport report, const SweepOptions& opt) {
  SchurVerdict v;
  const std::size_t count = report.rings.size();
  v.certificates.resize(count);
  std::vector<char> done(count, 0);
  std::atomic<bool> stop{false};
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex mutex;
  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || stop) return;
      try {
        auto c = is_schurian(report.rings[i], opt.aut);
        if (opt.stop_at_first && c.verdict == SchurityCertificate::Verdict::Nonschurian) stop = true;
        v.certificates[i] = std::move(c);
        done[i] = 1;
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!error) error = std::current_exception();
        stop = true;
      }
    }
  };
  const int jobs = std::max(1, std::min<int>(opt.enumeration.jobs, static_cast<int>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  bool undecided = false;
  for (std::size_t i = 0; i < count; ++i) {
    if (!done[i]) {
      v.certificates[i].note = "not checked";
      continue;
    }
    const auto verdict = v.certificates[i].verdict;
    if (verdict == SchurityCertificate::Verdict::Undecided) {
      undecided = true;
      continue;
    }
    const bool schurian = verdict == SchurityCertificate::Verdict::Schurian;
    report.notes[i].schurian = schurian;
    if (!schurian) v.nonschurian.push_back(static_cast<int>(i));
  }
  if (!v.nonschurian.empty()) v.status = SchurVerdict::Status::False;
  else if (undecided || std::find(done.begin(), done.end(), 0) != done.end()) v.status = SchurVerdict::Status::Undecided;
  else v.status = SchurVerdict::Status::True;
  v.report = std::move(report);
  return v;
}

namespace {

SchurVerdict sweep(GroupPtr g, const SweepOptions& opt, EnumerationMode mode) {
  EnumerationReport report;
  try {
    report = mode == EnumerationMode::Central ? enumerate_central(g, opt.enumeration) : enumerate_all(g, opt.enumeration);
  } catch (const CapExceeded& e) {
    SchurVerdict v;
    v.report.group_spec = g->spec();
    v.report.mode = mode;
    v.note = e.what();
    return v;
  } catch (const BudgetExhausted& e) {
    SchurVerdict v;
    v.report.group_spec = g->spec();
    v.report.mode = mode;
    v.note = e.what();
    return v;
  }
  return check_report(std::move(report), opt);
}

}  // namespace

SchurVerdict is_generalized_schur(GroupPtr g, const SweepOptions& opt) {
  return sweep(std::move(g), opt, EnumerationMode::Central);
}

SchurVerdict is_schur_group(GroupPtr g, const SweepOptions& opt) { return sweep(std::move(g), opt, EnumerationMode::All); }

TransferResult regular_subgroup_transfer(const SRing& a, const PermGroup& r, GroupPtr h) {
  const Group& g = a.group();
  const int n = g.order();
  if (r.degree() != n) throw Error("regular_subgroup_transfer: degree mismatch");
  if (!r.is_regular()) throw Error("regular_subgroup_transfer: R is not regular");
  const ColorGraph cg(a);
  for (const Perm& p : r.generators())
    if (!cg.preserves(p)) throw Error("regular_subgroup_transfer: R is not inside Aut(A)");
  // r_u: the element of R taking 0 to u.
  std::vector<std::optional<Perm>> rep(n);
  rep[0] = Perm::identity(n);
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const Perm& s : r.generators()) {
      Perm q = *rep[queue[i]] * s;
      const int u = q[0];
      if (!rep[u]) {
        rep[u] = std::move(q);
        queue.push_back(u);
      }
    }
  std::vector<Element> table(static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) table[static_cast<std::size_t>(u) * n + v] = (*rep[v])[u];
  const Group rg(n, std::move(table), g.labels(), "regular(" + g.spec() + ")");
  auto iso = find_isomorphism(rg, *h);
  if (!iso) throw Error("regular_subgroup_transfer: R is not isomorphic to H");
  Partition p;
  for (const auto& b : a.blocks()) {
    ElementSet img;
    for (Element x : b) img.push_back((*iso)[x]);
    p.push_back(normalized(std::move(img)));
  }
  return TransferResult{make_sring(std::move(h), std::move(p)), *iso};
}

}  // namespace schurlab
