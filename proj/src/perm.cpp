#include "schurlab/perm.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace schurlab {

Perm::Perm(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (int y : image_) {
    if (y < 0 || y >= degree() || seen[static_cast<std::size_t>(y)])
      throw Error("Perm: image is not a bijection");
    seen[static_cast<std::size_t>(y)] = 1;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  Perm p;
  p.image_ = std::move(img);
  return p;
}

Perm Perm::operator*(const Perm& other) const {
  if (degree() != other.degree()) throw Error("Perm: degree mismatch");
  Perm r;
  r.image_.resize(image_.size());
  for (std::size_t x = 0; x < image_.size(); ++x)
    r.image_[x] = other.image_[static_cast<std::size_t>(image_[x])];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.image_.resize(image_.size());
  for (std::size_t x = 0; x < image_.size(); ++x)
    r.image_[static_cast<std::size_t>(image_[x])] = static_cast<int>(x);
  return r;
}

bool Perm::is_identity() const { return first_moved() < 0; }

int Perm::first_moved() const {
  for (std::size_t x = 0; x < image_.size(); ++x)
    if (image_[x] != static_cast<int>(x)) return static_cast<int>(x);
  return -1;
}

std::string Perm::cycle_string() const {
  std::ostringstream os;
  std::vector<char> seen(image_.size(), 0);
  bool any = false;
  for (int x = 0; x < degree(); ++x) {
    if (seen[static_cast<std::size_t>(x)] || image_[static_cast<std::size_t>(x)] == x) continue;
    any = true;
    os << '(';
    int y = x;
    bool first = true;
    while (!seen[static_cast<std::size_t>(y)]) {
      seen[static_cast<std::size_t>(y)] = 1;
      if (!first) os << ',';
      os << y;
      first = false;
      y = image_[static_cast<std::size_t>(y)];
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

// ---------------------------------------------------------------------------

struct PermGroup::Chain {
  struct Level {
    int beta = -1;
    std::vector<Perm> gens;  // strong generators fixing all earlier base points
    std::vector<int> orbit;
    std::vector<int> slot;  // point -> index into transversal, -1 if outside orbit
    std::vector<Perm> transversal;  // transversal[slot[x]] maps beta to x
  };
  std::vector<Level> levels;
  int degree = 0;

  void rebuild_orbit(std::size_t i) {
    Level& L = levels[i];
    L.orbit.assign(1, L.beta);
    L.slot.assign(static_cast<std::size_t>(degree), -1);
    L.transversal.clear();
    L.slot[static_cast<std::size_t>(L.beta)] = 0;
    L.transversal.push_back(Perm::identity(degree));
    for (std::size_t k = 0; k < L.orbit.size(); ++k) {
      int x = L.orbit[k];
      for (const Perm& s : L.gens) {
        int y = s[x];
        if (L.slot[static_cast<std::size_t>(y)] < 0) {
          L.slot[static_cast<std::size_t>(y)] = static_cast<int>(L.transversal.size());
          L.transversal.push_back(
              L.transversal[static_cast<std::size_t>(L.slot[static_cast<std::size_t>(x)])] * s);
          L.orbit.push_back(y);
        }
      }
    }
  }

  // Sifts g through levels starting at `from`. Returns the residue and the
  // index of the level at which sifting stopped (levels.size() if it passed).
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from = 0) const {
    for (std::size_t i = from; i < levels.size(); ++i) {
      const Level& L = levels[i];
      int x = g[L.beta];
      int s = L.slot[static_cast<std::size_t>(x)];
      if (s < 0) return {std::move(g), i};
      g = g * L.transversal[static_cast<std::size_t>(s)].inverse();
    }
    return {std::move(g), levels.size()};
  }

  void schreier_sims(std::vector<int> base_prefix, const std::vector<Perm>& gens) {
    std::vector<Perm> sgs;
    for (const Perm& g : gens)
      if (!g.is_identity()) sgs.push_back(g);
    std::vector<int> base = std::move(base_prefix);
    for (const Perm& g : sgs) {
      bool fixes_all = std::all_of(base.begin(), base.end(), [&](int b) { return g[b] == b; });
      if (fixes_all) base.push_back(g.first_moved());
    }
    levels.clear();
    for (int b : base) {
      Level L;
      L.beta = b;
      levels.push_back(std::move(L));
    }
    auto fixes_prefix = [&](const Perm& g, std::size_t i) {
      for (std::size_t j = 0; j < i; ++j)
        if (g[levels[j].beta] != levels[j].beta) return false;
      return true;
    };
    for (std::size_t i = 0; i < levels.size(); ++i) {
      for (const Perm& g : sgs)
        if (fixes_prefix(g, i)) levels[i].gens.push_back(g);
      rebuild_orbit(i);
    }

    // Holt's deterministic Schreier-Sims.
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels.size()) - 1;
    while (i >= 0) {
      bool restarted = false;
      Level* L = &levels[static_cast<std::size_t>(i)];
      for (std::size_t oi = 0; oi < L->orbit.size() && !restarted; ++oi) {
        int beta = L->orbit[oi];
        const Perm ub = L->transversal[static_cast<std::size_t>(L->slot[static_cast<std::size_t>(beta)])];
        for (std::size_t si = 0; si < L->gens.size(); ++si) {
          const Perm& s = L->gens[si];
          int img = s[beta];
          const Perm& ui = L->transversal[static_cast<std::size_t>(L->slot[static_cast<std::size_t>(img)])];
          Perm schreier = ub * s * ui.inverse();
          if (schreier.is_identity()) continue;
          auto [h, j] = strip(std::move(schreier), static_cast<std::size_t>(i) + 1);
          if (j < levels.size() || !h.is_identity()) {
            if (j == levels.size()) {
              Level nl;
              nl.beta = h.first_moved();
              levels.push_back(std::move(nl));
            }
            for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
              levels[l].gens.push_back(h);
              rebuild_orbit(l);
            }
            i = static_cast<std::ptrdiff_t>(j);
            restarted = true;
            break;
          }
        }
      }
      if (!restarted) --i;
    }
    // Drop trailing trivial levels (only possible for explicit base prefixes).
    while (!levels.empty() && levels.back().orbit.size() == 1 && levels.back().gens.empty())
      levels.pop_back();
  }
};

struct PermGroup::State {
  std::mutex mutex;
  std::optional<Chain> chain;
  std::vector<int> preferred_base;
};

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)), state_(std::make_shared<State>()) {
  for (const Perm& g : generators_)
    if (g.degree() != degree_) throw Error("PermGroup: generator degree mismatch");
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators, std::shared_ptr<State> state)
    : degree_(degree), generators_(std::move(generators)), state_(std::move(state)) {}

PermGroup PermGroup::from_strong_generators(int degree, std::vector<int> base,
                                            std::vector<Perm> strong_generators) {
  auto state = std::make_shared<State>();
  Chain c;
  c.degree = degree;
  std::vector<Perm> gens;
  for (const Perm& g : strong_generators)
    if (!g.is_identity()) gens.push_back(g);
  for (std::size_t i = 0; i < base.size(); ++i) {
    Chain::Level L;
    L.beta = base[i];
    for (const Perm& g : gens) {
      bool fixes = true;
      for (std::size_t j = 0; j < i && fixes; ++j) fixes = g[base[j]] == base[j];
      if (fixes) L.gens.push_back(g);
    }
    c.levels.push_back(std::move(L));
    c.rebuild_orbit(i);
  }
  state->chain = std::move(c);
  return PermGroup(degree, std::move(gens), std::move(state));
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::symmetric(int degree) {
  if (degree <= 1) return trivial(degree);
  std::vector<Perm> gens;
  // Transpositions (i, i+1) form a strong generating set for base 0..n-2.
  std::vector<int> base;
  for (int i = 0; i + 1 < degree; ++i) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(i + 1)]);
    gens.emplace_back(std::move(img));
  }
  // Base point i needs generators fixing 0..i-1 that act transitively on i..n-1,
  // which transpositions (j, j+1) for j >= i do.
  for (int i = 0; i + 1 < degree; ++i) base.push_back(i);
  return from_strong_generators(degree, std::move(base), std::move(gens));
}

const PermGroup::Chain& PermGroup::chain() const {
  std::lock_guard<std::mutex> lock(state_->mutex);
  if (!state_->chain) {
    Chain c;
    c.degree = degree_;
    c.schreier_sims(state_->preferred_base, generators_);
    state_->chain = std::move(c);
  }
  return *state_->chain;
}

BigInt PermGroup::order() const {
  BigInt r = 1;
  for (const auto& L : chain().levels) r *= static_cast<unsigned>(L.orbit.size());
  return r;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  auto [h, j] = chain().strip(p);
  return j == chain().levels.size() && h.is_identity();
}

std::vector<int> PermGroup::orbit(int point) const {
  std::vector<char> seen(static_cast<std::size_t>(degree_), 0);
  std::vector<int> orb{point};
  seen[static_cast<std::size_t>(point)] = 1;
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (const Perm& g : generators_) {
      int y = g[orb[k]];
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        orb.push_back(y);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::vector<int>> orbits_of(int degree, const std::vector<Perm>& gens) {
  std::vector<int> parent(static_cast<std::size_t>(degree));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const Perm& g : gens)
    for (int x = 0; x < degree; ++x) {
      int a = find(x), b = find(g[x]);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(static_cast<std::size_t>(degree), -1);
  for (int x = 0; x < degree; ++x) {
    int r = find(x);
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(x);
  }
  return out;
}

std::vector<std::vector<int>> PermGroup::orbits() const { return orbits_of(degree_, generators_); }

std::vector<std::vector<int>> PermGroup::orbits(const std::vector<int>& domain) const {
  std::vector<std::vector<int>> out;
  std::vector<char> in(static_cast<std::size_t>(degree_), 0);
  for (int x : domain) in[static_cast<std::size_t>(x)] = 1;
  for (auto& o : orbits())
    if (in[static_cast<std::size_t>(o.front())]) out.push_back(std::move(o));
  return out;
}

namespace {

// Strong generators fixing the first base point: the union over deeper levels,
// since Holt's algorithm files a new generator only at the levels it needs.
template <class C>
std::vector<Perm> deep_generators(const C& c) {
  std::vector<Perm> out;
  for (std::size_t i = 1; i < c.levels.size(); ++i)
    for (const Perm& g : c.levels[i].gens)
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  return out;
}

}  // namespace

PermGroup PermGroup::stabilizer(int point) const {
  const Chain& c = chain();
  if (!c.levels.empty() && c.levels.front().beta == point) {
    std::vector<int> base;
    for (std::size_t i = 1; i < c.levels.size(); ++i) base.push_back(c.levels[i].beta);
    return from_strong_generators(degree_, std::move(base), deep_generators(c));
  }
  // Rebuild a chain whose base starts at `point`, seeded with the known
  // strong generators.
  Chain other;
  other.degree = degree_;
  std::vector<Perm> sgs;
  for (const auto& L : c.levels)
    for (const Perm& g : L.gens)
      if (std::find(sgs.begin(), sgs.end(), g) == sgs.end()) sgs.push_back(g);
  std::vector<int> prefix{point};
  for (const auto& L : c.levels)
    if (L.beta != point) prefix.push_back(L.beta);
  other.schreier_sims(prefix, sgs);
  std::vector<int> base;
  std::vector<Perm> gens;
  if (!other.levels.empty() && other.levels.front().beta == point) {
    for (std::size_t i = 1; i < other.levels.size(); ++i) base.push_back(other.levels[i].beta);
    gens = deep_generators(other);
  } else {
    for (const auto& L : other.levels) base.push_back(L.beta);
    gens = sgs;
  }
  return from_strong_generators(degree_, std::move(base), std::move(gens));
}

bool PermGroup::is_transitive() const {
  if (degree_ == 0) return true;
  return orbit(0).size() == static_cast<std::size_t>(degree_);
}

bool PermGroup::is_regular() const { return is_transitive() && order() == degree_; }

std::vector<int> PermGroup::base() const {
  std::vector<int> b;
  for (const auto& L : chain().levels) b.push_back(L.beta);
  return b;
}

std::vector<Perm> PermGroup::strong_generators() const {
  const Chain& c = chain();
  std::vector<Perm> out;
  for (const auto& L : c.levels)
    for (const Perm& g : L.gens)
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  return out;
}

std::vector<Perm> PermGroup::elements(std::size_t cap) const {
  if (order() > cap) throw CapExceeded("PermGroup::elements: order above cap");
  std::set<Perm> seen{Perm::identity(degree_)};
  std::deque<Perm> queue{Perm::identity(degree_)};
  while (!queue.empty()) {
    Perm p = queue.front();
    queue.pop_front();
    for (const Perm& g : generators_) {
      Perm q = p * g;
      if (seen.insert(q).second) queue.push_back(q);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace schurlab
