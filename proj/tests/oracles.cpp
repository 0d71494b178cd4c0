#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracle {

Blocks classes(const Group& g) {
  const int n = g.order();
  std::vector<int> done(n, 0);
  Blocks out;
  for (int x = 0; x < n; ++x) {
    if (done[x]) continue;
    std::set<int> cls;
    for (int y = 0; y < n; ++y) cls.insert(g.mul(g.mul(g.inv(y), x), y));
    for (int c : cls) done[c] = 1;
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

bool is_sring(const Group& g, const Blocks& p) {
  const int n = g.order();
  std::vector<int> lab(n, -1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int x : p[i]) lab[x] = static_cast<int>(i);
  if (lab[0] < 0 || p[lab[0]].size() != 1) return false;
  for (const auto& b : p) {
    std::set<int> inv;
    for (int x : b) inv.insert(g.inv(x));
    bool found = false;
    for (const auto& c : p)
      if (std::set<int>(c.begin(), c.end()) == inv) found = true;
    if (!found) return false;
  }
  for (const auto& bx : p)
    for (const auto& by : p) {
      std::vector<long> a(n, 0), b(n, 0), c(n, 0);
      for (int x : bx) a[x] = 1;
      for (int y : by) b[y] = 1;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) c[g.mul(u, v)] += a[u] * b[v];
      for (const auto& bz : p)
        for (int z : bz)
          if (c[z] != c[bz.front()]) return false;
    }
  return true;
}

std::uint64_t aut_order(const Group& g, const Blocks& p, Blocks* stab_orbits) {
  const int n = g.order();
  std::vector<int> lab(n);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int x : p[i]) lab[x] = static_cast<int>(i);
  auto col = [&](int u, int v) { return lab[g.mul(v, g.inv(u))]; };
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = 0; v < n && ok; ++v)
        if (col(perm[u], perm[v]) != col(u, v)) ok = false;
    if (!ok) continue;
    ++count;
    if (perm[0] == 0)
      for (int x = 0; x < n; ++x) parent[find(x)] = find(perm[x]);
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (stab_orbits) {
    std::vector<std::vector<int>> groups(n);
    for (int x = 0; x < n; ++x) groups[find(x)].push_back(x);
    stab_orbits->clear();
    for (auto& gr : groups)
      if (!gr.empty()) stab_orbits->push_back(gr);
    std::sort(stab_orbits->begin(), stab_orbits->end());
  }
  return count;
}

bool stabilizer_maps(const Group& g, const Blocks& p, int x, int y) {
  if (x == 0 || y == 0) return x == y;
  const int n = g.order();
  std::vector<int> lab(n);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int z : p[i]) lab[z] = static_cast<int>(i);
  auto col = [&](int u, int v) { return lab[g.mul(v, g.inv(u))]; };
  std::vector<int> order{0, x};
  for (int v = 1; v < n; ++v)
    if (v != x) order.push_back(v);
  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == order.size()) return true;
    const int v = order[i];
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      if (i == 0 && w != 0) continue;
      if (i == 1 && w != y) continue;
      bool ok = col(w, w) == col(v, v);
      for (std::size_t j = 0; j < i && ok; ++j) {
        const int u = order[j];
        ok = col(img[u], w) == col(u, v) && col(w, img[u]) == col(v, u);
      }
      if (!ok) continue;
      img[v] = w;
      used[w] = 1;
      if (rec(i + 1)) return true;
      used[w] = 0;
      img[v] = -1;
    }
    return false;
  };
  return rec(0);
}

void for_each_set_partition(int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> lab(k, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == k) {
      f(lab);
      return;
    }
    for (int b = 0; b <= used && b < k; ++b) {
      lab[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  if (k == 0) {
    f(lab);
    return;
  }
  rec(0, 0);
}

std::vector<int> closure(const Group& g, std::vector<int> x) {
  std::set<int> s(x.begin(), x.end());
  s.insert(0);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int a : cur)
      for (int b : cur)
        if (s.insert(g.mul(a, b)).second) grew = true;
  }
  return {s.begin(), s.end()};
}

std::uint64_t group_aut_order(const Group& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        if (perm[g.mul(a, b)] != g.mul(perm[a], perm[b])) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return count;
}

}  // namespace oracle
