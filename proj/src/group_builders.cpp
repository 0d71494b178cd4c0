// Group constructors and the recipe mini-language.
//
//   cyclic:n  dihedral:2n  quaternion:2^k  semidihedral:2^k  modular:p^k
//   elemabelian:p^k  frobenius:q:p  extraspecial:p^3:+|-  A4  A5  S4
//   direct(s1,s2)  semidirect(s1,s2,pow:r|map:i0/i1/...)  centralprod(s1,s2,i:j)
//
// Numbers may be written either as integers or as p^k.

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "schurlab/group.hpp"
#include "schurlab/numtheory.hpp"

namespace schurlab {

namespace {

std::string power_label(const std::string& sym, long long k) {
  if (k == 0) return "";
  if (k == 1) return sym;
  return sym + "^" + std::to_string(k);
}

GroupPtr make(int n, std::vector<Element> table, std::vector<std::string> labels, std::string spec) {
  return std::make_shared<const Group>(n, std::move(table), std::move(labels), std::move(spec));
}

GroupPtr cyclic(int n, std::string spec) {
  if (n < 1) throw Error("cyclic: order must be positive");
  if (n > kMaxOrder) throw CapExceeded("cyclic: order above limit");
  std::vector<Element> t(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i * n + j)] = (i + j) % n;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(i == 0 ? "e" : power_label("a", i));
  return make(n, std::move(t), std::move(labels), std::move(spec));
}

// <a, b | a^m = 1, b^p = a^s, b a b^{-1} = a^r>, element a^i b^j at index i + m*j.
GroupPtr metacyclic(long long m, long long p, long long r, long long s, std::string spec) {
  if (m * p > kMaxOrder) throw CapExceeded("metacyclic: order above limit");
  r = ((r % m) + m) % m;
  s = ((s % m) + m) % m;
  if (m > 1 && (gcd(r, m) != 1 || mod_pow(r, p, m) != 1 % m))
    throw Error("metacyclic: r^p must be 1 modulo m");
  if (m > 1 && (s * (r - 1)) % m != 0) throw Error("metacyclic: a^s must commute with b");
  const int n = static_cast<int>(m * p);
  std::vector<long long> rpow(static_cast<std::size_t>(p));
  rpow[0] = 1 % m;
  for (long long j = 1; j < p; ++j) rpow[static_cast<std::size_t>(j)] = rpow[static_cast<std::size_t>(j - 1)] * r % m;
  std::vector<Element> t(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      long long i = x % m, j = x / m, k = y % m, l = y / m;
      long long e = i + k * rpow[static_cast<std::size_t>(j)];
      long long f = j + l;
      if (f >= p) {
        f -= p;
        e += s;
      }
      t[static_cast<std::size_t>(x * n + y)] = static_cast<Element>((e % m) + m * f);
    }
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) {
    std::string l = power_label("a", x % m) + power_label("b", x / m);
    labels.push_back(l.empty() ? "e" : l);
  }
  return make(n, std::move(t), std::move(labels), std::move(spec));
}

GroupPtr elemabelian(long long p, int k, std::string spec) {
  long long n = 1;
  for (int i = 0; i < k; ++i) n *= p;
  if (n > kMaxOrder) throw CapExceeded("elemabelian: order above limit");
  const int N = static_cast<int>(n);
  std::vector<Element> t(static_cast<std::size_t>(N) * static_cast<std::size_t>(N));
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      int a = x, b = y, out = 0, place = 1;
      for (int d = 0; d < k; ++d) {
        out += static_cast<int>(((a % p) + (b % p)) % p) * place;
        a /= static_cast<int>(p);
        b /= static_cast<int>(p);
        place *= static_cast<int>(p);
      }
      t[static_cast<std::size_t>(x * N + y)] = out;
    }
  std::vector<std::string> labels;
  for (int x = 0; x < N; ++x) {
    if (x == 0) {
      labels.push_back("e");
      continue;
    }
    std::string l = "(";
    int a = x;
    for (int d = 0; d < k; ++d) {
      if (d) l += ',';
      l += std::to_string(a % p);
      a /= static_cast<int>(p);
    }
    labels.push_back(l + ")");
  }
  return make(N, std::move(t), std::move(labels), std::move(spec));
}

// Heisenberg group mod p: (x,y,z)(x',y',z') = (x+x', y+y', z+z'+xy').
GroupPtr heisenberg(long long p, std::string spec) {
  const int P = static_cast<int>(p);
  const int n = P * P * P;
  if (n > kMaxOrder) throw CapExceeded("heisenberg: order above limit");
  auto idx = [&](int x, int y, int z) { return x + P * y + P * P * z; };
  std::vector<Element> t(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      int x = u % P, y = (u / P) % P, z = u / (P * P);
      int x2 = v % P, y2 = (v / P) % P, z2 = v / (P * P);
      t[static_cast<std::size_t>(u * n + v)] = idx((x + x2) % P, (y + y2) % P, (z + z2 + x * y2) % P);
    }
  std::vector<std::string> labels;
  for (int u = 0; u < n; ++u) {
    std::string l = power_label("x", u % P) + power_label("y", (u / P) % P) + power_label("z", u / (P * P));
    labels.push_back(l.empty() ? "e" : l);
  }
  return make(n, std::move(t), std::move(labels), std::move(spec));
}

// Permutation group on {1..d} from generator images; elements sorted by image tuple.
GroupPtr from_permutations(int d, const std::vector<std::vector<int>>& gens, std::string spec) {
  std::vector<int> id(static_cast<std::size_t>(d));
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> queue{id};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto& g : gens) {
      std::vector<int> c(static_cast<std::size_t>(d));
      for (int x = 0; x < d; ++x) c[static_cast<std::size_t>(x)] = g[static_cast<std::size_t>(queue[k][static_cast<std::size_t>(x)])];
      if (seen.insert(c).second) queue.push_back(c);
      if (seen.size() > static_cast<std::size_t>(kMaxOrder)) throw CapExceeded("permutation group above limit");
    }
  std::vector<std::vector<int>> elems(seen.begin(), seen.end());  // identity is lexicographically first
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  const int n = static_cast<int>(elems.size());
  std::vector<Element> t(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // a then b
      std::vector<int> c(static_cast<std::size_t>(d));
      for (int x = 0; x < d; ++x)
        c[static_cast<std::size_t>(x)] = elems[static_cast<std::size_t>(b)][static_cast<std::size_t>(elems[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)])];
      t[static_cast<std::size_t>(a * n + b)] = index.at(c);
    }
  std::vector<std::string> labels;
  for (const auto& e : elems) {
    std::vector<int> shifted = e;
    std::string s = Perm(shifted).cycle_string();
    // Points printed 1-based.
    std::string out;
    for (char ch : s) out += std::isdigit(static_cast<unsigned char>(ch)) ? std::string(1, static_cast<char>(ch + 1)) : std::string(1, ch);
    labels.push_back(out == "()" ? "e" : out);
  }
  return make(n, std::move(t), std::move(labels), std::move(spec));
}

GroupPtr direct(const Group& a, const Group& b, std::string spec) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  if (n > kMaxOrder) throw CapExceeded("direct: order above limit");
  std::vector<Element> t(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      t[static_cast<std::size_t>(u * n + v)] = a.mul(u % na, v % na) + na * b.mul(u / na, v / na);
  std::vector<std::string> labels;
  for (int u = 0; u < n; ++u)
    labels.push_back(u == 0 ? "e" : "(" + a.label(u % na) + "," + b.label(u / na) + ")");
  return make(n, std::move(t), std::move(labels), std::move(spec));
}

// N x| H with H cyclic; the generator of H acts on N by `phi` (h x h^{-1} = phi(x)).
GroupPtr semidirect(const Group& nn, const Group& hh, const std::vector<Element>& phi, std::string spec) {
  const int na = nn.order(), nh = hh.order(), n = na * nh;
  if (n > kMaxOrder) throw CapExceeded("semidirect: order above limit");
  if (phi.size() != static_cast<std::size_t>(na) || !is_homomorphism(nn, nn, phi))
    throw Error("semidirect: action not an automorphism");
  {
    std::vector<Element> sorted = phi;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < na; ++i)
      if (sorted[static_cast<std::size_t>(i)] != i) throw Error("semidirect: action not an automorphism");
  }
  Element h = -1;
  for (int x = 0; x < nh; ++x)
    if (hh.element_order(x) == nh) {
      h = x;
      break;
    }
  if (h < 0) throw Error("semidirect: acting group must be cyclic");
  std::vector<int> log(static_cast<std::size_t>(nh));
  {
    Element y = 0;
    for (int k = 0; k < nh; ++k) {
      log[static_cast<std::size_t>(y)] = k;
      y = hh.mul(y, h);
    }
  }
  // phi^k tables.
  std::vector<std::vector<Element>> phik(static_cast<std::size_t>(nh));
  phik[0].resize(static_cast<std::size_t>(na));
  std::iota(phik[0].begin(), phik[0].end(), 0);
  for (int k = 1; k < nh; ++k) {
    phik[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(na));
    for (int x = 0; x < na; ++x)
      phik[static_cast<std::size_t>(k)][static_cast<std::size_t>(x)] =
          phi[static_cast<std::size_t>(phik[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(x)])];
  }
  for (int x = 0; x < na; ++x)
    if (phi[static_cast<std::size_t>(phik[static_cast<std::size_t>(nh - 1)][static_cast<std::size_t>(x)])] != x)
      throw Error("semidirect: action order does not divide the order of the acting group");
  std::vector<Element> t(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      int x1 = u % na, y1 = u / na, x2 = v % na, y2 = v / na;
      int k = log[static_cast<std::size_t>(y1)];
      Element x = nn.mul(x1, phik[static_cast<std::size_t>(k)][static_cast<std::size_t>(x2)]);
      t[static_cast<std::size_t>(u * n + v)] = x + na * hh.mul(y1, y2);
    }
  std::vector<std::string> labels;
  for (int u = 0; u < n; ++u)
    labels.push_back(u == 0 ? "e" : "(" + nn.label(u % na) + "," + hh.label(u / na) + ")");
  return make(n, std::move(t), std::move(labels), std::move(spec));
}

GroupPtr centralprod(const Group& a, const Group& b, Element za, Element zb, std::string spec) {
  if (za < 0 || za >= a.order() || zb < 0 || zb >= b.order()) throw Error("centralprod: amalgam element out of range");
  auto za_central = center(a), zb_central = center(b);
  if (!za_central.contains(za) || !zb_central.contains(zb)) throw Error("centralprod: amalgam not central");
  if (a.element_order(za) != b.element_order(zb)) throw Error("centralprod: amalgam elements have different orders");
  auto d = direct(a, b, "direct(" + a.spec() + "," + b.spec() + ")");
  Element w = za + a.order() * b.inv(zb);
  Subgroup n = generated_subgroup(*d, {w});
  Section s = quotient_group(*d, n);
  const int m = s.quotient->order();
  std::vector<Element> t(s.quotient->table());
  std::vector<std::string> labels;
  for (int q = 0; q < m; ++q) {
    Element rep = s.preimage(q).front();
    labels.push_back(q == 0 ? "e" : d->label(rep));
  }
  return make(m, std::move(t), std::move(labels), std::move(spec));
}

// --- parsing ----------------------------------------------------------------

long long parse_number(std::string_view s) {
  auto caret = s.find('^');
  auto to_ll = [](std::string_view t) {
    if (t.empty()) throw Error("malformed spec: empty number");
    long long v = 0;
    for (char c : t) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("malformed spec: bad number '" + std::string(t) + "'");
      v = v * 10 + (c - '0');
      if (v > 1'000'000'000LL) throw Error("malformed spec: number too large");
    }
    return v;
  };
  if (caret == std::string_view::npos) return to_ll(s);
  long long base = to_ll(s.substr(0, caret));
  long long e = to_ll(s.substr(caret + 1));
  long long v = 1;
  for (long long i = 0; i < e; ++i) {
    v *= base;
    if (v > 1'000'000'000LL) throw Error("malformed spec: number too large");
  }
  return v;
}

// (prime, exponent) for a prime power; error otherwise.
std::pair<long long, int> parse_prime_power(std::string_view s, const char* what) {
  long long v = parse_number(s);
  long long p = prime_power_base(v);
  if (p == 0) throw Error(std::string("malformed spec: ") + what + " needs a prime power");
  int k = 0;
  for (long long x = v; x > 1; x /= p) ++k;
  return {p, k};
}

std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

long long smallest_of_order(long long p, long long q) {
  for (long long r = 2; r < q; ++r)
    if (multiplicative_order(r, q) == p) return r;
  throw Error("frobenius: no element of the requested order");
}

GroupPtr build(std::string_view raw);

GroupPtr build_compound(const std::string& name, const std::string& inner) {
  auto parts = split_top(inner, ',');
  for (auto& p : parts) p = trim(p);
  if (name == "direct") {
    if (parts.size() != 2) throw Error("malformed spec: direct takes two arguments");
    auto a = build(parts[0]), b = build(parts[1]);
    return direct(*a, *b, "direct(" + a->spec() + "," + b->spec() + ")");
  }
  if (name == "semidirect") {
    if (parts.size() != 3) throw Error("malformed spec: semidirect takes three arguments");
    auto a = build(parts[0]), b = build(parts[1]);
    const std::string& act = parts[2];
    std::vector<Element> phi(static_cast<std::size_t>(a->order()));
    if (act.rfind("pow:", 0) == 0) {
      if (!a->is_abelian()) throw Error("semidirect: pow action needs an abelian normal factor");
      long long r = parse_number(std::string_view(act).substr(4));
      for (int x = 0; x < a->order(); ++x) phi[static_cast<std::size_t>(x)] = a->pow(x, r);
    } else if (act.rfind("map:", 0) == 0) {
      auto items = split_top(std::string_view(act).substr(4), '/');
      if (items.size() != phi.size()) throw Error("semidirect: action not an automorphism (wrong length)");
      for (std::size_t i = 0; i < items.size(); ++i) {
        long long v = parse_number(trim(items[i]));
        if (v >= a->order()) throw Error("semidirect: action not an automorphism (index out of range)");
        phi[i] = static_cast<Element>(v);
      }
    } else {
      throw Error("malformed spec: semidirect action must be pow:r or map:i0/i1/...");
    }
    return semidirect(*a, *b, phi, "semidirect(" + a->spec() + "," + b->spec() + "," + act + ")");
  }
  if (name == "centralprod") {
    if (parts.size() != 3) throw Error("malformed spec: centralprod takes three arguments");
    auto a = build(parts[0]), b = build(parts[1]);
    auto ij = split_top(parts[2], ':');
    if (ij.size() != 2) throw Error("malformed spec: centralprod amalgam must be i:j");
    auto i = static_cast<Element>(parse_number(trim(ij[0])));
    auto j = static_cast<Element>(parse_number(trim(ij[1])));
    return centralprod(*a, *b, i, j, "centralprod(" + a->spec() + "," + b->spec() + "," + parts[2] + ")");
  }
  throw Error("malformed spec: unknown constructor '" + name + "'");
}

GroupPtr build(std::string_view raw) {
  std::string s = trim(raw);
  if (s.empty()) throw Error("malformed spec: empty");
  auto paren = s.find('(');
  if (paren != std::string::npos) {
    if (s.back() != ')') throw Error("malformed spec: missing ')'");
    return build_compound(trim(std::string_view(s).substr(0, paren)),
                          s.substr(paren + 1, s.size() - paren - 2));
  }
  if (s == "A4") return from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4");
  if (s == "S4") return from_permutations(4, {{1, 2, 3, 0}, {1, 0, 2, 3}}, "S4");
  if (s == "A5") return from_permutations(5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}, "A5");

  auto fields = split_top(s, ':');
  const std::string& name = fields[0];
  auto need = [&](std::size_t k) {
    if (fields.size() != k) throw Error("malformed spec: '" + s + "'");
  };
  if (name == "cyclic") {
    need(2);
    long long n = parse_number(fields[1]);
    if (n < 1 || n > kMaxOrder) throw Error("cyclic: order out of range");
    return cyclic(static_cast<int>(n), "cyclic:" + std::to_string(n));
  }
  if (name == "dihedral") {
    need(2);
    long long n2 = parse_number(fields[1]);
    if (n2 < 2 || n2 % 2 != 0) throw Error("dihedral: order must be even and at least 2");
    long long n = n2 / 2;
    return metacyclic(n, 2, -1, 0, "dihedral:" + std::to_string(n2));
  }
  if (name == "quaternion") {
    need(2);
    auto [p, k] = parse_prime_power(fields[1], "quaternion");
    if (p != 2 || k < 3) throw Error("quaternion: order must be 2^k with k >= 3");
    long long m = 1LL << (k - 1);
    return metacyclic(m, 2, -1, m / 2, "quaternion:" + std::to_string(2 * m));
  }
  if (name == "semidihedral") {
    need(2);
    auto [p, k] = parse_prime_power(fields[1], "semidihedral");
    if (p != 2 || k < 4) throw Error("semidihedral: order must be 2^k with k >= 4");
    long long m = 1LL << (k - 1);
    return metacyclic(m, 2, m / 2 - 1, 0, "semidihedral:" + std::to_string(2 * m));
  }
  if (name == "modular") {
    need(2);
    auto [p, k] = parse_prime_power(fields[1], "modular");
    if (k < 3 || (p == 2 && k < 4)) throw Error("modular: needs p^k with k >= 3 (k >= 4 for p = 2)");
    long long m = 1;
    for (int i = 0; i < k - 1; ++i) m *= p;
    return metacyclic(m, p, 1 + m / p, 0, "modular:" + std::to_string(m * p));
  }
  if (name == "elemabelian") {
    need(2);
    auto [p, k] = parse_prime_power(fields[1], "elemabelian");
    long long n = 1;
    for (int i = 0; i < k; ++i) n *= p;
    return elemabelian(p, k, "elemabelian:" + std::to_string(p) + "^" + std::to_string(k));
  }
  if (name == "frobenius") {
    need(3);
    long long q = parse_number(fields[1]), p = parse_number(fields[2]);
    if (!is_prime(q)) throw Error("frobenius: q must be prime");
    if (p < 2 || (q - 1) % p != 0) throw Error("frobenius: q must be 1 modulo p");
    return metacyclic(q, p, smallest_of_order(p, q), 0,
                      "frobenius:" + std::to_string(q) + ":" + std::to_string(p));
  }
  if (name == "extraspecial") {
    need(3);
    auto [p, k] = parse_prime_power(fields[1], "extraspecial");
    if (k != 3) throw Error("extraspecial: order must be p^3");
    const std::string& sign = fields[2];
    if (sign != "+" && sign != "-") throw Error("extraspecial: sign must be + or -");
    std::string spec = "extraspecial:" + std::to_string(p * p * p) + ":" + sign;
    if (p == 2) return sign == "+" ? metacyclic(4, 2, -1, 0, spec) : metacyclic(4, 2, -1, 2, spec);
    if (sign == "+") return heisenberg(p, spec);
    return metacyclic(p * p, p, 1 + p, 0, spec);
  }
  throw Error("malformed spec: unknown group '" + s + "'");
}

}  // namespace

GroupPtr build_group(std::string_view spec) { return build(spec); }

}  // namespace schurlab
