#pragma once

// Brute-force reference computations. Nothing here calls into the library: rings are rebuilt from
// plain modular arithmetic and every set is computed straight from its definition.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Set = std::set<int>;

/// Ring or module carrier with explicit tables, indices 0..n-1, 0 the zero element.
struct Tab {
  int n = 0;
  int one = 0;
  std::vector<int> add, mul;
  int plus(int a, int b) const { return add[a * n + b]; }
  int times(int a, int b) const { return mul[a * n + b]; }
};

/// Mixed radix with the first coordinate most significant.
inline std::vector<int> digits(int x, const std::vector<int>& radix) {
  std::vector<int> d(radix.size());
  for (int i = static_cast<int>(radix.size()) - 1; i >= 0; --i) {
    d[i] = x % radix[i];
    x /= radix[i];
  }
  return d;
}
inline int undigits(const std::vector<int>& d, const std::vector<int>& radix) {
  int x = 0;
  for (std::size_t i = 0; i < radix.size(); ++i) x = x * radix[i] + d[i];
  return x;
}

inline Tab from_ops(int n, int one, const std::function<int(int, int)>& add, const std::function<int(int, int)>& mul) {
  Tab t;
  t.n = n;
  t.one = one;
  t.add.resize(static_cast<std::size_t>(n * n));
  t.mul.resize(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      t.add[a * n + b] = add(a, b);
      t.mul[a * n + b] = mul(a, b);
    }
  return t;
}

inline Tab zm(int m) {
  return from_ops(m, 1 % m, [m](int a, int b) { return (a + b) % m; }, [m](int a, int b) { return (a * b) % m; });
}

/// Z_m[X]/(X^(n+1)), coefficient of X^0 most significant: the same ring as Z_m with n regular modules.
inline Tab truncated_zm(int m, int n) {
  const std::vector<int> radix(static_cast<std::size_t>(n + 1), m);
  int size = 1;
  for (int k = 0; k <= n; ++k) size *= m;
  auto add = [=](int a, int b) {
    auto x = digits(a, radix), y = digits(b, radix);
    for (int k = 0; k <= n; ++k) x[k] = (x[k] + y[k]) % m;
    return undigits(x, radix);
  };
  auto mul = [=](int a, int b) {
    auto x = digits(a, radix), y = digits(b, radix);
    std::vector<int> z(static_cast<std::size_t>(n + 1), 0);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % m;
    return undigits(z, radix);
  };
  std::vector<int> onev(static_cast<std::size_t>(n + 1), 0);
  onev[0] = 1 % m;
  return from_ops(size, undigits(onev, radix), add, mul);
}

/// GF(4) = F2[X]/(X^2 + X + 1), index = 2 * (constant) + (coefficient of X):
/// 0 -> 0, 1 -> X, 2 -> 1, 3 -> 1 + X. Addition is xor.
inline constexpr int gf4_one = 2;
inline int gf4_mul(int a, int b) {
  static const int t[4][4] = {{0, 0, 0, 0}, {0, 3, 1, 2}, {0, 1, 2, 3}, {0, 2, 3, 1}};
  return t[a][b];
}

/// F2 x|_n F4 x| ... x| F4 with products in F4.
inline Tab f2_f4(int n) {
  std::vector<int> radix{2};
  for (int i = 0; i < n; ++i) radix.push_back(4);
  int size = 2;
  for (int i = 0; i < n; ++i) size *= 4;
  auto add = [=](int a, int b) {
    auto x = digits(a, radix), y = digits(b, radix);
    for (std::size_t k = 0; k < x.size(); ++k) x[k] ^= y[k];
    return undigits(x, radix);
  };
  auto mul = [=](int a, int b) {
    auto x = digits(a, radix), y = digits(b, radix);
    std::vector<int> z(x.size(), 0);
    // degree 0 lives in F2 and acts as 0 or 1 of F4
    auto lift = [](int k, int v) { return k == 0 ? (v ? gf4_one : 0) : v; };
    z[0] = x[0] & y[0];
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j)
        if (i + j > 0) z[i + j] ^= gf4_mul(lift(i, x[i]), lift(j, y[j]));
    return undigits(z, radix);
  };
  std::vector<int> onev(radix.size(), 0);
  onev[0] = 1;
  return from_ops(size, undigits(onev, radix), add, mul);
}

/// F2 x|_2 F2^2 x| F2^2 with coordinatewise products; module coordinates (a, b) encoded 2a + b.
inline Tab f2_f2sq() {
  const std::vector<int> radix{2, 4, 4};
  auto add = [=](int a, int b) {
    auto x = digits(a, radix), y = digits(b, radix);
    for (int k = 0; k < 3; ++k) x[k] ^= y[k];
    return undigits(x, radix);
  };
  auto cw = [](int u, int v) { return u & v; };  // coordinatewise product on two bits
  auto act = [](int r, int v) { return r ? v : 0; };
  auto mul = [=](int a, int b) {
    auto x = digits(a, radix), y = digits(b, radix);
    std::vector<int> z(3);
    z[0] = x[0] & y[0];
    z[1] = act(x[0], y[1]) ^ act(y[0], x[1]);
    z[2] = act(x[0], y[2]) ^ act(y[0], x[2]) ^ cw(x[1], y[1]);
    return undigits(z, radix);
  };
  return from_ops(32, undigits({1, 0, 0}, radix), add, mul);
}

/// Z_m x|_1 Z_d (d | m) with the integer action and no products.
inline Tab zm_times_zd(int m, int d) {
  const std::vector<int> radix{m, d};
  auto add = [=](int a, int b) {
    auto x = digits(a, radix), y = digits(b, radix);
    return undigits({(x[0] + y[0]) % m, (x[1] + y[1]) % d}, radix);
  };
  auto mul = [=](int a, int b) {
    auto x = digits(a, radix), y = digits(b, radix);
    return undigits({(x[0] * y[0]) % m, (x[0] * y[1] + y[0] * x[1]) % d}, radix);
  };
  return from_ops(m * d, undigits({1, 0}, radix), add, mul);
}

inline Set units(const Tab& t) {
  Set s;
  for (int a = 0; a < t.n; ++a)
    for (int b = 0; b < t.n; ++b)
      if (t.times(a, b) == t.one) {
        s.insert(a);
        break;
      }
  return s;
}

inline Set zero_divisors(const Tab& t) {
  Set s;
  for (int a = 1; a < t.n; ++a)
    for (int b = 1; b < t.n; ++b)
      if (t.times(a, b) == 0) {
        s.insert(a);
        break;
      }
  return s;
}

inline Set idempotents(const Tab& t) {
  Set s;
  for (int a = 0; a < t.n; ++a)
    if (t.times(a, a) == a) s.insert(a);
  return s;
}

inline Set nilpotents(const Tab& t) {
  Set s;
  for (int a = 0; a < t.n; ++a) {
    int p = a;
    for (int k = 0; k <= t.n; ++k) {
      if (p == 0) {
        s.insert(a);
        break;
      }
      p = t.times(p, a);
    }
  }
  return s;
}

inline Set principal(const Tab& t, int a) {
  Set s;
  for (int r = 0; r < t.n; ++r) s.insert(t.times(r, a));
  return s;
}

inline Set ideal_sum(const Tab& t, const Set& a, const Set& b) {
  Set s;
  for (int x : a)
    for (int y : b) s.insert(t.plus(x, y));
  return s;
}

/// Every ideal: principal ideals closed under pairwise sums.
inline std::set<Set> ideals(const Tab& t) {
  std::set<Set> all;
  for (int a = 0; a < t.n; ++a) all.insert(principal(t, a));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Set> cur(all.begin(), all.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        if (all.insert(ideal_sum(t, cur[i], cur[j])).second) grew = true;
  }
  return all;
}

inline bool is_prime(const Tab& t, const Set& p) {
  if (p.count(t.one)) return false;
  for (int a = 0; a < t.n; ++a)
    for (int b = 0; b < t.n; ++b)
      if (p.count(t.times(a, b)) && !p.count(a) && !p.count(b)) return false;
  return true;
}

inline std::set<Set> maximal_ideals(const Tab& t) {
  const auto all = ideals(t);
  std::set<Set> out;
  for (const auto& m : all) {
    if (m.count(t.one)) continue;
    bool maximal = true;
    for (const auto& j : all)
      if (j != m && !j.count(t.one) && std::includes(j.begin(), j.end(), m.begin(), m.end())) maximal = false;
    if (maximal) out.insert(m);
  }
  return out;
}

/// Jacobson radical as the intersection of maximal ideals.
inline Set jacobson(const Tab& t) {
  Set out;
  for (int a = 0; a < t.n; ++a) out.insert(a);
  for (const auto& m : maximal_ideals(t)) {
    Set keep;
    std::set_intersection(out.begin(), out.end(), m.begin(), m.end(), std::inserter(keep, keep.begin()));
    out = keep;
  }
  return out;
}

/// {r : r<a> = <a>}.
inline Set u_of(const Tab& t, int a) {
  const Set pa = principal(t, a);
  Set s;
  for (int r = 0; r < t.n; ++r)
    if (principal(t, t.times(r, a)) == pa) s.insert(r);
  return s;
}

inline bool associates(const Tab& t, int a, int b) { return principal(t, a) == principal(t, b); }

/// a nonunit is irreducible when a = bc forces a ~ b or a ~ c.
inline bool irreducible(const Tab& t, int a) {
  const Set u = units(t);
  if (u.count(a)) return false;
  for (int b = 0; b < t.n; ++b)
    for (int c = 0; c < t.n; ++c)
      if (t.times(b, c) == a && !associates(t, a, b) && !associates(t, a, c)) return false;
  return true;
}

/// Every nonzero nonunit a product of irreducibles, by closure of products of atoms.
inline bool atomic(const Tab& t) {
  const Set u = units(t);
  Set atoms;
  for (int a = 1; a < t.n; ++a)
    if (!u.count(a) && irreducible(t, a)) atoms.insert(a);
  Set reach = atoms;
  bool grew = true;
  while (grew) {
    grew = false;
    const Set cur = reach;
    for (int x : cur)
      for (int y : atoms)
        if (reach.insert(t.times(x, y)).second) grew = true;
  }
  for (int a = 1; a < t.n; ++a)
    if (!u.count(a) && !reach.count(a)) return false;
  return true;
}

/// Localization by pair classes: (a, s) ~ (b, t) iff u(at - bs) = 0 for some u in S. Returns the class count.
inline int localization_size(const Tab& t, const Set& s) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < t.n; ++a)
    for (int x : s) pairs.emplace_back(a, x);
  std::vector<int> parent(pairs.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); };
  auto neg = [&](int x) {
    for (int y = 0; y < t.n; ++y)
      if (t.plus(x, y) == 0) return y;
    return 0;
  };
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const auto [a, x] = pairs[i];
      const auto [b, y] = pairs[j];
      const int diff = t.plus(t.times(a, y), neg(t.times(b, x)));
      for (int u : s)
        if (t.times(u, diff) == 0) {
          parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
          break;
        }
    }
  std::set<int> roots;
  for (std::size_t i = 0; i < pairs.size(); ++i) roots.insert(find(static_cast<int>(i)));
  return static_cast<int>(roots.size());
}

/// Submodules of a small module over Z_m-like scalars, by testing every subset (order <= 16).
inline std::set<Set> submodules_by_subsets(int order, const std::function<int(int, int)>& add,
                                           const std::vector<std::function<int(int)>>& scalars) {
  std::set<Set> out;
  for (std::uint32_t mask = 1; mask < (1u << order); ++mask) {
    if (!(mask & 1u)) continue;
    bool ok = true;
    for (int a = 0; a < order && ok; ++a) {
      if (!(mask >> a & 1u)) continue;
      for (const auto& f : scalars)
        if (!(mask >> f(a) & 1u)) ok = false;
      for (int b = 0; b < order && ok; ++b)
        if ((mask >> b & 1u) && !(mask >> add(a, b) & 1u)) ok = false;
    }
    if (!ok) continue;
    Set s;
    for (int a = 0; a < order; ++a)
      if (mask >> a & 1u) s.insert(a);
    out.insert(s);
  }
  return out;
}

/// Seeded generator for property tests.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }
};

}  // namespace oracle
