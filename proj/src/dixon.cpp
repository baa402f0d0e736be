// Character tables by Dixon's method: common eigenvectors of the class
// multiplication matrices are found modulo a prime p = 1 (mod exponent), and
// character values are lifted to exact cyclotomic integers from their
// eigenvalue multiplicities.
#include <algorithm>
#include <cstdint>
#include <numeric>
#include <tuple>

#include "orbitsym/builtin.hpp"
#include "orbitsym/character.hpp"
#include "orbitsym/error.hpp"

namespace orbitsym {

namespace {

using u64 = std::uint64_t;

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }  // p < 2^32
  u64 pow(u64 a, u64 k) const {
    u64 r = 1;
    a %= p;
    while (k) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
  u64 of(long x) const {
    long m = x % static_cast<long>(p);
    return static_cast<u64>(m < 0 ? m + static_cast<long>(p) : m);
  }
};

using Mat = std::vector<std::vector<u64>>;

/// Reduced column-echelon basis: returns basis vectors (as columns list) with
/// pivot rows where each vector has a 1 and the others have 0.
struct Space {
  std::vector<std::vector<u64>> vecs;  // each of length r
  std::vector<int> pivots;
};

Space echelon(const Fp &f, std::vector<std::vector<u64>> vecs) {
  Space s;
  const int r = vecs.empty() ? 0 : static_cast<int>(vecs[0].size());
  std::size_t rank = 0;
  for (int row = 0; row < r && rank < vecs.size(); ++row) {
    std::size_t piv = rank;
    while (piv < vecs.size() && vecs[piv][row] == 0) ++piv;
    if (piv == vecs.size()) continue;
    std::swap(vecs[piv], vecs[rank]);
    u64 inv = f.inv(vecs[rank][row]);
    for (auto &x : vecs[rank]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      if (i == rank || vecs[i][row] == 0) continue;
      u64 m = vecs[i][row];
      for (int k = 0; k < r; ++k) vecs[i][k] = f.sub(vecs[i][k], f.mul(m, vecs[rank][k]));
    }
    s.pivots.push_back(row);
    ++rank;
  }
  vecs.resize(rank);
  s.vecs = std::move(vecs);
  return s;
}

/// Null space of a square matrix over F_p.
std::vector<std::vector<u64>> nullspace(const Fp &f, Mat a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int piv = row;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[row]);
    u64 inv = f.inv(a[row][col]);
    for (auto &x : a[row]) x = f.mul(x, inv);
    for (int i = 0; i < n; ++i) {
      if (i == row || a[i][col] == 0) continue;
      u64 m = a[i][col];
      for (int k = 0; k < n; ++k) a[i][k] = f.sub(a[i][k], f.mul(m, a[row][k]));
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<char> is_pivot(n, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<u64>> out;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = f.sub(0, a[i][free]);
    out.push_back(std::move(v));
  }
  return out;
}

/// Characteristic polynomial (monic, low degree first) via Hessenberg reduction.
std::vector<u64> charpoly(const Fp &f, Mat h) {
  const int n = static_cast<int>(h.size());
  for (int m = 1; m < n - 1; ++m) {
    int i = m + 1;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (h[m][m - 1] == 0 && i < n) {
      std::swap(h[i], h[m]);
      for (auto &row : h) std::swap(row[i], row[m]);
    }
    if (h[m][m - 1] == 0) continue;
    u64 inv = f.inv(h[m][m - 1]);
    for (i = m + 1; i < n; ++i) {
      u64 u = f.mul(h[i][m - 1], inv);
      if (u == 0) continue;
      for (int j = 0; j < n; ++j) h[i][j] = f.sub(h[i][j], f.mul(u, h[m][j]));
      for (int j = 0; j < n; ++j) h[j][m] = f.add(h[j][m], f.mul(u, h[j][i]));
    }
  }
  std::vector<std::vector<u64>> c(n + 1);
  c[0] = {1};
  for (int m = 1; m <= n; ++m) {
    // c[m] = (x - h[m-1][m-1]) c[m-1] - sum_{i<m-1} h[i][m-1] * prod_{j=i+1}^{m-1} h[j][j-1] * c[i]
    std::vector<u64> next(m + 1, 0);
    for (int k = 0; k < m; ++k) {
      next[k + 1] = f.add(next[k + 1], c[m - 1][k]);
      next[k] = f.sub(next[k], f.mul(h[m - 1][m - 1], c[m - 1][k]));
    }
    u64 t = 1;
    for (int i = m - 2; i >= 0; --i) {
      t = f.mul(t, h[i + 1][i]);
      if (t == 0) break;
      u64 coef = f.mul(t, h[i][m - 1]);
      for (std::size_t k = 0; k < c[i].size(); ++k) next[k] = f.sub(next[k], f.mul(coef, c[i][k]));
    }
    c[m] = std::move(next);
  }
  return c[n];
}

std::vector<u64> roots(const Fp &f, const std::vector<u64> &poly) {
  std::vector<u64> out;
  for (u64 x = 0; x < f.p; ++x) {
    u64 v = 0;
    for (std::size_t k = poly.size(); k-- > 0;) v = f.add(f.mul(v, x), poly[k]);
    if (v == 0) out.push_back(x);
  }
  return out;
}

u64 primitive_root(const Fp &f) {
  auto primes = std::vector<u64>{};
  u64 m = f.p - 1;
  for (u64 q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      primes.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) primes.push_back(m);
  for (u64 g = 2; g < f.p; ++g) {
    bool ok = true;
    for (u64 q : primes)
      if (f.pow(g, (f.p - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  fail(ErrorCode::ValidationFailure, "no primitive root");
}

std::vector<Character> dixon_attempt(const ClassDataPtr &cls, u64 p) {
  const ClassData &cd = *cls;
  const FiniteGroup &g = *cd.group;
  const int r = cd.count();
  const int e = g.exponent();
  const Fp f{p};

  // a[i][j][k] = #{x in C_i : x^-1 z_k in C_j}
  std::vector<int> a(static_cast<std::size_t>(r) * r * r, 0);
  for (int k = 0; k < r; ++k) {
    int z = cd.representatives[k];
    for (int x = 0; x < g.order(); ++x) {
      int i = cd.class_of[x];
      int j = cd.class_of[g.mul(g.inv(x), z)];
      ++a[(static_cast<std::size_t>(i) * r + j) * r + k];
    }
  }
  auto class_matrix_apply = [&](int i, const std::vector<u64> &v) {
    std::vector<u64> out(r, 0);
    for (int j = 0; j < r; ++j) {
      u64 s = 0;
      for (int k = 0; k < r; ++k) {
        int c = a[(static_cast<std::size_t>(i) * r + j) * r + k];
        if (c && v[k]) s = f.add(s, f.mul(static_cast<u64>(c), v[k]));
      }
      out[j] = s;
    }
    return out;
  };

  std::vector<Space> done;
  std::vector<Space> pending;
  {
    std::vector<std::vector<u64>> id(r, std::vector<u64>(r, 0));
    for (int i = 0; i < r; ++i) id[i][i] = 1;
    pending.push_back(echelon(f, id));
  }
  for (int i = 0; i < r && !pending.empty(); ++i) {
    if (i == cd.identity_class()) continue;
    std::vector<Space> next;
    for (Space &s : pending) {
      const int k = static_cast<int>(s.vecs.size());
      Mat x(k, std::vector<u64>(k));
      std::vector<std::vector<u64>> images;
      for (int b = 0; b < k; ++b) images.push_back(class_matrix_apply(i, s.vecs[b]));
      for (int row = 0; row < k; ++row)
        for (int b = 0; b < k; ++b) x[row][b] = images[b][s.pivots[row]];
      auto ev = roots(f, charpoly(f, x));
      if (ev.size() == 1) {
        next.push_back(std::move(s));
        continue;
      }
      int total = 0;
      for (u64 lambda : ev) {
        Mat y = x;
        for (int d = 0; d < k; ++d) y[d][d] = f.sub(y[d][d], lambda);
        auto ker = nullspace(f, y);
        total += static_cast<int>(ker.size());
        std::vector<std::vector<u64>> vecs;
        for (const auto &w : ker) {
          std::vector<u64> v(r, 0);
          for (int b = 0; b < k; ++b)
            if (w[b])
              for (int t = 0; t < r; ++t) v[t] = f.add(v[t], f.mul(w[b], s.vecs[b][t]));
          vecs.push_back(std::move(v));
        }
        next.push_back(echelon(f, std::move(vecs)));
      }
      if (total != k) fail(ErrorCode::ValidationFailure, "class matrix not diagonalizable mod p");
    }
    pending.clear();
    for (Space &s : next) (s.vecs.size() == 1 ? done : pending).push_back(std::move(s));
  }
  for (Space &s : pending)
    if (s.vecs.size() == 1) done.push_back(std::move(s));
    else fail(ErrorCode::ValidationFailure, "class sums do not separate characters mod p");

  const u64 z = f.pow(primitive_root(f), (p - 1) / e);
  const int id = cd.identity_class();
  std::vector<Character> chars;
  for (const Space &s : done) {
    const auto &v = s.vecs[0];
    if (v[id] == 0) fail(ErrorCode::ValidationFailure, "eigenvector vanishes at the identity");
    u64 norm = f.inv(v[id]);
    std::vector<u64> w(r);
    for (int j = 0; j < r; ++j) w[j] = f.mul(v[j], norm);
    u64 sum = 0;
    for (int j = 0; j < r; ++j)
      sum = f.add(sum, f.mul(f.mul(w[j], w[cd.inverse_class[j]]), f.inv(static_cast<u64>(cd.sizes[j]))));
    if (sum == 0) fail(ErrorCode::ValidationFailure, "degenerate degree equation");
    u64 dsq = f.mul(static_cast<u64>(g.order()) % p, f.inv(sum));
    long degree = 0;
    for (long d = 1; d * d <= g.order(); ++d)
      if (static_cast<u64>(d * d) % p == dsq) degree = d;
    if (degree == 0) fail(ErrorCode::ValidationFailure, "no admissible degree");
    std::vector<u64> val(r);
    for (int j = 0; j < r; ++j)
      val[j] = f.mul(f.mul(static_cast<u64>(degree), w[j]), f.inv(static_cast<u64>(cd.sizes[j])));

    std::vector<Cyclotomic> values(r);
    for (int j = 0; j < r; ++j) {
      const int o = cd.element_order[j];
      const u64 zo = f.pow(z, e / o);
      const u64 inv_o = f.inv(static_cast<u64>(o));
      std::vector<u64> powvals(o);
      for (int l = 0; l < o; ++l) powvals[l] = val[cd.power_class(j, l)];
      std::vector<std::pair<long, Rational>> terms;
      for (int k = 0; k < o; ++k) {
        u64 m = 0;
        u64 step = f.inv(f.pow(zo, k));
        u64 t = 1;
        for (int l = 0; l < o; ++l) {
          m = f.add(m, f.mul(powvals[l], t));
          t = f.mul(t, step);
        }
        m = f.mul(m, inv_o);
        if (m > static_cast<u64>(degree))
          fail(ErrorCode::ValidationFailure, "eigenvalue multiplicity out of range");
        if (m) terms.emplace_back(static_cast<long>(k) * (e / o), Rational(static_cast<long>(m)));
      }
      values[j] = Cyclotomic::from_terms(e, terms);
    }
    chars.emplace_back(cls, std::move(values));
  }
  // Trivial character first, then by degree, rational before irrational, then by key.
  struct SortKey {
    bool nontrivial;
    Rational degree;
    bool irrational;
    std::string key;
    bool operator<(const SortKey &o) const {
      return std::tie(nontrivial, degree, irrational, key) <
             std::tie(o.nontrivial, o.degree, o.irrational, o.key);
    }
  };
  const Character trivial = Character::trivial(cls);
  std::vector<std::pair<SortKey, int>> order;
  for (int i = 0; i < static_cast<int>(chars.size()); ++i)
    order.push_back({{!(chars[i] == trivial), *chars[i].degree().rational(), !chars[i].is_rational(),
                      chars[i].key()},
                     i});
  std::sort(order.begin(), order.end());
  std::vector<Character> sorted;
  for (const auto &o : order) sorted.push_back(std::move(chars[o.second]));
  return sorted;
}

} // namespace

TablePtr character_table(GroupPtr g) {
  if (g->order() > kMaxGroupOrder)
    fail(ErrorCode::SizeLimit, "character tables are limited to order " + std::to_string(kMaxGroupOrder));
  ClassDataPtr cls = conjugacy_classes(g);
  const long e = g->exponent();
  long p = 4L * g->order() + 1000;
  p += (e - (p - 1) % e) % e;  // p = 1 mod e
  std::string last_error;
  for (int attempt = 0; attempt < 8; ++attempt) {
    while (!is_prime(p)) p += e;
    try {
      return finish_table(g, cls, dixon_attempt(cls, static_cast<u64>(p)));
    } catch (const Error &err) {
      if (err.code() != ErrorCode::ValidationFailure) throw;
      last_error = err.what();
    }
    p += e;
  }
  fail(ErrorCode::ValidationFailure, "character table computation failed: " + last_error);
}

} // namespace orbitsym
