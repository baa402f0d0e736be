#include "orbitsym/group.hpp"

#include <algorithm>
#include <numeric>

#include "orbitsym/error.hpp"

namespace orbitsym {

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>> &table, int identity,
                                    std::string label) {
  const int n = static_cast<int>(table.size());
  if (n < 1) fail(ErrorCode::BadParameter, "empty multiplication table");
  if (n > kMaxGroupOrder)
    fail(ErrorCode::SizeLimit, "group order " + std::to_string(n) + " exceeds " +
                                   std::to_string(kMaxGroupOrder));
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      fail(ErrorCode::BadParameter, "table row " + std::to_string(a) + " has wrong length");
    for (int v : table[a])
      if (v < 0 || v >= n) fail(ErrorCode::BadParameter, "table entry out of range");
  }
  if (identity < 0 || identity >= n) fail(ErrorCode::NoIdentity, "identity index out of range");

  FiniteGroup g;
  g.n_ = n;
  g.e_ = identity;
  g.label_ = std::move(label);
  g.table_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table_[a * n + b] = table[a][b];

  for (int a = 0; a < n; ++a)
    if (g.mul(identity, a) != a || g.mul(a, identity) != a)
      fail(ErrorCode::NoIdentity, "element " + std::to_string(identity) +
                                      " is not a two-sided identity (fails at " +
                                      std::to_string(a) + ")");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = g.mul(a, b);
      for (int c = 0; c < n; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
          fail(ErrorCode::NonAssociative, "(" + std::to_string(a) + "*" + std::to_string(b) +
                                              ")*" + std::to_string(c) + " != " +
                                              std::to_string(a) + "*(" + std::to_string(b) +
                                              "*" + std::to_string(c) + ")");
    }

  g.inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == identity && g.mul(b, a) == identity) {
        g.inverse_[a] = b;
        break;
      }
    if (g.inverse_[a] < 0) fail(ErrorCode::NoInverse, "element " + std::to_string(a) + " has no inverse");
  }

  g.orders_.assign(n, 1);
  long exp = 1;
  for (int a = 0; a < n; ++a) {
    int ord = 1;
    for (int x = a; x != identity; x = g.mul(x, a)) ++ord;
    g.orders_[a] = ord;
    exp = std::lcm(exp, static_cast<long>(ord));
  }
  g.exponent_ = static_cast<int>(exp);
  return g;
}

int FiniteGroup::power(int a, long k) const {
  int o = orders_[a];
  k %= o;
  if (k < 0) k += o;
  int r = e_;
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
  return t;
}

Subgroup::Subgroup(int parent_order, std::vector<int> members)
    : elements_(std::move(members)), mask_(parent_order, 0) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (int x : elements_) mask_[x] = 1;
}

Subgroup Subgroup::whole(const FiniteGroup &g) {
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g.order(), std::move(all));
}

Subgroup Subgroup::trivial(const FiniteGroup &g) { return Subgroup(g.order(), {g.identity()}); }

Subgroup generated_subgroup(const FiniteGroup &g, const std::vector<int> &gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> elems{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int s : gens) {
      int x = g.mul(elems[i], s);
      if (!in[x]) {
        in[x] = 1;
        elems.push_back(x);
      }
    }
  return Subgroup(g.order(), std::move(elems));
}

Subgroup subgroup_join(const FiniteGroup &g, const Subgroup &a, const Subgroup &b) {
  std::vector<int> gens = a.elements();
  gens.insert(gens.end(), b.elements().begin(), b.elements().end());
  return generated_subgroup(g, gens);
}

Subgroup subgroup_intersection(const Subgroup &a, const Subgroup &b) {
  std::vector<int> out;
  for (int x : a.elements())
    if (b.contains(x)) out.push_back(x);
  return Subgroup(a.parent_order(), std::move(out));
}

bool is_normal(const FiniteGroup &g, const Subgroup &h) {
  for (int x : h.elements())
    for (int y = 0; y < g.order(); ++y)
      if (!h.contains(g.conj(x, y))) return false;
  return true;
}

Subgroup normal_closure(const FiniteGroup &g, const std::vector<int> &elems) {
  std::vector<int> gens;
  for (int x : elems)
    for (int y = 0; y < g.order(); ++y) gens.push_back(g.conj(x, y));
  return generated_subgroup(g, gens);
}

Subgroup center(const FiniteGroup &g) {
  std::vector<int> z;
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.push_back(x);
  }
  return Subgroup(g.order(), std::move(z));
}

Subgroup centralizer(const FiniteGroup &g, const Subgroup &h) {
  std::vector<int> c;
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int y : h.elements())
      if (g.mul(x, y) != g.mul(y, x)) {
        ok = false;
        break;
      }
    if (ok) c.push_back(x);
  }
  return Subgroup(g.order(), std::move(c));
}

Subgroup commutator_subgroup(const FiniteGroup &g) {
  std::vector<int> comms;
  std::vector<char> seen(g.order(), 0);
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      int c = g.commutator(a, b);
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return generated_subgroup(g, comms);
}

std::vector<int> left_coset_ids(const FiniteGroup &g, const Subgroup &h) {
  std::vector<int> id(g.order(), -1);
  int next = 0;
  for (int x = 0; x < g.order(); ++x) {
    if (id[x] >= 0) continue;
    for (int y : h.elements()) id[g.mul(x, y)] = next;
    ++next;
  }
  return id;
}

bool is_abelian(const FiniteGroup &g) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool is_abelian(const FiniteGroup &g, const Subgroup &h) {
  for (int a : h.elements())
    for (int b : h.elements())
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

int subgroup_exponent(const FiniteGroup &g, const Subgroup &h) {
  long e = 1;
  for (int x : h.elements()) e = std::lcm(e, static_cast<long>(g.element_order(x)));
  return static_cast<int>(e);
}

FiniteGroup subgroup_as_group(const FiniteGroup &g, const Subgroup &h) {
  const auto &el = h.elements();
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < h.order(); ++i) pos[el[i]] = i;
  std::vector<std::vector<int>> t(h.order(), std::vector<int>(h.order()));
  for (int i = 0; i < h.order(); ++i)
    for (int j = 0; j < h.order(); ++j) t[i][j] = pos[g.mul(el[i], el[j])];
  return FiniteGroup::from_table(t, pos[g.identity()]);
}

} // namespace orbitsym
