#include "orbitsym/structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "orbitsym/error.hpp"

namespace orbitsym {

StructureSummary structure_predicates(const FiniteGroup &g) {
  StructureSummary s;
  s.is_abelian = is_abelian(g);
  s.exponent = g.exponent();
  s.center = center(g);
  s.commutator_subgroup = commutator_subgroup(g);
  if (s.is_abelian) {
    auto primes = prime_divisors(g.order());
    s.is_elementary_abelian = primes.size() == 1 && g.exponent() == primes[0];
  }
  return s;
}

std::vector<int> prime_divisors(long n) {
  std::vector<int> out;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(static_cast<int>(p));
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

long p_part(long n, long p) {
  long r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

long multiplicative_order(long a, long m) {
  if (m < 1) fail(ErrorCode::BadParameter, "modulus must be positive");
  if (m == 1) return 1;
  a %= m;
  if (a < 0) a += m;
  if (std::gcd(a, m) != 1)
    fail(ErrorCode::BadParameter,
         std::to_string(a) + " is not a unit modulo " + std::to_string(m));
  long k = 1;
  long x = a;
  while (x != 1) {
    x = x * a % m;
    ++k;
  }
  return k;
}

std::vector<Subgroup> index_two_subgroups(const FiniteGroup &g) {
  std::vector<int> gens;
  for (int a = 0; a < g.order(); ++a) {
    gens.push_back(g.mul(a, a));
    for (int b = 0; b < g.order(); ++b) gens.push_back(g.commutator(a, b));
  }
  Subgroup m = generated_subgroup(g, gens);

  // Basis x_1..x_r of the elementary abelian quotient G/M.
  std::vector<int> basis;
  Subgroup span = m;
  for (int x = 0; x < g.order(); ++x) {
    if (span.contains(x)) continue;
    basis.push_back(x);
    std::vector<int> sg = span.elements();
    sg.push_back(x);
    span = generated_subgroup(g, sg);
  }
  const int r = static_cast<int>(basis.size());
  std::vector<int> coset_mask(g.order(), 0);
  for (int mask = 0; mask < (1 << r); ++mask) {
    int t = g.identity();
    for (int i = 0; i < r; ++i)
      if (mask >> i & 1) t = g.mul(t, basis[i]);
    for (int y : m.elements()) coset_mask[g.mul(t, y)] = mask;
  }
  std::vector<Subgroup> out;
  for (int f = 1; f < (1 << r); ++f) {
    std::vector<int> ker;
    for (int x = 0; x < g.order(); ++x)
      if (std::popcount(static_cast<unsigned>(coset_mask[x] & f)) % 2 == 0) ker.push_back(x);
    out.emplace_back(g.order(), std::move(ker));
  }
  return out;
}

std::optional<DicyclicWitness> is_generalized_dicyclic(const FiniteGroup &g) {
  for (const Subgroup &a : index_two_subgroups(g)) {
    if (!is_abelian(g, a)) continue;
    for (int x = 0; x < g.order(); ++x) {
      if (a.contains(x) || g.element_order(x) != 4) continue;
      bool inverts = true;
      for (int y : a.elements())
        if (g.conj(y, x) != g.inv(y)) {
          inverts = false;
          break;
        }
      if (inverts) return DicyclicWitness{a, x};
    }
  }
  return std::nullopt;
}

std::optional<Subgroup> pi_elements_subgroup(const FiniteGroup &g, const std::vector<int> &primes) {
  std::vector<int> elems;
  for (int x = 0; x < g.order(); ++x) {
    long o = g.element_order(x);
    for (int p : primes)
      while (o % p == 0) o /= p;
    if (o == 1) elems.push_back(x);
  }
  Subgroup s = generated_subgroup(g, elems);
  if (s.order() != static_cast<int>(elems.size())) return std::nullopt;
  return s;
}

Subgroup sylow_subgroup(const FiniteGroup &g, int p) {
  const long target = p_part(g.order(), p);
  Subgroup cur = Subgroup::trivial(g);
  while (cur.order() < target) {
    bool grown = false;
    for (int x = 0; x < g.order() && !grown; ++x) {
      if (cur.contains(x) || p_part(g.element_order(x), p) != g.element_order(x)) continue;
      bool normalizes = true;
      for (int y : cur.elements())
        if (!cur.contains(g.conj(y, x))) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      std::vector<int> gens = cur.elements();
      gens.push_back(x);
      Subgroup next = generated_subgroup(g, gens);
      if (p_part(next.order(), p) == next.order()) {
        cur = std::move(next);
        grown = true;
      }
    }
    if (!grown) fail(ErrorCode::ValidationFailure, "Sylow subgroup construction stalled");
  }
  return cur;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup &g) {
  constexpr std::size_t kCap = 4096;
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> all;
  auto add = [&](Subgroup s) {
    if (seen.insert(s.elements()).second) all.push_back(std::move(s));
  };
  add(Subgroup::trivial(g));
  for (int x = 0; x < g.order(); ++x) add(normal_closure(g, {x}));
  for (std::size_t i = 0; i < all.size() && all.size() < kCap; ++i)
    for (std::size_t j = 0; j < i && all.size() < kCap; ++j) add(subgroup_join(g, all[i], all[j]));
  std::sort(all.begin(), all.end(), [](const Subgroup &a, const Subgroup &b) {
    return a.order() != b.order() ? a.order() < b.order() : a.elements() < b.elements();
  });
  return all;
}

std::optional<Subgroup> direct_complement(const FiniteGroup &g, const Subgroup &u) {
  if (!is_normal(g, u)) return std::nullopt;
  for (const Subgroup &w : normal_subgroups(g))
    if (u.order() * w.order() == g.order() && subgroup_intersection(u, w).is_trivial()) return w;
  return std::nullopt;
}

StructureDecomposition decompose_structure(const FiniteGroup &g, const std::vector<int> &hall_primes) {
  StructureDecomposition d;
  for (int p : prime_divisors(g.order()))
    if (auto s = pi_elements_subgroup(g, {p})) d.normal_sylow.emplace(p, *s);
  if (!hall_primes.empty()) d.hall = pi_elements_subgroup(g, hall_primes);

  constexpr std::size_t kMaxSplittings = 64;
  auto normals = normal_subgroups(g);
  for (std::size_t i = 0; i < normals.size(); ++i) {
    const Subgroup &u = normals[i];
    if (u.is_trivial() || u.is_whole()) continue;
    for (std::size_t j = i + 1; j < normals.size(); ++j) {
      const Subgroup &w = normals[j];
      if (u.order() * w.order() != g.order() || !subgroup_intersection(u, w).is_trivial()) continue;
      if (d.splittings.size() == kMaxSplittings) {
        d.splittings_truncated = true;
        return d;
      }
      d.splittings.push_back({u, w});
    }
  }
  return d;
}

std::vector<int> generating_set(const FiniteGroup &g) {
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.element_order(a) > g.element_order(b); });
  std::vector<int> gens;
  Subgroup span = Subgroup::trivial(g);
  for (int x : order) {
    if (span.is_whole()) break;
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = generated_subgroup(g, gens);
  }
  return gens;
}

namespace {

std::vector<int> centralizer_sizes(const FiniteGroup &g) {
  std::vector<int> c(g.order(), 0);
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (g.mul(x, y) == g.mul(y, x)) ++c[x];
  return c;
}

std::multiset<std::pair<int, int>> invariant_profile(const FiniteGroup &g, const std::vector<int> &cs) {
  std::multiset<std::pair<int, int>> prof;
  for (int x = 0; x < g.order(); ++x) prof.insert({g.element_order(x), cs[x]});
  return prof;
}

class IsoSearch {
public:
  IsoSearch(const FiniteGroup &a, const FiniteGroup &b)
      : a_(a), b_(b), ca_(centralizer_sizes(a)), cb_(centralizer_sizes(b)), gens_(generating_set(a)) {}

  bool run() {
    if (invariant_profile(a_, ca_) != invariant_profile(b_, cb_)) return false;
    phi_.assign(a_.order(), -1);
    used_.assign(b_.order(), 0);
    phi_[a_.identity()] = b_.identity();
    used_[b_.identity()] = 1;
    domain_ = {a_.identity()};
    return extend(0);
  }

private:
  // Closes the partial map over <gens_[0..k]>; returns false on a conflict.
  bool close(std::size_t k, std::vector<int> &added) {
    for (std::size_t i = 0; i < domain_.size(); ++i) {
      int x = domain_[i];
      for (std::size_t j = 0; j <= k; ++j) {
        int s = gens_[j];
        int xs = a_.mul(x, s);
        int img = b_.mul(phi_[x], phi_[s]);
        if (phi_[xs] >= 0) {
          if (phi_[xs] != img) return false;
          continue;
        }
        if (used_[img]) return false;
        phi_[xs] = img;
        used_[img] = 1;
        domain_.push_back(xs);
        added.push_back(xs);
      }
    }
    return true;
  }

  bool extend(std::size_t k) {
    if (k == gens_.size()) return static_cast<int>(domain_.size()) == a_.order();
    int s = gens_[k];
    if (phi_[s] >= 0) return extend(k + 1);
    for (int y = 0; y < b_.order(); ++y) {
      if (used_[y] || b_.element_order(y) != a_.element_order(s) || cb_[y] != ca_[s]) continue;
      std::size_t mark = domain_.size();
      phi_[s] = y;
      used_[y] = 1;
      domain_.push_back(s);
      std::vector<int> added{s};
      bool ok = close(k, added);
      if (ok && extend(k + 1)) return true;
      for (int x : added) {
        used_[phi_[x]] = 0;
        phi_[x] = -1;
      }
      domain_.resize(mark);
    }
    return false;
  }

  const FiniteGroup &a_;
  const FiniteGroup &b_;
  std::vector<int> ca_, cb_;
  std::vector<int> gens_;
  std::vector<int> phi_;
  std::vector<char> used_;
  std::vector<int> domain_;
};

} // namespace

bool are_isomorphic(const FiniteGroup &a, const FiniteGroup &b) {
  if (a.order() != b.order() || a.exponent() != b.exponent()) return false;
  return IsoSearch(a, b).run();
}

} // namespace orbitsym
