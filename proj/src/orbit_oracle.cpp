#include "orbitsym/orbit_oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <string>
#include <unordered_map>

#include "orbitsym/error.hpp"
#include "orbitsym/generic_symmetry.hpp"
#include "orbitsym/structure.hpp"

namespace orbitsym {

namespace {

// Arithmetic modulo the Mersenne prime 2^61 - 1, used only to discard
// candidates; every accepted symmetry is verified exactly.
using u64 = std::uint64_t;
constexpr u64 kPrime = (u64{1} << 61) - 1;

u64 mod_mul(u64 a, u64 b) {
  __uint128_t p = static_cast<__uint128_t>(a) * b;
  u64 lo = static_cast<u64>(p & kPrime), hi = static_cast<u64>(p >> 61);
  u64 s = lo + hi;
  while (s >= kPrime) s -= kPrime;
  return s;
}
u64 mod_add(u64 a, u64 b) {
  u64 s = a + b;
  return s >= kPrime ? s - kPrime : s;
}
u64 mod_sub(u64 a, u64 b) { return a >= b ? a - b : a + kPrime - b; }
u64 mod_pow(u64 a, u64 k) {
  u64 r = 1;
  while (k) {
    if (k & 1) r = mod_mul(r, a);
    a = mod_mul(a, a);
    k >>= 1;
  }
  return r;
}
u64 mod_inv(u64 a) { return mod_pow(a, kPrime - 2); }

u64 mod_of(const Rational &r) {
  static const mpz_class p(std::to_string(kPrime));
  mpz_class num = r.numerator() % p, den = r.denominator() % p;
  if (num < 0) num += p;
  if (den == 0) fail(ErrorCode::ValidationFailure, "denominator vanishes modulo the filter prime");
  return mod_mul(static_cast<u64>(mpz_get_ui(num.get_mpz_t())), mod_inv(mpz_get_ui(den.get_mpz_t())));
}

using ModMatrix = std::vector<std::vector<u64>>;

std::optional<ModMatrix> mod_inverse(ModMatrix a) {
  const int n = static_cast<int>(a.size());
  ModMatrix inv(n, std::vector<u64>(n, 0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    u64 s = mod_inv(a[c][c]);
    for (int k = 0; k < n; ++k) {
      a[c][k] = mod_mul(a[c][k], s);
      inv[c][k] = mod_mul(inv[c][k], s);
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      u64 f = a[r][c];
      for (int k = 0; k < n; ++k) {
        a[r][k] = mod_sub(a[r][k], mod_mul(f, a[c][k]));
        inv[r][k] = mod_sub(inv[r][k], mod_mul(f, inv[c][k]));
      }
    }
  }
  return inv;
}

u64 fingerprint(const std::vector<u64> &v) {
  u64 h = 0x9e3779b97f4a7c15ULL;
  for (u64 x : v) h = (h ^ x) * 0x100000001b3ULL + (h >> 29);
  return h;
}

Character character_of(const ClassDataPtr &classes, const std::vector<RationalMatrix> &matrices) {
  std::vector<Cyclotomic> values;
  for (int rep : classes->representatives) values.emplace_back(matrices[rep].trace());
  return Character(classes, std::move(values));
}

void set_basis(OrbitData &o, int dim) {
  if (o.points.empty() || dim == 0) return;
  const std::vector<int> pivots = independent_columns(RationalMatrix::from_columns(o.points));
  o.spans = static_cast<int>(pivots.size()) == dim;
  o.basis_points = pivots;
  o.basis_elements.clear();
  if (!o.representative.empty())
    for (int p : pivots) o.basis_elements.push_back(o.representative[p]);
}

/// Images of the basis points determine a linear map; candidates are pruned
/// by the Gram values x^T Q^-1 y (Q = sum of p p^T over the orbit), which
/// every symmetry preserves.
class LinearProblem : public SearchProblem {
public:
  explicit LinearProblem(const OrbitData &o) : o_(o), m_(static_cast<int>(o.points.size())) {
    d_ = static_cast<int>(o.base_point.size());
    base_ = o.basis_points;
    res_.resize(m_);
    for (int i = 0; i < m_; ++i)
      for (const Rational &x : o.points[i]) res_[i].push_back(mod_of(x));
    ModMatrix q(d_, std::vector<u64>(d_, 0));
    for (int i = 0; i < m_; ++i)
      for (int a = 0; a < d_; ++a) {
        if (res_[i][a] == 0) continue;
        for (int b = 0; b < d_; ++b) q[a][b] = mod_add(q[a][b], mod_mul(res_[i][a], res_[i][b]));
      }
    auto qinv = mod_inverse(q);
    if (!qinv) fail(ErrorCode::ValidationFailure, "orbit Gram matrix singular modulo the filter prime");
    u_.assign(m_, std::vector<u64>(d_, 0));
    for (int i = 0; i < m_; ++i)
      for (int a = 0; a < d_; ++a) {
        u64 s = 0;
        for (int b = 0; b < d_; ++b) s = mod_add(s, mod_mul((*qinv)[a][b], res_[i][b]));
        u_[i][a] = s;
      }
    norm_.resize(m_);
    for (int i = 0; i < m_; ++i) norm_[i] = gram(i, i);
    for (int i = 0; i < m_; ++i) by_print_.emplace(fingerprint(res_[i]), i);

    ModMatrix b(d_, std::vector<u64>(d_));
    std::vector<RationalVector> cols;
    for (int k = 0; k < d_; ++k) {
      cols.push_back(o.points[base_[k]]);
      for (int a = 0; a < d_; ++a) b[a][k] = res_[base_[k]][a];
    }
    auto binv = mod_inverse(b);
    auto binv_exact = mat_inverse(RationalMatrix::from_columns(cols));
    if (!binv || !binv_exact) fail(ErrorCode::ValidationFailure, "orbit basis is singular");
    binv_ = std::move(*binv);
    binv_exact_ = std::move(*binv_exact);
    image_.assign(m_, -1);
    used_.assign(m_, 0);
  }

  int degree() const override { return m_; }
  const std::vector<int> &base() const override { return base_; }

  bool push(int point, int image) override {
    stack_.emplace_back(point, image);
    if (used_[image] || !consistent(point, image)) {
      ok_.push_back(false);
      return false;
    }
    ok_.push_back(true);
    image_[point] = image;
    used_[image] = 1;
    return true;
  }

  void pop() override {
    auto [point, image] = stack_.back();
    stack_.pop_back();
    if (ok_.back()) {
      image_[point] = -1;
      used_[image] = 0;
    }
    ok_.pop_back();
  }

  std::vector<int> candidates(int point) const override {
    std::vector<int> out;
    for (int y = 0; y < m_; ++y)
      if (!used_[y] && consistent(point, y)) out.push_back(y);
    return out;
  }

  int next_point() const override {
    for (int b : base_)
      if (image_[b] < 0) return b;
    return -1;
  }

  std::optional<Perm> complete() const override {
    // A = T B^-1 modulo the prime; every point must land on a point.
    ModMatrix a(d_, std::vector<u64>(d_, 0));
    for (int r = 0; r < d_; ++r)
      for (int c = 0; c < d_; ++c) {
        u64 s = 0;
        for (int k = 0; k < d_; ++k) s = mod_add(s, mod_mul(res_[image_[base_[k]]][r], binv_[k][c]));
        a[r][c] = s;
      }
    Perm perm(m_, -1);
    std::vector<char> hit(m_, 0);
    std::vector<u64> img(d_);
    for (int j = 0; j < m_; ++j) {
      for (int r = 0; r < d_; ++r) {
        u64 s = 0;
        for (int c = 0; c < d_; ++c) s = mod_add(s, mod_mul(a[r][c], res_[j][c]));
        img[r] = s;
      }
      int found = -1;
      auto range = by_print_.equal_range(fingerprint(img));
      for (auto it = range.first; it != range.second; ++it)
        if (res_[it->second] == img) found = it->second;
      if (found < 0 || hit[found]) return std::nullopt;
      hit[found] = 1;
      perm[j] = found;
    }
    // Exact confirmation.
    std::vector<RationalVector> cols;
    for (int k = 0; k < d_; ++k) cols.push_back(o_.points[image_[base_[k]]]);
    RationalMatrix exact = RationalMatrix::from_columns(cols) * binv_exact_;
    for (int j = 0; j < m_; ++j)
      if (exact * o_.points[j] != o_.points[perm[j]]) return std::nullopt;
    return perm;
  }

private:
  u64 gram(int i, int j) const {
    u64 s = 0;
    for (int a = 0; a < d_; ++a) s = mod_add(s, mod_mul(u_[i][a], res_[j][a]));
    return s;
  }

  bool consistent(int point, int image) const {
    if (norm_[point] != norm_[image]) return false;
    for (int b : base_) {
      int y = image_[b];
      if (y < 0 || b == point) continue;
      if (gram(point, b) != gram(image, y)) return false;
    }
    return true;
  }

  const OrbitData &o_;
  int m_;
  int d_ = 0;
  std::vector<int> base_;
  std::vector<std::vector<u64>> res_;
  std::vector<std::vector<u64>> u_;
  std::vector<u64> norm_;
  std::unordered_multimap<u64, int> by_print_;
  ModMatrix binv_;
  RationalMatrix binv_exact_;
  std::vector<int> image_;
  std::vector<char> used_;
  std::vector<std::pair<int, int>> stack_;
  std::vector<bool> ok_;
};

RationalVector random_point(std::mt19937_64 &rng, int dim, long bound) {
  RationalVector v;
  const u64 width = static_cast<u64>(2 * bound + 1);
  for (int i = 0; i < dim; ++i) v.emplace_back(static_cast<long>(rng() % width) - bound);
  return v;
}

} // namespace

Subgroup RationalRepresentation::kernel() const {
  std::vector<int> k;
  for (int x = 0; x < group().order(); ++x)
    if (matrices[x].is_identity()) k.push_back(x);
  return Subgroup(group().order(), std::move(k));
}

RationalRepresentation rep_from_generators(ClassDataPtr classes,
                                           const std::vector<std::pair<int, RationalMatrix>> &gens) {
  const FiniteGroup &g = *classes->group;
  const int n = g.order();
  if (gens.empty()) fail(ErrorCode::NotGenerating, "no generators given");
  const int d = gens.front().second.rows();
  for (const auto &[x, m] : gens) {
    if (x < 0 || x >= n) fail(ErrorCode::BadParameter, "generator element " + std::to_string(x) + " out of range");
    if (m.rows() != d || m.cols() != d)
      fail(ErrorCode::DimensionMismatch, "generator matrices must all be " + std::to_string(d) + "x" +
                                             std::to_string(d));
    if (mat_rank(m) != d) fail(ErrorCode::Singular, "matrix for element " + std::to_string(x) + " is singular");
  }
  std::vector<std::optional<RationalMatrix>> mats(n);
  mats[g.identity()] = RationalMatrix::identity(d);
  std::deque<int> queue{g.identity()};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (const auto &[s, m] : gens) {
      int y = g.mul(x, s);
      if (!mats[y]) {
        mats[y] = *mats[x] * m;
        queue.push_back(y);
      }
    }
  }
  RationalRepresentation rep;
  rep.classes = classes;
  rep.dim = d;
  for (int x = 0; x < n; ++x) {
    if (!mats[x]) fail(ErrorCode::NotGenerating, "element " + std::to_string(x) + " is not generated");
    rep.matrices.push_back(std::move(*mats[x]));
  }
  for (const auto &[s, m] : gens) {
    rep.generators.push_back(s);
    for (int x = 0; x < n; ++x)
      if (rep.matrices[x] * m != rep.matrices[g.mul(x, s)])
        fail(ErrorCode::RelationViolated, "D(" + std::to_string(x) + ") D(" + std::to_string(s) + ") != D(" +
                                              std::to_string(g.mul(x, s)) + ")");
  }
  rep.character = character_of(classes, rep.matrices);
  return rep;
}

RationalRepresentation regular_representation(ClassDataPtr classes) {
  const FiniteGroup &g = *classes->group;
  const int n = g.order();
  RationalRepresentation rep;
  rep.classes = classes;
  rep.dim = n;
  for (int x = 0; x < n; ++x) {
    RationalMatrix m(n, n);
    for (int h = 0; h < n; ++h) m(g.mul(x, h), h) = Rational(1);
    rep.matrices.push_back(std::move(m));
  }
  rep.generators = generating_set(g);
  rep.character = Character::regular(classes);
  return rep;
}

RationalRepresentation ideal_component_rep(const CharacterTable &t, const Character &gamma) {
  if (gamma.classes() != t.classes) fail(ErrorCode::GroupMismatch, "character does not belong to this table");
  auto not_ideal = [] {
    fail(ErrorCode::NotRationalIdealCharacter, "not a sum of distinct rational ideal characters");
  };
  if (gamma.is_zero() || !gamma.is_rational()) not_ideal();
  auto m = t.multiplicities(gamma);
  for (const auto &orbit : t.galois_orbits) {
    const bool present = !m[orbit[0]].is_zero();
    for (int i : orbit) {
      const Rational deg = *t.irreducibles[i].degree().rational();
      if (m[i] != (present ? deg : Rational(0))) not_ideal();
    }
  }
  const FiniteGroup &g = *t.group;
  const int n = g.order();
  // e = (1/|G|) sum gamma(g^-1) g; the ideal is spanned by the vectors h e.
  RationalVector e(n);
  for (int x = 0; x < n; ++x) e[x] = *gamma.at(g.inv(x)).rational() / Rational(n);
  auto translate = [&](int h) {
    RationalVector v(n);
    for (int x = 0; x < n; ++x) v[g.mul(h, x)] = e[x];
    return v;
  };
  std::vector<RationalVector> all;
  for (int h = 0; h < n; ++h) all.push_back(translate(h));
  RationalMatrix all_m = RationalMatrix::from_columns(all);
  std::vector<int> basis = independent_columns(all_m);
  const int dim = static_cast<int>(basis.size());
  if (Rational(dim) != *gamma.degree().rational())
    fail(ErrorCode::ValidationFailure, "ideal has the wrong dimension");
  std::vector<RationalVector> bcols;
  for (int h : basis) bcols.push_back(all[h]);
  auto coords = mat_solve(RationalMatrix::from_columns(bcols), all_m);
  if (!coords) fail(ErrorCode::ValidationFailure, "ideal basis does not span its translates");
  RationalRepresentation rep;
  rep.classes = t.classes;
  rep.dim = dim;
  for (int x = 0; x < n; ++x) {
    RationalMatrix mx(dim, dim);
    for (int i = 0; i < dim; ++i) {
      const int col = g.mul(x, basis[i]);
      for (int r = 0; r < dim; ++r) mx(r, i) = (*coords)(r, col);
    }
    rep.matrices.push_back(std::move(mx));
  }
  rep.generators = generating_set(g);
  rep.character = character_of(t.classes, rep.matrices);
  if (!(rep.character == gamma)) fail(ErrorCode::ValidationFailure, "ideal representation has the wrong character");
  return rep;
}

RationalRepresentation direct_sum(const RationalRepresentation &a, const RationalRepresentation &b) {
  if (a.classes != b.classes) fail(ErrorCode::GroupMismatch, "representations of different groups");
  RationalRepresentation r;
  r.classes = a.classes;
  r.dim = a.dim + b.dim;
  for (std::size_t x = 0; x < a.matrices.size(); ++x)
    r.matrices.push_back(block_diagonal(a.matrices[x], b.matrices[x]));
  r.generators = a.generators;
  r.character = a.character + b.character;
  return r;
}

OrbitData orbit(const RationalRepresentation &rep, const RationalVector &v) {
  if (static_cast<int>(v.size()) != rep.dim)
    fail(ErrorCode::DimensionMismatch, "point has dimension " + std::to_string(v.size()) + ", representation " +
                                           std::to_string(rep.dim));
  const FiniteGroup &g = rep.group();
  const int n = g.order();
  OrbitData o;
  o.base_point = v;
  std::map<RationalVector, int> index;
  o.point_of.resize(n);
  for (int x = 0; x < n; ++x) {
    RationalVector p = rep.matrices[x] * v;
    auto [it, inserted] = index.emplace(p, static_cast<int>(o.points.size()));
    if (inserted) {
      o.points.push_back(std::move(p));
      o.representative.push_back(x);
    }
    o.point_of[x] = it->second;
  }
  std::vector<int> stab;
  for (int x = 0; x < n; ++x)
    if (o.point_of[x] == o.point_of[g.identity()]) stab.push_back(x);
  o.stabilizer = Subgroup(n, std::move(stab));
  for (int s : rep.generators) {
    Perm p(o.points.size());
    for (std::size_t j = 0; j < o.points.size(); ++j) p[j] = o.point_of[g.mul(s, o.representative[j])];
    o.generator_perms.push_back(std::move(p));
  }
  o.acting_order = n / rep.kernel().order();
  set_basis(o, rep.dim);
  return o;
}

OrbitData matrix_group_orbit(const std::vector<RationalMatrix> &gens, const mpz_class &group_order,
                             const RationalVector &v, std::size_t max_points) {
  OrbitData o;
  o.base_point = v;
  o.acting_order = group_order;
  std::map<RationalVector, int> index{{v, 0}};
  o.points.push_back(v);
  std::vector<std::vector<int>> image(gens.size());
  for (std::size_t i = 0; i < o.points.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      RationalVector p = gens[s] * o.points[i];
      auto [it, inserted] = index.emplace(p, static_cast<int>(o.points.size()));
      if (inserted) {
        if (o.points.size() >= max_points)
          fail(ErrorCode::SizeLimit, "orbit exceeds " + std::to_string(max_points) + " points");
        o.points.push_back(std::move(p));
      }
      image[s].push_back(it->second);
    }
  }
  for (auto &p : image) o.generator_perms.push_back(std::move(p));
  set_basis(o, static_cast<int>(v.size()));
  return o;
}

LinearSymmetryGroup linear_symmetry_group(const OrbitData &orbit, const SearchOptions &options) {
  if (!orbit.spans) fail(ErrorCode::NotSpanning, "orbit does not span the representation space");
  LinearProblem problem(orbit);
  LinearSymmetryGroup out;
  out.permutations = search_group(problem, orbit.generator_perms, options, &out.stats);
  out.order = out.permutations.order();
  for (const Perm &p : out.permutations.generators())
    out.matrices.push_back(matrix_of_point_permutation(orbit, p));
  return out;
}

RationalMatrix matrix_of_point_permutation(const OrbitData &orbit, const Perm &perm) {
  std::vector<RationalVector> from, to;
  for (int b : orbit.basis_points) {
    from.push_back(orbit.points[b]);
    to.push_back(orbit.points[perm[b]]);
  }
  auto inv = mat_inverse(RationalMatrix::from_columns(from));
  if (!inv) fail(ErrorCode::NotSpanning, "orbit basis is singular");
  return RationalMatrix::from_columns(to) * *inv;
}

bool annihilator_symmetry_check(const RationalRepresentation &rep, const OrbitData &orbit, const Perm &pi) {
  if (!orbit.spans) fail(ErrorCode::NotSpanning, "orbit does not span the representation space");
  const int n = rep.group().order();
  if (static_cast<int>(pi.size()) != n || !is_permutation(pi))
    fail(ErrorCode::BadParameter, "not a permutation of the group elements");
  std::vector<RationalVector> cols;
  for (int x = 0; x < n; ++x) cols.push_back(orbit.points[orbit.point_of[x]]);
  RationalMatrix kappa = RationalMatrix::from_columns(cols);
  for (const RationalVector &a : mat_kernel(kappa)) {
    RationalVector b(n);
    for (int x = 0; x < n; ++x) b[pi[x]] = a[x];
    for (const Rational &c : kappa * b)
      if (!c.is_zero()) return false;
  }
  return true;
}

OrbitData sample_generic_point(const RationalRepresentation &rep, std::uint64_t seed, long bound, int attempts) {
  if (rep.dim == 0) fail(ErrorCode::NotCyclic, "zero-dimensional representation");
  const Subgroup kernel = rep.kernel();
  std::mt19937_64 rng(seed);
  for (int a = 0; a < attempts; ++a) {
    OrbitData o = orbit(rep, random_point(rng, rep.dim, bound));
    if (o.spans && o.stabilizer == kernel) return o;
  }
  fail(ErrorCode::NotCyclic, "no generic point found in " + std::to_string(attempts) + " samples");
}

OracleReport verify_theory_vs_oracle(const CharacterTable &t, const RationalRepresentation &rep,
                                     const Character &chi, const OracleOptions &options) {
  if (!(rep.character == chi)) fail(ErrorCode::BadParameter, "character is not the character of the representation");
  const FiniteGroup &g = *t.group;
  const int n = g.order();
  SymmetryOptions so;
  so.search = options.search;
  const GenericSymmetryResult theory = sym_group_of_character(t, chi, so);
  const CayleyColoring coloring = cayley_coloring(ideal_part(t, chi));
  std::vector<Cyclotomic> hats;
  for (const Perm &pi : theory.group.generators()) hats.push_back(hat_character(coloring, chi, pi));

  OracleReport report;
  std::uint64_t stream = options.seed;
  for (int trial = 0; trial < options.trials; ++trial) {
    TrialReport tr;
    for (int attempt = 0; attempt <= options.retries; ++attempt) {
      tr = TrialReport{};
      tr.attempts = attempt + 1;
      OrbitData o = sample_generic_point(rep, stream++, options.bound);
      tr.point = o.base_point;
      tr.stabilizer_order = o.stabilizer.order();
      tr.theory_order = theory.group.order();
      LinearSymmetryGroup oracle = linear_symmetry_group(o, options.search);
      tr.oracle_order = oracle.order;

      // Push theory generators to the orbit; they must respect the point fibres.
      const int m = static_cast<int>(o.points.size());
      std::vector<Perm> pushed;
      bool well_defined = true;
      for (const Perm &pi : theory.group.generators()) {
        Perm p(m, -1);
        for (int x = 0; x < n && well_defined; ++x) {
          int from = o.point_of[x], to = o.point_of[pi[x]];
          if (p[from] < 0) p[from] = to;
          well_defined = p[from] == to;
        }
        pushed.push_back(std::move(p));
      }
      if (well_defined) {
        PermGroup theory_on_orbit = PermGroup::from_generators(m, pushed);
        tr.groups_equal = theory_on_orbit == oracle.permutations;
        const long h = o.stabilizer.order();
        tr.order_formula = theory.group.order() == oracle.order * coset_block_order(n, h) / (n / h);
        tr.traces_agree = true;
        for (std::size_t i = 0; i < pushed.size() && tr.traces_agree; ++i)
          tr.traces_agree = Cyclotomic(matrix_of_point_permutation(o, pushed[i]).trace()) == hats[i];
      }
      if (tr.passed()) break;
    }
    if (!tr.passed()) {
      std::string pt;
      for (const Rational &x : tr.point) pt += (pt.empty() ? "" : ",") + x.str();
      fail(ErrorCode::PersistentMismatch,
           "theory and oracle disagree at (" + pt + ") after " + std::to_string(tr.attempts) +
               " attempts: theory order " + tr.theory_order.get_str() + ", oracle order " +
               tr.oracle_order.get_str() + (tr.groups_equal ? "" : ", groups differ") +
               (tr.order_formula ? "" : ", order formula fails") + (tr.traces_agree ? "" : ", traces differ"));
    }
    report.trials.push_back(std::move(tr));
  }
  report.passed = true;
  return report;
}

ClosureReport closure_iterate(const OrbitData &start, const ClosureOptions &options) {
  ClosureReport report;
  report.chain.push_back(start.acting_order);
  LinearSymmetryGroup current = linear_symmetry_group(start, options.search);
  report.chain.push_back(current.order);
  std::mt19937_64 rng(options.seed);
  const int dim = static_cast<int>(start.base_point.size());
  for (int step = 0; step < 4; ++step) {
    const mpz_class &last = report.chain.back();
    if (last == report.chain[report.chain.size() - 2]) {
      report.stabilized = true;
      return report;
    }
    if (last > mpz_class(static_cast<unsigned long>(options.max_points))) {
      report.budget_exceeded = true;
      return report;
    }
    // A generic point for the larger group has a regular orbit.
    std::optional<OrbitData> next;
    for (int attempt = 0; attempt < 200 && !next; ++attempt) {
      OrbitData o = matrix_group_orbit(current.matrices, last, random_point(rng, dim, options.bound),
                                       options.max_points);
      if (o.spans && mpz_class(static_cast<unsigned long>(o.points.size())) == last) next = std::move(o);
    }
    if (!next) fail(ErrorCode::NotCyclic, "no point with a regular orbit found for the symmetry group");
    current = linear_symmetry_group(*next, options.search);
    report.chain.push_back(current.order);
  }
  return report;
}

} // namespace orbitsym
