#include "orbitsym/character.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "orbitsym/builtin.hpp"
#include "orbitsym/error.hpp"

namespace orbitsym {

int ClassData::power_class(int c, long k) const {
  return class_of[group->power(representatives[c], k)];
}

ClassDataPtr conjugacy_classes(GroupPtr g) {
  auto cd = std::make_shared<ClassData>();
  const FiniteGroup &G = *g;
  cd->group = g;
  cd->class_of.assign(G.order(), -1);
  for (int x = 0; x < G.order(); ++x) {
    if (cd->class_of[x] >= 0) continue;
    int c = cd->count();
    cd->representatives.push_back(x);
    int size = 0;
    for (int y = 0; y < G.order(); ++y) {
      int z = G.conj(x, y);
      if (cd->class_of[z] < 0) {
        cd->class_of[z] = c;
        ++size;
      }
    }
    cd->sizes.push_back(size);
  }
  for (int c = 0; c < cd->count(); ++c) {
    int x = cd->representatives[c];
    cd->inverse_class.push_back(cd->class_of[G.inv(x)]);
    cd->square_class.push_back(cd->class_of[G.mul(x, x)]);
    cd->element_order.push_back(G.element_order(x));
  }
  return cd;
}

namespace {

using IntegerTerms = std::vector<std::pair<int, long>>;

/// Nonzero (exponent, coefficient) pairs of a value stored at conductor n, or
/// nullopt if a coefficient is not a machine integer.
std::optional<IntegerTerms> integer_terms(const Cyclotomic &v) {
  IntegerTerms out;
  const auto &c = v.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    if (!c[i].is_integer() || !c[i].get().get_num().fits_slong_p()) return std::nullopt;
    out.emplace_back(static_cast<int>(i), c[i].get().get_num().get_si());
  }
  return out;
}

std::optional<std::vector<IntegerTerms>> integer_form(const Character &chi) {
  std::vector<IntegerTerms> out;
  for (const Cyclotomic &v : chi.values()) {
    auto t = integer_terms(v);
    if (!t) return std::nullopt;
    out.push_back(std::move(*t));
  }
  return out;
}

Cyclotomic integral_inner_product(const ClassData &cd, const std::vector<IntegerTerms> &x,
                                  const std::vector<IntegerTerms> &y) {
  const int e = cd.group->exponent();
  std::vector<long> acc(e, 0);
  for (int c = 0; c < cd.count(); ++c)
    for (auto [i, xi] : x[c])
      for (auto [j, yj] : y[c]) acc[((i - j) % e + e) % e] += static_cast<long>(cd.sizes[c]) * xi * yj;
  const Rational inv_order = Rational(1) / Rational(cd.group->order());
  std::vector<std::pair<long, Rational>> terms;
  auto red = reduce_integer_exponents(e, acc);
  for (std::size_t i = 0; i < red.size(); ++i)
    if (red[i] != 0) terms.emplace_back(static_cast<long>(i), Rational(red[i]) * inv_order);
  return Cyclotomic::from_terms(e, terms);
}

} // namespace

Character::Character(ClassDataPtr classes, std::vector<Cyclotomic> values)
    : classes_(std::move(classes)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != classes_->count())
    fail(ErrorCode::DimensionMismatch, "character needs one value per conjugacy class");
  const int e = classes_->group->exponent();
  for (auto &v : values_) {
    if (e % v.conductor() != 0)
      fail(ErrorCode::BadParameter, "character value conductor " + std::to_string(v.conductor()) +
                                        " does not divide the group exponent " + std::to_string(e));
    v = v.embed(e);
  }
}

Character Character::zero(ClassDataPtr classes) {
  int r = classes->count();
  return Character(std::move(classes), std::vector<Cyclotomic>(r));
}

Character Character::trivial(ClassDataPtr classes) {
  int r = classes->count();
  return Character(std::move(classes), std::vector<Cyclotomic>(r, Cyclotomic(1)));
}

Character Character::regular(ClassDataPtr classes) {
  std::vector<Cyclotomic> v(classes->count());
  v[classes->identity_class()] = Cyclotomic(classes->group->order());
  return Character(std::move(classes), std::move(v));
}

bool Character::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Cyclotomic &v) { return v.is_zero(); });
}

bool Character::is_rational() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Cyclotomic &v) { return v.rational().has_value(); });
}

Character Character::conj() const {
  Character c = *this;
  for (auto &v : c.values_) v = v.conj();
  return c;
}

Character Character::galois(long k) const {
  Character c = *this;
  for (auto &v : c.values_) v = v.galois(k);
  return c;
}

void Character::check_same(const Character &o) const {
  if (classes_ != o.classes_) fail(ErrorCode::GroupMismatch, "characters live on different groups");
}

Character &Character::operator+=(const Character &o) {
  check_same(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

Character &Character::operator-=(const Character &o) {
  check_same(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

Character operator*(const Rational &s, const Character &c) {
  Character out = c;
  for (auto &v : out.values_) v *= s;
  return out;
}

Character operator*(const Character &a, const Character &b) {
  a.check_same(b);
  Character out = a;
  for (std::size_t i = 0; i < out.values_.size(); ++i) out.values_[i] *= b.values_[i];
  return out;
}

bool operator==(const Character &a, const Character &b) {
  return a.classes_ == b.classes_ && a.values_ == b.values_;
}

std::string Character::key() const {
  std::string k;
  for (const auto &v : values_) {
    k += v.key();
    k += ';';
  }
  return k;
}

std::string Character::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < values_.size(); ++i) s += (i ? ", " : "") + values_[i].str();
  return s + "]";
}

Cyclotomic inner_product(const Character &a, const Character &b) {
  if (a.classes() != b.classes()) fail(ErrorCode::GroupMismatch, "characters live on different groups");
  const ClassData &cd = *a.classes();
  auto x = integer_form(a);
  auto y = x ? integer_form(b) : std::nullopt;
  if (x && y) return integral_inner_product(cd, *x, *y);
  Cyclotomic sum;
  for (int c = 0; c < cd.count(); ++c)
    sum += a.at_class(c) * b.at_class(c).conj() * Rational(cd.sizes[c]);
  return sum / Rational(cd.group->order());
}

int CharacterTable::index_of(const Character &c) const {
  for (int i = 0; i < size(); ++i)
    if (irreducibles[i] == c) return i;
  return -1;
}

std::vector<Rational> CharacterTable::multiplicities(const Character &chi) const {
  std::vector<Rational> m;
  for (const Character &psi : irreducibles) {
    Cyclotomic ip = inner_product(chi, psi);
    auto q = ip.rational();
    if (!q) fail(ErrorCode::NotACharacter, "inner product with an irreducible is not rational");
    m.push_back(*q);
  }
  return m;
}

Character CharacterTable::from_multiplicities(const std::vector<Rational> &m) const {
  if (static_cast<int>(m.size()) != size())
    fail(ErrorCode::DimensionMismatch, "need one multiplicity per irreducible character (" +
                                           std::to_string(size()) + ")");
  Character chi = Character::zero(classes);
  for (int i = 0; i < size(); ++i)
    if (!m[i].is_zero()) chi += m[i] * irreducibles[i];
  return chi;
}

int fs_indicator(const Character &psi) {
  Cyclotomic n = inner_product(psi, psi);
  auto deg = psi.degree().rational();
  if (n != Cyclotomic(1) || !deg || deg->sign() <= 0)
    fail(ErrorCode::NotIrreducible, "Frobenius-Schur indicator needs an irreducible character");
  const ClassData &cd = *psi.classes();
  Cyclotomic sum;
  for (int c = 0; c < cd.count(); ++c) sum += psi.at_class(cd.square_class[c]) * Rational(cd.sizes[c]);
  sum = sum / Rational(cd.group->order());
  auto v = sum.rational();
  if (!v || !v->is_integer() || *v < Rational(-1) || *v > Rational(1))
    fail(ErrorCode::ValidationFailure, "Frobenius-Schur indicator out of range");
  return static_cast<int>(v->get().get_num().get_si());
}

Subgroup kernel_of(const Character &chi) {
  const ClassData &cd = *chi.classes();
  std::vector<int> k;
  for (int x = 0; x < cd.group->order(); ++x)
    if (chi.at(x) == chi.degree()) k.push_back(x);
  return Subgroup(cd.group->order(), std::move(k));
}

std::vector<Character> rational_ideal_characters(const CharacterTable &t) {
  std::vector<Character> out;
  for (const auto &orbit : t.galois_orbits) {
    Character sum = Character::zero(t.classes);
    for (int i : orbit) sum += t.irreducibles[i];
    out.push_back(*t.irreducibles[orbit[0]].degree().rational() * sum);
  }
  return out;
}

bool affordable_by_left_ideal(const CharacterTable &t, const Character &chi, Field field) {
  auto m = t.multiplicities(chi);
  for (const Rational &x : m)
    if (!x.is_integer() || x.sign() < 0)
      fail(ErrorCode::NotACharacter, "multiplicities must be nonnegative integers");
  if (field == Field::Real && !(chi.conj() == chi)) return false;
  for (int i = 0; i < t.size(); ++i) {
    Rational deg = *t.irreducibles[i].degree().rational();
    if (m[i] > deg) return false;
    if (field == Field::Real && t.fs_indicators[i] == -1 && !(m[i].get().get_num() % 2 == 0))
      return false;
  }
  return true;
}

Character outer_tensor(ClassDataPtr product_classes, const std::vector<int> &factor_orders,
                       const std::vector<Character> &factors) {
  if (factor_orders.size() != factors.size())
    fail(ErrorCode::DimensionMismatch, "one character per direct factor required");
  long n = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].group().order() != factor_orders[i])
      fail(ErrorCode::GroupMismatch, "factor character lives on a group of the wrong order");
    n *= factor_orders[i];
  }
  if (n != product_classes->group->order())
    fail(ErrorCode::GroupMismatch, "factor orders do not multiply to the group order");
  std::vector<Cyclotomic> v;
  for (int c = 0; c < product_classes->count(); ++c) {
    auto coords = product_coordinates(factor_orders, product_classes->representatives[c]);
    Cyclotomic x(1);
    for (std::size_t i = 0; i < factors.size(); ++i) x *= factors[i].at(coords[i]);
    v.push_back(std::move(x));
  }
  return Character(std::move(product_classes), std::move(v));
}

TablePtr finish_table(GroupPtr g, ClassDataPtr classes, std::vector<Character> irr) {
  const int r = classes->count();
  const long order = g->order();
  if (static_cast<int>(irr.size()) != r)
    fail(ErrorCode::ValidationFailure, "table has " + std::to_string(irr.size()) +
                                           " characters for " + std::to_string(r) + " classes");
  Rational degree_sum;
  std::vector<std::vector<IntegerTerms>> forms;
  for (const Character &psi : irr) {
    auto f = integer_form(psi);
    if (!f) fail(ErrorCode::ValidationFailure, "irreducible character value is not an algebraic integer");
    forms.push_back(std::move(*f));
  }
  for (int i = 0; i < r; ++i) {
    if (irr[i].classes() != classes) fail(ErrorCode::ValidationFailure, "character on foreign classes");
    auto d = irr[i].degree().rational();
    if (!d || !d->is_integer() || d->sign() <= 0)
      fail(ErrorCode::ValidationFailure, "degree is not a positive integer");
    degree_sum += *d * *d;
    for (int j = 0; j <= i; ++j) {
      Cyclotomic ip = integral_inner_product(*classes, forms[i], forms[j]);
      if (ip != Cyclotomic(i == j ? 1 : 0))
        fail(ErrorCode::ValidationFailure, "row orthogonality fails for characters " +
                                               std::to_string(i) + ", " + std::to_string(j));
    }
  }
  if (degree_sum != Rational(order))
    fail(ErrorCode::ValidationFailure, "sum of squared degrees is not the group order");

  auto t = std::make_shared<CharacterTable>();
  t->group = std::move(g);
  t->classes = std::move(classes);
  t->irreducibles = std::move(irr);
  for (const Character &psi : t->irreducibles) t->fs_indicators.push_back(fs_indicator(psi));

  // psi^(zeta -> zeta^k) is g -> psi(g^k); characters are compared through
  // interned value ids.
  const int e = t->group->exponent();
  const ClassData &cd = *t->classes;
  std::map<std::string, int> value_id;
  std::vector<std::vector<int>> ids(r);
  for (int i = 0; i < r; ++i)
    for (const Cyclotomic &v : t->irreducibles[i].values())
      ids[i].push_back(value_id.emplace(v.key(), static_cast<int>(value_id.size())).first->second);
  std::map<std::vector<int>, int> by_ids;
  for (int i = 0; i < r; ++i) by_ids.emplace(ids[i], i);
  std::vector<std::vector<int>> class_power;
  for (int k = 1; k <= e; ++k) {
    if (std::gcd(k, e) != 1) continue;
    std::vector<int> perm(r);
    for (int c = 0; c < r; ++c) perm[c] = cd.power_class(c, k);
    class_power.push_back(std::move(perm));
  }
  std::vector<int> orbit_of(r, -1);
  for (int i = 0; i < r; ++i) {
    if (orbit_of[i] >= 0) continue;
    std::vector<int> orbit;
    for (const auto &perm : class_power) {
      std::vector<int> image(r);
      for (int c = 0; c < r; ++c) image[c] = ids[i][perm[c]];
      auto it = by_ids.find(image);
      if (it == by_ids.end())
        fail(ErrorCode::ValidationFailure, "Galois conjugate of an irreducible is missing");
      if (orbit_of[it->second] < 0) {
        orbit_of[it->second] = static_cast<int>(t->galois_orbits.size());
        orbit.push_back(it->second);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    t->galois_orbits.push_back(std::move(orbit));
  }
  return t;
}

} // namespace orbitsym
