#include "orbitsym/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "orbitsym/error.hpp"

namespace orbitsym {

namespace {

using IntPoly = std::vector<long>;

struct FieldBasis {
  int n = 1;
  int phi = 1;
  IntPoly cyclotomic_poly;            // monic, degree phi
  std::vector<IntPoly> reduction;     // z^k mod Phi_n for 0 <= k < n
};

IntPoly divide_exact(IntPoly num, const IntPoly &den) {
  // den monic
  int dn = static_cast<int>(den.size()) - 1;
  int nn = static_cast<int>(num.size()) - 1;
  IntPoly q(nn - dn + 1, 0);
  for (int i = nn; i >= dn; --i) {
    long lead = num[i];
    q[i - dn] = lead;
    if (lead == 0) continue;
    for (int j = 0; j <= dn; ++j) num[i - dn + j] -= lead * den[j];
  }
  return q;
}

const FieldBasis &basis_for(int n);

IntPoly cyclotomic_polynomial(int n) {
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(p, basis_for(d).cyclotomic_poly);
  return p;
}

std::unique_ptr<FieldBasis> make_basis(int n) {
  auto b = std::make_unique<FieldBasis>();
  b->n = n;
  b->cyclotomic_poly = cyclotomic_polynomial(n);
  b->phi = static_cast<int>(b->cyclotomic_poly.size()) - 1;
  int phi = b->phi;
  IntPoly cur(phi, 0);
  cur[0] = 1;
  b->reduction.reserve(n);
  for (int k = 0; k < n; ++k) {
    b->reduction.push_back(cur);
    // multiply by z and reduce modulo the monic Phi_n
    long carry = cur[phi - 1];
    for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (carry != 0)
      for (int i = 0; i < phi; ++i) cur[i] -= carry * b->cyclotomic_poly[i];
  }
  return b;
}

std::mutex basis_mutex;
std::map<int, std::unique_ptr<FieldBasis>> basis_cache;

const FieldBasis &basis_for(int n) {
  {
    std::lock_guard lock(basis_mutex);
    auto it = basis_cache.find(n);
    if (it != basis_cache.end()) return *it->second;
  }
  // Built outside the lock: construction recurses into smaller conductors.
  auto built = make_basis(n);
  std::lock_guard lock(basis_mutex);
  auto [it, inserted] = basis_cache.emplace(n, std::move(built));
  return *it->second;
}

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

/// Folds a length-n vector indexed by exponent into the power basis.
std::vector<Rational> fold(int n, const std::vector<Rational> &by_exponent) {
  const FieldBasis &b = basis_for(n);
  std::vector<Rational> out(b.phi);
  for (int k = 0; k < n; ++k) {
    const Rational &c = by_exponent[k];
    if (c.is_zero()) continue;
    if (k < b.phi) {
      out[k] += c;
      continue;
    }
    const IntPoly &red = b.reduction[k];
    for (int i = 0; i < b.phi; ++i)
      if (red[i] != 0) out[i] += c * Rational(red[i]);
  }
  return out;
}

} // namespace

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

int euler_phi(int n) { return basis_for(n).phi; }

std::vector<long> reduce_integer_exponents(int n, const std::vector<long> &by_exp) {
  const FieldBasis &b = basis_for(n);
  std::vector<long> out(b.phi, 0);
  for (int k = 0; k < n; ++k) {
    long c = by_exp[k];
    if (c == 0) continue;
    if (k < b.phi) {
      out[k] += c;
      continue;
    }
    const IntPoly &red = b.reduction[k];
    for (int i = 0; i < b.phi; ++i) out[i] += c * red[i];
  }
  return out;
}

Cyclotomic::Cyclotomic() : n_(1), c_(1) {}

Cyclotomic::Cyclotomic(const Rational &r) : n_(1), c_{r} {}

Cyclotomic Cyclotomic::root_of_unity(int n, long k) {
  if (n < 1) fail(ErrorCode::BadParameter, "conductor must be positive");
  return from_terms(n, {{k, Rational(1)}});
}

Cyclotomic Cyclotomic::from_terms(int n, const std::vector<std::pair<long, Rational>> &terms) {
  if (n < 1) fail(ErrorCode::BadParameter, "conductor must be positive");
  std::vector<Rational> by_exp(n);
  for (const auto &[k, c] : terms) by_exp[mod(k, n)] += c;
  return Cyclotomic(n, fold(n, by_exp));
}

std::vector<std::pair<int, Rational>> Cyclotomic::terms() const {
  std::vector<std::pair<int, Rational>> out;
  for (int i = 0; i < static_cast<int>(c_.size()); ++i)
    if (!c_[i].is_zero()) out.emplace_back(i, c_[i]);
  return out;
}

bool Cyclotomic::is_zero() const {
  for (const auto &c : c_)
    if (!c.is_zero()) return false;
  return true;
}

std::optional<Rational> Cyclotomic::rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return std::nullopt;
  return c_[0];
}

Cyclotomic Cyclotomic::embed(int m) const {
  if (m == n_) return *this;
  if (m % n_ != 0)
    fail(ErrorCode::BadParameter, "cannot embed conductor " + std::to_string(n_) + " into " +
                                      std::to_string(m));
  long step = m / n_;
  std::vector<Rational> by_exp(m);
  for (int i = 0; i < static_cast<int>(c_.size()); ++i)
    if (!c_[i].is_zero()) by_exp[(i * step) % m] += c_[i];
  return Cyclotomic(m, fold(m, by_exp));
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::galois(long k) const {
  if (gcd_long(mod(k, n_), n_) != 1 && n_ > 1)
    fail(ErrorCode::BadGaloisExponent,
         std::to_string(k) + " is not coprime to conductor " + std::to_string(n_));
  if (n_ <= 2) return *this;
  std::vector<Rational> by_exp(n_);
  for (int i = 0; i < static_cast<int>(c_.size()); ++i)
    if (!c_[i].is_zero()) by_exp[mod(static_cast<long>(i) * k, n_)] += c_[i];
  return Cyclotomic(n_, fold(n_, by_exp));
}

Cyclotomic &Cyclotomic::operator+=(const Cyclotomic &o) {
  if (o.n_ != n_) {
    int m = static_cast<int>(lcm_long(n_, o.n_));
    *this = embed(m);
    return *this += o.embed(m);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic &Cyclotomic::operator-=(const Cyclotomic &o) { return *this += -o; }

Cyclotomic &Cyclotomic::operator*=(const Cyclotomic &o) {
  if (o.n_ != n_) {
    int m = static_cast<int>(lcm_long(n_, o.n_));
    *this = embed(m);
    return *this *= o.embed(m);
  }
  if (n_ == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  std::vector<Rational> by_exp(n_);
  for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; j < static_cast<int>(o.c_.size()); ++j) {
      if (o.c_[j].is_zero()) continue;
      by_exp[(i + j) % n_] += c_[i] * o.c_[j];
    }
  }
  c_ = fold(n_, by_exp);
  return *this;
}

Cyclotomic &Cyclotomic::operator*=(const Rational &r) {
  for (auto &c : c_) c *= r;
  return *this;
}

Cyclotomic &Cyclotomic::operator/=(const Rational &r) {
  for (auto &c : c_) c /= r;
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto &c : out.c_) c = -c;
  return out;
}

bool operator==(const Cyclotomic &a, const Cyclotomic &b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  int m = static_cast<int>(lcm_long(a.n_, b.n_));
  return a.embed(m).c_ == b.embed(m).c_;
}

std::string Cyclotomic::key() const {
  std::string k = std::to_string(n_) + ":";
  for (const auto &c : c_) {
    k += c.str();
    k += ',';
  }
  return k;
}

std::string Cyclotomic::str() const {
  auto t = terms();
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[e, c] : t) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.str();
      continue;
    }
    if (mag != Rational(1)) os << mag.str() << "*";
    os << "z" << n_;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

} // namespace orbitsym
