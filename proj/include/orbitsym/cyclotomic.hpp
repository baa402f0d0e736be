#ifndef ORBITSYM_CYCLOTOMIC_HPP
#define ORBITSYM_CYCLOTOMIC_HPP

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "orbitsym/rational.hpp"

namespace orbitsym {

/// Exact element of the cyclotomic field Q(zeta_n).
///
/// Values are stored in the power basis 1, z, ..., z^(phi(n)-1) of
/// Q(zeta_n) = Q[z]/(Phi_n(z)). For a fixed conductor this representation is
/// unique, so equality of coefficient vectors is equality of field elements.
/// Binary operations on values with different conductors first embed both
/// operands into Q(zeta_lcm).
class Cyclotomic {
public:
  Cyclotomic();
  Cyclotomic(const Rational &r);
  Cyclotomic(long value) : Cyclotomic(Rational(value)) {}
  Cyclotomic(int value) : Cyclotomic(Rational(value)) {}

  /// zeta_n^k.
  static Cyclotomic root_of_unity(int n, long k);
  /// sum over (k, c) of c * zeta_n^k, with arbitrary integer exponents.
  static Cyclotomic from_terms(int n, const std::vector<std::pair<long, Rational>> &terms);

  int conductor() const noexcept { return n_; }
  const std::vector<Rational> &coeffs() const noexcept { return c_; }
  /// Nonzero (exponent, coefficient) pairs of the canonical form.
  std::vector<std::pair<int, Rational>> terms() const;

  bool is_zero() const;
  std::optional<Rational> rational() const;

  /// Same value in Q(zeta_m); requires conductor() | m.
  Cyclotomic embed(int m) const;
  /// Complex conjugation, zeta -> zeta^-1.
  Cyclotomic conj() const;
  /// Galois automorphism zeta -> zeta^k; k must be coprime to the conductor.
  Cyclotomic galois(long k) const;

  Cyclotomic &operator+=(const Cyclotomic &o);
  Cyclotomic &operator-=(const Cyclotomic &o);
  Cyclotomic &operator*=(const Cyclotomic &o);
  Cyclotomic &operator*=(const Rational &r);
  Cyclotomic &operator/=(const Rational &r);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic &b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic &b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic &b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational &b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Rational &b) { return a /= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic &a, const Cyclotomic &b);

  /// Stable textual key of the canonical form; equal values at the same
  /// conductor have equal keys.
  std::string key() const;
  /// Human-readable rendering, e.g. "1 + 2*z8^3".
  std::string str() const;

  friend std::ostream &operator<<(std::ostream &os, const Cyclotomic &c) {
    return os << c.str();
  }

private:
  Cyclotomic(int n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}

  int n_;
  std::vector<Rational> c_;
};

int euler_phi(int n);
/// Power-basis coefficients of sum_k by_exp[k] * zeta_n^k for integer data
/// (by_exp has length n).
std::vector<long> reduce_integer_exponents(int n, const std::vector<long> &by_exp);
long gcd_long(long a, long b);
long lcm_long(long a, long b);

} // namespace orbitsym

#endif // ORBITSYM_CYCLOTOMIC_HPP
