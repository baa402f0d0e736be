#include "orbitsym/rational.hpp"

#include "orbitsym/error.hpp"

namespace orbitsym {

Rational::Rational(const mpz_class &num, const mpz_class &den) {
  if (den == 0) fail(ErrorCode::BadParameter, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto valid_integer = [](const std::string &t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-')
    fail(ErrorCode::ParseError, "malformed rational '" + s + "'");
  return Rational(mpz_class(num), mpz_class(den));
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero()) fail(ErrorCode::BadParameter, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::size_t Rational::hash() const noexcept {
  auto limb = [](const mpz_class &z) -> std::size_t {
    if (z == 0) return 0;
    std::size_t v = mpz_getlimbn(z.get_mpz_t(), 0);
    return v ^ (static_cast<std::size_t>(mpz_size(z.get_mpz_t())) << 56) ^
           static_cast<std::size_t>(sgn(z) < 0);
  };
  std::size_t h = limb(q_.get_num());
  h ^= limb(q_.get_den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

} // namespace orbitsym
