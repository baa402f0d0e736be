#include "orbitsym/builtin.hpp"

#include <cctype>

#include "orbitsym/error.hpp"

namespace orbitsym {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::vector<std::vector<int>> square(int n) { return std::vector<std::vector<int>>(n, std::vector<int>(n)); }

void check_order(long n) {
  if (n > kMaxGroupOrder)
    fail(ErrorCode::SizeLimit,
         "group order " + std::to_string(n) + " exceeds " + std::to_string(kMaxGroupOrder));
}

class SpecParser {
public:
  explicit SpecParser(std::string_view s) : s_(s) {}

  GroupSpec parse() {
    GroupSpec g = parse_spec();
    skip_ws();
    if (pos_ != s_.size()) error("trailing input");
    return g;
  }

private:
  [[noreturn]] void error(const std::string &what) {
    fail(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in '" +
                                    std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_) error("expected a group constructor");
    return std::string(s_.substr(start, pos_ - start));
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || (pos_ - start == 1 && s_[start] == '-')) error("expected an integer");
    if (pos_ - start > 9) error("integer too large");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  GroupSpec parse_spec() {
    GroupSpec g;
    g.kind = ident();
    if (g.kind == "quaternion8") return g;
    if (g.kind == "product") {
      expect('(');
      do {
        g.factors.push_back(parse_spec());
      } while (accept(','));
      expect(')');
      return g;
    }
    int arity;
    if (g.kind == "cyclic" || g.kind == "dihedral" || g.kind == "dicyclic")
      arity = 1;
    else if (g.kind == "elem_abelian")
      arity = 2;
    else
      error("unknown group constructor '" + g.kind + "'");
    expect('(');
    for (int i = 0; i < arity; ++i) {
      if (i) expect(',');
      g.params.push_back(integer());
    }
    expect(')');
    return g;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

std::string GroupSpec::str() const {
  if (kind == "quaternion8") return kind;
  std::string s = kind + "(";
  if (kind == "product") {
    for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "," : "") + factors[i].str();
  } else {
    for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
  }
  return s + ")";
}

GroupSpec parse_group_spec(std::string_view text) { return SpecParser(text).parse(); }

FiniteGroup cyclic_group(int n) {
  if (n < 1) fail(ErrorCode::BadParameter, "cyclic(n) needs n >= 1");
  check_order(n);
  auto t = square(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup::from_table(t, 0, "cyclic(" + std::to_string(n) + ")");
}

FiniteGroup elementary_abelian_group(int p, int r) {
  if (!is_prime(p)) fail(ErrorCode::BadParameter, "elem_abelian(p,r) needs prime p");
  if (r < 1) fail(ErrorCode::BadParameter, "elem_abelian(p,r) needs r >= 1");
  long n = 1;
  for (int i = 0; i < r; ++i) {
    n *= p;
    check_order(n);
  }
  auto t = square(static_cast<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int x = a, y = b, out = 0, scale = 1;
      for (int i = 0; i < r; ++i) {
        out += ((x % p + y % p) % p) * scale;
        x /= p;
        y /= p;
        scale *= p;
      }
      t[a][b] = out;
    }
  return FiniteGroup::from_table(t, 0,
                                 "elem_abelian(" + std::to_string(p) + "," + std::to_string(r) + ")");
}

FiniteGroup dihedral_group(int n) {
  if (n < 1) fail(ErrorCode::BadParameter, "dihedral(n) needs n >= 1");
  check_order(2L * n);
  auto t = square(2 * n);
  for (int x = 0; x < 2 * n; ++x)
    for (int y = 0; y < 2 * n; ++y) {
      int a = x % n, e = x / n, b = y % n, f = y / n;
      int k = ((a + (e ? -b : b)) % n + n) % n;
      t[x][y] = k + n * ((e + f) % 2);
    }
  return FiniteGroup::from_table(t, 0, "dihedral(" + std::to_string(n) + ")");
}

FiniteGroup dicyclic_group(int n) {
  if (n < 1) fail(ErrorCode::BadParameter, "dicyclic(n) needs n >= 1");
  check_order(4L * n);
  const int m = 2 * n;
  auto t = square(2 * m);
  for (int x = 0; x < 2 * m; ++x)
    for (int y = 0; y < 2 * m; ++y) {
      int i = x % m, e = x / m, j = y % m, f = y / m;
      int k, g;
      if (e == 0) {
        k = i + j;
        g = f;
      } else if (f == 0) {
        k = i - j;
        g = 1;
      } else {
        k = i - j + n;
        g = 0;
      }
      t[x][y] = ((k % m) + m) % m + m * g;
    }
  return FiniteGroup::from_table(t, 0, "dicyclic(" + std::to_string(n) + ")");
}

FiniteGroup quaternion_group() {
  FiniteGroup g = dicyclic_group(2);
  g.set_label("quaternion8");
  return g;
}

std::vector<int> product_coordinates(const std::vector<int> &factor_orders, int x) {
  std::vector<int> c(factor_orders.size());
  for (int i = static_cast<int>(factor_orders.size()) - 1; i >= 0; --i) {
    c[i] = x % factor_orders[i];
    x /= factor_orders[i];
  }
  return c;
}

FiniteGroup direct_product(const std::vector<FiniteGroup> &factors) {
  if (factors.empty()) fail(ErrorCode::BadParameter, "product of no groups");
  long n = 1;
  std::vector<int> orders;
  for (const auto &f : factors) {
    n *= f.order();
    check_order(n);
    orders.push_back(f.order());
  }
  std::vector<std::vector<int>> coords(n);
  for (int x = 0; x < n; ++x) coords[x] = product_coordinates(orders, x);
  auto t = square(static_cast<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int idx = 0;
      for (std::size_t i = 0; i < factors.size(); ++i)
        idx = idx * orders[i] + factors[i].mul(coords[x][i], coords[y][i]);
      t[x][y] = idx;
    }
  int id = 0;
  std::string label = "product(";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    id = id * orders[i] + factors[i].identity();
    label += (i ? "," : "") + factors[i].label();
  }
  return FiniteGroup::from_table(t, id, label + ")");
}

FiniteGroup build_group(const GroupSpec &spec) {
  auto p = [&](std::size_t i) {
    long v = spec.params.at(i);
    if (v < 1 || v > 100000) fail(ErrorCode::BadParameter, spec.kind + " parameter out of range");
    return static_cast<int>(v);
  };
  if (spec.kind == "cyclic") return cyclic_group(p(0));
  if (spec.kind == "elem_abelian") {
    if (spec.params.at(0) < 2 || !is_prime(spec.params.at(0)))
      fail(ErrorCode::BadParameter, "elem_abelian(p,r) needs prime p");
    return elementary_abelian_group(p(0), p(1));
  }
  if (spec.kind == "dihedral") return dihedral_group(p(0));
  if (spec.kind == "dicyclic") return dicyclic_group(p(0));
  if (spec.kind == "quaternion8") return quaternion_group();
  if (spec.kind == "product") {
    long n = 1;
    std::vector<FiniteGroup> fs;
    for (const auto &f : spec.factors) {
      fs.push_back(build_group(f));
      n *= fs.back().order();
      check_order(n);
    }
    return direct_product(fs);
  }
  fail(ErrorCode::BadParameter, "unknown group constructor '" + spec.kind + "'");
}

FiniteGroup builtin_group(std::string_view text) { return build_group(parse_group_spec(text)); }

} // namespace orbitsym
