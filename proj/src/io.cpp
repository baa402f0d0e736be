#include "orbitsym/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <memory>
#include <optional>

#include "orbitsym/builtin.hpp"
#include "orbitsym/error.hpp"

namespace orbitsym {

namespace {

long spec_order(const GroupSpec &s) {
  if (s.kind == "cyclic") return s.params.at(0);
  if (s.kind == "elem_abelian") {
    long n = 1;
    for (long i = 0; i < s.params.at(1); ++i) n *= s.params.at(0);
    return n;
  }
  if (s.kind == "dihedral") return 2 * s.params.at(0);
  if (s.kind == "dicyclic") return 4 * s.params.at(0);
  if (s.kind == "quaternion8") return 8;
  long n = 1;
  for (const auto &f : s.factors) n *= spec_order(f);
  return n;
}

[[noreturn]] void schema_error(const std::string &pointer, const std::string &what) {
  fail(ErrorCode::SchemaError, (pointer.empty() ? "/" : pointer) + ": " + what);
}

const Json &field(const Json &j, const std::string &key, const std::string &pointer) {
  if (!j.is_object()) schema_error(pointer, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(pointer + "/" + key, "missing field");
  return *it;
}

std::string string_field(const Json &j, const std::string &key, const std::string &pointer) {
  const Json &v = field(j, key, pointer);
  if (!v.is_string()) schema_error(pointer + "/" + key, "expected a string");
  return v.get<std::string>();
}

long integer_field(const Json &j, const std::string &key, const std::string &pointer) {
  const Json &v = field(j, key, pointer);
  if (!v.is_number_integer()) schema_error(pointer + "/" + key, "expected an integer");
  return v.get<long>();
}

void check_schema(const Json &j) {
  if (string_field(j, "schema", "") != kSchema) schema_error("/schema", std::string("expected \"") + kSchema + "\"");
}

Rational rational_from_json(const Json &j, const std::string &pointer) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) schema_error(pointer, "expected a rational as string or integer");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error &) {
    schema_error(pointer, "malformed rational '" + j.get<std::string>() + "'");
  }
}

GroupPtr group_from_spec(const std::string &spec, const std::string &pointer) {
  try {
    return std::make_shared<const FiniteGroup>(builtin_group(spec));
  } catch (const Error &e) {
    schema_error(pointer, e.what());
  }
}

// Character expressions.

struct Node {
  enum Kind { Name, Number, Sum, Scale, Conj, Galois, Tensor } kind;
  std::string name;
  long value = 0;  // Number, Scale factor, Galois exponent
  std::vector<std::unique_ptr<Node>> kids;
  std::vector<int> signs;  // Sum
};
using NodePtr = std::unique_ptr<Node>;

class CharParser {
public:
  explicit CharParser(std::string_view s) : s_(s) {}

  NodePtr parse() {
    NodePtr n = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return n;
  }

private:
  [[noreturn]] void error(const std::string &what) {
    fail(ErrorCode::ParseError, "character expression at offset " + std::to_string(pos_) + ": " + what + " in '" +
                                    std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }
  bool at_tensor() {
    skip();
    if (s_.substr(pos_, 2) == "\xc3\x97") return true;  // U+00D7
    if (pos_ < s_.size() && s_[pos_] == 'x') {
      std::size_t q = pos_ + 1;
      return q >= s_.size() || !(std::isalnum(static_cast<unsigned char>(s_[q])) || s_[q] == '_');
    }
    return false;
  }
  void take_tensor() { pos_ += s_[pos_] == 'x' ? 1 : 2; }
  bool at_number() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  long number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected a number");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  std::string ident() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) error("expected a name");
    return std::string(s_.substr(start, pos_ - start));
  }

  NodePtr expr() {
    auto sum = std::make_unique<Node>(Node{Node::Sum, "", 0, {}, {}});
    int sign = accept('-') ? -1 : 1;
    for (;;) {
      sum->kids.push_back(term());
      sum->signs.push_back(sign);
      if (accept('+')) sign = 1;
      else if (accept('-')) sign = -1;
      else break;
    }
    return sum;
  }

  NodePtr term() {
    if (at_number()) {
      std::size_t save = pos_;
      long n = number();
      accept('*');
      skip();
      const bool factor_follows = pos_ < s_.size() && !at_tensor() &&
                                  (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(');
      if (factor_follows) {
        auto scale = std::make_unique<Node>(Node{Node::Scale, "", n, {}, {}});
        scale->kids.push_back(tensor());
        return scale;
      }
      pos_ = save;
    }
    return tensor();
  }

  NodePtr tensor() {
    NodePtr first = factor();
    if (!at_tensor()) return first;
    auto t = std::make_unique<Node>(Node{Node::Tensor, "", 0, {}, {}});
    t->kids.push_back(std::move(first));
    while (at_tensor()) {
      take_tensor();
      t->kids.push_back(scaled_factor());
    }
    return t;
  }

  // "2*alpha" after a tensor sign scales that factor only.
  NodePtr scaled_factor() {
    if (at_number()) {
      std::size_t save = pos_;
      long n = number();
      if (accept('*')) {
        auto scale = std::make_unique<Node>(Node{Node::Scale, "", n, {}, {}});
        scale->kids.push_back(factor());
        return scale;
      }
      pos_ = save;
    }
    return factor();
  }

  NodePtr factor() {
    if (accept('(')) {
      NodePtr e = expr();
      expect(')');
      return e;
    }
    if (at_number()) return std::make_unique<Node>(Node{Node::Number, "", number(), {}, {}});
    std::string name = ident();
    if (name == "conj") {
      expect('(');
      auto n = std::make_unique<Node>(Node{Node::Conj, "", 0, {}, {}});
      n->kids.push_back(expr());
      expect(')');
      return n;
    }
    if (name == "galois") {
      expect('(');
      auto n = std::make_unique<Node>(Node{Node::Galois, "", 0, {}, {}});
      n->kids.push_back(expr());
      expect(',');
      n->value = number();
      expect(')');
      return n;
    }
    return std::make_unique<Node>(Node{Node::Name, name, 0, {}, {}});
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::optional<Character> faithful_of_degree_two(const CharacterTable &t) {
  for (const auto &psi : t.irreducibles)
    if (psi.degree() == Cyclotomic(2) && kernel_of(psi).is_trivial()) return psi;
  return std::nullopt;
}

Character named_character(const CharacterTable &t, const GroupSpec &spec, const std::string &name) {
  if (name == "trivial") return t.trivial();
  if (name == "rho" || name == "regular") return t.regular();
  auto indexed = [&](const char *prefix) {
    const std::size_t k = std::string_view(prefix).size();
    return name.size() > k && name.compare(0, k, prefix) == 0 &&
           std::all_of(name.begin() + k, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  if (indexed("chi")) {
    int i = std::stoi(name.substr(3));
    if (i < 0 || i >= t.size()) fail(ErrorCode::ParseError, "no irreducible " + name);
    return t.irreducibles[i];
  }
  if (spec.kind == "cyclic" && (name == "lambda" || name == "beta")) {
    const int n = t.group->order();
    for (const auto &psi : t.irreducibles)
      if (psi.degree() == Cyclotomic(1) && psi.at(n > 1 ? 1 : 0) == Cyclotomic::root_of_unity(n, 1))
        return name == "lambda" ? psi : psi + psi.conj();
  }
  if (spec.kind == "elem_abelian" && indexed("sigma")) {
    const long p = spec.params[0], r = spec.params[1];
    const long i = std::stol(name.substr(5));
    if (i < 1 || i > r) fail(ErrorCode::ParseError, "no character " + name + " on " + spec.str());
    long gen = 1;
    for (long k = 1; k < i; ++k) gen *= p;
    for (const auto &psi : t.irreducibles) {
      if (!(psi.degree() == Cyclotomic(1))) continue;
      bool ok = true;
      for (long k = 0, gk = 1; k < r && ok; ++k, gk *= p)
        ok = psi.at(static_cast<int>(gk)) == (gk == gen ? Cyclotomic::root_of_unity(static_cast<int>(p), 1)
                                                        : Cyclotomic(1));
      if (ok) return psi;
    }
  }
  if (((spec.kind == "quaternion8" || spec.kind == "dicyclic") && name == "alpha") ||
      (spec.kind == "dihedral" && name == "psi"))
    if (auto psi = faithful_of_degree_two(t)) return *psi;
  fail(ErrorCode::ParseError, "unknown character name '" + name + "' for " + spec.str());
}

Character evaluate(const Node &n, const CharacterTable &t, const GroupSpec &spec) {
  switch (n.kind) {
  case Node::Name: return named_character(t, spec, n.name);
  case Node::Number: return Rational(n.value) * t.trivial();
  case Node::Scale: return Rational(n.value) * evaluate(*n.kids[0], t, spec);
  case Node::Conj: return evaluate(*n.kids[0], t, spec).conj();
  case Node::Galois: return evaluate(*n.kids[0], t, spec).galois(n.value);
  case Node::Sum: {
    Character c = Character::zero(t.classes);
    for (std::size_t i = 0; i < n.kids.size(); ++i) {
      Character k = evaluate(*n.kids[i], t, spec);
      if (n.signs[i] < 0) c -= k;
      else c += k;
    }
    return c;
  }
  case Node::Tensor: {
    if (spec.kind != "product" || spec.factors.size() != n.kids.size())
      fail(ErrorCode::ParseError, "tensor product with " + std::to_string(n.kids.size()) + " factors needs a " +
                                      std::to_string(n.kids.size()) + "-fold product group, not " + spec.str());
    std::vector<Character> parts;
    std::vector<int> orders;
    for (std::size_t i = 0; i < n.kids.size(); ++i) {
      TablePtr ft = character_table(std::make_shared<const FiniteGroup>(build_group(spec.factors[i])));
      parts.push_back(evaluate(*n.kids[i], *ft, spec.factors[i]));
      orders.push_back(ft->group->order());
    }
    return outer_tensor(t.classes, orders, parts);
  }
  }
  fail(ErrorCode::ParseError, "bad expression");
}

std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

Json subgroup_to_json(const Subgroup &s) { return Json(s.elements()); }

Subgroup subgroup_from_json(int order, const Json &j, const std::string &pointer) {
  if (!j.is_array()) schema_error(pointer, "expected an element list");
  std::vector<int> xs;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer() || j[i].get<int>() < 0 || j[i].get<int>() >= order)
      schema_error(pointer + "/" + std::to_string(i), "expected an element index");
    xs.push_back(j[i].get<int>());
  }
  return Subgroup(order, std::move(xs));
}

} // namespace

std::vector<std::string> catalog(int max_order) {
  const int families = std::min(max_order, 32);
  std::vector<std::string> out;
  auto add = [&](const std::string &s) {
    if (spec_order(parse_group_spec(s)) <= max_order) out.push_back(s);
  };
  for (int n = 1; n <= families; ++n) add("cyclic(" + std::to_string(n) + ")");
  for (int p = 2; p <= families; ++p) {
    if (!is_prime(p)) continue;
    for (int r = 2, q = p * p; q <= families; ++r, q *= p)
      add("elem_abelian(" + std::to_string(p) + "," + std::to_string(r) + ")");
  }
  for (int n = 3; 2 * n <= families; ++n) add("dihedral(" + std::to_string(n) + ")");
  for (int n = 2; 4 * n <= families; ++n) add("dicyclic(" + std::to_string(n) + ")");
  add("quaternion8");
  add("product(quaternion8,cyclic(4))");
  add("product(quaternion8,cyclic(7))");
  add("product(quaternion8,quaternion8)");
  return out;
}

std::vector<std::string> catalog_products(int max_order) {
  std::vector<std::string> base = catalog(std::min(max_order / 2, 32));
  std::vector<std::string> out;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j) {
      const long a = spec_order(parse_group_spec(base[i])), b = spec_order(parse_group_spec(base[j]));
      if (a > 1 && b > 1 && a * b <= max_order) out.push_back("product(" + base[i] + "," + base[j] + ")");
    }
  return out;
}

std::string group_spec_of(const FiniteGroup &g) { return parse_group_spec(g.label()).str(); }

Cyclotomic parse_cyclotomic(std::string_view text) {
  const std::string s = trim(text);
  auto bad = [&](const std::string &why) -> Cyclotomic {
    fail(ErrorCode::ParseError, "cyclotomic literal '" + s + "': " + why);
  };
  if (s.empty()) return bad("empty");
  Cyclotomic out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  };
  bool first = true;
  while (true) {
    skip();
    if (pos >= s.size()) break;
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      return bad("expected '+' or '-'");
    }
    first = false;
    Rational coeff(1);
    std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
    if (pos > start) coeff = Rational::parse(s.substr(start, pos - start));
    skip();
    if (pos < s.size() && s[pos] == '*') {
      ++pos;
      skip();
    }
    if (pos < s.size() && s[pos] == 'z') {
      ++pos;
      std::size_t ns = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (ns == pos) return bad("expected the conductor after 'z'");
      const int n = std::stoi(s.substr(ns, pos - ns));
      long e = 1;
      if (pos < s.size() && s[pos] == '^') {
        std::size_t es = ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (es == pos) return bad("expected an exponent");
        e = std::stol(s.substr(es, pos - es));
      }
      if (n < 1) return bad("conductor must be positive");
      out += Cyclotomic::from_terms(n, {{e, coeff * Rational(sign)}});
    } else {
      if (pos == start) return bad("expected a coefficient or a root of unity");
      out += Cyclotomic(coeff * Rational(sign));
    }
  }
  return out;
}

Character parse_character(const CharacterTable &t, std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) fail(ErrorCode::ParseError, "empty character");
  if (s.front() == '[') {
    if (s.back() != ']') fail(ErrorCode::ParseError, "unterminated multiplicity list '" + s + "'");
    std::vector<Rational> m;
    for (const auto &part : split_top(std::string_view(s).substr(1, s.size() - 2), ','))
      m.push_back(Rational::parse(trim(part)));
    if (static_cast<int>(m.size()) != t.size())
      fail(ErrorCode::ParseError, "expected " + std::to_string(t.size()) + " multiplicities, got " +
                                      std::to_string(m.size()));
    return t.from_multiplicities(m);
  }
  if (s.front() == '{') {
    if (s.back() != '}') fail(ErrorCode::ParseError, "unterminated value list '" + s + "'");
    std::vector<Cyclotomic> values;
    for (const auto &part : split_top(std::string_view(s).substr(1, s.size() - 2), ';'))
      values.push_back(parse_cyclotomic(part));
    if (static_cast<int>(values.size()) != t.classes->count())
      fail(ErrorCode::ParseError, "expected " + std::to_string(t.classes->count()) + " class values, got " +
                                      std::to_string(values.size()));
    return Character(t.classes, std::move(values));
  }
  NodePtr ast = CharParser(s).parse();
  return evaluate(*ast, t, parse_group_spec(t.group->label()));
}

Json cyclotomic_to_json(const Cyclotomic &c) { return c.str(); }

Cyclotomic cyclotomic_from_json(const Json &j, const std::string &pointer) {
  if (j.is_number_integer()) return Cyclotomic(j.get<long>());
  if (!j.is_string()) schema_error(pointer, "expected a cyclotomic literal string");
  try {
    return parse_cyclotomic(j.get<std::string>());
  } catch (const Error &e) {
    schema_error(pointer, e.what());
  }
}

Json character_to_json(const Character &c) {
  Json values = Json::array();
  for (const auto &v : c.values()) values.push_back(cyclotomic_to_json(v));
  return values;
}

Character character_from_json(const CharacterTable &t, const Json &j, const std::string &pointer) {
  if (!j.is_array() || static_cast<int>(j.size()) != t.classes->count())
    schema_error(pointer, "expected " + std::to_string(t.classes->count()) + " class values");
  std::vector<Cyclotomic> values;
  for (std::size_t i = 0; i < j.size(); ++i) values.push_back(cyclotomic_from_json(j[i], pointer + "/" + std::to_string(i)));
  try {
    return Character(t.classes, std::move(values));
  } catch (const Error &e) {
    schema_error(pointer, e.what());
  }
}

Json table_to_json(const CharacterTable &t) {
  Json j;
  j["schema"] = kSchema;
  j["group"] = group_spec_of(*t.group);
  j["order"] = t.group->order();
  Json classes = Json::array();
  for (int c = 0; c < t.classes->count(); ++c)
    classes.push_back(Json{{"representative", t.classes->representatives[c]},
                           {"size", t.classes->sizes[c]},
                           {"element_order", t.classes->element_order[c]}});
  j["classes"] = classes;
  Json irr = Json::array();
  for (int i = 0; i < t.size(); ++i)
    irr.push_back(Json{{"values", character_to_json(t.irreducibles[i])}, {"fs_indicator", t.fs_indicators[i]}});
  j["irreducibles"] = irr;
  j["galois_orbits"] = t.galois_orbits;
  return j;
}

TablePtr table_from_json(const Json &j) {
  check_schema(j);
  GroupPtr g = group_from_spec(string_field(j, "group", ""), "/group");
  if (integer_field(j, "order", "") != g->order()) schema_error("/order", "does not match the group");
  ClassDataPtr classes = conjugacy_classes(g);
  const Json &cj = field(j, "classes", "");
  if (!cj.is_array() || static_cast<int>(cj.size()) != classes->count())
    schema_error("/classes", "expected " + std::to_string(classes->count()) + " classes");
  for (int c = 0; c < classes->count(); ++c) {
    const std::string p = "/classes/" + std::to_string(c);
    if (integer_field(cj[c], "representative", p) != classes->representatives[c] ||
        integer_field(cj[c], "size", p) != classes->sizes[c])
      schema_error(p, "class does not match the recomputed class list");
  }
  const Json &ij = field(j, "irreducibles", "");
  if (!ij.is_array()) schema_error("/irreducibles", "expected an array");
  CharacterTable shell;
  shell.group = g;
  shell.classes = classes;
  std::vector<Character> irr;
  for (std::size_t i = 0; i < ij.size(); ++i) {
    const std::string p = "/irreducibles/" + std::to_string(i);
    irr.push_back(character_from_json(shell, field(ij[i], "values", p), p + "/values"));
  }
  try {
    return finish_table(g, classes, std::move(irr));
  } catch (const Error &e) {
    schema_error("/irreducibles", e.what());
  }
}

Json representation_to_json(const RationalRepresentation &rep) {
  Json j;
  j["schema"] = kSchema;
  j["group"] = group_spec_of(rep.group());
  j["dim"] = rep.dim;
  Json gens = Json::array();
  for (int s : rep.generators) {
    Json m = Json::array();
    for (int r = 0; r < rep.dim; ++r) {
      Json row = Json::array();
      for (int c = 0; c < rep.dim; ++c) row.push_back(rep.matrices[s](r, c).str());
      m.push_back(row);
    }
    gens.push_back(Json{{"element", s}, {"matrix", m}});
  }
  j["generators"] = gens;
  j["character"] = character_to_json(rep.character);
  return j;
}

RationalRepresentation representation_from_json(const CharacterTable &t, const Json &j) {
  check_schema(j);
  if (string_field(j, "group", "") != group_spec_of(*t.group))
    schema_error("/group", "representation is for a different group");
  if (j.contains("kind")) {
    const std::string kind = string_field(j, "kind", "");
    if (kind == "regular") return regular_representation(t.classes);
    if (kind == "ideal") return ideal_component_rep(t, parse_character(t, string_field(j, "character", "")));
    if (kind != "matrices") schema_error("/kind", "expected regular, ideal or matrices");
  }
  const Json &gj = field(j, "generators", "");
  if (!gj.is_array() || gj.empty()) schema_error("/generators", "expected a nonempty array");
  std::vector<std::pair<int, RationalMatrix>> gens;
  for (std::size_t i = 0; i < gj.size(); ++i) {
    const std::string p = "/generators/" + std::to_string(i);
    const long x = integer_field(gj[i], "element", p);
    if (x < 0 || x >= t.group->order()) schema_error(p + "/element", "element out of range");
    const Json &mj = field(gj[i], "matrix", p);
    if (!mj.is_array() || mj.empty()) schema_error(p + "/matrix", "expected a square matrix");
    const int d = static_cast<int>(mj.size());
    RationalMatrix m(d, d);
    for (int r = 0; r < d; ++r) {
      const std::string pr = p + "/matrix/" + std::to_string(r);
      if (!mj[r].is_array() || static_cast<int>(mj[r].size()) != d) schema_error(pr, "expected a row of length " + std::to_string(d));
      for (int c = 0; c < d; ++c) m(r, c) = rational_from_json(mj[r][c], pr + "/" + std::to_string(c));
    }
    gens.emplace_back(static_cast<int>(x), std::move(m));
  }
  return rep_from_generators(t.classes, gens);
}

Json verdict_to_json(const FiniteGroup &g, const ClassificationVerdict &v) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = "classify";
  j["group"] = group_spec_of(g);
  j["mode"] = realization_name(v.kind);
  j["realizable"] = v.realizable;
  j["matched_case"] = v.matched_case;
  Json matches = Json::array();
  for (const auto &m : v.matches) {
    Json mj;
    mj["case"] = m.case_id;
    mj["tag"] = m.tag;
    Json w = Json::object();
    for (const auto &[k, val] : m.witness) w[k] = val;
    mj["witness"] = w;
    if (m.automorphism) mj["automorphism"] = Json{{"N", subgroup_to_json(m.automorphism->N)}, {"z", m.automorphism->z}};
    matches.push_back(mj);
  }
  j["matches"] = matches;
  j["notes"] = v.notes;
  return j;
}

ClassificationVerdict verdict_from_json(const Json &j) {
  check_schema(j);
  GroupPtr g = group_from_spec(string_field(j, "group", ""), "/group");
  ClassificationVerdict v;
  const std::string mode = string_field(j, "mode", "");
  if (mode == "euclidean") v.kind = Realization::Euclidean;
  else if (mode == "affine") v.kind = Realization::Affine;
  else if (mode == "rational") v.kind = Realization::Rational;
  else schema_error("/mode", "expected euclidean, affine or rational");
  const Json &r = field(j, "realizable", "");
  if (!r.is_boolean()) schema_error("/realizable", "expected a boolean");
  v.realizable = r.get<bool>();
  v.matched_case = string_field(j, "matched_case", "");
  const Json &mj = field(j, "matches", "");
  if (!mj.is_array()) schema_error("/matches", "expected an array");
  for (std::size_t i = 0; i < mj.size(); ++i) {
    const std::string p = "/matches/" + std::to_string(i);
    CaseMatch m;
    m.case_id = string_field(mj[i], "case", p);
    m.tag = string_field(mj[i], "tag", p);
    const Json &w = field(mj[i], "witness", p);
    if (!w.is_object()) schema_error(p + "/witness", "expected an object");
    for (const auto &[k, val] : w.items()) {
      if (!val.is_string()) schema_error(p + "/witness/" + k, "expected a string");
      m.witness.emplace_back(k, val.get<std::string>());
    }
    if (mj[i].contains("automorphism")) {
      const Json &a = mj[i]["automorphism"];
      const std::string pa = p + "/automorphism";
      m.automorphism = AutomorphismData{subgroup_from_json(g->order(), field(a, "N", pa), pa + "/N"),
                                        static_cast<int>(integer_field(a, "z", pa))};
    }
    v.matches.push_back(std::move(m));
  }
  const Json &nj = field(j, "notes", "");
  if (!nj.is_array()) schema_error("/notes", "expected an array");
  for (std::size_t i = 0; i < nj.size(); ++i) {
    if (!nj[i].is_string()) schema_error("/notes/" + std::to_string(i), "expected a string");
    v.notes.push_back(nj[i].get<std::string>());
  }
  if (v.realizable != v.matches.empty()) schema_error("/realizable", "inconsistent with the matches");
  return v;
}

Json perm_group_to_json(const PermGroup &g) {
  return Json{{"degree", g.degree()}, {"order", g.order().get_str()}, {"generators", g.generators()}};
}

Json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    fail(ErrorCode::ParseError, "'" + path + "': " + e.what());
  }
}

Json error_to_json(const Error &e) {
  return Json{{"schema", kSchema}, {"error", std::string(error_code_name(e.code()))}, {"message", e.what()}};
}

} // namespace orbitsym
