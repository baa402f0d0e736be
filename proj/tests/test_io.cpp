#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "orbitsym/classifier.hpp"
#include "orbitsym/error.hpp"
#include "orbitsym/generic_symmetry.hpp"
#include "orbitsym/io.hpp"
#include "support.hpp"

using namespace orbitsym;
using namespace testing_support;

namespace {

ErrorCode code_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::BadParameter;
}

std::string message_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.what();
  }
  return "";
}

RationalRepresentation rotation_rep(const CharacterTable &t) {
  RationalMatrix m(2, 2);
  m(0, 1) = Rational(-1);
  m(1, 0) = Rational(1);
  return rep_from_generators(t.classes, {{1, m}});
}

bool contains(const std::vector<std::string> &v, const std::string &s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

} // namespace

TEST(Catalog, ContainsTheAnchorsAndRespectsTheBound) {
  std::vector<std::string> c = catalog(32);
  for (const char *s : {"cyclic(1)", "cyclic(32)", "elem_abelian(2,4)", "dihedral(3)", "dicyclic(2)", "quaternion8",
                        "product(quaternion8,cyclic(4))"})
    EXPECT_TRUE(contains(c, s)) << s;
  EXPECT_FALSE(contains(c, "product(quaternion8,quaternion8)"));
  EXPECT_TRUE(contains(catalog(64), "product(quaternion8,quaternion8)"));
  for (const auto &s : c) EXPECT_LE(builtin_group(s).order(), 32) << s;
  std::vector<std::string> sorted = c;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(std::unique(sorted.begin(), sorted.end()), sorted.end());
}

TEST(Catalog, ProductsStayWithinTheBound) {
  for (const auto &s : catalog_products(16)) EXPECT_LE(builtin_group(s).order(), 16) << s;
  EXPECT_FALSE(catalog_products(16).empty());
}

TEST(Catalog, SpecTextRoundTrips) {
  for (const auto &s : catalog(32)) EXPECT_EQ(group_spec_of(builtin_group(s)), s);
}

TEST(Parse, CyclotomicInvertsStr) {
  TablePtr t = table_of("cyclic(12)");
  for (const auto &psi : t->irreducibles)
    for (const auto &v : psi.values()) EXPECT_EQ(parse_cyclotomic(v.str()), v) << v.str();
  EXPECT_EQ(parse_cyclotomic("1/2"), Cyclotomic(Rational(1, 2)));
  EXPECT_EQ(code_of([] { parse_cyclotomic("z0"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_cyclotomic("1 +"); }), ErrorCode::ParseError);
}

TEST(Parse, CharacterForms) {
  TablePtr t = table_of("cyclic(4)");
  Character lambda = parse_character(*t, "lambda");
  EXPECT_EQ(lambda.at(1), Cyclotomic::root_of_unity(4, 1));
  EXPECT_EQ(parse_character(*t, "beta"), lambda + lambda.conj());
  EXPECT_EQ(parse_character(*t, "conj(lambda)"), lambda.conj());
  EXPECT_EQ(parse_character(*t, "galois(lambda,3)"), lambda.galois(3));
  EXPECT_EQ(parse_character(*t, "2*lambda - lambda"), lambda);
  EXPECT_EQ(parse_character(*t, "1 + rho"), Character::trivial(t->classes) + Character::regular(t->classes));
  EXPECT_EQ(parse_character(*t, "[0,1,0,0]"), t->irreducibles[1]);
  Character by_values = parse_character(*t, "{2;0;-2;0}");
  EXPECT_EQ(by_values, lambda + lambda.conj());
}

TEST(Parse, NamedCharactersPerFamily) {
  TablePtr c2 = table_of("elem_abelian(2,2)");
  Character s1 = parse_character(*c2, "sigma1");
  Character s2 = parse_character(*c2, "sigma2");
  EXPECT_EQ(s1.at(1), Cyclotomic(-1));
  EXPECT_EQ(s1.at(2), Cyclotomic(1));
  EXPECT_EQ(s2.at(2), Cyclotomic(-1));
  TablePtr q8 = table_of("quaternion8");
  EXPECT_EQ(parse_character(*q8, "alpha").degree(), Cyclotomic(2));
  TablePtr d4 = table_of("dihedral(4)");
  EXPECT_EQ(parse_character(*d4, "psi").degree(), Cyclotomic(2));
  EXPECT_EQ(code_of([&] { parse_character(*q8, "lambda"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { parse_character(*q8, "chi99"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { parse_character(*q8, "sigmax"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { parse_character(*q8, "alpha +"); }), ErrorCode::ParseError);
}

TEST(Parse, TensorOnProducts) {
  TablePtr t = table_of("product(quaternion8,cyclic(4))");
  EXPECT_EQ(parse_character(*t, "alpha x beta").degree(), Cyclotomic(4));
  Character chi = parse_character(*t, "alpha x beta + 2*alpha x 1 + 1 x beta");
  EXPECT_EQ(chi.degree(), Cyclotomic(10));
  GenericSymmetryResult r = sym_group_of_character(*t, chi);
  EXPECT_EQ(r.group.order(), 32);
  EXPECT_EQ(parse_character(*t, "1 x 2*beta"), parse_character(*t, "2*(1 x beta)"));
  EXPECT_EQ(code_of([&] { parse_character(*table_of("cyclic(4)"), "lambda x lambda"); }), ErrorCode::ParseError);
}

TEST(Json, TableRoundTrip) {
  for (const char *s : {"cyclic(6)", "quaternion8", "dihedral(5)", "product(cyclic(3),cyclic(3))"}) {
    TablePtr t = table_of(s);
    Json j = table_to_json(*t);
    TablePtr back = table_from_json(Json::parse(j.dump()));
    ASSERT_EQ(back->size(), t->size()) << s;
    for (int i = 0; i < t->size(); ++i) EXPECT_EQ(back->irreducibles[i].values(), t->irreducibles[i].values()) << s;
    EXPECT_EQ(table_to_json(*back), j) << s;
  }
}

TEST(Json, TableRejectsTampering) {
  TablePtr t = table_of("cyclic(3)");
  Json j = table_to_json(*t);
  j["irreducibles"][1]["values"][1] = "2";
  std::string msg = message_of([&] { table_from_json(j); });
  EXPECT_NE(msg.find("/irreducibles"), std::string::npos) << msg;
  Json k = table_to_json(*t);
  k["classes"][2]["size"] = 5;
  EXPECT_NE(message_of([&] { table_from_json(k); }).find("/classes/2"), std::string::npos);
  Json m = table_to_json(*t);
  m["schema"] = "other/9";
  EXPECT_EQ(code_of([&] { table_from_json(m); }), ErrorCode::SchemaError);
}

TEST(Json, SchemaErrorCarriesThePointer) {
  TablePtr t = table_of("cyclic(4)");
  Json j = representation_to_json(rotation_rep(*t));
  j["generators"][0]["matrix"][1][0] = "x";
  std::string msg = message_of([&] { representation_from_json(*t, j); });
  EXPECT_EQ(code_of([&] { representation_from_json(*t, j); }), ErrorCode::SchemaError);
  EXPECT_NE(msg.find("/generators/0/matrix/1/0"), std::string::npos) << msg;
}

TEST(Json, RepresentationRoundTrip) {
  TablePtr t = table_of("cyclic(4)");
  RationalRepresentation rep = rotation_rep(*t);
  RationalRepresentation back = representation_from_json(*t, Json::parse(representation_to_json(rep).dump()));
  EXPECT_EQ(back.dim, rep.dim);
  EXPECT_EQ(back.character, rep.character);
  for (int x = 0; x < t->group->order(); ++x) EXPECT_EQ(back.matrices[x], rep.matrices[x]);

  Json regular{{"schema", kSchema}, {"group", "cyclic(4)"}, {"kind", "regular"}};
  EXPECT_EQ(representation_from_json(*t, regular).dim, 4);
  Json ideal{{"schema", kSchema}, {"group", "cyclic(4)"}, {"kind", "ideal"}, {"character", "beta"}};
  EXPECT_EQ(representation_from_json(*t, ideal).dim, 2);
  Json foreign{{"schema", kSchema}, {"group", "cyclic(5)"}, {"kind", "regular"}};
  EXPECT_NE(message_of([&] { representation_from_json(*t, foreign); }).find("/group"), std::string::npos);
}

TEST(Json, VerdictRoundTrip) {
  for (const char *s : {"cyclic(4)", "quaternion8", "elem_abelian(2,3)", "product(quaternion8,cyclic(7))",
                        "dihedral(4)"}) {
    FiniteGroup g = builtin_group(s);
    for (const auto &v : {classify_euclidean(g), classify_affine(g), classify_rational(g)}) {
      Json j = verdict_to_json(g, v);
      ClassificationVerdict back = verdict_from_json(Json::parse(j.dump()));
      EXPECT_EQ(back.realizable, v.realizable) << s;
      EXPECT_EQ(back.matched_case, v.matched_case) << s;
      ASSERT_EQ(back.matches.size(), v.matches.size()) << s;
      for (std::size_t i = 0; i < v.matches.size(); ++i) {
        EXPECT_EQ(back.matches[i].witness, v.matches[i].witness);
        EXPECT_EQ(back.matches[i].automorphism.has_value(), v.matches[i].automorphism.has_value());
        if (v.matches[i].automorphism) {
          EXPECT_EQ(back.matches[i].automorphism->N, v.matches[i].automorphism->N);
          EXPECT_EQ(back.matches[i].automorphism->z, v.matches[i].automorphism->z);
        }
      }
      EXPECT_EQ(verdict_to_json(g, back), j) << s;
    }
  }
}

TEST(Json, VerdictRejectsInconsistency) {
  FiniteGroup g = builtin_group("cyclic(4)");
  Json j = verdict_to_json(g, classify_affine(g));
  j["realizable"] = true;
  EXPECT_NE(message_of([&] { verdict_from_json(j); }).find("/realizable"), std::string::npos);
}

TEST(Json, OutputIsDeterministic) {
  TablePtr a = table_of("dicyclic(3)");
  TablePtr b = table_of("dicyclic(3)");
  EXPECT_EQ(table_to_json(*a).dump(), table_to_json(*b).dump());
  FiniteGroup g = builtin_group("product(quaternion8,cyclic(7))");
  EXPECT_EQ(verdict_to_json(g, classify_rational(g)).dump(), verdict_to_json(g, classify_rational(g)).dump());
}

TEST(Json, ErrorReport) {
  Json j = error_to_json(Error(ErrorCode::NotSpanning, "orbit does not span"));
  EXPECT_EQ(j["schema"], kSchema);
  EXPECT_EQ(code_of([] { read_json_file("/nonexistent/x.json"); }), ErrorCode::ParseError);
}
