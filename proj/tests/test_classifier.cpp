#include <gtest/gtest.h>

#include "orbitsym/classifier.hpp"
#include "orbitsym/error.hpp"
#include "orbitsym/structure.hpp"
#include "support.hpp"

using namespace orbitsym;
using namespace testing_support;

namespace {

bool has_case(const ClassificationVerdict &v, const std::string &id) {
  for (const auto &m : v.matches)
    if (m.case_id == id) return true;
  return false;
}

std::string witness_value(const CaseMatch &m, const std::string &key) {
  for (const auto &[k, v] : m.witness)
    if (k == key) return v;
  return "";
}

std::vector<std::string> classifier_catalog() {
  std::vector<std::string> c = small_catalog();
  for (const char *s : {"elem_abelian(2,5)", "product(quaternion8,cyclic(4))", "product(quaternion8,cyclic(3))",
                        "product(dicyclic(3),cyclic(2))", "dihedral(12)", "dicyclic(6)", "cyclic(21)"})
    c.emplace_back(s);
  return c;
}

} // namespace

TEST(Euclidean, Examples) {
  auto c3 = classify_euclidean(*group_of("cyclic(3)"));
  EXPECT_FALSE(c3.realizable);
  EXPECT_EQ(c3.matches.front().case_id, "i");
  EXPECT_TRUE(classify_euclidean(*group_of("elem_abelian(2,2)")).realizable);
  EXPECT_TRUE(classify_euclidean(*group_of("dihedral(4)")).realizable);
  EXPECT_FALSE(classify_euclidean(*group_of("quaternion8")).realizable);
  EXPECT_TRUE(classify_euclidean(*group_of("cyclic(1)")).realizable);
}

TEST(Affine, Examples) {
  auto c6 = classify_affine(*group_of("cyclic(6)"));
  EXPECT_FALSE(c6.realizable);
  EXPECT_EQ(c6.matched_case, "abelian exponent>2");
  auto e16 = classify_affine(*group_of("elem_abelian(2,4)"));
  EXPECT_FALSE(e16.realizable);
  EXPECT_EQ(e16.matches.front().case_id, "iii");
  EXPECT_TRUE(classify_affine(*group_of("elem_abelian(2,5)")).realizable);
  EXPECT_TRUE(classify_affine(*group_of("product(quaternion8,cyclic(7))")).realizable);
  auto q8 = classify_affine(*group_of("quaternion8"));
  EXPECT_FALSE(q8.realizable);
  EXPECT_EQ(q8.matched_case, "generalized dicyclic");
  // C4 satisfies the literal dicyclic definition but is reported as abelian only.
  auto c4 = classify_affine(*group_of("cyclic(4)"));
  ASSERT_EQ(c4.matches.size(), 1u);
  EXPECT_EQ(c4.matches.front().case_id, "i");
  EXPECT_TRUE(classify_affine(*group_of("cyclic(2)")).realizable);
  EXPECT_TRUE(classify_affine(*group_of("cyclic(1)")).realizable);
}

TEST(RationalClassification, QuaternionTimesC7) {
  auto v = classify_rational(*group_of("product(quaternion8,cyclic(7))"));
  EXPECT_FALSE(v.realizable);
  EXPECT_EQ(v.matches.front().case_id, "ii");
  EXPECT_EQ(witness_value(v.matches.front(), "ord_2_mod_|A|"), "3");
  EXPECT_EQ(witness_value(v.matches.front(), "|A|"), "7");
}

TEST(RationalClassification, Examples) {
  EXPECT_TRUE(classify_rational(*group_of("product(quaternion8,cyclic(4))")).realizable);
  EXPECT_TRUE(classify_rational(*group_of("elem_abelian(2,5)")).realizable);
  auto e8 = classify_rational(*group_of("elem_abelian(2,3)"));
  EXPECT_FALSE(e8.realizable);
  EXPECT_EQ(e8.matches.front().case_id, "i");
  EXPECT_TRUE(classify_rational(*group_of("dihedral(3)")).realizable);
  // Q8 x C3: ord_3(2) = 2 is even.
  EXPECT_TRUE(classify_rational(*group_of("product(quaternion8,cyclic(3))")).realizable);
}

TEST(RationalClassification, PowerMapCase) {
  // C3 x| C4 with the generator of C4 inverting C3: p = 2, q = 3, c = d = 1.
  auto v = classify_rational(*group_of("dicyclic(3)"));
  EXPECT_FALSE(v.realizable);
  EXPECT_EQ(v.matched_case, "generalized dicyclic");
  ASSERT_TRUE(has_case(v, "iv"));
  for (const auto &m : v.matches)
    if (m.case_id == "iv") {
      EXPECT_EQ(witness_value(m, "p"), "2");
      EXPECT_EQ(witness_value(m, "q"), "3");
      EXPECT_EQ(witness_value(m, "k"), "2");
    }
  EXPECT_FALSE(has_case(classify_rational(*group_of("dihedral(3)")), "iv"));
}

TEST(RationalClassification, SizeLimit) {
  std::vector<std::vector<int>> table(130, std::vector<int>(130));
  for (int a = 0; a < 130; ++a)
    for (int b = 0; b < 130; ++b) table[a][b] = (a + b) % 130;
  try {
    classify_rational(FiniteGroup::from_table(table, 0));
    ADD_FAILURE() << "no error";
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeLimit);
  }
}

TEST(RealKernel, Examples) {
  EXPECT_TRUE(nker_R(*table_of("dihedral(3)")).is_trivial());
  EXPECT_TRUE(nker_R(*table_of("quaternion8")).is_whole());
  EXPECT_TRUE(nker_R(*table_of("cyclic(2)")).is_whole());
  EXPECT_FALSE(nker_R(*table_of("product(quaternion8,cyclic(4))")).is_trivial());
  EXPECT_TRUE(nker_R(*table_of("product(quaternion8,cyclic(3))")).is_trivial());
}

TEST(Witness, Quaternion) {
  auto t = table_of("quaternion8");
  const FiniteGroup &g = *t->group;
  Subgroup n = generated_subgroup(g, {1});
  auto w = witness_automorphism(g, n, 2);
  for (int x = 0; x < 8; ++x) EXPECT_EQ(w.alpha[x], n.contains(x) ? x : g.mul(x, 2));
  EXPECT_TRUE(verify_witness(w, *t));
}

TEST(Witness, CyclicFourIsInversion) {
  auto t = table_of("cyclic(4)");
  const FiniteGroup &g = *t->group;
  auto w = witness_automorphism(g, generated_subgroup(g, {2}), 2);
  for (int x = 0; x < 4; ++x) EXPECT_EQ(w.alpha[x], g.inv(x));
  EXPECT_TRUE(verify_witness(w, *t));
}

TEST(Witness, RejectsBrokenHypotheses) {
  auto g = group_of("dihedral(3)");
  auto code = [&](const Subgroup &n, int z) {
    try {
      witness_automorphism(*g, n, z);
    } catch (const Error &e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  Subgroup a3 = generated_subgroup(*g, {1});
  EXPECT_EQ(code(a3, 1), ErrorCode::BadWitnessData);
  EXPECT_EQ(code(generated_subgroup(*g, {3}), 3), ErrorCode::BadWitnessData);  // not normal
  EXPECT_EQ(code(Subgroup::trivial(*g), 1), ErrorCode::BadWitnessData);       // index 6
}

TEST(Witness, RationalCaseOfQuaternionTimesC7) {
  auto t = table_of("product(quaternion8,cyclic(7))");
  auto v = classify_rational(*t->group);
  ASSERT_TRUE(v.matches.front().automorphism.has_value());
  const auto &a = *v.matches.front().automorphism;
  auto w = witness_automorphism(*t->group, a.N, a.z);
  EXPECT_TRUE(verify_witness(w, *t));
  EXPECT_FALSE(perm_is_identity(w.alpha));
  EXPECT_EQ(w.alpha[t->group->identity()], t->group->identity());
}

// Properties over the catalog.

TEST(ClassifierProperties, AffineImpliesEuclideanExceptSmallTwoGroups) {
  for (const auto &spec : classifier_catalog()) {
    auto g = group_of(spec);
    const bool aff = classify_affine(*g).realizable, euc = classify_euclidean(*g).realizable;
    if (aff) EXPECT_TRUE(euc) << spec;
    const bool exception = is_abelian(*g) && g->exponent() <= 2 &&
                           (g->order() == 4 || g->order() == 8 || g->order() == 16);
    EXPECT_EQ(euc && !aff, exception) << spec;
  }
}

TEST(ClassifierProperties, RationalImpliesAffine) {
  for (const auto &spec : classifier_catalog()) {
    auto g = group_of(spec);
    if (classify_rational(*g).realizable) EXPECT_TRUE(classify_affine(*g).realizable) << spec;
  }
}

TEST(ClassifierProperties, RealKernelMatchesListAndRealizability) {
  for (const auto &spec : classifier_catalog()) {
    auto t = table_of(spec);
    const Subgroup k = nker_R(*t);
    EXPECT_EQ(!k.is_trivial(), has_nontrivial_real_kernel_shape(*t->group)) << spec;
    if (k.is_trivial()) EXPECT_TRUE(classify_affine(*t->group).realizable) << spec;
  }
}

TEST(ClassifierProperties, RationalWitnessesVerify) {
  for (const auto &spec : classifier_catalog()) {
    auto t = table_of(spec);
    for (const auto &m : classify_rational(*t->group).matches) {
      if (!m.automorphism) continue;
      auto w = witness_automorphism(*t->group, m.automorphism->N, m.automorphism->z);
      EXPECT_TRUE(verify_witness(w, *t)) << spec << " case " << m.case_id;
      EXPECT_FALSE(perm_is_identity(w.alpha)) << spec;
    }
  }
}
