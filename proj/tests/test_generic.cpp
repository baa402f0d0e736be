#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "orbitsym/error.hpp"
#include "orbitsym/generic_symmetry.hpp"
#include "support.hpp"

using namespace orbitsym;
using namespace testing_support;

namespace {

Character conj_pair_c4(const CharacterTable &t) {
  Character lambda = irreducible_with(t, 1, Cyclotomic::root_of_unity(4, 1), 1);
  return lambda + lambda.conj();
}

Character quaternion_alpha(const CharacterTable &t) { return t.irreducibles.back(); }

/// alpha x beta + 2 alpha x 1 + 1 x beta on Q8 x C4.
Character q8c4_character(const CharacterTable &t) {
  auto q = table_of("quaternion8");
  auto c = table_of("cyclic(4)");
  Character alpha = quaternion_alpha(*q), beta = conj_pair_c4(*c);
  Character one_q = q->trivial(), one_c = c->trivial();
  return outer_tensor(t.classes, {8, 4}, {alpha, beta}) +
         Rational(2) * outer_tensor(t.classes, {8, 4}, {alpha, one_c}) +
         outer_tensor(t.classes, {8, 4}, {one_q, beta});
}

/// alpha x alpha + 2 alpha x 1 + 1 x 2 alpha on Q8 x Q8.
Character q8q8_character(const CharacterTable &t) {
  auto q = table_of("quaternion8");
  Character alpha = quaternion_alpha(*q), one = q->trivial();
  return outer_tensor(t.classes, {8, 8}, {alpha, alpha}) +
         Rational(2) * outer_tensor(t.classes, {8, 8}, {alpha, one}) +
         Rational(2) * outer_tensor(t.classes, {8, 8}, {one, alpha});
}

SymmetryOptions search_only() {
  SymmetryOptions o;
  o.closed_forms = false;
  return o;
}

} // namespace

TEST(IdealPart, RegularCharacter) {
  auto t = table_of("dihedral(3)");
  auto d = ideal_part(*t, t->regular());
  EXPECT_EQ(d.chi_I, t->regular());
  EXPECT_TRUE(d.residual.is_zero());
  EXPECT_TRUE(d.N.is_whole());
}

TEST(IdealPart, QuaternionAlpha) {
  auto t = table_of("quaternion8");
  auto d = ideal_part(*t, quaternion_alpha(*t));
  EXPECT_TRUE(d.chi_I.is_zero());
  EXPECT_TRUE(d.N.is_trivial());
  ASSERT_EQ(d.constituents_of_residual.size(), 1u);
}

TEST(IdealPart, CyclicConjugatePair) {
  auto t = table_of("cyclic(4)");
  Character chi = conj_pair_c4(*t);
  auto d = ideal_part(*t, chi);
  EXPECT_EQ(d.chi_I, chi);
  EXPECT_TRUE(d.N.is_whole());
}

TEST(IdealPart, Rejections) {
  auto t = table_of("quaternion8");
  try {
    ideal_part(*t, Rational(3) * quaternion_alpha(*t));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCyclicModuleCharacter);
  }
  EXPECT_THROW(ideal_part(*t, Character::zero(t->classes)), Error);
  auto c = table_of("cyclic(4)");
  Character half = Rational(1, 1) / Rational(2) * c->trivial();
  try {
    ideal_part(*c, half);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCyclicModuleCharacter);
  }
}

TEST(GenericSymmetry, CyclicFourConjugatePairIsDihedral) {
  auto t = table_of("cyclic(4)");
  auto r = sym_group_of_character(*t, conj_pair_c4(*t));
  EXPECT_EQ(r.group.order(), 8);
  EXPECT_FALSE(r.is_generically_closed);
  // Not abelian, so the dihedral group of order 8 rather than C8 or C4 x C2.
  const auto &gens = r.group.generators();
  bool commute = true;
  for (const auto &a : gens)
    for (const auto &b : gens) commute &= perm_compose(a, b) == perm_compose(b, a);
  EXPECT_FALSE(commute);
}

TEST(GenericSymmetry, KleinSquare) {
  auto t = table_of("elem_abelian(2,2)");
  auto r = sym_group_of_character(*t, t->irreducibles[1] + t->irreducibles[2]);
  EXPECT_EQ(r.group.order(), 8);
}

TEST(GenericSymmetry, RegularCharacterFullSymmetric) {
  for (std::string spec : {"cyclic(3)", "dihedral(3)", "quaternion8", "dihedral(8)"}) {
    auto t = table_of(spec);
    auto r = sym_group_of_character(*t, t->regular());
    mpz_class f = factorial(t->group->order());
    EXPECT_EQ(r.group.order(), f) << spec;
    if (t->group->order() <= 8) EXPECT_EQ(sym_group_of_character(*t, t->regular(), search_only()).group.order(), f);
  }
}

TEST(GenericSymmetry, QuaternionTimesCyclicFourIsClosed) {
  auto t = table_of("product(quaternion8,cyclic(4))");
  Character chi = q8c4_character(*t);
  EXPECT_TRUE(affordable_by_left_ideal(*t, chi, Field::Real));
  auto d = ideal_part(*t, chi);
  EXPECT_EQ(d.N.order(), 2);
  auto r = sym_group_of_character(*t, chi);
  EXPECT_EQ(r.group.order(), 32);
  EXPECT_TRUE(r.is_generically_closed);
}

TEST(GenericSymmetry, QuaternionSquaredIsClosed) {
  auto t = table_of("product(quaternion8,quaternion8)");
  Character chi = q8q8_character(*t);
  EXPECT_TRUE(affordable_by_left_ideal(*t, chi, Field::Real));
  EXPECT_TRUE(is_generically_closed(*t, chi));
  EXPECT_EQ(sym_group_of_character(*t, chi).group.order(), 64);
}

TEST(GenericSymmetry, IrreducibleClosedFormMatchesSearch) {
  for (const auto &spec : small_catalog()) {
    auto t = table_of(spec);
    for (const auto &psi : t->irreducibles) {
      auto closed = sym_of_irreducible(*t, psi);
      auto searched = sym_group_of_character(*t, psi, search_only());
      EXPECT_EQ(closed.group.order(), coset_block_order(t->group->order(), kernel_of(psi).order())) << spec;
      EXPECT_TRUE(closed.group == searched.group) << spec << " " << psi.str();
    }
  }
}

TEST(GenericSymmetry, IrreducibleExamples) {
  auto c5 = table_of("cyclic(5)");
  EXPECT_EQ(sym_of_irreducible(*c5, c5->irreducibles[1]).group.order(), 5);
  EXPECT_EQ(sym_of_irreducible(*c5, c5->trivial()).group.order(), 120);
  auto q = table_of("quaternion8");
  EXPECT_EQ(sym_of_irreducible(*q, quaternion_alpha(*q)).group.order(), 8);
  EXPECT_THROW(sym_of_irreducible(*q, q->regular()), Error);
}

TEST(HatCharacter, Translations) {
  auto t = table_of("dihedral(4)");
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    Character chi = random_admissible(*t, rng);
    for (int g = 0; g < t->group->order(); ++g)
      EXPECT_EQ(hat_character(*t, chi, left_translation(*t->group, g)), chi.at(g));
    EXPECT_EQ(hat_character(*t, chi, perm_identity(8)), chi.degree());
  }
}

TEST(HatCharacter, InversionOnCyclicFour) {
  auto t = table_of("cyclic(4)");
  Perm inversion = {0, 3, 2, 1};
  EXPECT_EQ(hat_character(*t, conj_pair_c4(*t), inversion), Cyclotomic(0));
  auto lambda = irreducible_with(*t, 1, Cyclotomic::root_of_unity(4, 1), 1);
  try {
    hat_character(*t, lambda, inversion);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAGenericSymmetry);
  }
}

TEST(GenericClosure, Examples) {
  auto s3 = table_of("dihedral(3)");
  EXPECT_TRUE(is_generically_closed(*s3, s3->irreducibles[2]));
  auto c4 = table_of("cyclic(4)");
  EXPECT_FALSE(is_generically_closed(*c4, conj_pair_c4(*c4)));
}

TEST(GenericClosure, FaithfulResidualShortcutAgreesWithSearch) {
  std::mt19937_64 rng(11);
  for (const auto &spec : small_catalog()) {
    auto t = table_of(spec);
    for (int trial = 0; trial < 6; ++trial) {
      Character chi = random_admissible(*t, rng);
      auto d = ideal_part(*t, chi);
      bool searched = sym_group_of_character(*t, chi, search_only()).is_generically_closed;
      EXPECT_EQ(is_generically_closed(*t, chi), searched) << spec << " " << chi.str();
      if (!d.residual.is_zero() && d.N.is_trivial()) EXPECT_TRUE(searched) << spec;
    }
  }
}

TEST(AbelianExploration, NineHasNoClosedCharacter) {
  auto t = table_of("elem_abelian(3,2)");
  auto r = explore_abelian_closure(*t);
  EXPECT_FALSE(r.closed.has_value());
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.candidates, 511u);
  EXPECT_EQ(r.examined, 511u);
}

TEST(AbelianExploration, SmallCyclic) {
  for (std::string spec : {"cyclic(2)", "cyclic(5)"}) {
    auto t = table_of(spec);
    auto r = explore_abelian_closure(*t);
    ASSERT_TRUE(r.closed.has_value()) << spec;
    EXPECT_TRUE(kernel_of(*r.closed).is_trivial());
    EXPECT_TRUE(is_generically_closed(*t, *r.closed));
  }
}

TEST(AbelianExploration, Errors) {
  auto q = table_of("quaternion8");
  try {
    explore_abelian_closure(*q);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAbelian);
  }
  auto c = table_of("cyclic(65)");
  try {
    explore_abelian_closure(*c);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeLimit);
  }
}

// Properties over the small catalog.

TEST(GenericProperties, TranslationsAreSymmetries) {
  std::mt19937_64 rng(5);
  for (const auto &spec : small_catalog()) {
    auto t = table_of(spec);
    for (int trial = 0; trial < 4; ++trial) {
      Character chi = random_admissible(*t, rng);
      auto r = sym_group_of_character(*t, chi);
      for (int g = 0; g < t->group->order(); ++g)
        EXPECT_TRUE(r.group.contains(left_translation(*t->group, g))) << spec;
      EXPECT_EQ(r.group.order() % t->group->order(), 0) << spec;
    }
  }
}

TEST(GenericProperties, ComplementDuality) {
  std::mt19937_64 rng(6);
  for (const auto &spec : small_catalog()) {
    auto t = table_of(spec);
    for (int trial = 0; trial < 4; ++trial) {
      Character chi = random_admissible(*t, rng);
      Character rest = t->regular() - chi;
      if (rest.is_zero()) continue;
      EXPECT_TRUE(sym_group_of_character(*t, chi).group == sym_group_of_character(*t, rest).group)
          << spec << " " << chi.str();
    }
  }
}

TEST(GenericProperties, DecompositionIntoIdealPartAndConstituents) {
  std::mt19937_64 rng(7);
  for (const auto &spec : small_catalog()) {
    auto t = table_of(spec);
    if (t->group->order() > 16) continue;
    const FiniteGroup &g = *t->group;
    for (int trial = 0; trial < 4; ++trial) {
      Character chi = random_admissible(*t, rng);
      auto d = ideal_part(*t, chi);
      // Colour by chi_I values and by cosets of each constituent kernel.
      std::vector<std::vector<int>> colorings;
      std::map<std::string, int> ids;
      std::vector<int> values;
      for (int x = 0; x < g.order(); ++x)
        values.push_back(ids.emplace(d.chi_I.at(x).key(), static_cast<int>(ids.size())).first->second);
      colorings.push_back(values);
      for (auto [i, m] : d.constituents_of_residual)
        colorings.push_back(left_coset_ids(g, kernel_of(t->irreducibles[i])));
      PermGroup meet = common_symmetries(g, colorings);
      PermGroup sym = sym_group_of_character(*t, chi).group;
      EXPECT_TRUE(meet == sym) << spec << " " << chi.str();
      // Each factor contains the full group.
      if (!d.chi_I.is_zero()) EXPECT_TRUE(sym.is_subgroup_of(sym_group_of_character(*t, d.chi_I).group));
      for (auto [i, m] : d.constituents_of_residual)
        EXPECT_TRUE(sym.is_subgroup_of(sym_of_irreducible(*t, t->irreducibles[i]).group));
    }
  }
}

TEST(GenericProperties, DirectSumContainment) {
  std::mt19937_64 rng(8);
  for (const auto &spec : small_catalog()) {
    auto t = table_of(spec);
    for (int trial = 0; trial < 4; ++trial) {
      Character a = random_admissible(*t, rng), b = random_admissible(*t, rng);
      Character sum = a + b;
      bool admissible = true;
      auto m = t->multiplicities(sum);
      for (int i = 0; i < t->size(); ++i) admissible &= m[i] <= *t->irreducibles[i].degree().rational();
      if (!admissible) continue;
      PermGroup sa = sym_group_of_character(*t, a).group, sb = sym_group_of_character(*t, b).group;
      PermGroup ssum = sym_group_of_character(*t, sum).group;
      // Generators of the intersection: common symmetries of both colourings.
      auto ca = cayley_coloring(ideal_part(*t, a)), cb = cayley_coloring(ideal_part(*t, b));
      PermGroup meet = common_symmetries(*t->group, {ca.element_color, cb.element_color});
      EXPECT_TRUE(meet.is_subgroup_of(sa) && meet.is_subgroup_of(sb));
      EXPECT_TRUE(meet.is_subgroup_of(ssum)) << spec;
    }
  }
}

TEST(GenericProperties, IdealCharacterPairwiseCriterion) {
  for (const auto &spec : small_catalog()) {
    auto t = table_of(spec);
    const FiniteGroup &g = *t->group;
    const int n = g.order();
    if (n > 8) continue;
    // All ideal characters: subsets of irreducibles, each with multiplicity psi(1).
    for (unsigned mask = 1; mask < (1u << t->size()); ++mask) {
      Character chi = Character::zero(t->classes);
      for (int i = 0; i < t->size(); ++i)
        if (mask >> i & 1) chi += *t->irreducibles[i].degree().rational() * t->irreducibles[i];
      PermGroup sym = sym_group_of_character(*t, chi).group;
      std::map<std::string, int> ids;
      std::vector<int> value(n);
      for (int x = 0; x < n; ++x) value[x] = ids.emplace(chi.at(x).key(), static_cast<int>(ids.size())).first->second;
      Perm p(n);
      std::iota(p.begin(), p.end(), 0);
      do {
        bool pairwise = true;
        for (int a = 0; a < n && pairwise; ++a)
          for (int b = 0; b < n && pairwise; ++b)
            pairwise = value[g.mul(g.inv(p[a]), p[b])] == value[g.mul(g.inv(a), b)];
        ASSERT_EQ(pairwise, sym.contains(p)) << spec << " " << chi.str();
      } while (std::next_permutation(p.begin(), p.end()));
    }
  }
}
