#include <gtest/gtest.h>

#include <algorithm>

#include "orbitsym/builtin.hpp"
#include "orbitsym/character.hpp"
#include "orbitsym/error.hpp"

using namespace orbitsym;

namespace {

TablePtr table_of(const std::string &spec) {
  return character_table(std::make_shared<const FiniteGroup>(builtin_group(spec)));
}

std::vector<long> degrees(const CharacterTable &t) {
  std::vector<long> d;
  for (const auto &psi : t.irreducibles) d.push_back(psi.degree().rational()->get().get_num().get_si());
  return d;
}

} // namespace

TEST(CharTable, DihedralSix) {
  auto t = table_of("dihedral(3)");
  EXPECT_EQ(degrees(*t), (std::vector<long>{1, 1, 2}));
  EXPECT_EQ(t->irreducibles[0], t->trivial());
}

TEST(CharTable, Quaternion) {
  auto t = table_of("quaternion8");
  EXPECT_EQ(degrees(*t), (std::vector<long>{1, 1, 1, 1, 2}));
  EXPECT_EQ(t->fs_indicators.back(), -1);
  EXPECT_EQ(t->galois_orbits.size(), 5u);
}

TEST(CharTable, CyclicFiveGaloisOrbits) {
  auto t = table_of("cyclic(5)");
  EXPECT_EQ(t->size(), 5);
  EXPECT_EQ(t->galois_orbits.size(), 2u);
  for (int i = 1; i < 5; ++i) EXPECT_EQ(t->fs_indicators[i], 0);
}

TEST(CharTable, RegularDecomposition) {
  for (std::string spec : {"cyclic(7)", "dihedral(5)", "dicyclic(3)", "product(dihedral(3),cyclic(3))",
                           "elem_abelian(2,4)", "dihedral(8)"}) {
    auto t = table_of(spec);
    auto m = t->multiplicities(t->regular());
    for (int i = 0; i < t->size(); ++i) EXPECT_EQ(m[i], t->irreducibles[i].degree().rational()) << spec;
    EXPECT_EQ(t->from_multiplicities(m), t->regular());
  }
}

TEST(CharTable, ColumnOrthogonality) {
  auto t = table_of("dicyclic(5)");
  const ClassData &cd = *t->classes;
  const long order = t->group->order();
  for (int a = 0; a < cd.count(); ++a)
    for (int b = 0; b < cd.count(); ++b) {
      Cyclotomic s;
      for (const auto &psi : t->irreducibles) s += psi.at_class(a) * psi.at_class(b).conj();
      Cyclotomic expect = a == b ? Cyclotomic(Rational(order) / Rational(cd.sizes[a])) : Cyclotomic();
      EXPECT_EQ(s, expect);
    }
}

TEST(CharTable, FrobeniusSchurAndAffordability) {
  auto t = table_of("quaternion8");
  const Character &alpha = t->irreducibles.back();
  EXPECT_EQ(fs_indicator(alpha), -1);
  EXPECT_TRUE(affordable_by_left_ideal(*t, 2 * alpha, Field::Complex));
  EXPECT_TRUE(affordable_by_left_ideal(*t, 2 * alpha, Field::Real));
  EXPECT_FALSE(affordable_by_left_ideal(*t, alpha, Field::Real));
  EXPECT_FALSE(affordable_by_left_ideal(*t, 3 * alpha, Field::Complex));
  EXPECT_THROW(fs_indicator(2 * alpha), Error);
}

TEST(CharTable, KernelAndRationalIdeals) {
  auto t = table_of("cyclic(6)");
  auto ideals = rational_ideal_characters(*t);
  EXPECT_EQ(ideals.size(), 4u);  // divisors of 6
  Character sum = Character::zero(t->classes);
  for (const auto &c : ideals) sum += c;
  EXPECT_EQ(sum, t->regular());
  EXPECT_EQ(kernel_of(t->trivial()).order(), 6);
  EXPECT_EQ(kernel_of(t->regular()).order(), 1);
}

TEST(CharTable, OuterTensor) {
  auto a = table_of("cyclic(2)");
  auto b = table_of("dihedral(3)");
  auto p = table_of("product(cyclic(2),dihedral(3))");
  Character x = outer_tensor(p->classes, {2, 6}, {a->irreducibles[1], b->irreducibles[2]});
  EXPECT_GE(p->index_of(x), 0);
  EXPECT_EQ(x.degree(), Cyclotomic(2));
}

TEST(CharTable, LargerGroups) {
  for (std::string spec : {"product(quaternion8,cyclic(4),cyclic(4))", "dihedral(64)", "cyclic(128)",
                           "product(dicyclic(3),cyclic(5))"}) {
    auto t = table_of(spec);
    EXPECT_EQ(t->size(), t->classes->count()) << spec;
  }
}
