#include <gtest/gtest.h>

#include <random>

#include "orbitsym/error.hpp"
#include "orbitsym/generic_symmetry.hpp"
#include "orbitsym/orbit_oracle.hpp"
#include "support.hpp"

using namespace orbitsym;
using namespace testing_support;

namespace {

RationalMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
  int r = 0;
  for (const auto &row : rows) {
    int c = 0;
    for (long x : row) m(r, c++) = Rational(x);
    ++r;
  }
  return m;
}

RationalVector vec(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

RationalRepresentation c4_rotation(const CharacterTable &t) {
  return rep_from_generators(t.classes, {{1, mat({{0, -1}, {1, 0}})}});
}

RationalRepresentation d4_standard(const CharacterTable &t) {
  // dihedral(4): element 1 is the rotation, element 4 a reflection.
  return rep_from_generators(t.classes, {{1, mat({{0, -1}, {1, 0}})}, {4, mat({{1, 0}, {0, -1}})}});
}

Character conj_pair_c4(const CharacterTable &t) {
  Character lambda = irreducible_with(t, 1, Cyclotomic::root_of_unity(4, 1), 1);
  return lambda + lambda.conj();
}

ErrorCode code_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

} // namespace

TEST(Representation, RotationOfC4HasCharacterLambdaPlusConjugate) {
  auto t = table_of("cyclic(4)");
  auto rep = c4_rotation(*t);
  EXPECT_EQ(rep.dim, 2);
  EXPECT_TRUE(rep.character == conj_pair_c4(*t));
  EXPECT_TRUE(rep.kernel().is_trivial());
}

TEST(Representation, RejectsBadGeneratorData) {
  auto t = table_of("cyclic(2)");
  EXPECT_EQ(code_of([&] { rep_from_generators(t->classes, {{1, mat({{2}})}}); }), ErrorCode::RelationViolated);
  EXPECT_EQ(code_of([&] { rep_from_generators(t->classes, {{1, mat({{0}})}}); }), ErrorCode::Singular);
  auto t4 = table_of("cyclic(4)");
  EXPECT_EQ(code_of([&] { rep_from_generators(t4->classes, {{2, mat({{-1}})}}); }), ErrorCode::NotGenerating);
  EXPECT_EQ(code_of([&] { rep_from_generators(t4->classes, {{1, mat({{0, -1}, {1, 0}})}, {2, mat({{1}})}}); }),
            ErrorCode::DimensionMismatch);
}

TEST(Representation, RegularCharacter) {
  auto t = table_of("dihedral(3)");
  auto rep = regular_representation(t->classes);
  EXPECT_TRUE(rep.character == t->regular());
  EXPECT_TRUE(rep.kernel().is_trivial());
}

TEST(Representation, IdealComponents) {
  auto c4 = table_of("cyclic(4)");
  EXPECT_EQ(ideal_component_rep(*c4, conj_pair_c4(*c4)).dim, 2);
  auto q8 = table_of("quaternion8");
  Character alpha = q8->irreducibles.back();
  auto rep = ideal_component_rep(*q8, Rational(2) * alpha);
  EXPECT_EQ(rep.dim, 4);
  EXPECT_TRUE(rep.kernel().is_trivial());
  EXPECT_EQ(code_of([&] { ideal_component_rep(*q8, alpha); }), ErrorCode::NotRationalIdealCharacter);
  Character lambda = irreducible_with(*c4, 1, Cyclotomic::root_of_unity(4, 1), 1);
  EXPECT_EQ(code_of([&] { ideal_component_rep(*c4, lambda); }), ErrorCode::NotRationalIdealCharacter);
  EXPECT_EQ(code_of([&] { ideal_component_rep(*c4, Character::zero(c4->classes)); }),
            ErrorCode::NotRationalIdealCharacter);
}

TEST(Representation, DirectSumAddsCharacters) {
  auto t = table_of("cyclic(4)");
  auto a = c4_rotation(*t);
  auto b = ideal_component_rep(*t, t->trivial());
  auto s = direct_sum(a, b);
  EXPECT_EQ(s.dim, 3);
  EXPECT_TRUE(s.character == conj_pair_c4(*t) + t->trivial());
}

TEST(Orbit, RotationOrbitOfC4) {
  auto t = table_of("cyclic(4)");
  auto o = orbit(c4_rotation(*t), vec({1, 0}));
  EXPECT_EQ(o.points.size(), 4u);
  EXPECT_TRUE(o.spans);
  EXPECT_EQ(o.acting_order, 4);
  EXPECT_EQ(code_of([&] { orbit(c4_rotation(*t), vec({1, 0, 0})); }), ErrorCode::DimensionMismatch);
}

TEST(LinearSymmetry, RotationOrbitOfC4IsDihedral) {
  auto t = table_of("cyclic(4)");
  auto o = orbit(c4_rotation(*t), vec({1, 0}));
  auto l = linear_symmetry_group(o);
  EXPECT_EQ(l.order, 8);
  for (const auto &m : l.matrices) {
    Perm p(4);
    for (int j = 0; j < 4; ++j) {
      auto img = m * o.points[j];
      p[j] = static_cast<int>(std::find(o.points.begin(), o.points.end(), img) - o.points.begin());
      ASSERT_LT(p[j], 4);
    }
  }
}

TEST(LinearSymmetry, RegularC3IsSymmetric) {
  auto t = table_of("cyclic(3)");
  auto o = orbit(regular_representation(t->classes), vec({1, 0, 0}));
  EXPECT_EQ(linear_symmetry_group(o).order, 6);
}

TEST(LinearSymmetry, KleinRectangle) {
  auto t = table_of("elem_abelian(2,2)");
  auto rep = rep_from_generators(t->classes, {{1, mat({{1, 0}, {0, -1}})}, {2, mat({{-1, 0}, {0, 1}})}});
  auto o = orbit(rep, vec({1, 2}));
  EXPECT_EQ(o.points.size(), 4u);
  EXPECT_EQ(linear_symmetry_group(o).order, 8);
}

TEST(LinearSymmetry, NonSpanningOrbitIsRejected) {
  auto t = table_of("cyclic(4)");
  auto o = orbit(c4_rotation(*t), vec({0, 0}));
  EXPECT_FALSE(o.spans);
  EXPECT_EQ(code_of([&] { linear_symmetry_group(o); }), ErrorCode::NotSpanning);
}

TEST(Annihilator, RotationOrbitOfC4) {
  auto t = table_of("cyclic(4)");
  auto rep = c4_rotation(*t);
  auto o = orbit(rep, vec({1, 0}));
  EXPECT_TRUE(annihilator_symmetry_check(rep, o, Perm{0, 3, 2, 1}));  // inversion
  EXPECT_FALSE(annihilator_symmetry_check(rep, o, Perm{0, 2, 1, 3}));
}

TEST(Sampling, ZeroDimensionalIsNotCyclic) {
  auto t = table_of("cyclic(2)");
  RationalRepresentation rep;
  rep.classes = t->classes;
  EXPECT_EQ(code_of([&] { sample_generic_point(rep, 1, 10); }), ErrorCode::NotCyclic);
}

TEST(Sampling, GenericPointsHaveKernelStabilizer) {
  auto t = table_of("dihedral(4)");
  auto rep = d4_standard(*t);
  auto o = sample_generic_point(rep, 3, 10);
  EXPECT_EQ(o.points.size(), 8u);
  EXPECT_TRUE(o.stabilizer == rep.kernel());
}

TEST(TheoryVsOracle, RotationOfC4) {
  auto t = table_of("cyclic(4)");
  OracleOptions opts;
  opts.seed = 7;
  auto r = verify_theory_vs_oracle(*t, c4_rotation(*t), conj_pair_c4(*t), opts);
  EXPECT_TRUE(r.passed);
  ASSERT_EQ(r.trials.size(), 3u);
  for (const auto &tr : r.trials) EXPECT_EQ(tr.oracle_order, 8);
}

TEST(TheoryVsOracle, QuaternionIdealComponent) {
  // The orbit is {+-v, +-iv, +-jv, +-kv}, a cross-polytope in Q^4: 2^4 * 4!.
  auto t = table_of("quaternion8");
  Character chi = Rational(2) * t->irreducibles.back();
  auto r = verify_theory_vs_oracle(*t, ideal_component_rep(*t, chi), chi);
  EXPECT_TRUE(r.passed);
  for (const auto &tr : r.trials) {
    EXPECT_EQ(tr.oracle_order, 384);
    EXPECT_EQ(tr.theory_order, 384);
  }
}

TEST(TheoryVsOracle, RegularRepresentationsAreSimplices) {
  for (const char *spec : {"cyclic(2)", "cyclic(4)", "elem_abelian(2,2)", "dihedral(3)"}) {
    auto t = table_of(spec);
    auto r = verify_theory_vs_oracle(*t, regular_representation(t->classes), t->regular());
    ASSERT_TRUE(r.passed) << spec;
    EXPECT_EQ(r.trials[0].oracle_order, factorial(t->group->order())) << spec;
  }
}

TEST(TheoryVsOracle, RejectsForeignCharacter) {
  auto t = table_of("cyclic(4)");
  EXPECT_EQ(code_of([&] { verify_theory_vs_oracle(*t, c4_rotation(*t), t->trivial()); }),
            ErrorCode::BadParameter);
}

TEST(Closure, RotationOfC4) {
  auto t = table_of("cyclic(4)");
  auto r = closure_iterate(orbit(c4_rotation(*t), vec({1, 0})));
  ASSERT_EQ(r.chain.size(), 3u);
  EXPECT_EQ(r.chain[0], 4);
  EXPECT_EQ(r.chain[1], 8);
  EXPECT_EQ(r.chain[2], 8);
  EXPECT_TRUE(r.stabilized);
}

TEST(Closure, StandardRepresentationOfD4) {
  auto t = table_of("dihedral(4)");
  auto r = closure_iterate(sample_generic_point(d4_standard(*t), 1, 10));
  ASSERT_EQ(r.chain.size(), 2u);
  EXPECT_EQ(r.chain[0], 8);
  EXPECT_EQ(r.chain[1], 8);
  EXPECT_TRUE(r.stabilized);
}

TEST(Closure, RegularC2) {
  auto t = table_of("cyclic(2)");
  auto r = closure_iterate(orbit(regular_representation(t->classes), vec({1, 3})));
  ASSERT_EQ(r.chain.size(), 2u);
  EXPECT_EQ(r.chain[0], 2);
  EXPECT_EQ(r.chain[1], 2);
  EXPECT_TRUE(r.stabilized);
}

TEST(Closure, ReportsExhaustedBudget) {
  auto t = table_of("cyclic(4)");
  ClosureOptions opts;
  opts.max_points = 4;
  auto r = closure_iterate(orbit(c4_rotation(*t), vec({1, 0})), opts);
  EXPECT_TRUE(r.budget_exceeded);
  EXPECT_FALSE(r.stabilized);
}

// Properties.

TEST(OracleProperties, AnnihilatorCriterionMatchesLinearSymmetry) {
  // On orbits with at most 8 points, every element permutation is a symmetry
  // iff it maps Ann(v) into itself and respects the point fibres.
  std::mt19937_64 rng(5);
  for (const char *spec : {"cyclic(4)", "elem_abelian(2,2)", "dihedral(4)", "quaternion8"}) {
    auto t = table_of(spec);
    const int n = t->group->order();
    std::vector<RationalRepresentation> reps = {regular_representation(t->classes)};
    for (const auto &orbit_ids : t->galois_orbits) {
      Character gamma = Character::zero(t->classes);
      for (int i : orbit_ids) gamma += *t->irreducibles[i].degree().rational() * t->irreducibles[i];
      reps.push_back(ideal_component_rep(*t, gamma));
    }
    for (const auto &rep : reps) {
      auto o = sample_generic_point(rep, rng(), 10);
      if (o.points.size() > 8) continue;
      auto l = linear_symmetry_group(o);
      std::vector<Perm> perms = {perm_identity(n)};
      for (int k = 0; k < 30; ++k) {
        Perm p = perm_identity(n);
        std::shuffle(p.begin(), p.end(), rng);
        perms.push_back(p);
      }
      for (const Perm &pi : perms) {
        Perm on_points(o.points.size(), -1);
        bool fibres = true;
        for (int x = 0; x < n; ++x) {
          int a = o.point_of[x], b = o.point_of[pi[x]];
          if (on_points[a] < 0) on_points[a] = b;
          fibres &= on_points[a] == b;
        }
        fibres &= is_permutation(on_points);
        bool in_gl = fibres && l.permutations.contains(on_points);
        EXPECT_EQ(fibres && annihilator_symmetry_check(rep, o, pi), in_gl) << spec;
      }
    }
  }
}

TEST(OracleProperties, OrderIndependentOfGenericPoint) {
  for (const char *spec : {"cyclic(4)", "dihedral(4)", "quaternion8", "cyclic(6)"}) {
    auto t = table_of(spec);
    for (const auto &orbit_ids : t->galois_orbits) {
      Character gamma = Character::zero(t->classes);
      for (int i : orbit_ids) gamma += *t->irreducibles[i].degree().rational() * t->irreducibles[i];
      auto rep = ideal_component_rep(*t, gamma);
      mpz_class first = 0;
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        auto l = linear_symmetry_group(sample_generic_point(rep, seed, 10));
        if (seed == 1) first = l.order;
        EXPECT_EQ(l.order, first) << spec;
      }
    }
  }
}

TEST(OracleProperties, TracesAgreeAcrossGenericPoints) {
  auto t = table_of("dihedral(4)");
  auto rep = d4_standard(*t);
  auto theory = sym_group_of_character(*t, rep.character);
  for (const Perm &pi : theory.group.generators()) {
    std::vector<Rational> traces;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      auto o = sample_generic_point(rep, seed, 10);
      Perm pushed(o.points.size(), -1);
      for (int x = 0; x < t->group->order(); ++x) pushed[o.point_of[x]] = o.point_of[pi[x]];
      traces.push_back(matrix_of_point_permutation(o, pushed).trace());
    }
    EXPECT_EQ(traces[0], traces[1]);
    EXPECT_EQ(traces[1], traces[2]);
  }
}
