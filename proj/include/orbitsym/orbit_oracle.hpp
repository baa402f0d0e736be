#ifndef ORBITSYM_ORBIT_ORACLE_HPP
#define ORBITSYM_ORBIT_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "orbitsym/character.hpp"
#include "orbitsym/matrix.hpp"
#include "orbitsym/perm.hpp"
#include "orbitsym/search.hpp"

namespace orbitsym {

/// Matrix representation D: G -> GL(d, Q), one matrix per element.
struct RationalRepresentation {
  ClassDataPtr classes;
  int dim = 0;
  std::vector<RationalMatrix> matrices;
  std::vector<int> generators;  // elements whose matrices determine D
  Character character;

  const FiniteGroup &group() const { return *classes->group; }
  Subgroup kernel() const;
};

/// Completes D from generator images by breadth-first search over the
/// multiplication table, then checks D(x) D(s) = D(xs) for every element x and
/// generator s. Throws NotGenerating, RelationViolated, Singular,
/// DimensionMismatch.
RationalRepresentation rep_from_generators(ClassDataPtr classes,
                                           const std::vector<std::pair<int, RationalMatrix>> &gens);

/// Left regular representation by permutation matrices.
RationalRepresentation regular_representation(ClassDataPtr classes);

/// Left multiplication on QG e, e the central idempotent of gamma. gamma must
/// be a sum of distinct rational ideal characters (NotRationalIdealCharacter).
RationalRepresentation ideal_component_rep(const CharacterTable &t, const Character &gamma);

/// Block diagonal sum.
RationalRepresentation direct_sum(const RationalRepresentation &a, const RationalRepresentation &b);

/// Finite point orbit together with the action of the acting group's
/// generators on it. For group orbits, `point_of` maps elements to points.
struct OrbitData {
  RationalVector base_point;
  std::vector<RationalVector> points;
  std::vector<int> point_of;
  std::vector<int> representative;  // point -> some element reaching it
  Subgroup stabilizer;
  bool spans = false;
  std::vector<int> basis_elements;
  std::vector<int> basis_points;
  std::vector<Perm> generator_perms;
  mpz_class acting_order;  // order of the acting linear group
};

/// Throws DimensionMismatch.
OrbitData orbit(const RationalRepresentation &rep, const RationalVector &v);

/// Orbit of v under the group generated by `gens`; SizeLimit beyond `max_points`.
OrbitData matrix_group_orbit(const std::vector<RationalMatrix> &gens, const mpz_class &group_order,
                             const RationalVector &v, std::size_t max_points);

struct LinearSymmetryGroup {
  PermGroup permutations;  // on orbit point indices
  std::vector<RationalMatrix> matrices;  // one per generator of `permutations`
  mpz_class order;
  SearchStats stats;
};

/// GL(Gv): every linear automorphism of the span permuting the orbit. Throws
/// NotSpanning, SearchBudgetExceeded.
LinearSymmetryGroup linear_symmetry_group(const OrbitData &orbit, const SearchOptions &options = {});

/// The linear map sending each basis point to the point assigned by `perm`.
RationalMatrix matrix_of_point_permutation(const OrbitData &orbit, const Perm &perm);

/// pi(Ann(v)) within Ann(v), Ann(v) the kernel of QG -> V, a -> a v. Throws NotSpanning.
bool annihilator_symmetry_check(const RationalRepresentation &rep, const OrbitData &orbit, const Perm &pi);

/// Random integer point in [-bound, bound]^d that spans and whose stabilizer
/// is the kernel of the representation. Throws NotCyclic after `attempts`.
OrbitData sample_generic_point(const RationalRepresentation &rep, std::uint64_t seed, long bound,
                               int attempts = 200);

struct TrialReport {
  RationalVector point;
  int attempts = 0;
  mpz_class theory_order;
  mpz_class oracle_order;
  long stabilizer_order = 0;
  bool groups_equal = false;
  bool order_formula = false;
  bool traces_agree = false;
  bool passed() const { return groups_equal && order_formula && traces_agree; }
};

struct OracleReport {
  std::vector<TrialReport> trials;
  bool passed = false;
};

struct OracleOptions {
  int trials = 3;
  std::uint64_t seed = 1;
  long bound = 10;
  int retries = 5;
  SearchOptions search;
};

/// Compares Sym(G, chi), pushed to the orbit of sampled generic points, with
/// the brute-force GL(Gv); checks |Sym| = |GL(Gv)| (|H|!)^|G:H| and that the
/// trace of every theory generator's matrix is hat_character. Throws
/// PersistentMismatch when a trial still fails after all retries.
OracleReport verify_theory_vs_oracle(const CharacterTable &t, const RationalRepresentation &rep,
                                     const Character &chi, const OracleOptions &options = {});

struct ClosureReport {
  std::vector<mpz_class> chain;
  bool stabilized = false;
  bool budget_exceeded = false;
};

struct ClosureOptions {
  std::uint64_t seed = 1;
  long bound = 10;
  std::size_t max_points = 5040;  // transversals cost O(points^2) memory
  SearchOptions search;
};

/// chain = [|D(G)|, |GL(Gv)|, |GL(G^ w)| ...] with G^ = GL(Gv) and w a generic
/// point for G^; stops once two consecutive orders agree.
ClosureReport closure_iterate(const OrbitData &orbit, const ClosureOptions &options = {});

} // namespace orbitsym

#endif // ORBITSYM_ORBIT_ORACLE_HPP
