#ifndef ORBITSYM_STRUCTURE_HPP
#define ORBITSYM_STRUCTURE_HPP

#include <map>
#include <optional>
#include <vector>

#include "orbitsym/group.hpp"

namespace orbitsym {

struct StructureSummary {
  bool is_abelian = false;
  int exponent = 1;
  bool is_elementary_abelian = false;
  Subgroup center;
  Subgroup commutator_subgroup;
};

StructureSummary structure_predicates(const FiniteGroup &g);

/// An abelian subgroup A of index 2 together with g outside A of order 4
/// with g^-1 a g = a^-1 for all a in A.
struct DicyclicWitness {
  Subgroup A;
  int g = 0;
};

/// Literal test of the definition; note that it also accepts some abelian
/// groups (for instance C4), so callers test abelianness first.
std::optional<DicyclicWitness> is_generalized_dicyclic(const FiniteGroup &g);

/// All subgroups of index 2 (preimages of index-2 subgroups of G/G'G^2).
std::vector<Subgroup> index_two_subgroups(const FiniteGroup &g);

std::vector<int> prime_divisors(long n);
/// Largest power of p dividing n.
long p_part(long n, long p);
/// Multiplicative order of a modulo m; defined as 1 for m = 1.
long multiplicative_order(long a, long m);

/// The set of elements whose order is a product of primes in `primes`,
/// returned when it is a subgroup.
std::optional<Subgroup> pi_elements_subgroup(const FiniteGroup &g, const std::vector<int> &primes);

/// A Sylow p-subgroup (not necessarily normal).
Subgroup sylow_subgroup(const FiniteGroup &g, int p);

struct DirectSplitting {
  Subgroup left;
  Subgroup right;
};

struct StructureDecomposition {
  std::map<int, Subgroup> normal_sylow;          // prime -> normal Sylow subgroup
  std::vector<DirectSplitting> splittings;       // nontrivial U x W = G
  bool splittings_truncated = false;
  std::optional<Subgroup> hall;                  // normal Hall subgroup for the requested primes
};

/// Normal subgroups of g (all of them; order <= 128).
std::vector<Subgroup> normal_subgroups(const FiniteGroup &g);

StructureDecomposition decompose_structure(const FiniteGroup &g,
                                           const std::vector<int> &hall_primes = {});

/// Complement W with G = U x W for a normal subgroup U, if one exists.
std::optional<Subgroup> direct_complement(const FiniteGroup &g, const Subgroup &u);

/// Isomorphism test by invariant screening and generator-image backtracking.
bool are_isomorphic(const FiniteGroup &a, const FiniteGroup &b);

/// A small generating set, chosen greedily.
std::vector<int> generating_set(const FiniteGroup &g);

} // namespace orbitsym

#endif // ORBITSYM_STRUCTURE_HPP
