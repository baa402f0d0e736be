#ifndef ORBITSYM_CLASSIFIER_HPP
#define ORBITSYM_CLASSIFIER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitsym/character.hpp"
#include "orbitsym/group.hpp"
#include "orbitsym/perm.hpp"

namespace orbitsym {

/// Normal subgroup N of prime index and central z used to build the
/// automorphism g -> g kappa(g).
struct AutomorphismData {
  Subgroup N;
  int z = 0;
};

struct CaseMatch {
  std::string case_id;  // "i", "ii", ...
  std::string tag;      // e.g. "abelian exponent>2"
  std::vector<std::pair<std::string, std::string>> witness;
  std::optional<AutomorphismData> automorphism;
};

enum class Realization { Euclidean, Affine, Rational };

/// The three classifications are negative lists: G is realizable iff no case
/// matches. `matched_case` is the tag of the first match in list order.
struct ClassificationVerdict {
  Realization kind = Realization::Affine;
  bool realizable = true;
  std::string matched_case = "none";
  std::vector<CaseMatch> matches;
  std::vector<std::string> notes;
};

std::string realization_name(Realization r);

/// Isometry groups of euclidean orbit polytopes: fails for abelian groups
/// that are not elementary 2-abelian and for generalized dicyclic groups.
ClassificationVerdict classify_euclidean(const FiniteGroup &g);

/// Affine symmetry groups of orbit polytopes: fails for (i) abelian groups of
/// exponent > 2, (ii) generalized dicyclic groups, (iii) elementary abelian
/// groups of order 4, 8, 16. Abelianness is tested before (ii).
ClassificationVerdict classify_affine(const FiniteGroup &g);

/// Affine symmetry groups of orbit polytopes with rational vertices; five
/// cases. Throws SizeLimit above order 128.
ClassificationVerdict classify_rational(const FiniteGroup &g);

/// Intersection of the kernels of the irreducibles psi with psi(1) > m_R(psi),
/// m_R = 2 for FS indicator -1 and 1 otherwise; G when there are none.
Subgroup nker_R(const CharacterTable &t);

/// G abelian nontrivial, generalized dicyclic, Q8 x C4 x C2^r or Q8 x Q8 x C2^r:
/// the groups with a nontrivial real kernel intersection.
bool has_nontrivial_real_kernel_shape(const FiniteGroup &g);

struct WitnessAutomorphism {
  Subgroup N;
  int z = 0;
  int p = 0;
  std::vector<int> kappa;  // per element, a power of z
  Perm alpha;              // alpha(g) = g kappa(g)
};

/// Throws BadWitnessData naming the violated hypothesis (N not normal of
/// prime index, z of wrong order, or z outside <g> for some g outside N).
WitnessAutomorphism witness_automorphism(const FiniteGroup &g, const Subgroup &n, int z);

/// Checks gamma(alpha(g)^-1 alpha(h)) = gamma(g^-1 h) for every rational ideal
/// character gamma and all g, h.
bool verify_witness(const WitnessAutomorphism &w, const CharacterTable &t);

} // namespace orbitsym

#endif // ORBITSYM_CLASSIFIER_HPP
