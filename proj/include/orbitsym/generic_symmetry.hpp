#ifndef ORBITSYM_GENERIC_SYMMETRY_HPP
#define ORBITSYM_GENERIC_SYMMETRY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "orbitsym/character.hpp"
#include "orbitsym/perm.hpp"
#include "orbitsym/search.hpp"

namespace orbitsym {

/// chi = chi_I + residual, where chi_I collects the irreducible constituents
/// occurring with multiplicity equal to their degree.
struct IdealPartDecomposition {
  Character chi;
  Character chi_I;
  Character residual;
  Subgroup N;  // kernel of the residual
  std::vector<long> multiplicities;  // per irreducible of the table
  std::vector<std::pair<int, long>> constituents_of_residual;  // (irreducible index, multiplicity)
};

/// Throws NotCyclicModuleCharacter unless every multiplicity is an integer in
/// [0, psi(1)], and BadParameter for the zero character.
IdealPartDecomposition ideal_part(const CharacterTable &t, const Character &chi);

/// Arc colouring of the complete Cayley digraph: arc (g, h) gets the colour of
/// x = g^-1 h, determined by chi_I(x) and the coset xN.
struct CayleyColoring {
  GroupPtr group;
  std::vector<int> element_color;  // colour of x, per element
  std::vector<int> value_color;    // interned chi_I(x), per element
  std::vector<int> coset_of;       // left coset index of x modulo N
  int num_colors = 0;

  /// color(g, h) = element_color[g^-1 h], row-major n*n.
  std::vector<int> arc_colors() const;
  bool preserves(const Perm &p) const;
};

CayleyColoring cayley_coloring(const IdealPartDecomposition &d);

/// Left multiplication h -> g h as a permutation of element indices.
Perm left_translation(const FiniteGroup &g, int element);

struct SymmetryOptions {
  SearchOptions search;
  /// Use the closed form when chi_I vanishes off the identity.
  bool closed_forms = true;
};

struct GenericSymmetryResult {
  PermGroup group;
  bool is_generically_closed = false;
  bool closed_form = false;  // obtained without search
  std::map<Perm, Cyclotomic> hat_values;
  SearchStats stats;
};

/// All permutations pi of G with pi(gK) = pi(1) g K for every g; K normal.
PermGroup coset_block_group(const FiniteGroup &g, const Subgroup &k);

/// Order of coset_block_group: |G:K| * (|K|!)^|G:K|.
mpz_class coset_block_order(long group_order, long k_order);

GenericSymmetryResult sym_group_of_character(const CharacterTable &t, const Character &chi,
                                             const SymmetryOptions &options = {});

/// Throws NotIrreducible.
GenericSymmetryResult sym_of_irreducible(const CharacterTable &t, const Character &psi);

/// Automorphisms of several arc colourings at once (their intersection),
/// seeded with the left translations.
PermGroup common_symmetries(const FiniteGroup &g, const std::vector<std::vector<int>> &element_colorings,
                            const SearchOptions &options = {});

/// (1/|G|) sum_g chi(g^-1 pi(g)). Throws NotAGenericSymmetry unless pi
/// preserves the Cayley colouring of chi.
Cyclotomic hat_character(const CharacterTable &t, const Character &chi, const Perm &pi);
Cyclotomic hat_character(const CayleyColoring &coloring, const Character &chi, const Perm &pi);

bool is_generically_closed(const CharacterTable &t, const Character &chi,
                           const SymmetryOptions &options = {});

struct AbelianExploration {
  std::optional<Character> closed;
  std::uint64_t candidates = 0;  // nonzero subsets of linear characters
  std::uint64_t examined = 0;    // subsets inspected
  std::uint64_t searched = 0;    // faithful subsets that needed a search
  bool exhaustive = false;
};

struct ExploreOptions {
  SearchOptions search;
  /// Groups of order up to this bound are enumerated exhaustively; larger
  /// ones are sampled.
  int exhaustive_order = 16;
  std::uint64_t samples = 2000;
  std::uint64_t seed = 1;
};

/// Looks for a sum of distinct linear characters that is generically closed.
/// Throws NotAbelian, SizeLimit (|G| > 64).
AbelianExploration explore_abelian_closure(const CharacterTable &t, const ExploreOptions &options = {});

} // namespace orbitsym

#endif // ORBITSYM_GENERIC_SYMMETRY_HPP
