#include "orbitsym/generic_symmetry.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "orbitsym/error.hpp"
#include "orbitsym/structure.hpp"

namespace orbitsym {

namespace {

std::vector<int> intern_tuples(const std::vector<std::vector<int>> &parts, int n) {
  std::map<std::vector<int>, int> ids;
  std::vector<int> out(n);
  for (int x = 0; x < n; ++x) {
    std::vector<int> key;
    for (const auto &p : parts) key.push_back(p[x]);
    out[x] = ids.emplace(std::move(key), static_cast<int>(ids.size())).first->second;
  }
  return out;
}

std::vector<int> arcs_from_elements(const FiniteGroup &g, const std::vector<int> &element_color) {
  const int n = g.order();
  std::vector<int> arcs(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    const int ai = g.inv(a);
    for (int b = 0; b < n; ++b) arcs[a * n + b] = element_color[g.mul(ai, b)];
  }
  return arcs;
}

/// Identity first, then elements by the size of their colour class.
std::vector<int> cayley_base(const FiniteGroup &g, const std::vector<int> &element_color) {
  std::map<int, int> cell_size;
  for (int c : element_color) ++cell_size[c];
  std::vector<int> base;
  for (int x = 0; x < g.order(); ++x)
    if (x != g.identity()) base.push_back(x);
  std::stable_sort(base.begin(), base.end(), [&](int a, int b) {
    return cell_size[element_color[a]] < cell_size[element_color[b]];
  });
  base.insert(base.begin(), g.identity());
  return base;
}

PermGroup search_cayley(const FiniteGroup &g, const std::vector<int> &element_color,
                        const SearchOptions &options, SearchStats *stats) {
  ColoredDigraphProblem problem(g.order(), arcs_from_elements(g, element_color),
                                cayley_base(g, element_color));
  std::vector<Perm> seeds;
  for (int x : generating_set(g)) {
    Perm s = left_translation(g, x);
    if (!problem.accepts(s))
      fail(ErrorCode::ValidationFailure, "left translation does not preserve the Cayley colouring");
    seeds.push_back(std::move(s));
  }
  return search_group(problem, seeds, options, stats);
}

bool vanishes_off_identity(const Character &c) {
  const ClassData &cd = *c.classes();
  for (int k = 0; k < cd.count(); ++k)
    if (k != cd.identity_class() && !c.at_class(k).is_zero()) return false;
  return true;
}

} // namespace

IdealPartDecomposition ideal_part(const CharacterTable &t, const Character &chi) {
  if (chi.classes() != t.classes) fail(ErrorCode::GroupMismatch, "character does not belong to this table");
  if (chi.is_zero()) fail(ErrorCode::BadParameter, "the zero character has no generic symmetry group");
  std::vector<Rational> m;
  try {
    m = t.multiplicities(chi);
  } catch (const Error &e) {
    if (e.code() != ErrorCode::NotACharacter) throw;
    fail(ErrorCode::NotCyclicModuleCharacter, "character has irrational multiplicities");
  }
  IdealPartDecomposition d;
  d.chi = chi;
  d.chi_I = Character::zero(t.classes);
  d.residual = Character::zero(t.classes);
  for (int i = 0; i < t.size(); ++i) {
    const Rational deg = *t.irreducibles[i].degree().rational();
    if (!m[i].is_integer() || m[i].sign() < 0 || m[i] > deg)
      fail(ErrorCode::NotCyclicModuleCharacter,
           "multiplicity " + m[i].str() + " of irreducible " + std::to_string(i) +
               " is not an integer between 0 and its degree " + deg.str());
    const long mi = m[i].get().get_num().get_si();
    d.multiplicities.push_back(mi);
    if (mi == 0) continue;
    if (m[i] == deg) {
      d.chi_I += m[i] * t.irreducibles[i];
    } else {
      d.residual += m[i] * t.irreducibles[i];
      d.constituents_of_residual.emplace_back(i, mi);
    }
  }
  d.N = kernel_of(d.residual);
  return d;
}

std::vector<int> CayleyColoring::arc_colors() const { return arcs_from_elements(*group, element_color); }

bool CayleyColoring::preserves(const Perm &p) const {
  const FiniteGroup &g = *group;
  const int n = g.order();
  if (static_cast<int>(p.size()) != n || !is_permutation(p)) return false;
  for (int a = 0; a < n; ++a) {
    const int ai = g.inv(a), pai = g.inv(p[a]);
    for (int b = 0; b < n; ++b)
      if (element_color[g.mul(pai, p[b])] != element_color[g.mul(ai, b)]) return false;
  }
  return true;
}

CayleyColoring cayley_coloring(const IdealPartDecomposition &d) {
  CayleyColoring c;
  c.group = d.chi.classes()->group;
  const FiniteGroup &g = *c.group;
  const int n = g.order();
  std::map<std::string, int> value_ids;
  for (int x = 0; x < n; ++x)
    c.value_color.push_back(value_ids.emplace(d.chi_I.at(x).key(), static_cast<int>(value_ids.size()))
                                .first->second);
  c.coset_of = left_coset_ids(g, d.N);
  c.element_color = intern_tuples({c.value_color, c.coset_of}, n);
  c.num_colors = *std::max_element(c.element_color.begin(), c.element_color.end()) + 1;
  return c;
}

Perm left_translation(const FiniteGroup &g, int element) {
  Perm p(g.order());
  for (int h = 0; h < g.order(); ++h) p[h] = g.mul(element, h);
  return p;
}

mpz_class coset_block_order(long group_order, long k_order) {
  const long index = group_order / k_order;
  mpz_class f = factorial(static_cast<unsigned>(k_order)), out = index;
  for (long i = 0; i < index; ++i) out *= f;
  return out;
}

PermGroup coset_block_group(const FiniteGroup &g, const Subgroup &k) {
  if (!is_normal(g, k)) fail(ErrorCode::BadParameter, "coset block group needs a normal subgroup");
  const int n = g.order();
  const std::vector<int> coset = left_coset_ids(g, k);
  int cosets = *std::max_element(coset.begin(), coset.end()) + 1;
  std::vector<std::vector<int>> blocks(cosets);
  blocks[coset[g.identity()]].push_back(g.identity());
  for (int x = 0; x < n; ++x)
    if (x != g.identity()) blocks[coset[x]].push_back(x);
  std::vector<int> base;
  std::vector<Perm> gens;
  for (int x : generating_set(g)) gens.push_back(left_translation(g, x));
  std::rotate(blocks.begin(), blocks.begin() + coset[g.identity()], blocks.begin() + coset[g.identity()] + 1);
  for (const auto &b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      base.push_back(b[i]);
      if (i + 1 < b.size()) {
        Perm t = perm_identity(n);
        std::swap(t[b[i]], t[b[i + 1]]);
        gens.push_back(std::move(t));
      }
    }
  }
  PermGroup out = PermGroup::from_bsgs(n, base, gens);
  if (out.order() != coset_block_order(n, k.order()))
    fail(ErrorCode::ValidationFailure, "coset block group has the wrong order");
  return out;
}

GenericSymmetryResult sym_group_of_character(const CharacterTable &t, const Character &chi,
                                             const SymmetryOptions &options) {
  IdealPartDecomposition d = ideal_part(t, chi);
  const FiniteGroup &g = *t.group;
  GenericSymmetryResult r;
  if (options.closed_forms && vanishes_off_identity(d.chi_I)) {
    // Condition (i) only separates the diagonal; what is left is the coset
    // condition modulo N.
    r.group = coset_block_group(g, d.N);
    r.closed_form = true;
  } else {
    r.group = search_cayley(g, cayley_coloring(d).element_color, options.search, &r.stats);
  }
  r.is_generically_closed = r.group.order() == g.order();
  return r;
}

GenericSymmetryResult sym_of_irreducible(const CharacterTable &t, const Character &psi) {
  if (t.index_of(psi) < 0) fail(ErrorCode::NotIrreducible, "character is not an irreducible of this table");
  GenericSymmetryResult r;
  r.group = coset_block_group(*t.group, kernel_of(psi));
  r.closed_form = true;
  r.is_generically_closed = r.group.order() == t.group->order();
  return r;
}

PermGroup common_symmetries(const FiniteGroup &g, const std::vector<std::vector<int>> &element_colorings,
                            const SearchOptions &options) {
  for (const auto &c : element_colorings)
    if (static_cast<int>(c.size()) != g.order())
      fail(ErrorCode::DimensionMismatch, "element colouring must have one entry per element");
  return search_cayley(g, intern_tuples(element_colorings, g.order()), options, nullptr);
}

Cyclotomic hat_character(const CayleyColoring &coloring, const Character &chi, const Perm &pi) {
  if (!coloring.preserves(pi))
    fail(ErrorCode::NotAGenericSymmetry, "permutation violates the generic symmetry conditions");
  const FiniteGroup &g = *coloring.group;
  Cyclotomic sum;
  for (int x = 0; x < g.order(); ++x) sum += chi.at(g.mul(g.inv(x), pi[x]));
  return sum / Rational(g.order());
}

Cyclotomic hat_character(const CharacterTable &t, const Character &chi, const Perm &pi) {
  return hat_character(cayley_coloring(ideal_part(t, chi)), chi, pi);
}

bool is_generically_closed(const CharacterTable &t, const Character &chi, const SymmetryOptions &options) {
  IdealPartDecomposition d = ideal_part(t, chi);
  if (!d.residual.is_zero() && d.N.is_trivial()) return true;
  return sym_group_of_character(t, chi, options).is_generically_closed;
}

AbelianExploration explore_abelian_closure(const CharacterTable &t, const ExploreOptions &options) {
  const FiniteGroup &g = *t.group;
  if (!is_abelian(g)) fail(ErrorCode::NotAbelian, "exploration is defined for abelian groups only");
  const int n = g.order();
  if (n > 64) fail(ErrorCode::SizeLimit, "exploration is limited to groups of order 64");

  // Kernels as element bitmasks; a sum of linear characters is faithful iff
  // the kernels meet trivially, and a non-faithful one is never closed (a
  // transposition inside a kernel coset preserves every arc colour).
  std::vector<std::uint64_t> kernel_mask(n, 0);
  for (int i = 0; i < n; ++i) {
    const Subgroup k = kernel_of(t.irreducibles[i]);
    for (int x : k.elements()) kernel_mask[i] |= std::uint64_t{1} << x;
  }
  const std::uint64_t identity_bit = std::uint64_t{1} << g.identity();

  AbelianExploration out;
  out.candidates = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  auto try_subset = [&](std::uint64_t subset) -> bool {
    ++out.examined;
    std::uint64_t k = ~std::uint64_t{0};
    for (int i = 0; i < n; ++i)
      if (subset >> i & 1) k &= kernel_mask[i];
    if (n < 64) k &= (std::uint64_t{1} << n) - 1;
    if (k != identity_bit) return false;
    ++out.searched;
    Character chi = Character::zero(t.classes);
    for (int i = 0; i < n; ++i)
      if (subset >> i & 1) chi += t.irreducibles[i];
    SymmetryOptions so;
    so.search = options.search;
    if (sym_group_of_character(t, chi, so).is_generically_closed) {
      out.closed = std::move(chi);
      return true;
    }
    return false;
  };

  if (n <= options.exhaustive_order) {
    out.exhaustive = true;
    for (std::uint64_t s = 1; s <= out.candidates; ++s)
      if (try_subset(s)) return out;
    return out;
  }
  // Single faithful characters first (cyclic groups), then random subsets.
  for (int i = 0; i < n; ++i)
    if (try_subset(std::uint64_t{1} << i)) return out;
  std::mt19937_64 rng(options.seed);
  for (std::uint64_t s = 0; s < options.samples; ++s) {
    std::uint64_t subset = rng() & out.candidates;
    if (subset && try_subset(subset)) return out;
  }
  return out;
}

} // namespace orbitsym
