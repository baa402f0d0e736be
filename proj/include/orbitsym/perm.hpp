#ifndef ORBITSYM_PERM_HPP
#define ORBITSYM_PERM_HPP

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace orbitsym {

/// A permutation of {0..n-1} as its image array.
using Perm = std::vector<int>;

Perm perm_identity(int n);
/// (p * q)(x) = p(q(x)): q is applied first.
Perm perm_compose(const Perm &p, const Perm &q);
Perm perm_inverse(const Perm &p);
bool is_permutation(const Perm &p);
bool perm_is_identity(const Perm &p);

/// Permutation group with a base and strong generating set.
class PermGroup {
public:
  PermGroup() = default;
  explicit PermGroup(int degree) : n_(degree) {}

  /// Deterministic Schreier-Sims.
  static PermGroup from_generators(int degree, const std::vector<Perm> &gens);
  /// Trusts that `strong_gens` is a strong generating set relative to `base`.
  static PermGroup from_bsgs(int degree, std::vector<int> base, const std::vector<Perm> &strong_gens);

  int degree() const noexcept { return n_; }
  const std::vector<Perm> &generators() const noexcept { return gens_; }
  const std::vector<int> &base() const noexcept { return base_; }
  const mpz_class &order() const noexcept { return order_; }
  std::vector<int> basic_orbit_sizes() const;

  bool contains(const Perm &p) const;
  bool is_subgroup_of(const PermGroup &other) const;
  friend bool operator==(const PermGroup &a, const PermGroup &b);

  /// All elements; throws SizeLimit when the order exceeds `limit`.
  std::vector<Perm> elements(std::size_t limit = 1000000) const;
  std::vector<int> orbit(int point) const;

private:
  struct Level {
    int point = 0;
    std::vector<int> orbit;
    std::vector<int> slot;     // point -> index into transversal, or -1
    std::vector<Perm> transversal;
  };

  void rebuild_level(std::size_t i);
  /// Sifts p from level `from`; returns the residue and the level it stopped at.
  std::pair<Perm, std::size_t> strip(Perm p, std::size_t from) const;
  void recompute_order();

  int n_ = 0;
  std::vector<int> base_;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
  mpz_class order_ = 1;
};

} // namespace orbitsym

#endif // ORBITSYM_PERM_HPP
