#ifndef ORBITSYM_GROUP_HPP
#define ORBITSYM_GROUP_HPP

#include <memory>
#include <string>
#include <vector>

namespace orbitsym {

/// Hard cap on group orders for exhaustive structural searches.
inline constexpr int kMaxGroupOrder = 128;

/// A finite group given by its full multiplication table. Elements are the
/// indices 0..order-1.
class FiniteGroup {
public:
  /// Validates associativity, identity and inverses.
  /// Throws NonAssociative / NoIdentity / NoInverse naming the first violation.
  static FiniteGroup from_table(const std::vector<std::vector<int>> &table, int identity,
                                std::string label = "");

  int order() const noexcept { return n_; }
  int identity() const noexcept { return e_; }
  int exponent() const noexcept { return exponent_; }
  const std::string &label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  int mul(int a, int b) const { return table_[a * n_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int element_order(int a) const { return orders_[a]; }
  int power(int a, long k) const;
  /// g^-1 a g
  int conj(int a, int g) const { return mul(inv(g), mul(a, g)); }
  /// a^-1 b^-1 a b
  int commutator(int a, int b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  std::vector<std::vector<int>> table() const;

private:
  FiniteGroup() = default;

  int n_ = 0;
  int e_ = 0;
  int exponent_ = 1;
  std::string label_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> orders_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A subgroup stored as its sorted member list plus a membership mask.
class Subgroup {
public:
  Subgroup() = default;
  /// `members` must already be closed; they are sorted and deduplicated.
  Subgroup(int parent_order, std::vector<int> members);

  static Subgroup whole(const FiniteGroup &g);
  static Subgroup trivial(const FiniteGroup &g);

  int order() const noexcept { return static_cast<int>(elements_.size()); }
  int parent_order() const noexcept { return static_cast<int>(mask_.size()); }
  const std::vector<int> &elements() const noexcept { return elements_; }
  bool contains(int x) const { return mask_[x] != 0; }
  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool is_whole() const noexcept { return elements_.size() == mask_.size(); }

  friend bool operator==(const Subgroup &a, const Subgroup &b) { return a.elements_ == b.elements_; }

private:
  std::vector<int> elements_;
  std::vector<char> mask_;
};

Subgroup generated_subgroup(const FiniteGroup &g, const std::vector<int> &gens);
Subgroup subgroup_join(const FiniteGroup &g, const Subgroup &a, const Subgroup &b);
Subgroup subgroup_intersection(const Subgroup &a, const Subgroup &b);
bool is_normal(const FiniteGroup &g, const Subgroup &h);
Subgroup normal_closure(const FiniteGroup &g, const std::vector<int> &elems);
Subgroup center(const FiniteGroup &g);
Subgroup centralizer(const FiniteGroup &g, const Subgroup &h);
Subgroup commutator_subgroup(const FiniteGroup &g);
/// Index of the left coset xH containing each element.
std::vector<int> left_coset_ids(const FiniteGroup &g, const Subgroup &h);
bool is_abelian(const FiniteGroup &g);
bool is_abelian(const FiniteGroup &g, const Subgroup &h);
/// Largest element order inside h.
int subgroup_exponent(const FiniteGroup &g, const Subgroup &h);

/// Builds a FiniteGroup for the subgroup h, with elements renumbered in the
/// order of h.elements().
FiniteGroup subgroup_as_group(const FiniteGroup &g, const Subgroup &h);

} // namespace orbitsym

#endif // ORBITSYM_GROUP_HPP
