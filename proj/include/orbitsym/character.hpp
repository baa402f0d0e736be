#ifndef ORBITSYM_CHARACTER_HPP
#define ORBITSYM_CHARACTER_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orbitsym/cyclotomic.hpp"
#include "orbitsym/group.hpp"

namespace orbitsym {

struct ClassData {
  GroupPtr group;
  std::vector<int> representatives;
  std::vector<int> class_of;
  std::vector<int> sizes;
  std::vector<int> inverse_class;
  std::vector<int> square_class;   // class of the squares
  std::vector<int> element_order;  // per class

  int count() const noexcept { return static_cast<int>(representatives.size()); }
  int identity_class() const { return class_of[group->identity()]; }
  /// Class of rep^k.
  int power_class(int c, long k) const;
};

using ClassDataPtr = std::shared_ptr<const ClassData>;

ClassDataPtr conjugacy_classes(GroupPtr g);

/// Class function with values in Q(zeta_e), e = exponent of the group; every
/// value is stored at conductor e so that equal values have equal keys.
class Character {
public:
  Character() = default;
  Character(ClassDataPtr classes, std::vector<Cyclotomic> values);

  static Character zero(ClassDataPtr classes);
  static Character trivial(ClassDataPtr classes);
  static Character regular(ClassDataPtr classes);

  const ClassDataPtr &classes() const noexcept { return classes_; }
  const FiniteGroup &group() const { return *classes_->group; }
  const std::vector<Cyclotomic> &values() const noexcept { return values_; }
  const Cyclotomic &at_class(int c) const { return values_[c]; }
  const Cyclotomic &at(int element) const { return values_[classes_->class_of[element]]; }
  const Cyclotomic &degree() const { return values_[classes_->identity_class()]; }

  bool is_zero() const;
  bool is_rational() const;
  Character conj() const;
  Character galois(long k) const;

  Character &operator+=(const Character &o);
  Character &operator-=(const Character &o);
  friend Character operator+(Character a, const Character &b) { return a += b; }
  friend Character operator-(Character a, const Character &b) { return a -= b; }
  friend Character operator*(const Rational &s, const Character &c);
  /// Pointwise product (inner tensor product).
  friend Character operator*(const Character &a, const Character &b);
  friend bool operator==(const Character &a, const Character &b);

  /// Concatenated value keys; identifies the class function.
  std::string key() const;
  std::string str() const;

private:
  void check_same(const Character &o) const;

  ClassDataPtr classes_;
  std::vector<Cyclotomic> values_;
};

/// <a, b> = (1/|G|) sum_g a(g) conj(b(g)). Throws GroupMismatch.
Cyclotomic inner_product(const Character &a, const Character &b);

struct CharacterTable {
  GroupPtr group;
  ClassDataPtr classes;
  std::vector<Character> irreducibles;
  std::vector<int> fs_indicators;
  std::vector<std::vector<int>> galois_orbits;

  int size() const noexcept { return static_cast<int>(irreducibles.size()); }
  /// Index of an irreducible equal to `c`, or -1.
  int index_of(const Character &c) const;
  /// <chi, psi_i> for every irreducible, as rationals (throws NotACharacter
  /// when some inner product is not rational).
  std::vector<Rational> multiplicities(const Character &chi) const;
  Character from_multiplicities(const std::vector<Rational> &m) const;
  Character trivial() const { return Character::trivial(classes); }
  Character regular() const { return Character::regular(classes); }
};

using TablePtr = std::shared_ptr<const CharacterTable>;

/// Exact table by Dixon's modular method, validated before returning.
TablePtr character_table(GroupPtr g);

/// Checks orthogonality, degree sum and completeness; fills FS indicators and
/// Galois orbits. Throws ValidationFailure.
TablePtr finish_table(GroupPtr g, ClassDataPtr classes, std::vector<Character> irreducibles);

/// Frobenius-Schur indicator; throws NotIrreducible unless <psi,psi> = 1 and psi(1) > 0.
int fs_indicator(const Character &psi);

/// {g : chi(g) = chi(1)}.
Subgroup kernel_of(const Character &chi);

/// One character per Galois orbit O: psi(1) * sum_{psi' in O} psi'.
std::vector<Character> rational_ideal_characters(const CharacterTable &t);

enum class Field { Complex, Real };

bool affordable_by_left_ideal(const CharacterTable &t, const Character &chi, Field field);

/// Outer tensor product on a direct product group whose element indices
/// follow the mixed-radix convention of `direct_product`.
Character outer_tensor(ClassDataPtr product_classes, const std::vector<int> &factor_orders,
                       const std::vector<Character> &factors);

} // namespace orbitsym

#endif // ORBITSYM_CHARACTER_HPP
