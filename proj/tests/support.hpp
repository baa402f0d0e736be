#ifndef ORBITSYM_TESTS_SUPPORT_HPP
#define ORBITSYM_TESTS_SUPPORT_HPP

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "orbitsym/builtin.hpp"
#include "orbitsym/character.hpp"

namespace testing_support {

using namespace orbitsym;

inline GroupPtr group_of(const std::string &spec) {
  return std::make_shared<const FiniteGroup>(builtin_group(spec));
}

inline TablePtr table_of(const std::string &spec) { return character_table(group_of(spec)); }

/// First irreducible whose value at `element` equals `value`, among those of the given degree.
inline Character irreducible_with(const CharacterTable &t, int element, const Cyclotomic &value, long degree) {
  for (const auto &psi : t.irreducibles)
    if (psi.degree() == Cyclotomic(degree) && psi.at(element) == value) return psi;
  throw std::runtime_error("no such irreducible");
}

/// Random character with every multiplicity in [0, psi(1)], not zero.
inline Character random_admissible(const CharacterTable &t, std::mt19937_64 &rng) {
  for (;;) {
    std::vector<Rational> m;
    bool any = false;
    for (const auto &psi : t.irreducibles) {
      long d = psi.degree().rational()->get().get_num().get_si();
      long x = static_cast<long>(rng() % (d + 1));
      any |= x != 0;
      m.emplace_back(x);
    }
    if (any) return t.from_multiplicities(m);
  }
}

inline const std::vector<std::string> &small_catalog() {
  static const std::vector<std::string> c = {
      "cyclic(1)",  "cyclic(2)",   "cyclic(3)",     "cyclic(4)",        "elem_abelian(2,2)",
      "cyclic(5)",  "cyclic(6)",   "dihedral(3)",   "cyclic(7)",        "cyclic(8)",
      "dihedral(4)", "quaternion8", "elem_abelian(2,3)", "product(cyclic(4),cyclic(2))", "elem_abelian(3,2)",
      "dihedral(5)", "dicyclic(3)", "product(cyclic(2),cyclic(6))", "dihedral(6)",
      "product(quaternion8,cyclic(2))", "dihedral(8)", "dicyclic(4)", "elem_abelian(2,4)"};
  return c;
}

} // namespace testing_support

#endif
