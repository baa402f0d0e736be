#ifndef ORBITSYM_BUILTIN_HPP
#define ORBITSYM_BUILTIN_HPP

#include <string>
#include <string_view>
#include <vector>

#include "orbitsym/group.hpp"

namespace orbitsym {

/// Parsed constructor expression such as `product(quaternion8,cyclic(7))`.
struct GroupSpec {
  std::string kind; // cyclic, elem_abelian, dihedral, quaternion8, dicyclic, product
  std::vector<long> params;
  std::vector<GroupSpec> factors; // only for product

  std::string str() const;
  friend bool operator==(const GroupSpec &, const GroupSpec &) = default;
};

GroupSpec parse_group_spec(std::string_view text);

/// Element orderings:
///   cyclic(n)          t^k                     -> k
///   elem_abelian(p,r)  (a_0,...,a_{r-1})       -> sum a_i p^i
///   dihedral(n)        r^k s^e, order 2n       -> k + n*e
///   dicyclic(n)        a^k x^e, order 4n,
///                      x^2 = a^n, x^-1 a x = a^-1 -> k + 2n*e
///   quaternion8        dicyclic(2): 0=1, 1=i, 2=-1, 3=-i, 4=j, 5=k, 6=-j, 7=-k
///   product(A,B,...)   (a,b,...)               -> mixed radix, first factor major
FiniteGroup build_group(const GroupSpec &spec);
FiniteGroup builtin_group(std::string_view text);

FiniteGroup cyclic_group(int n);
FiniteGroup elementary_abelian_group(int p, int r);
FiniteGroup dihedral_group(int n);
FiniteGroup dicyclic_group(int n);
FiniteGroup quaternion_group();
FiniteGroup direct_product(const std::vector<FiniteGroup> &factors);

/// Splits a product element index into per-factor indices.
std::vector<int> product_coordinates(const std::vector<int> &factor_orders, int x);

bool is_prime(long n);

} // namespace orbitsym

#endif // ORBITSYM_BUILTIN_HPP
