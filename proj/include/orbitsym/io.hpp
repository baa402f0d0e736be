#ifndef ORBITSYM_IO_HPP
#define ORBITSYM_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "orbitsym/character.hpp"
#include "orbitsym/classifier.hpp"
#include "orbitsym/generic_symmetry.hpp"
#include "orbitsym/orbit_oracle.hpp"

namespace orbitsym {

using Json = nlohmann::ordered_json;

inline constexpr const char *kSchema = "orbitsym/1";

/// Cyclic, elementary abelian, dihedral and dicyclic groups of order at most
/// `max_order`, Q8, and the products Q8 x C4, Q8 x Q8, Q8 x C7.
std::vector<std::string> catalog(int max_order = 32);

/// Direct products of two catalog members (up to `max_order` each) whose
/// order is at most `max_order`.
std::vector<std::string> catalog_products(int max_order = 64);

/// Canonical group spec text of a FiniteGroup built from a spec.
std::string group_spec_of(const FiniteGroup &g);

/// Inverse of Cyclotomic::str(), e.g. "1 - 2*z8^3 + 1/2*z3". Throws ParseError.
Cyclotomic parse_cyclotomic(std::string_view text);

/// Character mini-grammar:
///   [m0,m1,...]          multiplicities over the irreducibles in table order
///   {v0;v1;...}          values per conjugacy class, each a cyclotomic literal
///   expression           sums of integer multiples of named characters, conj(e),
///                        galois(e,k), (e), and outer tensor products a x b x ...
///                        on direct products (each factor read in its own group,
///                        optionally with an integer coefficient as in 1 x 2*alpha)
/// Names: 1 / trivial, rho / regular, chi<i> (irreducible i, 0-based); cyclic(n):
/// lambda (value zeta_n at element 1), beta = lambda + conj(lambda);
/// elem_abelian(p,r): sigma<i> (value zeta_p at the i-th generator, 1-based);
/// quaternion8, dicyclic(n): alpha (first faithful irreducible of degree 2);
/// dihedral(n): psi (first faithful irreducible of degree 2).
/// Throws ParseError.
Character parse_character(const CharacterTable &t, std::string_view text);

/// JSON payloads. Every `*_from_json` throws SchemaError whose message
/// carries the JSON pointer of the offending field.
Json cyclotomic_to_json(const Cyclotomic &c);
Cyclotomic cyclotomic_from_json(const Json &j, const std::string &pointer);

Json character_to_json(const Character &c);
Character character_from_json(const CharacterTable &t, const Json &j, const std::string &pointer = "");

Json table_to_json(const CharacterTable &t);
TablePtr table_from_json(const Json &j);

Json representation_to_json(const RationalRepresentation &rep);
/// {"group": spec, "generators": [{"element": x, "matrix": [["0","-1"],...]}]}
/// or {"group": spec, "kind": "regular"} or {"group": spec, "kind": "ideal", "character": text}.
RationalRepresentation representation_from_json(const CharacterTable &t, const Json &j);

Json verdict_to_json(const FiniteGroup &g, const ClassificationVerdict &v);
ClassificationVerdict verdict_from_json(const Json &j);

Json perm_group_to_json(const PermGroup &g);

/// Reads a JSON document from a file; ParseError on failure.
Json read_json_file(const std::string &path);

/// Structured failure report for a caught library error.
Json error_to_json(const Error &e);

} // namespace orbitsym

#endif // ORBITSYM_IO_HPP
