// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "orbitsym/builtin.hpp"
#include "orbitsym/classifier.hpp"
#include "orbitsym/error.hpp"
#include "orbitsym/generic_symmetry.hpp"
#include "orbitsym/io.hpp"
#include "orbitsym/orbit_oracle.hpp"

using namespace orbitsym;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void check(bool cond, const std::string &what) {
    if (cond) return;
    if (ok) detail = what;
    ok = false;
  }
};

TablePtr table_of(const std::string &spec) {
  return character_table(std::make_shared<const FiniteGroup>(builtin_group(spec)));
}

std::string describe(const Error &e) { return std::string(error_code_name(e.code())) + ": " + e.what(); }

Character random_admissible(const CharacterTable &t, std::mt19937_64 &rng) {
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

// Every nonzero character with multiplicities in [0, psi(1)].
std::vector<Character> all_admissible(const CharacterTable &t) {
  std::vector<long> bound, m(t.size(), 0);
  for (const auto &psi : t.irreducibles) bound.push_back(psi.degree().rational()->get().get_num().get_si());
  std::vector<Character> out;
  for (;;) {
    int i = 0;
    while (i < t.size() && m[i] == bound[i]) m[i++] = 0;
    if (i == t.size()) return out;
    ++m[i];
    std::vector<Rational> r(m.begin(), m.end());
    out.push_back(t.from_multiplicities(r));
  }
}

struct SweepRep {
  std::string label;
  RationalRepresentation rep;
};

// Regular, each rational ideal component, and sums of two distinct components.
std::vector<SweepRep> sweep_reps(const CharacterTable &t) {
  std::vector<SweepRep> out{{"regular", regular_representation(t.classes)}};
  std::vector<Character> gammas = rational_ideal_characters(t);
  std::vector<RationalRepresentation> parts;
  for (const auto &g : gammas) parts.push_back(ideal_component_rep(t, g));
  for (std::size_t i = 0; i < parts.size(); ++i) out.push_back({"ideal " + gammas[i].str(), parts[i]});
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      out.push_back({"ideal " + gammas[i].str() + " + " + gammas[j].str(), direct_sum(parts[i], parts[j])});
  return out;
}

Outcome fig1() {
  Outcome o;
  auto t = table_of("cyclic(4)");
  Character chi = parse_character(*t, "beta");
  o.check(sym_group_of_character(*t, chi).group.order() == 8, "|Sym(C4, beta)| != 8");
  RationalMatrix rot(2, 2);
  rot(0, 1) = Rational(-1);
  rot(1, 0) = Rational(1);
  RationalRepresentation rep = rep_from_generators(t->classes, {{1, rot}});
  OracleOptions opts;
  opts.seed = 2024;
  OracleReport r = verify_theory_vs_oracle(*t, rep, chi, opts);
  o.check(r.trials.size() == 3, "expected 3 trials");
  for (const auto &tr : r.trials) {
    o.check(tr.oracle_order == 8, "|GL(Gv)| = " + tr.oracle_order.get_str());
    o.check(tr.groups_equal, "induced permutation groups differ");
  }
  return o;
}

Outcome rectangle() {
  Outcome o;
  auto t = table_of("elem_abelian(2,2)");
  mpz_class order = sym_group_of_character(*t, parse_character(*t, "sigma1 + sigma2")).group.order();
  o.check(order == 8, "|Sym| = " + order.get_str());
  ClassificationVerdict v = classify_affine(*t->group);
  o.check(!v.realizable && v.matches.front().case_id == "iii", "classify_affine: " + v.matched_case);
  return o;
}

Outcome closed_product(const std::string &spec, const std::string &expr, long expect) {
  Outcome o;
  auto t = table_of(spec);
  GenericSymmetryResult r = sym_group_of_character(*t, parse_character(*t, expr));
  o.check(r.group.order() == expect, "|Sym| = " + r.group.order().get_str());
  o.check(r.is_generically_closed == (expect == t->group->order()), "generic closure flag");
  return o;
}

Outcome oracle_sweep() {
  Outcome o;
  int reps = 0;
  for (const auto &spec : catalog(16)) {
    auto t = table_of(spec);
    for (const auto &s : sweep_reps(*t)) {
      ++reps;
      try {
        OracleReport r = verify_theory_vs_oracle(*t, s.rep, s.rep.character);
        o.check(r.passed && r.trials.size() == 3, spec + " " + s.label + ": mismatch");
      } catch (const Error &e) {
        o.check(false, spec + " " + s.label + ": " + describe(e));
      }
    }
  }
  if (o.ok) o.detail = std::to_string(reps) + " representations";
  return o;
}

Outcome classification() {
  static const std::map<std::string, std::string> expected = {
    {"cyclic(1)", ""}, {"cyclic(2)", ""}, {"cyclic(3)", "i"}, {"cyclic(4)", "i"}, {"cyclic(5)", "i"},
    {"cyclic(6)", "i"}, {"cyclic(7)", "i"}, {"cyclic(8)", "i"}, {"cyclic(9)", "i"}, {"cyclic(10)", "i"},
    {"cyclic(11)", "i"}, {"cyclic(12)", "i"}, {"cyclic(13)", "i"}, {"cyclic(14)", "i"}, {"cyclic(15)", "i"},
    {"cyclic(16)", "i"}, {"cyclic(17)", "i"}, {"cyclic(18)", "i"}, {"cyclic(19)", "i"}, {"cyclic(20)", "i"},
    {"cyclic(21)", "i"}, {"cyclic(22)", "i"}, {"cyclic(23)", "i"}, {"cyclic(24)", "i"}, {"cyclic(25)", "i"},
    {"cyclic(26)", "i"}, {"cyclic(27)", "i"}, {"cyclic(28)", "i"}, {"cyclic(29)", "i"}, {"cyclic(30)", "i"},
    {"cyclic(31)", "i"}, {"cyclic(32)", "i"}, {"elem_abelian(2,2)", "iii"}, {"elem_abelian(2,3)", "iii"},
    {"elem_abelian(2,4)", "iii"}, {"elem_abelian(2,5)", ""}, {"elem_abelian(3,2)", "i"},
    {"elem_abelian(3,3)", "i"}, {"elem_abelian(5,2)", "i"}, {"dihedral(3)", ""}, {"dihedral(4)", ""},
    {"dihedral(5)", ""}, {"dihedral(6)", ""}, {"dihedral(7)", ""}, {"dihedral(8)", ""}, {"dihedral(9)", ""},
    {"dihedral(10)", ""}, {"dihedral(11)", ""}, {"dihedral(12)", ""}, {"dihedral(13)", ""}, {"dihedral(14)", ""},
    {"dihedral(15)", ""}, {"dihedral(16)", ""}, {"dicyclic(2)", "ii"}, {"dicyclic(3)", "ii"},
    {"dicyclic(4)", "ii"}, {"dicyclic(5)", "ii"}, {"dicyclic(6)", "ii"}, {"dicyclic(7)", "ii"},
    {"dicyclic(8)", "ii"}, {"quaternion8", "ii"}, {"product(quaternion8,cyclic(4))", ""}};
  Outcome o;
  for (const auto &spec : catalog(32)) {
    auto it = expected.find(spec);
    if (it == expected.end()) {
      o.check(false, spec + " missing from the expected table");
      continue;
    }
    ClassificationVerdict v = classify_affine(builtin_group(spec));
    std::string got = v.realizable ? "" : v.matches.front().case_id;
    o.check(got == it->second, spec + ": got '" + got + "', expected '" + it->second + "'");
  }
  for (int k = 1; k <= 5; ++k) {
    bool realizable = classify_affine(builtin_group("elem_abelian(2," + std::to_string(k) + ")")).realizable;
    o.check(realizable == (k < 2 || k > 4), "C2^" + std::to_string(k));
  }
  o.check(!classify_affine(builtin_group("quaternion8")).realizable, "Q8 affine");
  FiniteGroup q8c7 = builtin_group("product(quaternion8,cyclic(7))");
  o.check(classify_affine(q8c7).realizable, "Q8 x C7 affine");
  ClassificationVerdict rat = classify_rational(q8c7);
  bool case_ii = !rat.realizable && rat.matches.front().case_id == "ii";
  if (case_ii) {
    std::string ord;
    for (const auto &[k, v] : rat.matches.front().witness)
      if (k == "ord_2_mod_|A|") ord = v;
    o.check(ord == "3", "Q8 x C7 ord_2 mod 7 = " + ord);
  }
  o.check(case_ii, "Q8 x C7 rational: " + rat.matched_case);
  o.check(classify_rational(builtin_group("product(quaternion8,cyclic(4))")).realizable, "Q8 x C4 rational");
  return o;
}

Outcome real_kernels() {
  Outcome o;
  for (const auto &spec : catalog(32)) {
    auto t = table_of(spec);
    bool nontrivial = !nker_R(*t).is_trivial();
    o.check(nontrivial == has_nontrivial_real_kernel_shape(*t->group), spec);
  }
  return o;
}

Outcome exploration() {
  Outcome o;
  AbelianExploration e = explore_abelian_closure(*table_of("elem_abelian(3,2)"));
  o.check(!e.closed && e.exhaustive && e.candidates == 511 && e.examined == 511, "C3 x C3 exploration");
  for (int n : {2, 3, 5, 7}) {
    auto t = table_of("cyclic(" + std::to_string(n) + ")");
    AbelianExploration c = explore_abelian_closure(*t);
    bool found = c.closed && c.closed->degree() == Cyclotomic(1) && kernel_of(*c.closed).is_trivial() &&
                 is_generically_closed(*t, *c.closed);
    o.check(found, "C" + std::to_string(n) + ": no faithful linear closed character");
  }
  return o;
}

bool orthogonal(const CharacterTable &t) {
  const ClassData &cd = *t.classes;
  const long order = t.group->order();
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j)
      if (inner_product(t.irreducibles[i], t.irreducibles[j]) != Cyclotomic(i == j ? 1 : 0)) return false;
  for (int a = 0; a < cd.count(); ++a)
    for (int b = 0; b < cd.count(); ++b) {
      Cyclotomic s;
      for (const auto &psi : t.irreducibles) s += psi.at_class(a) * psi.at_class(b).conj();
      if (s != (a == b ? Cyclotomic(Rational(order) / Rational(cd.sizes[a])) : Cyclotomic())) return false;
    }
  return true;
}

// Sym(G, chi) = Sym(G, chi_I) meet the Sym(G, psi) of the residual constituents.
bool decomposes(const CharacterTable &t, const Character &chi) {
  IdealPartDecomposition d = ideal_part(t, chi);
  PermGroup sym = sym_group_of_character(t, chi).group;
  std::vector<std::vector<int>> colorings;
  std::vector<PermGroup> factors;
  if (!d.chi_I.is_zero()) {
    colorings.push_back(cayley_coloring(ideal_part(t, d.chi_I)).element_color);
    factors.push_back(sym_group_of_character(t, d.chi_I).group);
  }
  for (auto [i, m] : d.constituents_of_residual) {
    colorings.push_back(cayley_coloring(ideal_part(t, t.irreducibles[i])).element_color);
    factors.push_back(sym_of_irreducible(t, t.irreducibles[i]).group);
  }
  PermGroup meet = common_symmetries(*t.group, colorings);
  for (const auto &f : factors)
    if (!meet.is_subgroup_of(f) || !sym.is_subgroup_of(f)) return false;
  return meet == sym;
}

Outcome properties() {
  Outcome o;
  for (const auto &spec : catalog(32)) o.check(orthogonal(*table_of(spec)), "orthogonality: " + spec);

  std::mt19937_64 rng(53);
  std::vector<std::string> small = catalog(16);
  for (int k = 0; k < 20; ++k) {
    auto t = table_of(small[rng() % small.size()]);
    Character chi = random_admissible(*t, rng);
    Character rest = t->regular() - chi;
    if (rest.is_zero()) rest = chi, chi = t->regular();
    bool dual = sym_group_of_character(*t, chi).group == sym_group_of_character(*t, rest).group;
    o.check(dual, "duality: " + group_spec_of(*t->group) + " " + chi.str());
  }

  std::size_t characters = 0;
  for (const auto &spec : catalog(12)) {
    auto t = table_of(spec);
    for (const auto &chi : all_admissible(*t)) {
      ++characters;
      o.check(decomposes(*t, chi), "decomposition: " + spec + " " + chi.str());
    }
  }

  auto witness_ok = [](const std::string &spec, const std::function<std::pair<Subgroup, int>(const FiniteGroup &)> &data) {
    auto t = table_of(spec);
    auto [n, z] = data(*t->group);
    WitnessAutomorphism w = witness_automorphism(*t->group, n, z);
    return verify_witness(w, *t) && !perm_is_identity(w.alpha);
  };
  o.check(witness_ok("quaternion8", [](const FiniteGroup &g) { return std::pair{generated_subgroup(g, {1}), 2}; }),
          "witness Q8");
  o.check(witness_ok("cyclic(4)", [](const FiniteGroup &g) { return std::pair{generated_subgroup(g, {2}), 2}; }),
          "witness C4");
  o.check(witness_ok("product(quaternion8,cyclic(7))",
                     [](const FiniteGroup &g) {
                       ClassificationVerdict v = classify_rational(g);
                       const AutomorphismData &a = *v.matches.front().automorphism;
                       return std::pair{a.N, a.z};
                     }),
          "witness Q8 x C7");

  int reps = 0, stable = 0, over_budget = 0;
  mpz_class largest_orbit = 0;
  std::string first_unstable;
  for (const auto &spec : catalog(16)) {
    auto t = table_of(spec);
    for (const auto &s : sweep_reps(*t)) {
      ++reps;
      std::string why;
      try {
        ClosureReport c = closure_iterate(sample_generic_point(s.rep, 1, 10));
        if (c.stabilized && c.chain.size() <= 3) {
          ++stable;
        } else if (c.budget_exceeded) {
          ++over_budget;
          if (c.chain.back() > largest_orbit) largest_orbit = c.chain.back();
        } else {
          why = "not stabilized";
        }
      } catch (const Error &e) {
        why = describe(e);
      }
      if (!why.empty() && first_unstable.empty()) first_unstable = spec + " " + s.label + ": " + why;
    }
  }
  o.check(first_unstable.empty(), "closure: " + first_unstable);
  o.check(stable == reps, "closure stabilized on " + std::to_string(stable) + "/" + std::to_string(reps) +
                              " sweep representations; " + std::to_string(over_budget) +
                              " need orbits beyond the point budget (largest " + largest_orbit.get_str() + ")");
  if (o.ok) o.detail = std::to_string(characters) + " decompositions, " + std::to_string(reps) + " closures";
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "C4 rotation: theory and oracle agree on order 8", 1, fig1},
      {2, "C2 x C2 rectangle: order 8, affine case (iii)", 1, rectangle},
      {3, "Q8 x C4 generically closed, order 32", 60,
       [] { return closed_product("product(quaternion8,cyclic(4))", "alpha x beta + 2*alpha x 1 + 1 x beta", 32); }},
      {4, "Q8 x Q8 generically closed, order 64", 600,
       [] { return closed_product("product(quaternion8,quaternion8)", "alpha x alpha + 2*alpha x 1 + 1 x 2*alpha", 64); }},
      {5, "theory against oracle over the order <= 16 sweep", 600, oracle_sweep},
      {6, "affine classification table and anchors", 120, classification},
      {7, "real kernel intersection against the group list", 120, real_kernels},
      {8, "abelian exploration: C3 x C3 none, small cyclic found", 60, exploration},
      {9, "property suites", 900, properties},
  };
  int failed = 0;
  for (const auto &c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const Error &e) {
      o.check(false, describe(e));
    } catch (const std::exception &e) {
      o.check(false, e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) o.check(false, "runtime over " + std::to_string(static_cast<int>(c.limit_seconds)) + " s");
    failed += !o.ok;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << "criterion " << c.id << ": " << (o.ok ? "PASS" : "FAIL") << "  " << c.name << "  ["
         << secs << " s]";
    if (!o.detail.empty()) line << "  " << o.detail;
    std::cout << line.str() << std::endl;
  }
  return failed;
}
