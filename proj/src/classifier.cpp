#include "orbitsym/classifier.hpp"

#include <map>
#include <string>

#include "orbitsym/builtin.hpp"
#include "orbitsym/error.hpp"
#include "orbitsym/structure.hpp"

namespace orbitsym {

namespace {

std::string str(long x) { return std::to_string(x); }

std::string elements_str(const Subgroup &s) {
  std::string out = "{";
  for (int x : s.elements()) out += (out.size() > 1 ? "," : "") + str(x);
  return out + "}";
}

bool elementary_two_group(const FiniteGroup &g) { return is_abelian(g) && g.exponent() <= 2; }

bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

Subgroup odd_part(const FiniteGroup &g) {
  std::vector<int> odd;
  for (int p : prime_divisors(g.order()))
    if (p != 2) odd.push_back(p);
  if (odd.empty()) return Subgroup::trivial(g);
  auto h = pi_elements_subgroup(g, odd);
  return h ? *h : Subgroup();
}

/// Maps a subgroup of subgroup_as_group(g, h) back to elements of g.
Subgroup lift(const FiniteGroup &g, const Subgroup &h, const Subgroup &inner) {
  std::vector<int> xs;
  for (int x : inner.elements()) xs.push_back(h.elements()[x]);
  return Subgroup(g.order(), std::move(xs));
}

bool isomorphic_to(const FiniteGroup &g, const std::string &spec) { return are_isomorphic(g, builtin_group(spec)); }

std::string q8_times_two_group(const std::string &core, int r) {
  return r == 0 ? core : "product(" + core + ",elem_abelian(2," + str(r) + "))";
}

/// G = (PQ) x B with P, Q, B abelian, P = <g, C_P(Q)>, g acting on Q as a
/// power map, and the order conditions on p^c, p^d, (q-1)_p and the
/// multiplicative orders of q. `exponent_variant` reads "modulo |B|" as
/// "modulo exp(B)".
struct PQBMatch {
  int p = 0, q = 0;
  Subgroup P, Q, B, C, N;
  int g = 0, z = 0;
  long k = 0, c = 0, d = 0;
  long order_mod_b = 0, order_mod_pd = 0;
};

std::optional<PQBMatch> match_pqb(const FiniteGroup &G, bool exponent_variant) {
  const std::vector<int> primes = prime_divisors(G.order());
  for (int p : primes) {
    for (int q : primes) {
      if (p == q) continue;
      auto Q = pi_elements_subgroup(G, {q});
      if (!Q || !is_abelian(G, *Q)) continue;
      auto H = pi_elements_subgroup(G, {p, q});
      if (!H) continue;
      std::vector<int> rest;
      for (int r : primes)
        if (r != p && r != q) rest.push_back(r);
      Subgroup B = Subgroup::trivial(G);
      if (!rest.empty()) {
        auto b = pi_elements_subgroup(G, rest);
        if (!b) continue;
        B = *b;
      }
      if (!is_abelian(G, B) || !is_normal(G, B) || !is_normal(G, *H)) continue;
      Subgroup P = sylow_subgroup(G, p);
      if (!is_abelian(G, P)) continue;
      Subgroup C = subgroup_intersection(centralizer(G, *Q), P);
      const long pc = P.order() / C.order();
      if (pc == 1) continue;  // PQ abelian
      long c = 0;
      for (long x = pc; x > 1; x /= p) ++c;
      const long expQ = subgroup_exponent(G, *Q);
      const long expC = subgroup_exponent(G, C);
      const long qm1p = p_part(q - 1, p);
      const long bmod = exponent_variant ? subgroup_exponent(G, B) : B.order();
      for (int g : P.elements()) {
        std::vector<int> gens = C.elements();
        gens.push_back(g);
        if (!(generated_subgroup(G, gens) == P)) continue;
        long k = -1;
        for (long cand = 0; cand < expQ && k < 0; ++cand) {
          bool ok = true;
          for (int x : Q->elements())
            if (G.conj(x, g) != G.power(x, cand)) {
              ok = false;
              break;
            }
          if (ok) k = cand;
        }
        if (k < 0) continue;
        const long pd = G.element_order(G.power(g, pc));
        if (pd != expC || pd % qm1p != 0) continue;
        long d = 0;
        for (long x = pd; x > 1; x /= p) ++d;
        const long ob = multiplicative_order(q, bmod), opd = multiplicative_order(q, pd);
        if (opd % p_part(ob, p) != 0) continue;
        PQBMatch m;
        m.p = p;
        m.q = q;
        m.P = P;
        m.Q = *Q;
        m.B = B;
        m.C = C;
        m.g = g;
        m.k = k;
        m.c = c;
        m.d = d;
        m.order_mod_b = ob;
        m.order_mod_pd = opd;
        std::vector<int> ngens = C.elements();
        ngens.insert(ngens.end(), Q->elements().begin(), Q->elements().end());
        ngens.insert(ngens.end(), B.elements().begin(), B.elements().end());
        ngens.push_back(G.power(g, p));
        m.N = generated_subgroup(G, ngens);
        long e = 1;
        for (long i = 0; i < c + d - 1; ++i) e *= p;
        m.z = G.power(g, e);
        return m;
      }
    }
  }
  return std::nullopt;
}

void add_pqb_witness(CaseMatch &m, const PQBMatch &w, const std::string &prefix) {
  auto &wt = m.witness;
  wt.emplace_back(prefix + "p", str(w.p));
  wt.emplace_back(prefix + "q", str(w.q));
  wt.emplace_back(prefix + "|P|", str(w.P.order()));
  wt.emplace_back(prefix + "|Q|", str(w.Q.order()));
  wt.emplace_back(prefix + "|B|", str(w.B.order()));
  wt.emplace_back(prefix + "|C_P(Q)|", str(w.C.order()));
  wt.emplace_back(prefix + "g", str(w.g));
  wt.emplace_back(prefix + "k", str(w.k));
  wt.emplace_back(prefix + "c", str(w.c));
  wt.emplace_back(prefix + "d", str(w.d));
  wt.emplace_back(prefix + "ord_q_mod_B", str(w.order_mod_b));
  wt.emplace_back(prefix + "ord_q_mod_p^d", str(w.order_mod_pd));
}

void finish(ClassificationVerdict &v) {
  v.realizable = v.matches.empty();
  v.matched_case = v.matches.empty() ? "none" : v.matches.front().tag;
}

std::optional<CaseMatch> generalized_dicyclic_case(const FiniteGroup &g, const std::string &id) {
  if (is_abelian(g)) return std::nullopt;
  auto w = is_generalized_dicyclic(g);
  if (!w) return std::nullopt;
  CaseMatch m{id, "generalized dicyclic", {{"A", elements_str(w->A)}, {"g", str(w->g)}}, std::nullopt};
  m.automorphism = AutomorphismData{w->A, g.power(w->g, 2)};
  return m;
}

} // namespace

std::string realization_name(Realization r) {
  switch (r) {
  case Realization::Euclidean: return "euclidean";
  case Realization::Affine: return "affine";
  case Realization::Rational: return "rational";
  }
  return "";
}

ClassificationVerdict classify_euclidean(const FiniteGroup &g) {
  ClassificationVerdict v;
  v.kind = Realization::Euclidean;
  if (is_abelian(g) && g.exponent() > 2)
    v.matches.push_back({"i", "abelian, not elementary 2-abelian", {{"exponent", str(g.exponent())}}, {}});
  if (auto m = generalized_dicyclic_case(g, "ii")) v.matches.push_back(*m);
  finish(v);
  return v;
}

ClassificationVerdict classify_affine(const FiniteGroup &g) {
  ClassificationVerdict v;
  v.kind = Realization::Affine;
  if (is_abelian(g) && g.exponent() > 2)
    v.matches.push_back({"i", "abelian exponent>2", {{"exponent", str(g.exponent())}}, {}});
  if (auto m = generalized_dicyclic_case(g, "ii")) v.matches.push_back(*m);
  const int n = g.order();
  if (elementary_two_group(g) && (n == 4 || n == 8 || n == 16))
    v.matches.push_back({"iii", "elem-abelian 4/8/16", {{"order", str(n)}}, {}});
  finish(v);
  return v;
}

ClassificationVerdict classify_rational(const FiniteGroup &g) {
  if (g.order() > kMaxGroupOrder)
    fail(ErrorCode::SizeLimit, "rational classification is limited to order " + str(kMaxGroupOrder));
  ClassificationVerdict v;
  v.kind = Realization::Rational;
  const int n = g.order();
  const bool abelian = is_abelian(g);

  // (i)
  if (abelian && g.exponent() > 2)
    v.matches.push_back({"i", "abelian exponent>2", {{"exponent", str(g.exponent())}}, {}});
  else if (elementary_two_group(g) && (n == 4 || n == 8 || n == 16))
    v.matches.push_back({"i", "elem-abelian 4/8/16", {{"order", str(n)}}, {}});

  // (ii) S x A, S generalized dicyclic of exponent 4, A abelian of odd order,
  // ord_|A|(2) odd. S is then the normal Sylow 2-subgroup and A the odd part.
  if (!abelian) {
    auto S = pi_elements_subgroup(g, {2});
    Subgroup A = odd_part(g);
    if (S && A.order() > 0 && S->order() * A.order() == n && is_abelian(g, A) && !is_abelian(g, *S) &&
        subgroup_exponent(g, *S) == 4) {
      FiniteGroup sg = subgroup_as_group(g, *S);
      auto w = is_generalized_dicyclic(sg);
      const long ord = multiplicative_order(2, A.order());
      if (w && ord % 2 == 1) {
        CaseMatch m{"ii", "S x A", {}, std::nullopt};
        m.witness = {{"S", elements_str(*S)},
                     {"A", elements_str(A)},
                     {"|S|", str(S->order())},
                     {"|A|", str(A.order())},
                     {"ord_2_mod_|A|", str(ord)}};
        const Subgroup ab = lift(g, *S, w->A);
        const int gs = S->elements()[w->g];
        m.witness.emplace_back("dicyclic_A", elements_str(ab));
        m.witness.emplace_back("dicyclic_g", str(gs));
        m.automorphism = AutomorphismData{subgroup_join(g, ab, A), g.power(gs, 2)};
        v.matches.push_back(std::move(m));
      }
    }
  }

  // (iii)
  if (auto m = generalized_dicyclic_case(g, "iii")) v.matches.push_back(*m);

  // (iv)
  if (!abelian) {
    auto literal = match_pqb(g, false);
    auto variant = match_pqb(g, true);
    if (literal) {
      CaseMatch m{"iv", "(PQ) x B", {}, AutomorphismData{literal->N, literal->z}};
      add_pqb_witness(m, *literal, "");
      v.matches.push_back(std::move(m));
    }
    if (literal.has_value() != variant.has_value())
      v.notes.push_back(std::string("case (iv) with multiplicative order modulo exp(B) instead of |B| ") +
                        (variant ? "matches" : "does not match"));
  }

  // (v) Q8 x C2^r x H, H of odd order as in (iv), ord_|H|(2) odd.
  if (!abelian) {
    auto S = pi_elements_subgroup(g, {2});
    Subgroup H = odd_part(g);
    if (S && H.order() > 1 && S->order() * H.order() == n && S->order() >= 8 && is_power_of_two(S->order())) {
      int r = 0;
      for (int s = S->order() / 8; s > 1; s /= 2) ++r;
      const long ord = multiplicative_order(2, H.order());
      FiniteGroup hg = subgroup_as_group(g, H);
      if (ord % 2 == 1 && isomorphic_to(subgroup_as_group(g, *S), q8_times_two_group("quaternion8", r))) {
        if (auto w = match_pqb(hg, false)) {
          CaseMatch m{"v", "Q8 x C2^r x H", {}, std::nullopt};
          m.witness = {{"r", str(r)}, {"|H|", str(H.order())}, {"ord_2_mod_|H|", str(ord)}};
          add_pqb_witness(m, *w, "H.");
          m.automorphism = AutomorphismData{subgroup_join(g, *S, lift(g, H, w->N)), H.elements()[w->z]};
          v.matches.push_back(std::move(m));
        }
      }
    }
  }
  finish(v);
  return v;
}

Subgroup nker_R(const CharacterTable &t) {
  const FiniteGroup &g = *t.group;
  Subgroup k = Subgroup::whole(g);
  for (int i = 0; i < t.size(); ++i) {
    const Rational deg = *t.irreducibles[i].degree().rational();
    const long m = t.fs_indicators[i] == -1 ? 2 : 1;
    if (deg > Rational(m)) k = subgroup_intersection(k, kernel_of(t.irreducibles[i]));
  }
  return k;
}

bool has_nontrivial_real_kernel_shape(const FiniteGroup &g) {
  const int n = g.order();
  if (is_abelian(g)) return n > 1;
  if (is_generalized_dicyclic(g)) return true;
  if (!is_power_of_two(n) || g.exponent() != 4) return false;
  for (const auto &[core, base] : {std::pair<std::string, int>{"product(quaternion8,cyclic(4))", 32},
                                   std::pair<std::string, int>{"product(quaternion8,quaternion8)", 64}}) {
    if (n < base) continue;
    int r = 0;
    for (int s = n / base; s > 1; s /= 2) ++r;
    if (isomorphic_to(g, q8_times_two_group(core, r))) return true;
  }
  return false;
}

WitnessAutomorphism witness_automorphism(const FiniteGroup &g, const Subgroup &n, int z) {
  const int order = g.order();
  if (n.parent_order() != order) fail(ErrorCode::BadWitnessData, "subgroup belongs to a different group");
  if (z < 0 || z >= order) fail(ErrorCode::BadWitnessData, "element " + str(z) + " out of range");
  const int p = order / n.order();
  if (!is_normal(g, n)) fail(ErrorCode::BadWitnessData, "N is not normal");
  if (!is_prime(p))
    fail(ErrorCode::BadWitnessData, "index " + str(p) + " of N is not prime");
  for (int x = 0; x < order; ++x) {
    if (n.contains(x)) continue;
    bool found = false;
    for (int k = 0, y = g.identity(); k < g.element_order(x) && !found; ++k, y = g.mul(y, x)) found = y == z;
    if (!found) fail(ErrorCode::BadWitnessData, "z = " + str(z) + " is not in <g> for g = " + str(x));
  }
  if (g.element_order(z) != p)
    fail(ErrorCode::BadWitnessData, "z has order " + str(g.element_order(z)) + ", not " + str(p));

  WitnessAutomorphism w;
  w.N = n;
  w.z = z;
  w.p = p;
  int t = 0;
  while (n.contains(t)) ++t;
  // kappa(t^i m) = z^i for m in N.
  w.kappa.assign(order, -1);
  for (int i = 0, ti = g.identity(), zi = g.identity(); i < p; ++i, ti = g.mul(ti, t), zi = g.mul(zi, z))
    for (int m : n.elements()) w.kappa[g.mul(ti, m)] = zi;
  w.alpha.resize(order);
  for (int x = 0; x < order; ++x) w.alpha[x] = g.mul(x, w.kappa[x]);
  if (!is_permutation(w.alpha)) fail(ErrorCode::ValidationFailure, "alpha is not bijective");
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (w.alpha[g.mul(a, b)] != g.mul(w.alpha[a], w.alpha[b]))
        fail(ErrorCode::ValidationFailure, "alpha is not a homomorphism");
  return w;
}

bool verify_witness(const WitnessAutomorphism &w, const CharacterTable &t) {
  const FiniteGroup &g = *t.group;
  const int n = g.order();
  if (static_cast<int>(w.alpha.size()) != n) fail(ErrorCode::GroupMismatch, "witness belongs to a different group");
  for (const Character &gamma : rational_ideal_characters(t)) {
    std::map<std::string, int> ids;
    std::vector<int> id(n);
    for (int x = 0; x < n; ++x) id[x] = ids.emplace(gamma.at(x).key(), static_cast<int>(ids.size())).first->second;
    for (int a = 0; a < n; ++a) {
      const int ai = g.inv(a), pai = g.inv(w.alpha[a]);
      for (int b = 0; b < n; ++b)
        if (id[g.mul(pai, w.alpha[b])] != id[g.mul(ai, b)]) return false;
    }
  }
  return true;
}

} // namespace orbitsym
