#include "orbitsym/perm.hpp"

#include <numeric>

#include "orbitsym/error.hpp"

namespace orbitsym {

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm &p, const Perm &q) {
  Perm r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

Perm perm_inverse(const Perm &p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

bool is_permutation(const Perm &p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

bool perm_is_identity(const Perm &p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

namespace {

bool fixes_prefix(const Perm &p, const std::vector<int> &base, std::size_t len) {
  for (std::size_t j = 0; j < len; ++j)
    if (p[base[j]] != base[j]) return false;
  return true;
}

} // namespace

void PermGroup::rebuild_level(std::size_t i) {
  Level &lv = levels_[i];
  lv.point = base_[i];
  lv.orbit = {lv.point};
  lv.slot.assign(n_, -1);
  lv.transversal = {perm_identity(n_)};
  lv.slot[lv.point] = 0;
  std::vector<const Perm *> sgens;
  for (const Perm &g : gens_)
    if (fixes_prefix(g, base_, i)) sgens.push_back(&g);
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    int b = lv.orbit[k];
    for (const Perm *g : sgens) {
      int c = (*g)[b];
      if (lv.slot[c] >= 0) continue;
      lv.slot[c] = static_cast<int>(lv.transversal.size());
      lv.transversal.push_back(perm_compose(*g, lv.transversal[lv.slot[b]]));
      lv.orbit.push_back(c);
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::strip(Perm p, std::size_t from) const {
  for (std::size_t j = from; j < levels_.size(); ++j) {
    int b = p[base_[j]];
    int s = levels_[j].slot[b];
    if (s < 0) return {std::move(p), j};
    p = perm_compose(perm_inverse(levels_[j].transversal[s]), p);
  }
  return {std::move(p), levels_.size()};
}

void PermGroup::recompute_order() {
  order_ = 1;
  for (const Level &lv : levels_) order_ *= static_cast<unsigned long>(lv.orbit.size());
}

PermGroup PermGroup::from_generators(int degree, const std::vector<Perm> &gens) {
  PermGroup g(degree);
  for (const Perm &p : gens) {
    if (static_cast<int>(p.size()) != degree || !is_permutation(p))
      fail(ErrorCode::BadParameter, "generator is not a permutation of the right degree");
    if (!perm_is_identity(p)) g.gens_.push_back(p);
  }
  auto first_moved = [degree](const Perm &p) {
    for (int x = 0; x < degree; ++x)
      if (p[x] != x) return x;
    return -1;
  };
  for (const Perm &p : g.gens_)
    if (fixes_prefix(p, g.base_, g.base_.size())) g.base_.push_back(first_moved(p));
  g.levels_.resize(g.base_.size());
  for (std::size_t i = g.levels_.size(); i-- > 0;) g.rebuild_level(i);

  // Schreier-Sims: verify each level, descending into deeper levels first.
  std::size_t i = g.levels_.size();
  while (i-- > 0) {
    bool restarted = false;
    g.rebuild_level(i);
    const Level lv = g.levels_[i];
    std::vector<Perm> sgens;
    for (const Perm &s : g.gens_)
      if (fixes_prefix(s, g.base_, i)) sgens.push_back(s);
    for (std::size_t k = 0; k < lv.orbit.size() && !restarted; ++k) {
      int b = lv.orbit[k];
      for (const Perm &s : sgens) {
        int c = s[b];
        Perm schreier = perm_compose(perm_inverse(lv.transversal[lv.slot[c]]),
                                     perm_compose(s, lv.transversal[lv.slot[b]]));
        auto [h, j] = g.strip(std::move(schreier), i + 1);
        if (perm_is_identity(h)) continue;
        if (j == g.levels_.size()) {
          g.base_.push_back(first_moved(h));
          g.levels_.emplace_back();
        }
        g.gens_.push_back(std::move(h));
        for (std::size_t l = i + 1; l <= j; ++l) g.rebuild_level(l);
        i = j + 1;
        restarted = true;
        break;
      }
    }
  }
  g.recompute_order();
  return g;
}

PermGroup PermGroup::from_bsgs(int degree, std::vector<int> base, const std::vector<Perm> &strong_gens) {
  PermGroup g(degree);
  g.base_ = std::move(base);
  for (const Perm &p : strong_gens)
    if (!perm_is_identity(p)) g.gens_.push_back(p);
  g.levels_.resize(g.base_.size());
  for (std::size_t i = 0; i < g.levels_.size(); ++i) g.rebuild_level(i);
  g.recompute_order();
  return g;
}

std::vector<int> PermGroup::basic_orbit_sizes() const {
  std::vector<int> s;
  for (const Level &lv : levels_) s.push_back(static_cast<int>(lv.orbit.size()));
  return s;
}

bool PermGroup::contains(const Perm &p) const {
  if (static_cast<int>(p.size()) != n_ || !is_permutation(p)) return false;
  return perm_is_identity(strip(p, 0).first);
}

bool PermGroup::is_subgroup_of(const PermGroup &other) const {
  for (const Perm &g : gens_)
    if (!other.contains(g)) return false;
  return true;
}

bool operator==(const PermGroup &a, const PermGroup &b) {
  return a.n_ == b.n_ && a.order_ == b.order_ && a.is_subgroup_of(b);
}

std::vector<Perm> PermGroup::elements(std::size_t limit) const {
  if (order_ > static_cast<unsigned long>(limit))
    fail(ErrorCode::SizeLimit, "group of order " + order_.get_str() + " is too large to enumerate");
  std::vector<Perm> out{perm_identity(n_)};
  for (std::size_t i = levels_.size(); i-- > 0;) {
    std::vector<Perm> next;
    next.reserve(out.size() * levels_[i].transversal.size());
    for (const Perm &u : levels_[i].transversal)
      for (const Perm &x : out) next.push_back(perm_compose(u, x));
    out = std::move(next);
  }
  return out;
}

std::vector<int> PermGroup::orbit(int point) const {
  std::vector<char> seen(n_, 0);
  std::vector<int> orb{point};
  seen[point] = 1;
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (const Perm &g : gens_) {
      int c = g[orb[k]];
      if (!seen[c]) {
        seen[c] = 1;
        orb.push_back(c);
      }
    }
  return orb;
}

} // namespace orbitsym
