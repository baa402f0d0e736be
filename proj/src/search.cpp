#include "orbitsym/search.hpp"

#include <algorithm>
#include <bit>

namespace orbitsym {

namespace {

class Engine {
public:
  Engine(SearchProblem &problem, const SearchOptions &options, SearchStats &stats)
      : p_(problem), options_(options), stats_(stats), n_(problem.degree()) {}

  PermGroup run(const std::vector<Perm> &seeds) {
    const std::vector<int> &base = p_.base();
    const std::size_t levels = base.size();
    for (const Perm &s : seeds)
      if (!perm_is_identity(s)) gens_.push_back(s);
    std::vector<int> orbit_sizes(levels, 1);

    for (std::size_t k = levels; k-- > 0;) {
      std::size_t pushed = 0;
      bool consistent = true;
      for (std::size_t j = 0; j < k && consistent; ++j) {
        consistent = p_.push(base[j], base[j]);
        ++pushed;
      }
      if (!consistent)
        fail(ErrorCode::ValidationFailure, "identity rejected by symmetry search problem");

      std::vector<int> cands = p_.candidates(base[k]);
      std::vector<char> in_orbit = orbit_mask(base[k], k);
      std::vector<char> failed(n_, 0);
      for (int y : cands) {
        if (in_orbit[y] || failed[y]) continue;
        std::optional<Perm> found = extend(base[k], y, lower_bound(orbit_sizes, k, in_orbit));
        if (found) {
          gens_.push_back(std::move(*found));
          in_orbit = orbit_mask(base[k], k);
        } else {
          for (int z : orbit_list(y, k + 1)) failed[z] = 1;
        }
      }
      int size = 0;
      for (char c : in_orbit) size += c;
      orbit_sizes[k] = size;
      for (std::size_t j = 0; j < pushed; ++j) p_.pop();
    }

    PermGroup g = PermGroup::from_bsgs(n_, base, gens_);
    mpz_class expect = 1;
    for (int s : orbit_sizes) expect *= s;
    if (g.order() != expect)
      fail(ErrorCode::ValidationFailure, "stabilizer chain inconsistent with search orbits");
    return g;
  }

private:
  bool fixes_prefix(const Perm &g, std::size_t len) const {
    const std::vector<int> &base = p_.base();
    for (std::size_t j = 0; j < len; ++j)
      if (g[base[j]] != base[j]) return false;
    return true;
  }

  std::vector<int> orbit_list(int point, std::size_t prefix) const {
    std::vector<const Perm *> sg;
    for (const Perm &g : gens_)
      if (fixes_prefix(g, prefix)) sg.push_back(&g);
    std::vector<char> seen(n_, 0);
    std::vector<int> orb{point};
    seen[point] = 1;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const Perm *g : sg) {
        int c = (*g)[orb[i]];
        if (!seen[c]) {
          seen[c] = 1;
          orb.push_back(c);
        }
      }
    return orb;
  }

  std::vector<char> orbit_mask(int point, std::size_t prefix) const {
    std::vector<char> m(n_, 0);
    for (int x : orbit_list(point, prefix)) m[x] = 1;
    return m;
  }

  mpz_class lower_bound(const std::vector<int> &sizes, std::size_t k,
                        const std::vector<char> &in_orbit) const {
    mpz_class b = 0;
    for (char c : in_orbit) b += c;
    for (std::size_t j = k + 1; j < sizes.size(); ++j) b *= sizes[j];
    return b;
  }

  std::optional<Perm> extend(int point, int image, const mpz_class &bound) {
    bound_ = bound;
    std::optional<Perm> r;
    if (assign(point, image)) r = descend();
    p_.pop();
    return r;
  }

  bool assign(int point, int image) {
    if (++stats_.nodes > options_.node_budget)
      throw SearchBudgetError("symmetry search exceeded node budget of " +
                                  std::to_string(options_.node_budget) +
                                  "; group order is a multiple of " + bound_.get_str(),
                              bound_);
    return p_.push(point, image);
  }

  std::optional<Perm> descend() {
    int x = p_.next_point();
    if (x < 0) {
      ++stats_.leaves;
      return p_.complete();
    }
    for (int y : p_.candidates(x)) {
      std::optional<Perm> r;
      if (assign(x, y)) r = descend();
      p_.pop();
      if (r) return r;
    }
    return std::nullopt;
  }

  SearchProblem &p_;
  const SearchOptions &options_;
  SearchStats &stats_;
  int n_;
  std::vector<Perm> gens_;
  mpz_class bound_;
};

} // namespace

PermGroup search_group(SearchProblem &problem, const std::vector<Perm> &seeds,
                       const SearchOptions &options, SearchStats *stats) {
  SearchStats local;
  Engine engine(problem, options, stats ? *stats : local);
  return engine.run(seeds);
}

ColoredDigraphProblem::ColoredDigraphProblem(int n, std::vector<int> color, std::vector<int> base)
    : n_(n), words_((n + 63) / 64), colors_(0), color_(std::move(color)), base_(std::move(base)) {
  if (static_cast<int>(color_.size()) != n * n)
    fail(ErrorCode::DimensionMismatch, "arc color array must have n*n entries");
  for (int c : color_) {
    if (c < 0) fail(ErrorCode::BadParameter, "negative arc color");
    colors_ = std::max(colors_, c + 1);
  }
  const std::size_t stride = static_cast<std::size_t>(words_);
  out_.assign(static_cast<std::size_t>(n_) * colors_ * stride, 0);
  in_.assign(static_cast<std::size_t>(n_) * colors_ * stride, 0);
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v) {
      int c = color_[u * n_ + v];
      out_[(static_cast<std::size_t>(u) * colors_ + c) * stride + v / 64] |= Word{1} << (v % 64);
      in_[(static_cast<std::size_t>(v) * colors_ + c) * stride + u / 64] |= Word{1} << (u % 64);
    }
  domains_.assign(static_cast<std::size_t>(n_) * stride, 0);
  for (int u = 0; u < n_; ++u)
    for (int x = 0; x < n_; ++x)
      if (color_[x * n_ + x] == color_[u * n_ + u]) dom(u)[x / 64] |= Word{1} << (x % 64);
  image_.assign(n_, -1);
}

const ColoredDigraphProblem::Word *ColoredDigraphProblem::out_set(int v, int c) const {
  return &out_[(static_cast<std::size_t>(v) * colors_ + c) * words_];
}

const ColoredDigraphProblem::Word *ColoredDigraphProblem::in_set(int v, int c) const {
  return &in_[(static_cast<std::size_t>(v) * colors_ + c) * words_];
}

bool ColoredDigraphProblem::push(int u, int v) {
  saved_domains_.push_back(domains_);
  assigned_stack_.push_back(u);
  image_[u] = v;
  if (!(dom(u)[v / 64] >> (v % 64) & 1)) return false;
  Word *du = dom(u);
  for (int w = 0; w < words_; ++w) du[w] = 0;
  du[v / 64] = Word{1} << (v % 64);
  const Word vbit = Word{1} << (v % 64);
  for (int w = 0; w < n_; ++w) {
    if (image_[w] != -1) continue;
    Word *dw = dom(w);
    const Word *o = out_set(v, color_[u * n_ + w]);
    const Word *i = in_set(v, color_[w * n_ + u]);
    Word any = 0;
    for (int k = 0; k < words_; ++k) {
      dw[k] &= o[k] & i[k];
      if (k == v / 64) dw[k] &= ~vbit;
      any |= dw[k];
    }
    if (!any) return false;
  }
  return true;
}

void ColoredDigraphProblem::pop() {
  image_[assigned_stack_.back()] = -1;
  assigned_stack_.pop_back();
  domains_ = std::move(saved_domains_.back());
  saved_domains_.pop_back();
}

std::vector<int> ColoredDigraphProblem::candidates(int point) const {
  std::vector<int> out;
  const Word *d = dom(point);
  for (int k = 0; k < words_; ++k) {
    Word w = d[k];
    while (w) {
      int b = std::countr_zero(w);
      out.push_back(k * 64 + b);
      w &= w - 1;
    }
  }
  return out;
}

int ColoredDigraphProblem::next_point() const {
  int best = -1;
  int best_count = 0;
  for (int u = 0; u < n_; ++u) {
    if (image_[u] != -1) continue;
    int c = 0;
    const Word *d = dom(u);
    for (int k = 0; k < words_; ++k) c += std::popcount(d[k]);
    if (best < 0 || c < best_count) {
      best = u;
      best_count = c;
    }
  }
  return best;
}

std::optional<Perm> ColoredDigraphProblem::complete() const {
  Perm p(image_.begin(), image_.end());
  for (int x : p)
    if (x < 0) return std::nullopt;
  return p;
}

bool ColoredDigraphProblem::accepts(const Perm &p) const {
  if (static_cast<int>(p.size()) != n_ || !is_permutation(p)) return false;
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      if (color_[p[u] * n_ + p[v]] != color_[u * n_ + v]) return false;
  return true;
}

} // namespace orbitsym
