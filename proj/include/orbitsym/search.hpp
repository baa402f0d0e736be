#ifndef ORBITSYM_SEARCH_HPP
#define ORBITSYM_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "orbitsym/error.hpp"
#include "orbitsym/perm.hpp"

namespace orbitsym {

/// Constraint model explored by `search_group`. The problem keeps a stack of
/// partial assignments point -> image; the engine pushes and pops them.
class SearchProblem {
public:
  virtual ~SearchProblem() = default;

  virtual int degree() const = 0;
  /// Points whose images determine a group element, in stabilizer-chain order.
  virtual const std::vector<int> &base() const = 0;
  /// Assigns point -> image and propagates. A false return leaves a frame
  /// on the stack: the caller always pops.
  virtual bool push(int point, int image) = 0;
  virtual void pop() = 0;
  virtual std::vector<int> candidates(int point) const = 0;
  /// Unassigned point to branch on next, or -1 once complete() may be called.
  virtual int next_point() const = 0;
  /// The permutation determined by the current assignment, if it is valid.
  virtual std::optional<Perm> complete() const = 0;
};

struct SearchOptions {
  std::uint64_t node_budget = 50'000'000;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
};

/// Thrown when the node budget runs out; `lower_bound` divides the true order.
class SearchBudgetError : public Error {
public:
  SearchBudgetError(const std::string &message, mpz_class lower_bound)
      : Error(ErrorCode::SearchBudgetExceeded, message), lower_bound_(std::move(lower_bound)) {}
  const mpz_class &lower_bound() const noexcept { return lower_bound_; }

private:
  mpz_class lower_bound_;
};

/// Computes the full group of permutations accepted by `problem`, given some
/// known members (`seeds`). Levels of the stabilizer chain are completed from
/// the deepest up; a failed image prunes its whole orbit under the deeper
/// stabilizer.
PermGroup search_group(SearchProblem &problem, const std::vector<Perm> &seeds,
                       const SearchOptions &options = {}, SearchStats *stats = nullptr);

/// Complete directed graph with colored arcs; automorphisms preserve every
/// arc color. `color` is n*n row-major with values in [0, num_colors).
class ColoredDigraphProblem : public SearchProblem {
public:
  ColoredDigraphProblem(int n, std::vector<int> color, std::vector<int> base);

  int degree() const override { return n_; }
  const std::vector<int> &base() const override { return base_; }
  bool push(int point, int image) override;
  void pop() override;
  std::vector<int> candidates(int point) const override;
  int next_point() const override;
  std::optional<Perm> complete() const override;

  /// Direct check of a full permutation against every arc.
  bool accepts(const Perm &p) const;

private:
  using Word = std::uint64_t;
  Word *dom(int v) { return &domains_[static_cast<std::size_t>(v) * words_]; }
  const Word *dom(int v) const { return &domains_[static_cast<std::size_t>(v) * words_]; }
  const Word *out_set(int v, int c) const;
  const Word *in_set(int v, int c) const;

  int n_;
  int words_;
  int colors_;
  std::vector<int> color_;
  std::vector<int> base_;
  std::vector<Word> out_;  // (v*colors + c) -> {x : color(v,x) = c}
  std::vector<Word> in_;   // (v*colors + c) -> {x : color(x,v) = c}
  std::vector<Word> empty_;
  std::vector<Word> domains_;
  std::vector<int> image_;
  std::vector<std::vector<Word>> saved_domains_;
  std::vector<int> assigned_stack_;
};

} // namespace orbitsym

#endif // ORBITSYM_SEARCH_HPP
