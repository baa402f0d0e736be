#ifndef ORBITSYM_MATRIX_HPP
#define ORBITSYM_MATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "orbitsym/rational.hpp"

namespace orbitsym {

using RationalVector = std::vector<Rational>;

/// Dense exact matrix over Q, row-major.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static RationalMatrix identity(int n);
  static RationalMatrix from_rows(const std::vector<RationalVector> &rows);
  static RationalMatrix from_columns(const std::vector<RationalVector> &cols);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  Rational &operator()(int r, int c) { return a_[r * cols_ + c]; }
  const Rational &operator()(int r, int c) const { return a_[r * cols_ + c]; }

  RationalVector column(int c) const;
  RationalVector row(int r) const;
  RationalMatrix transpose() const;
  Rational trace() const;
  bool is_identity() const;

  RationalMatrix operator*(const RationalMatrix &o) const;
  RationalVector operator*(const RationalVector &v) const;
  RationalMatrix operator+(const RationalMatrix &o) const;
  RationalMatrix operator-(const RationalMatrix &o) const;
  friend bool operator==(const RationalMatrix &a, const RationalMatrix &b) = default;

  std::string str() const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

/// Reduced row echelon form; returns pivot columns.
std::vector<int> rref(RationalMatrix &m);

int mat_rank(const RationalMatrix &a);
/// Some x with a*x = b, or nullopt when the system is inconsistent.
std::optional<RationalVector> mat_solve(const RationalMatrix &a, const RationalVector &b);
/// Solves a*X = b column-wise; nullopt when any column is inconsistent.
std::optional<RationalMatrix> mat_solve(const RationalMatrix &a, const RationalMatrix &b);
std::optional<RationalMatrix> mat_inverse(const RationalMatrix &a);
/// Basis of the right null space {x : a*x = 0}.
std::vector<RationalVector> mat_kernel(const RationalMatrix &a);
/// Indices of a maximal linearly independent prefix-greedy subset of the columns.
std::vector<int> independent_columns(const RationalMatrix &a);

RationalMatrix block_diagonal(const RationalMatrix &a, const RationalMatrix &b);

} // namespace orbitsym

#endif // ORBITSYM_MATRIX_HPP
