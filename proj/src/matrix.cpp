#include "orbitsym/matrix.hpp"

#include <sstream>

#include "orbitsym/error.hpp"

namespace orbitsym {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector> &rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      fail(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector> &cols) {
  return from_rows(cols).transpose();
}

RationalVector RationalMatrix::column(int c) const {
  RationalVector v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

RationalVector RationalMatrix::row(int r) const {
  return RationalVector(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational RationalMatrix::trace() const {
  if (rows_ != cols_) fail(ErrorCode::DimensionMismatch, "trace of non-square matrix");
  Rational t;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool RationalMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != Rational(i == j ? 1 : 0)) return false;
  return true;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix &o) const {
  if (cols_ != o.rows_) fail(ErrorCode::DimensionMismatch, "matrix product");
  RationalMatrix p(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational &x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) p(i, j) += x * o(k, j);
    }
  return p;
}

RationalVector RationalMatrix::operator*(const RationalVector &v) const {
  if (cols_ != static_cast<int>(v.size())) fail(ErrorCode::DimensionMismatch, "matrix-vector product");
  RationalVector out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k)
      if (!v[k].is_zero() && !(*this)(i, k).is_zero()) out[i] += (*this)(i, k) * v[k];
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::DimensionMismatch, "matrix sum");
  RationalMatrix s = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] += o.a_[i];
  return s;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::DimensionMismatch, "matrix difference");
  RationalMatrix s = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] -= o.a_[i];
  return s;
}

std::string RationalMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<int> rref(RationalMatrix &m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = Rational(1) / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Rational f = m(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int mat_rank(const RationalMatrix &a) {
  RationalMatrix m = a;
  return static_cast<int>(rref(m).size());
}

std::optional<RationalMatrix> mat_solve(const RationalMatrix &a, const RationalMatrix &b) {
  if (a.rows() != b.rows()) fail(ErrorCode::DimensionMismatch, "solve: row counts differ");
  RationalMatrix aug(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
  }
  auto pivots = rref(aug);
  for (int p : pivots)
    if (p >= a.cols()) return std::nullopt;
  RationalMatrix x(a.cols(), b.cols());
  for (int r = 0; r < static_cast<int>(pivots.size()); ++r)
    for (int j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(r, a.cols() + j);
  return x;
}

std::optional<RationalVector> mat_solve(const RationalMatrix &a, const RationalVector &b) {
  auto x = mat_solve(a, RationalMatrix::from_columns({b}));
  if (!x) return std::nullopt;
  return x->column(0);
}

std::optional<RationalMatrix> mat_inverse(const RationalMatrix &a) {
  if (a.rows() != a.cols()) fail(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  if (mat_rank(a) != a.rows()) return std::nullopt;
  return mat_solve(a, RationalMatrix::identity(a.rows()));
}

std::vector<RationalVector> mat_kernel(const RationalMatrix &a) {
  RationalMatrix m = a;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(a.cols());
    v[f] = 1;
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r) v[pivots[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<int> independent_columns(const RationalMatrix &a) {
  RationalMatrix m = a;
  return rref(m);
}

RationalMatrix block_diagonal(const RationalMatrix &a, const RationalMatrix &b) {
  RationalMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

} // namespace orbitsym
