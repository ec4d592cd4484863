#include "ebc/qmatrix.hpp"

#include <stdexcept>

namespace ebc {

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::from_rat(const std::vector<std::vector<Rat>>& m) {
  QMat q(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < q.rows_; ++i)
    for (std::size_t j = 0; j < q.cols_; ++j) q.at(i, j) = to_mpq(m[i][j]);
  return q;
}

QMat QMat::transpose() const {
  QMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

QMat QMat::operator*(const QMat& o) const {
  if (cols_ != o.rows_) throw std::logic_error("QMat shape mismatch");
  QMat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpq_class& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

QMat QMat::operator-(const QMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::logic_error("QMat shape mismatch");
  QMat r(*this);
  for (std::size_t i = 0; i < rows_ * cols_; ++i) r.a_[i] -= o.a_[i];
  return r;
}

namespace {

// Row echelon in place; returns pivot columns. Partial pivoting by first
// nonzero entry keeps things deterministic.
std::vector<std::size_t> echelon(std::vector<mpq_class>& a, std::size_t rows,
                                 std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && a[p * cols + col] == 0) ++p;
    if (p == rows) continue;
    if (p != row)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(a[p * cols + j], a[row * cols + j]);
    mpq_class inv = 1 / a[row * cols + col];
    for (std::size_t j = col; j < cols; ++j) a[row * cols + j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row) continue;
      mpq_class f = a[i * cols + col];
      if (f == 0) continue;
      for (std::size_t j = col; j < cols; ++j)
        a[i * cols + j] -= f * a[row * cols + j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace

std::size_t QMat::rank() const {
  std::vector<mpq_class> a = a_;
  return echelon(a, rows_, cols_).size();
}

std::vector<std::vector<mpq_class>> QMat::kernel_basis() const {
  std::vector<mpq_class> a = a_;
  std::vector<std::size_t> pivots = echelon(a, rows_, cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<mpq_class>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> v(cols_, mpq_class(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -a[k * cols_ + free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<mpq_class>> QMat::solve(
    const std::vector<mpq_class>& b) const {
  if (b.size() != rows_) throw std::logic_error("QMat/rhs shape mismatch");
  std::size_t w = cols_ + 1;
  std::vector<mpq_class> a(rows_ * w);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) a[i * w + j] = at(i, j);
    a[i * w + cols_] = b[i];
  }
  std::vector<std::size_t> pivots = echelon(a, rows_, w);
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  std::vector<mpq_class> x(cols_, mpq_class(0));
  for (std::size_t k = 0; k < pivots.size(); ++k)
    x[pivots[k]] = a[k * w + cols_];
  return x;
}

Rat to_rat(const mpq_class& q) {
  if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p())
    throw std::overflow_error("mpq value does not fit in Rat");
  return Rat(q.get_num().get_si(), q.get_den().get_si());
}

} // namespace ebc
