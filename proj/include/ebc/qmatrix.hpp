#ifndef EBC_QMATRIX_HPP
#define EBC_QMATRIX_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "ebc/rational.hpp"

namespace ebc {

/// Dense matrix over Q backed by GMP rationals. Entry growth in exact
/// elimination is unbounded in the word model, so everything rank-like goes
/// through mpq_class; sizes here top out at dim E8 = 248.
class QMat {
public:
  QMat() : rows_(0), cols_(0) {}
  QMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, mpq_class(0)) {}

  static QMat identity(std::size_t n);
  static QMat from_rat(const std::vector<std::vector<Rat>>& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpq_class& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const mpq_class& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  QMat transpose() const;
  QMat operator*(const QMat& o) const;
  QMat operator-(const QMat& o) const;

  /// Exact rank by fraction-free-style Gaussian elimination.
  std::size_t rank() const;

  /// Basis of the right kernel {x : Ax = 0}, one column vector per entry.
  std::vector<std::vector<mpq_class>> kernel_basis() const;

  /// One solution of Ax = b, or nullopt when inconsistent.
  std::optional<std::vector<mpq_class>> solve(
      const std::vector<mpq_class>& b) const;

private:
  std::size_t rows_, cols_;
  std::vector<mpq_class> a_;
};

inline mpq_class to_mpq(const Rat& r) {
  // gmpxx has no long long constructor; long is 64-bit on this target
  return mpq_class(mpz_class((long)r.num()), mpz_class((long)r.den()));
}

/// Exact conversion back; throws std::overflow_error when it does not fit.
Rat to_rat(const mpq_class& q);

} // namespace ebc

#endif
