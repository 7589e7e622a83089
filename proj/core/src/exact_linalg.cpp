#include "ncharm/exact_linalg.hpp"

#include <stdexcept>

namespace ncharm {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::augmented(const RatMatrix& other) const {
  if (other.rows_ != rows_) throw std::invalid_argument("augment: row mismatch");
  RatMatrix m(rows_, cols_ + other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (int j = 0; j < other.cols_; ++j) m.at(i, cols_ + j) = other.at(i, j);
  }
  return m;
}

namespace {

size_t entry_bits(const Rational& r) {
  return mpz_sizeinbase(r.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
}

}  // namespace

int rref_in_place(RatMatrix& m, std::vector<int>* pivot_cols) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    // pick the nonzero candidate with the fewest bits
    int pivot = -1;
    size_t best = 0;
    for (int i = rank; i < m.rows(); ++i) {
      if (sgn(m.at(i, col)) == 0) continue;
      size_t bits = entry_bits(m.at(i, col));
      if (pivot < 0 || bits < best) {
        pivot = i;
        best = bits;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = col; j < m.cols(); ++j) swap(m.at(pivot, j), m.at(rank, j));
    Rational inv = Rational(1) / m.at(rank, col);
    for (int j = col; j < m.cols(); ++j) m.at(rank, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == rank || sgn(m.at(i, col)) == 0) continue;
      Rational f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(rank, j);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

int rank(RatMatrix m) { return rref_in_place(m); }

std::vector<std::vector<Rational>> nullspace(RatMatrix m) {
  std::vector<int> pivots;
  rref_in_place(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (int freec = 0; freec < m.cols(); ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<Rational> v(m.cols());
    v[freec] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) {
      // row r reads: x_{pivots[r]} + sum_{free c} m(r,c) x_c = 0
      v[pivots[r]] = -m.at(static_cast<int>(r), freec);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(RatMatrix m, const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw std::invalid_argument("solve: dimension mismatch");
  RatMatrix rhs(m.rows(), 1);
  for (int i = 0; i < m.rows(); ++i) rhs.at(i, 0) = b[i];
  RatMatrix aug = m.augmented(rhs);
  std::vector<int> pivots;
  rref_in_place(aug, &pivots);
  // Inconsistent iff a pivot landed in the RHS column.
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Rational> x(m.cols());
  for (size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = aug.at(static_cast<int>(r), m.cols());
  return x;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("inverse: not square");
  RatMatrix aug = m.augmented(RatMatrix::identity(m.rows()));
  std::vector<int> pivots;
  int rk = rref_in_place(aug, &pivots);
  if (rk < m.rows() || (rk > 0 && pivots[rk - 1] >= m.cols()))
    throw std::domain_error("inverse: singular matrix");
  RatMatrix inv(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) inv.at(i, j) = aug.at(i, m.cols() + j);
  return inv;
}

}  // namespace ncharm
