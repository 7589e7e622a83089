#pragma once

#include <optional>
#include <vector>

#include "ncharm/rational.hpp"

namespace ncharm {

/// Dense matrix of exact rationals. Sized for the small systems that show up
/// in basis changes and kernel computations (at most a few hundred rows).
class RatMatrix {
 public:
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

  /// Horizontal concatenation [this | other].
  RatMatrix augmented(const RatMatrix& other) const;

 private:
  int rows_, cols_;
  std::vector<Rational> data_;
};

/// Reduced row echelon form in place. Pivot rows are chosen by the smallest
/// combined bit length of the candidate entry, which keeps intermediate
/// rationals small. Returns the rank; pivot columns are appended to
/// *pivot_cols when given.
int rref_in_place(RatMatrix& m, std::vector<int>* pivot_cols = nullptr);

int rank(RatMatrix m);

/// Basis of the right nullspace {x : m x = 0}, one vector per free column.
std::vector<std::vector<Rational>> nullspace(RatMatrix m);

/// A particular solution of m x = b (free variables set to zero), or nullopt
/// if the system is inconsistent.
std::optional<std::vector<Rational>> solve(RatMatrix m, const std::vector<Rational>& b);

/// Exact inverse; throws std::domain_error on a singular matrix.
RatMatrix inverse(const RatMatrix& m);

}  // namespace ncharm
