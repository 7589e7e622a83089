#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ncharm/rational.hpp"

namespace ncharm {

/// Truncated power series in one variable q with exact rational coefficients.
///
/// A series carries its own truncation order D and represents an element of
/// Q[[q]] / (q^{D+1}). Binary operations on series with different truncation
/// orders truncate to the smaller one.
class QSeries {
 public:
  explicit QSeries(int trunc_order) : coeffs_(check_order(trunc_order) + 1) {}
  QSeries(std::vector<Rational> coeffs, int trunc_order)
      : coeffs_(std::move(coeffs)) {
    coeffs_.resize(check_order(trunc_order) + 1);
  }

  static QSeries zero(int trunc_order) { return QSeries(trunc_order); }
  static QSeries one(int trunc_order) { return monomial(0, trunc_order); }
  static QSeries monomial(int k, int trunc_order, const Rational& c = Rational(1));
  static QSeries constant(const Rational& c, int trunc_order) {
    return monomial(0, trunc_order, c);
  }
  // Convenience for literals: coefficients by increasing power of q.
  static QSeries of(std::initializer_list<long> coeffs, int trunc_order);

  int trunc_order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int k) const { return coeffs_.at(k); }
  void set_coeff(int k, const Rational& c) { coeffs_.at(k) = c; }

  bool is_zero() const;
  QSeries truncated(int trunc_order) const;

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const Rational& c);
  friend QSeries operator*(const Rational& c, const QSeries& a) { return a * c; }

  /// q^k * this, same truncation order (top coefficients fall off).
  QSeries shifted(int k) const;

  /// Multiplicative inverse mod q^{D+1}; requires a nonzero constant term.
  QSeries inverse() const;

  bool operator==(const QSeries&) const = default;

  /// "1 - q + 2*q^2" style rendering.
  std::string str() const;

 private:
  static int check_order(int trunc_order);
  std::vector<Rational> coeffs_;  // index = exponent, size = trunc order + 1
};

/// (q;q)_k = (1-q)(1-q^2)...(1-q^k). Empty product for k = 0.
QSeries qpoch(int k, int trunc_order);

/// {q;q}_k = (1-q)(1-2q)...(1-kq). Empty product for k = 0.
QSeries qfall(int k, int trunc_order);

/// sum_{d=0}^{n} q^d / {q;q}_d. The coefficient of q^k counts the set
/// partitions of [k] with at most n blocks.
QSeries setpartition_gf(int n, int trunc_order);

}  // namespace ncharm
