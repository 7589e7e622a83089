#include "ncharm/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ncharm {

int QSeries::check_order(int trunc_order) {
  if (trunc_order < 0) throw std::domain_error("negative truncation order");
  return trunc_order;
}

QSeries QSeries::monomial(int k, int trunc_order, const Rational& c) {
  QSeries r(trunc_order);
  if (k < 0) throw std::domain_error("negative exponent");
  if (k <= trunc_order) r.coeffs_[k] = c;
  return r;
}

QSeries QSeries::of(std::initializer_list<long> coeffs, int trunc_order) {
  QSeries r(trunc_order);
  int k = 0;
  for (long c : coeffs) {
    if (k > trunc_order) break;
    r.coeffs_[k++] = Rational(c);
  }
  return r;
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return sgn(c) == 0; });
}

QSeries QSeries::truncated(int trunc_order) const {
  QSeries r(trunc_order);
  for (int k = 0; k <= std::min(trunc_order, this->trunc_order()); ++k)
    r.coeffs_[k] = coeffs_[k];
  return r;
}

QSeries QSeries::operator-() const {
  QSeries r(trunc_order());
  for (size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = -coeffs_[k];
  return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  int d = std::min(a.trunc_order(), b.trunc_order());
  QSeries r(d);
  for (int k = 0; k <= d; ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  int d = std::min(a.trunc_order(), b.trunc_order());
  QSeries r(d);
  for (int k = 0; k <= d; ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  int d = std::min(a.trunc_order(), b.trunc_order());
  QSeries r(d);
  for (int i = 0; i <= d; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (int j = 0; i + j <= d; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

QSeries operator*(const QSeries& a, const Rational& c) {
  QSeries r(a.trunc_order());
  for (size_t k = 0; k < a.coeffs_.size(); ++k) r.coeffs_[k] = a.coeffs_[k] * c;
  return r;
}

QSeries QSeries::shifted(int k) const {
  if (k < 0) throw std::domain_error("negative shift");
  QSeries r(trunc_order());
  for (int j = 0; j + k <= trunc_order(); ++j) r.coeffs_[j + k] = coeffs_[j];
  return r;
}

QSeries QSeries::inverse() const {
  if (sgn(coeffs_[0]) == 0) throw std::domain_error("not invertible");
  // b_0 = 1/a_0, b_n = -(1/a_0) * sum_{k=1..n} a_k b_{n-k}.
  QSeries r(trunc_order());
  Rational inv0 = Rational(1) / coeffs_[0];
  r.coeffs_[0] = inv0;
  for (int n = 1; n <= trunc_order(); ++n) {
    Rational acc(0);
    for (int k = 1; k <= n; ++k) acc += coeffs_[k] * r.coeffs_[n - k];
    r.coeffs_[n] = -inv0 * acc;
  }
  return r;
}

std::string QSeries::str() const {
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= trunc_order(); ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    bool unit = (a == 1);
    if (k == 0) {
      out << a.get_str();
    } else {
      if (!unit) out << a.get_str() << "*";
      out << "q";
      if (k > 1) out << "^" << k;
    }
  }
  if (first) out << "0";
  return out.str();
}

QSeries qpoch(int k, int trunc_order) {
  if (k < 0) throw std::domain_error("qpoch: negative k");
  QSeries r = QSeries::one(trunc_order);
  for (int i = 1; i <= k; ++i) {
    // factor 1 - q^i; beyond the truncation order it is the identity
    if (i > trunc_order) break;
    QSeries f = QSeries::one(trunc_order);
    f.set_coeff(i, Rational(-1));
    r = r * f;
  }
  return r;
}

QSeries qfall(int k, int trunc_order) {
  if (k < 0) throw std::domain_error("qfall: negative k");
  QSeries r = QSeries::one(trunc_order);
  for (int i = 1; i <= k; ++i) {
    QSeries f = QSeries::one(trunc_order);
    if (trunc_order >= 1) f.set_coeff(1, Rational(-i));
    r = r * f;
  }
  return r;
}

QSeries setpartition_gf(int n, int trunc_order) {
  if (n < 0) throw std::domain_error("setpartition_gf: negative n");
  QSeries acc = QSeries::zero(trunc_order);
  for (int d = 0; d <= n; ++d) {
    if (d > trunc_order) break;  // q^d vanishes past the window
    acc = acc + qfall(d, trunc_order).inverse().shifted(d);
  }
  return acc;
}

}  // namespace ncharm
