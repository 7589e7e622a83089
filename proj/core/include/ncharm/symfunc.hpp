#pragma once

#include <map>
#include <optional>
#include <string>

#include "ncharm/partition.hpp"
#include "ncharm/qseries.hpp"

namespace ncharm {

/// The five classical bases of the ring of symmetric functions.
enum class Basis : char { P = 'p', H = 'h', E = 'e', M = 'm', S = 's' };

char basis_tag(Basis b);
Basis basis_from_tag(char tag);

/// Symmetric function of bounded degree with QSeries coefficients: a sparse
/// map from partitions to q-series, tagged with the basis it is written in.
///
/// The power sum basis is the internal workhorse: Kronecker products and the
/// plethystic substitutions X(1-q), X/(1-q) are diagonal there. All other
/// bases are reached through cached exact transition matrices per degree.
class SymFunc {
 public:
  static constexpr int kDefaultDegreeBound = 8;

  explicit SymFunc(Basis basis, int degree_bound = kDefaultDegreeBound)
      : basis_(basis), degree_bound_(degree_bound) {}

  static SymFunc zero(Basis basis, int degree_bound = kDefaultDegreeBound) {
    return SymFunc(basis, degree_bound);
  }
  /// Single basis element b_lambda with the given q-series coefficient.
  static SymFunc element(Basis basis, const Partition& lambda, QSeries coeff,
                         int degree_bound = kDefaultDegreeBound);
  /// b_lambda with constant coefficient c (trunc order 0 unless given).
  static SymFunc element(Basis basis, const Partition& lambda,
                         const Rational& c = Rational(1), int trunc_order = 0,
                         int degree_bound = kDefaultDegreeBound);

  Basis basis() const { return basis_; }
  int degree_bound() const { return degree_bound_; }
  const std::map<Partition, QSeries>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Accumulates; prunes zero coefficients; throws on |lambda| > degree_bound.
  void add_term(const Partition& lambda, const QSeries& coeff);

  /// Coefficient of lambda, or a zero series of the given order if absent.
  QSeries coeff(const Partition& lambda, int fallback_trunc_order = 0) const;

  /// Degree if every term has the same |lambda|; nullopt for mixed degrees.
  /// The zero function is homogeneous of every degree (returns 0).
  std::optional<int> homogeneous_degree() const;

  /// Smallest truncation order among the coefficients (0 when empty).
  int min_trunc_order() const;

  std::string str() const;  // "(1 + q)*s[2,1] + q^2*s[1,1,1]"

 private:
  Basis basis_;
  int degree_bound_;
  std::map<Partition, QSeries> terms_;
};

/// Change of basis; exact, identity when target equals the current basis.
SymFunc to_basis(const SymFunc& f, Basis target);

SymFunc add(const SymFunc& f, const SymFunc& g);  // g converted to f's basis
SymFunc sub(const SymFunc& f, const SymFunc& g);
SymFunc scale(const SymFunc& f, const QSeries& c);
SymFunc scale(const SymFunc& f, const Rational& c);

/// Product in the ring of symmetric functions (computed in the p basis,
/// where p_lambda p_mu concatenates the parts). Throws std::domain_error
/// when the product degree exceeds the degree bound.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

/// Kronecker product: p_lambda (.) p_mu = delta_{lambda,mu} z_lambda p_lambda,
/// extended bilinearly. Cross-degree pairs annihilate.
SymFunc kronecker(const SymFunc& f, const SymFunc& g);

enum class PlethMode {
  XTimesOneMinusQ,  // p_k -> (1-q^k) p_k
  XOverOneMinusQ,   // p_k -> p_k / (1-q^k)
};

/// The alphabet substitutions X(1-q) and X/(1-q) as maps on coefficients.
SymFunc pleth_scale(const SymFunc& f, PlethMode mode);

/// Hilbert series of the module with Frobenius characteristic f: n! times the
/// coefficient of p_{(1^n)}. Requires f homogeneous of degree n.
QSeries hilbert(const SymFunc& f, int n);

/// Character value on the class of cycle type lambda: z_lambda times the
/// coefficient of p_lambda. Requires f homogeneous of degree |lambda|.
QSeries char_value(const SymFunc& f, const Partition& lambda);

/// Equality as p-expansions with every coefficient truncated to order d.
bool equal_truncated(const SymFunc& f, const SymFunc& g, int d);

}  // namespace ncharm
