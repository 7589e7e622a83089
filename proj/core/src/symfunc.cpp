#include "ncharm/symfunc.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "ncharm/exact_linalg.hpp"

namespace ncharm {

char basis_tag(Basis b) { return static_cast<char>(b); }

Basis basis_from_tag(char tag) {
  switch (tag) {
    case 'p': return Basis::P;
    case 'h': return Basis::H;
    case 'e': return Basis::E;
    case 'm': return Basis::M;
    case 's': return Basis::S;
    default: throw std::invalid_argument(std::string("unknown basis tag '") + tag + "'");
  }
}

SymFunc SymFunc::element(Basis basis, const Partition& lambda, QSeries coeff,
                         int degree_bound) {
  SymFunc f(basis, degree_bound);
  f.add_term(lambda, coeff);
  return f;
}

SymFunc SymFunc::element(Basis basis, const Partition& lambda, const Rational& c,
                         int trunc_order, int degree_bound) {
  return element(basis, lambda, QSeries::constant(c, trunc_order), degree_bound);
}

void SymFunc::add_term(const Partition& lambda, const QSeries& coeff) {
  if (lambda.size() > degree_bound_)
    throw std::domain_error("SymFunc: degree " + std::to_string(lambda.size()) +
                            " exceeds degree bound " + std::to_string(degree_bound_));
  auto it = terms_.find(lambda);
  if (it == terms_.end()) {
    if (!coeff.is_zero()) terms_.emplace(lambda, coeff);
    return;
  }
  it->second = it->second + coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

QSeries SymFunc::coeff(const Partition& lambda, int fallback_trunc_order) const {
  auto it = terms_.find(lambda);
  if (it == terms_.end()) return QSeries::zero(fallback_trunc_order);
  return it->second;
}

std::optional<int> SymFunc::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first.size();
  for (const auto& [lambda, c] : terms_)
    if (lambda.size() != d) return std::nullopt;
  return d;
}

int SymFunc::min_trunc_order() const {
  int d = -1;
  for (const auto& [lambda, c] : terms_)
    d = (d < 0) ? c.trunc_order() : std::min(d, c.trunc_order());
  return d < 0 ? 0 : d;
}

std::string SymFunc::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [lambda, c] : terms_) {
    std::string cs = c.str();
    bool simple = cs.find(" + ") == std::string::npos &&
                  cs.find(" - ") == std::string::npos;
    if (!first) out << " + ";
    first = false;
    if (cs == "1") {
      // coefficient one: bare basis element
    } else if (simple) {
      out << cs << "*";
    } else {
      out << "(" << cs << ")*";
    }
    out << basis_tag(basis_) << lambda.str();
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Transition tables between the five bases, cached per degree.
// ---------------------------------------------------------------------------

namespace {

// Murnaghan-Nakayama: chi^lambda(mu) by recursive border-strip removal on
// beta numbers. chi is evaluated class part by class part.
Integer mn_char(const std::vector<int>& lambda, const std::vector<int>& mu, size_t t) {
  if (lambda.empty()) return t == mu.size() ? 1 : 0;
  if (t == mu.size()) return 0;
  int k = mu[t];
  int len = static_cast<int>(lambda.size());
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
  Integer total = 0;
  for (int i = 0; i < len; ++i) {
    int target = beta[i] - k;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int crossings = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++crossings;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> rest;
    for (int j = 0; j < len; ++j) {
      int part = nb[j] - (len - 1 - j);
      if (part > 0) rest.push_back(part);
    }
    Integer sub = mn_char(rest, mu, t + 1);
    total += (crossings % 2 != 0) ? -sub : sub;
  }
  return total;
}

// Monomial expansion of p_mu in nvars commuting variables; the exact
// coefficients of p_mu on the monomial basis are read off sorted exponents.
std::map<std::vector<int>, Integer> expand_power_sum(const Partition& mu, int nvars) {
  std::map<std::vector<int>, Integer> acc;
  acc[std::vector<int>(nvars, 0)] = 1;
  for (int a : mu.parts()) {
    std::map<std::vector<int>, Integer> next;
    for (const auto& [expv, c] : acc) {
      for (int j = 0; j < nvars; ++j) {
        std::vector<int> e = expv;
        e[j] += a;
        next[e] += c;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

using Matrix = std::vector<std::vector<Rational>>;

Matrix invert_matrix(const Matrix& m) {
  int n = static_cast<int>(m.size());
  RatMatrix rm(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rm.at(i, j) = m[i][j];
  RatMatrix inv = inverse(rm);
  Matrix out(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = inv.at(i, j);
  return out;
}

struct DegreeTables {
  std::vector<Partition> parts;
  std::map<Partition, int> index;
  // to_p[b][i][j]: b_{parts[i]} = sum_j to_p[b][i][j] p_{parts[j]}
  // from_p[b][i][j]: p_{parts[i]} = sum_j from_p[b][i][j] b_{parts[j]}
  std::map<Basis, Matrix> to_p, from_p;
};

// p-expansion row of h_lambda (or e_lambda): product over parts of
// h_k = sum_{mu |- k} p_mu / z_mu, with the sign (-1)^{k - l(mu)} for e_k.
void one_row_product(const DegreeTables& t, bool elementary,
                     const Partition& lambda, std::vector<Rational>& row) {
  std::map<Partition, Rational> acc;
  acc[Partition{}] = 1;
  for (int part : lambda.parts()) {
    std::map<Partition, Rational> next;
    for (const Partition& mu : partitions_of(part)) {
      Rational c = Rational(1) / Rational(mu.z());
      if (elementary && (part - mu.length()) % 2 != 0) c = -c;
      for (const auto& [nu, a] : acc) {
        std::vector<int> merged = nu.parts();
        merged.insert(merged.end(), mu.parts().begin(), mu.parts().end());
        next[Partition(std::move(merged))] += a * c;
      }
    }
    acc = std::move(next);
  }
  for (const auto& [mu, c] : acc) row[t.index.at(mu)] = c;
}

std::unique_ptr<DegreeTables> build_tables(int d) {
  auto t = std::make_unique<DegreeTables>();
  t->parts = partitions_of(d);
  int n = static_cast<int>(t->parts.size());
  for (int i = 0; i < n; ++i) t->index[t->parts[i]] = i;

  // Character table
  std::vector<std::vector<Integer>> chi(n, std::vector<Integer>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      chi[i][j] = mn_char(t->parts[i].parts(), t->parts[j].parts(), 0);

  Matrix s_to_p(n, std::vector<Rational>(n)), p_to_s(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      s_to_p[i][j] = Rational(chi[i][j]) / Rational(t->parts[j].z());
      p_to_s[i][j] = Rational(chi[j][i]);
    }
  }
  t->to_p[Basis::S] = std::move(s_to_p);
  t->from_p[Basis::S] = std::move(p_to_s);

  Matrix h_to_p(n, std::vector<Rational>(n)), e_to_p(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    one_row_product(*t, /*elementary=*/false, t->parts[i], h_to_p[i]);
    one_row_product(*t, /*elementary=*/true, t->parts[i], e_to_p[i]);
  }
  t->from_p[Basis::H] = invert_matrix(h_to_p);
  t->from_p[Basis::E] = invert_matrix(e_to_p);
  t->to_p[Basis::H] = std::move(h_to_p);
  t->to_p[Basis::E] = std::move(e_to_p);

  // p_mu on the monomial basis via expansion in d variables (d >= any length)
  int nvars = std::max(d, 1);
  Matrix p_to_m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    auto expansion = expand_power_sum(t->parts[i], nvars);
    for (int j = 0; j < n; ++j) {
      std::vector<int> key(nvars, 0);
      const auto& parts = t->parts[j].parts();
      std::copy(parts.begin(), parts.end(), key.begin());
      auto it = expansion.find(key);
      p_to_m[i][j] = it == expansion.end() ? Rational(0) : Rational(it->second);
    }
  }
  t->to_p[Basis::M] = invert_matrix(p_to_m);
  t->from_p[Basis::M] = std::move(p_to_m);
  return t;
}

const DegreeTables& degree_tables(int d) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<DegreeTables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[d];
  if (!slot) slot = build_tables(d);
  return *slot;
}

}  // namespace

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

namespace {

// f as a p-expansion (basis conversion applied termwise).
std::map<Partition, QSeries> p_expansion(const SymFunc& f) {
  std::map<Partition, QSeries> out;
  auto emit = [&out](const Partition& mu, const QSeries& c) {
    auto [it, inserted] = out.emplace(mu, c);
    if (!inserted) it->second = it->second + c;
  };
  for (const auto& [lambda, c] : f.terms()) {
    if (f.basis() == Basis::P) {
      emit(lambda, c);
      continue;
    }
    const DegreeTables& t = degree_tables(lambda.size());
    const auto& row = t.to_p.at(f.basis())[t.index.at(lambda)];
    for (size_t j = 0; j < row.size(); ++j)
      if (sgn(row[j]) != 0) emit(t.parts[j], c * row[j]);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

SymFunc from_p_expansion(std::map<Partition, QSeries> p_terms, Basis target,
                         int degree_bound) {
  SymFunc out(target, degree_bound);
  for (const auto& [mu, c] : p_terms) {
    if (c.is_zero()) continue;
    if (target == Basis::P) {
      out.add_term(mu, c);
      continue;
    }
    const DegreeTables& t = degree_tables(mu.size());
    const auto& row = t.from_p.at(target)[t.index.at(mu)];
    for (size_t j = 0; j < row.size(); ++j)
      if (sgn(row[j]) != 0) out.add_term(t.parts[j], c * row[j]);
  }
  return out;
}

}  // namespace

SymFunc to_basis(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  return from_p_expansion(p_expansion(f), target, f.degree_bound());
}

SymFunc add(const SymFunc& f, const SymFunc& g) {
  SymFunc out = f;
  SymFunc gg = to_basis(g, f.basis());
  for (const auto& [lambda, c] : gg.terms()) out.add_term(lambda, c);
  return out;
}

SymFunc sub(const SymFunc& f, const SymFunc& g) { return add(f, scale(g, Rational(-1))); }

SymFunc scale(const SymFunc& f, const QSeries& c) {
  SymFunc out(f.basis(), f.degree_bound());
  for (const auto& [lambda, a] : f.terms()) out.add_term(lambda, a * c);
  return out;
}

SymFunc scale(const SymFunc& f, const Rational& c) {
  SymFunc out(f.basis(), f.degree_bound());
  if (sgn(c) == 0) return out;
  for (const auto& [lambda, a] : f.terms()) out.add_term(lambda, a * c);
  return out;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  int degree_bound = std::max(f.degree_bound(), g.degree_bound());
  auto fp = p_expansion(f);
  auto gp = p_expansion(g);
  std::map<Partition, QSeries> prod;
  for (const auto& [lambda, a] : fp) {
    for (const auto& [mu, b] : gp) {
      if (lambda.size() + mu.size() > degree_bound)
        throw std::domain_error("multiply: product degree exceeds degree bound");
      std::vector<int> merged = lambda.parts();
      merged.insert(merged.end(), mu.parts().begin(), mu.parts().end());
      Partition key(std::move(merged));
      QSeries c = a * b;
      auto [it, inserted] = prod.emplace(key, c);
      if (!inserted) it->second = it->second + c;
    }
  }
  return from_p_expansion(std::move(prod), f.basis(), degree_bound);
}

SymFunc kronecker(const SymFunc& f, const SymFunc& g) {
  int degree_bound = std::max(f.degree_bound(), g.degree_bound());
  auto fp = p_expansion(f);
  auto gp = p_expansion(g);
  std::map<Partition, QSeries> out;
  for (const auto& [lambda, a] : fp) {
    auto it = gp.find(lambda);
    if (it == gp.end()) continue;
    QSeries c = (a * it->second) * Rational(lambda.z());
    if (!c.is_zero()) out.emplace(lambda, c);
  }
  return from_p_expansion(std::move(out), Basis::P, degree_bound);
}

SymFunc pleth_scale(const SymFunc& f, PlethMode mode) {
  auto fp = p_expansion(f);
  SymFunc out(Basis::P, f.degree_bound());
  for (const auto& [lambda, c] : fp) {
    QSeries factor = QSeries::one(c.trunc_order());
    for (int part : lambda.parts()) {
      QSeries term = QSeries::one(c.trunc_order());
      if (part <= c.trunc_order()) term.set_coeff(part, Rational(-1));
      factor = factor * (mode == PlethMode::XTimesOneMinusQ ? term : term.inverse());
    }
    out.add_term(lambda, c * factor);
  }
  return out;
}

QSeries hilbert(const SymFunc& f, int n) {
  auto fp = p_expansion(f);
  int trunc = f.min_trunc_order();
  for (const auto& [lambda, c] : fp)
    if (lambda.size() != n)
      throw std::domain_error("hilbert: input not homogeneous of degree " +
                              std::to_string(n));
  Partition ones(std::vector<int>(n, 1));
  auto it = fp.find(ones);
  if (it == fp.end()) return QSeries::zero(trunc);
  return it->second * Rational(factorial(n));
}

QSeries char_value(const SymFunc& f, const Partition& lambda) {
  auto fp = p_expansion(f);
  int trunc = f.min_trunc_order();
  for (const auto& [mu, c] : fp)
    if (mu.size() != lambda.size())
      throw std::domain_error("char_value: degree mismatch");
  auto it = fp.find(lambda);
  if (it == fp.end()) return QSeries::zero(trunc);
  return it->second * Rational(lambda.z());
}

bool equal_truncated(const SymFunc& f, const SymFunc& g, int d) {
  auto fp = p_expansion(f);
  auto gp = p_expansion(g);
  auto normalize = [d](std::map<Partition, QSeries>& m) {
    for (auto it = m.begin(); it != m.end();) {
      it->second = it->second.truncated(d);
      it = it->second.is_zero() ? m.erase(it) : std::next(it);
    }
  };
  normalize(fp);
  normalize(gp);
  return fp == gp;
}

}  // namespace ncharm
