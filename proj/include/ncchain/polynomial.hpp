#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>

namespace ncchain {

/// Integer polynomial in q and t, stored sparsely as (q-exp, t-exp) -> coeff.
/// Zero coefficients are never stored.
class QTPolynomial {
public:
  using Exponents = std::pair<int, int>;
  using Coefficient = std::int64_t;

  QTPolynomial() = default;
  static QTPolynomial one() { return monomial(0, 0); }
  static QTPolynomial monomial(int q_exp, int t_exp, Coefficient c = 1);

  void add_term(int q_exp, int t_exp, Coefficient c);

  const std::map<Exponents, Coefficient>& terms() const { return terms_; }
  Coefficient coefficient(int q_exp, int t_exp) const;
  bool is_zero() const { return terms_.empty(); }
  /// Value at q = t = 1.
  Coefficient coefficient_sum() const;
  int max_q_degree() const;

  /// p(t, q).
  QTPolynomial swapped() const;
  /// p(q, 1).
  QTPolynomial at_t_one() const;
  /// q^shift * p(q^{-1}, 1); throws std::domain_error on a negative exponent.
  QTPolynomial reflected_q(int shift) const;
  QTPolynomial shifted(int q_exp, int t_exp) const;

  QTPolynomial& operator+=(const QTPolynomial& o);
  friend QTPolynomial operator+(QTPolynomial a, const QTPolynomial& b) { return a += b; }
  friend QTPolynomial operator*(const QTPolynomial& a, const QTPolynomial& b);
  friend bool operator==(const QTPolynomial&, const QTPolynomial&) = default;

  /// Human-readable form, e.g. "q^3 + q^2*t + q*t + q*t^2 + t^3".
  std::string str() const;

private:
  std::map<Exponents, Coefficient> terms_;
};

std::ostream& operator<<(std::ostream& os, const QTPolynomial& p);

}  // namespace ncchain
