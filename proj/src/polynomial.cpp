#include "ncchain/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace ncchain {

QTPolynomial QTPolynomial::monomial(int q_exp, int t_exp, Coefficient c) {
  QTPolynomial p;
  p.add_term(q_exp, t_exp, c);
  return p;
}

void QTPolynomial::add_term(int q_exp, int t_exp, Coefficient c) {
  if (q_exp < 0 || t_exp < 0) throw std::domain_error("negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({q_exp, t_exp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QTPolynomial::Coefficient QTPolynomial::coefficient(int q_exp, int t_exp) const {
  auto it = terms_.find({q_exp, t_exp});
  return it == terms_.end() ? 0 : it->second;
}

QTPolynomial::Coefficient QTPolynomial::coefficient_sum() const {
  Coefficient s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

int QTPolynomial::max_q_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

QTPolynomial QTPolynomial::swapped() const {
  QTPolynomial p;
  for (const auto& [e, c] : terms_) p.add_term(e.second, e.first, c);
  return p;
}

QTPolynomial QTPolynomial::at_t_one() const {
  QTPolynomial p;
  for (const auto& [e, c] : terms_) p.add_term(e.first, 0, c);
  return p;
}

QTPolynomial QTPolynomial::reflected_q(int shift) const {
  QTPolynomial p;
  for (const auto& [e, c] : terms_) p.add_term(shift - e.first, 0, c);
  return p;
}

QTPolynomial QTPolynomial::shifted(int q_exp, int t_exp) const {
  QTPolynomial p;
  for (const auto& [e, c] : terms_) p.add_term(e.first + q_exp, e.second + t_exp, c);
  return p;
}

QTPolynomial& QTPolynomial::operator+=(const QTPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

QTPolynomial operator*(const QTPolynomial& a, const QTPolynomial& b) {
  QTPolynomial p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) p.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return p;
}

std::string QTPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  // Descending q degree reads naturally for Catalan-type polynomials.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [qe, te] = it->first;
    Coefficient c = it->second;
    if (!s.empty()) {
      s += c < 0 ? " - " : " + ";
      c = c < 0 ? -c : c;
    } else if (c < 0) {
      s += "-";
      c = -c;
    }
    std::string mono;
    if (qe > 0) mono += qe == 1 ? "q" : "q^" + std::to_string(qe);
    if (te > 0) mono += (mono.empty() ? "" : "*") + (te == 1 ? std::string("t") : "t^" + std::to_string(te));
    if (mono.empty())
      s += std::to_string(c);
    else
      s += (c == 1 ? "" : std::to_string(c) + "*") + mono;
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const QTPolynomial& p) { return os << p.str(); }

}  // namespace ncchain
