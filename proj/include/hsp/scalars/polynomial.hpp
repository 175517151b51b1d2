#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsp/scalars/gaussian_rational.hpp"

namespace hsp {

/// p^p_exp q^q_exp.
struct Monomial {
  std::uint32_t p_exp = 0;
  std::uint32_t q_exp = 0;

  std::uint32_t degree() const { return p_exp + q_exp; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with p > q: total degree first, then the
/// exponent of p. This is the order used to normalize denominators.
inline std::strong_ordering compare_grlex(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.p_exp <=> b.p_exp;
}

/// Sparse polynomial in p, q over Q(i). Terms are kept sorted by strictly
/// decreasing grlex monomial with no zero coefficients.
class Polynomial {
 public:
  using Term = std::pair<Monomial, GaussianRational>;

  Polynomial() = default;
  Polynomial(GaussianRational constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(GaussianRational(constant)) {}  // NOLINT

  static Polynomial variable_p();
  static Polynomial variable_q();
  static Polynomial monomial(Monomial m, GaussianRational c);
  /// Builds from arbitrary terms; combines duplicates and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree() == 0); }
  bool is_one() const { return is_constant() && !terms_.empty() && terms_[0].second.is_one(); }
  /// The constant term (zero when absent).
  GaussianRational constant_term() const;

  const Monomial& leading_monomial() const { return terms_.front().first; }
  const GaussianRational& leading_coefficient() const { return terms_.front().second; }
  std::uint32_t degree_p() const;
  std::uint32_t degree_q() const;
  std::uint32_t total_degree() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial scaled(const GaussianRational& c) const;
  Polynomial pow(unsigned exponent) const;

  /// Quotient when `divisor` divides this polynomial exactly.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  GaussianRational evaluate(const GaussianRational& p0, const GaussianRational& q0) const;
  Polynomial conj_coefficients() const;
  Polynomial swap_variables() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const;
  /// True when to_string() can appear as a factor without parentheses.
  bool is_atomic() const;

 private:
  std::vector<Term> terms_;
};

/// Greatest common divisor, normalized so its grlex leading coefficient is 1.
/// gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace hsp
