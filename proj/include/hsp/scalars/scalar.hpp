#pragma once

#include <cstddef>
#include <string>

#include "hsp/scalars/gaussian_rational.hpp"
#include "hsp/scalars/polynomial.hpp"

namespace hsp {

/// Element of Q(i)(p, q) kept as a reduced fraction num/den whose
/// denominator has grlex leading coefficient 1 (p > q). Two scalars are
/// equal iff their canonical forms coincide.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(GaussianRational value) : num_(std::move(value)) {}  // NOLINT
  Scalar(Polynomial value) : num_(std::move(value)) {}  // NOLINT
  /// Throws DivisionByZero when den is zero.
  Scalar(Polynomial num, Polynomial den);

  static Scalar p() { return Polynomial::variable_p(); }
  static Scalar q() { return Polynomial::variable_q(); }
  static Scalar i() { return GaussianRational::imaginary_unit(); }
  static Scalar rational(long num, long den) { return GaussianRational(mpq_class(num, den)); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  /// Constant value; only meaningful when is_constant().
  GaussianRational constant_value() const { return num_.constant_term(); }

  Scalar inverse() const;
  Scalar pow(int exponent) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// Value at (p0, q0). Throws PoleAtPoint if the denominator vanishes there.
  GaussianRational evaluate(const GaussianRational& p0, const GaussianRational& q0) const;
  bool is_regular_at(const GaussianRational& p0, const GaussianRational& q0) const;

  /// Conjugates every Gaussian coefficient; with swap_pq also exchanges p and q.
  Scalar conj(bool swap_pq = false) const;

  std::size_t hash() const;

  /// Renders in the scalar grammar, e.g. "(p + q - 2)/(p*q - p - q + 1)".
  std::string to_string() const;
  /// True when to_string() can be used as a product factor without parentheses.
  bool is_atomic() const;

 private:
  void canonicalize();

  Polynomial num_;
  Polynomial den_ = Polynomial(1);
};

}  // namespace hsp
