#include "hsp/scalars/scalar.hpp"

#include <functional>

#include "hsp/errors.hpp"

namespace hsp {

Scalar::Scalar(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  canonicalize();
}

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (!den_.is_constant()) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = *num_.divide_exact(g);
      den_ = *den_.divide_exact(g);
    }
  }
  if (!den_.leading_coefficient().is_one()) {
    GaussianRational inv = den_.leading_coefficient().inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Scalar(den_, num_);
}

Scalar Scalar::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Scalar r;
  r.num_ = num_.pow(static_cast<unsigned>(exponent));
  r.den_ = den_.pow(static_cast<unsigned>(exponent));
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) canonicalize();
    else if (num_.is_zero()) den_ = Polynomial(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  // Cross-cancel first so the intermediate products stay reduced.
  Polynomial a = num_, b = den_, c = o.num_, d = o.den_;
  Polynomial g1 = gcd(a, d);
  if (!g1.is_one()) {
    a = *a.divide_exact(g1);
    d = *d.divide_exact(g1);
  }
  Polynomial g2 = gcd(c, b);
  if (!g2.is_one()) {
    c = *c.divide_exact(g2);
    b = *b.divide_exact(g2);
  }
  num_ = a * c;
  den_ = b * d;
  if (!den_.leading_coefficient().is_one()) {
    GaussianRational inv = den_.leading_coefficient().inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

GaussianRational Scalar::evaluate(const GaussianRational& p0, const GaussianRational& q0) const {
  GaussianRational d = den_.evaluate(p0, q0);
  GaussianRational n = num_.evaluate(p0, q0);
  if (d.is_zero()) {
    std::string where = "(" + p0.to_string() + ", " + q0.to_string() + ") in " + to_string();
    if (n.is_zero()) throw IndeterminateAtPoint(where);
    throw PoleAtPoint(where);
  }
  return n / d;
}

bool Scalar::is_regular_at(const GaussianRational& p0, const GaussianRational& q0) const {
  return !den_.evaluate(p0, q0).is_zero();
}

Scalar Scalar::conj(bool swap_pq) const {
  Polynomial n = num_.conj_coefficients();
  Polynomial d = den_.conj_coefficients();
  if (swap_pq) {
    n = n.swap_variables();
    d = d.swap_variables();
  }
  return Scalar(std::move(n), std::move(d));
}

std::size_t Scalar::hash() const {
  std::size_t h = 0;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto* poly : {&num_, &den_}) {
    for (const auto& [m, c] : poly->terms()) {
      mix(m.p_exp * 1315423911u + m.q_exp);
      mix(c.hash());
    }
    mix(0xff);
  }
  return h;
}

std::string Scalar::to_string() const {
  auto wrap = [](const Polynomial& f) {
    std::string s = f.to_string();
    return f.is_atomic() ? s : "(" + s + ")";
  };
  if (den_.is_one()) return num_.to_string();
  std::string den = den_.terms().size() == 1 && den_.leading_coefficient().is_one() &&
                            den_.leading_monomial().degree() > 0 &&
                            (den_.leading_monomial().p_exp == 0 || den_.leading_monomial().q_exp == 0) &&
                            den_.leading_monomial().degree() == 1
                        ? den_.to_string()
                        : "(" + den_.to_string() + ")";
  return wrap(num_) + "/" + den;
}

bool Scalar::is_atomic() const {
  return den_.is_one() && num_.is_atomic();
}

}  // namespace hsp
