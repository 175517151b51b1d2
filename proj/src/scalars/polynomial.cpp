#include "hsp/scalars/polynomial.hpp"

#include <algorithm>

#include "hsp/errors.hpp"

namespace hsp {

namespace {

bool grlex_greater(const Monomial& a, const Monomial& b) { return compare_grlex(a, b) > 0; }

// Dense univariate polynomial over Q(i); index is the exponent.
using Dense = std::vector<GaussianRational>;

void trim(Dense& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Dense dense_mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Dense dense_sub(Dense a, const Dense& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Remainder of a by b over the field Q(i).
Dense dense_rem(Dense a, const Dense& b) {
  const GaussianRational lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    GaussianRational f = a.back() * lead_inv;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

// Exact quotient of a by b; b must divide a.
Dense dense_quo(Dense a, const Dense& b) {
  if (a.size() < b.size()) return {};
  const GaussianRational lead_inv = b.back().inverse();
  Dense q(a.size() - b.size() + 1);
  while (a.size() >= b.size()) {
    GaussianRational f = a.back() * lead_inv;
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return q;
}

Dense dense_monic(Dense a) {
  if (a.empty()) return a;
  GaussianRational inv = a.back().inverse();
  for (auto& c : a) c *= inv;
  return a;
}

Dense dense_gcd(Dense a, Dense b) {
  while (!b.empty()) {
    Dense r = dense_rem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return dense_monic(std::move(a));
}

// Polynomial in q whose coefficients are dense polynomials in p.
using Nested = std::vector<Dense>;

void trim(Nested& a) {
  while (!a.empty() && a.back().empty()) a.pop_back();
}

Nested to_nested(const Polynomial& f) {
  Nested r;
  for (const auto& [m, c] : f.terms()) {
    if (r.size() <= m.q_exp) r.resize(m.q_exp + 1);
    Dense& d = r[m.q_exp];
    if (d.size() <= m.p_exp) d.resize(m.p_exp + 1);
    d[m.p_exp] = c;
  }
  return r;
}

Polynomial from_nested(const Nested& a) {
  std::vector<Polynomial::Term> terms;
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t i = 0; i < a[j].size(); ++i)
      if (!a[j][i].is_zero())
        terms.push_back({Monomial{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, a[j][i]});
  return Polynomial::from_terms(std::move(terms));
}

Dense content(const Nested& a) {
  Dense g;
  for (const auto& c : a) {
    if (c.empty()) continue;
    g = g.empty() ? dense_monic(c) : dense_gcd(g, c);
    if (g.size() == 1) break;
  }
  return g;
}

Nested divide_content(Nested a, const Dense& c) {
  if (c.size() == 1) return a;
  for (auto& x : a)
    if (!x.empty()) x = dense_quo(x, c);
  return a;
}

Nested primitive_part(const Nested& a) { return divide_content(a, content(a)); }

// Pseudo-remainder of a by b with respect to q.
Nested pseudo_rem(Nested a, const Nested& b) {
  const Dense& lb = b.back();
  while (a.size() >= b.size()) {
    Dense la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& x : a) x = dense_mul(x, lb);
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = dense_sub(a[shift + i], dense_mul(la, b[i]));
    trim(a);
  }
  return a;
}

}  // namespace

Polynomial::Polynomial(GaussianRational constant) {
  if (!constant.is_zero()) terms_.push_back({Monomial{}, std::move(constant)});
}

Polynomial Polynomial::variable_p() { return monomial(Monomial{1, 0}, 1); }
Polynomial Polynomial::variable_q() { return monomial(Monomial{0, 1}, 1); }

Polynomial Polynomial::monomial(Monomial m, GaussianRational c) {
  Polynomial r;
  if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
  return r;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.first, b.first); });
  Polynomial r;
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      r.terms_.back().second += t.second;
      if (r.terms_.back().second.is_zero()) r.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

GaussianRational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().first.degree() == 0) return terms_.back().second;
  return 0;
}

std::uint32_t Polynomial::degree_p() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.p_exp);
  return d;
}

std::uint32_t Polynomial::degree_q() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.q_exp);
  return d;
}

std::uint32_t Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && grlex_greater(a->first, b->first))) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || grlex_greater(b->first, a->first)) {
      merged.push_back(*b++);
    } else {
      GaussianRational c = a->second + b->second;
      if (!c.is_zero()) merged.push_back({a->first, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_constant()) return a.scaled(b.terms_[0].second);
  if (a.is_constant()) return b.scaled(a.terms_[0].second);
  std::vector<Polynomial::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      terms.push_back({Monomial{ma.p_exp + mb.p_exp, ma.q_exp + mb.q_exp}, ca * cb});
  return Polynomial::from_terms(std::move(terms));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Polynomial Polynomial::scaled(const GaussianRational& c) const {
  if (c.is_zero()) return {};
  Polynomial r = *this;
  if (c.is_one()) return r;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  if (divisor.is_constant()) return scaled(divisor.leading_coefficient().inverse());
  const Monomial& ld = divisor.leading_monomial();
  const GaussianRational lc_inv = divisor.leading_coefficient().inverse();
  Polynomial rem = *this;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Monomial& lr = rem.leading_monomial();
    if (lr.p_exp < ld.p_exp || lr.q_exp < ld.q_exp) return std::nullopt;
    Monomial m{lr.p_exp - ld.p_exp, lr.q_exp - ld.q_exp};
    GaussianRational c = rem.leading_coefficient() * lc_inv;
    rem -= Polynomial::monomial(m, c) * divisor;
    quotient.push_back({m, std::move(c)});
  }
  return from_terms(std::move(quotient));
}

GaussianRational Polynomial::evaluate(const GaussianRational& p0, const GaussianRational& q0) const {
  GaussianRational sum;
  for (const auto& [m, c] : terms_) {
    GaussianRational t = c;
    for (std::uint32_t k = 0; k < m.p_exp; ++k) t *= p0;
    for (std::uint32_t k = 0; k < m.q_exp; ++k) t *= q0;
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::conj_coefficients() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.second = t.second.conj();
  return r;
}

Polynomial Polynomial::swap_variables() const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [m, c] : terms_) terms.push_back({Monomial{m.q_exp, m.p_exp}, c});
  return from_terms(std::move(terms));
}

namespace {

std::string monomial_string(const Monomial& m) {
  std::string s;
  auto power = [&](const char* var, std::uint32_t e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += var;
    if (e > 1) s += "^" + std::to_string(e);
  };
  power("p", m.p_exp);
  power("q", m.q_exp);
  return s;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  if (is_constant()) return terms_[0].second.to_string();
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string coef;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      mpq_class mag = abs(c.re());
      coef = mag == 1 && m.degree() > 0 ? "" : mag.get_str();
    } else if (sgn(c.re()) == 0) {
      negative = sgn(c.im()) < 0;
      GaussianRational mag(0, abs(c.im()));
      coef = mag.to_string();
    } else {
      coef = "(" + c.to_string() + ")";
    }
    std::string mono = monomial_string(m);
    std::string body = coef.empty() ? mono : (mono.empty() ? coef : coef + "*" + mono);
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

bool Polynomial::is_atomic() const {
  if (terms_.size() != 1) return terms_.empty();
  const auto& [m, c] = terms_[0];
  if (m.degree() == 0) return c.is_atomic();
  return c.is_one();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) return {};
  auto monic = [](const Polynomial& f) { return f.scaled(f.leading_coefficient().inverse()); };
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Polynomial(1);

  Nested na = to_nested(a);
  Nested nb = to_nested(b);
  Dense ca = content(na);
  Dense cb = content(nb);
  Dense c = dense_gcd(ca, cb);
  na = divide_content(std::move(na), ca);
  nb = divide_content(std::move(nb), cb);
  if (na.size() < nb.size()) std::swap(na, nb);
  while (nb.size() > 1) {
    Nested r = pseudo_rem(na, nb);
    na = std::move(nb);
    nb = r.empty() ? Nested{} : primitive_part(r);
    if (nb.empty()) break;
  }
  Nested g;
  if (nb.empty()) {
    g = na;
  } else {
    // nb has degree 0 in q; its primitive part is a unit.
    g = Nested{Dense{1}};
  }
  for (auto& x : g) x = dense_mul(x, c);
  return monic(from_nested(g));
}

}  // namespace hsp
