#include "hsp/algebra/expression.hpp"

#include "hsp/errors.hpp"

namespace hsp {

namespace {

void require_same(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a.get() != b.get()) throw MixedPresentation();
}

}  // namespace

Expression::Expression(AlphabetPtr alphabet)
    : alphabet_(std::move(alphabet)), terms_(TermLess{alphabet_.get()}) {}

Expression Expression::constant(AlphabetPtr alphabet, const Scalar& c) {
  Expression e(std::move(alphabet));
  e.add_term(Word{}, c);
  return e;
}

Expression Expression::generator(AlphabetPtr alphabet, GenId g) {
  Expression e(std::move(alphabet));
  e.add_term(Word{g}, 1);
  return e;
}

Expression Expression::term(AlphabetPtr alphabet, Word w, const Scalar& c) {
  Expression e(std::move(alphabet));
  e.add_term(std::move(w), c);
  return e;
}

Scalar Expression::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

void Expression::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Expression::add_term(Word&& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Expression& Expression::operator+=(const Expression& o) {
  require_same(alphabet_, o.alphabet_);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Expression& Expression::operator-=(const Expression& o) {
  require_same(alphabet_, o.alphabet_);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Expression& Expression::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

Expression Expression::operator-() const {
  Expression r = *this;
  for (auto& [w, v] : r.terms_) v = -v;
  return r;
}

std::optional<Parity> Expression::parity() const {
  std::optional<Parity> p;
  for (const auto& [w, c] : terms_) {
    Parity q = word_parity(*alphabet_, w);
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p.value_or(Parity::Even);
}

Expression Expression::map_coefficients(const std::function<Scalar(const Scalar&)>& f) const {
  Expression r(alphabet_);
  for (const auto& [w, c] : terms_) r.add_term(w, f(c));
  return r;
}

bool operator==(const Expression& a, const Expression& b) {
  if (a.alphabet_.get() != b.alphabet_.get()) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  return true;
}

Expression multiply(const Expression& a, const Expression& b) {
  require_same(a.alphabet(), b.alphabet());
  Expression r(a.alphabet());
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) r.add_term(concat(wa, wb), ca * cb);
  return r;
}

namespace {

/// True when the leading Gaussian coefficient of the numerator is negative,
/// so the term reads better with the sign pulled out.
bool reads_negative(const Scalar& c) {
  const GaussianRational lead = c.numerator().leading_coefficient();
  return sgn(lead.re()) < 0 || (sgn(lead.re()) == 0 && sgn(lead.im()) < 0);
}

/// Scalar as a left factor. A fraction needs no parentheses: the grammar
/// reads a/b*w as (a/b)*w.
std::string factor(const Scalar& c) {
  if (c.is_atomic() || !c.denominator().is_one()) return c.to_string();
  return "(" + c.to_string() + ")";
}

}  // namespace

std::string to_string(const Expression& e) {
  if (e.is_zero()) return "0";
  std::string out;
  const Alphabet& alphabet = *e.alphabet();
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    const auto& [w, coeff] = *it;
    const bool negative = reads_negative(coeff);
    const Scalar c = negative ? -coeff : coeff;
    std::string t;
    if (w.empty()) {
      t = out.empty() && !negative ? c.to_string() : factor(c);
    } else if (c.is_one()) {
      t = to_string(alphabet, w);
    } else {
      t = factor(c) + "*" + to_string(alphabet, w);
    }
    if (out.empty()) {
      out = negative ? "-" + t : t;
    } else {
      out += (negative ? " - " : " + ") + t;
    }
  }
  return out;
}

}  // namespace hsp
