#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "hsp/algebra/generator.hpp"
#include "hsp/algebra/word.hpp"
#include "hsp/scalars/scalar.hpp"

namespace hsp {

/// Finite linear combination of words with nonzero Scalar coefficients,
/// kept in ascending term order.
class Expression {
 public:
  using TermMap = std::map<Word, Scalar, TermLess>;

  explicit Expression(AlphabetPtr alphabet);

  static Expression constant(AlphabetPtr alphabet, const Scalar& c);
  static Expression generator(AlphabetPtr alphabet, GenId g);
  static Expression term(AlphabetPtr alphabet, Word w, const Scalar& c = 1);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of `w` (zero when absent).
  Scalar coefficient(const Word& w) const;

  void add_term(const Word& w, const Scalar& c);
  void add_term(Word&& w, const Scalar& c);

  Expression& operator+=(const Expression& o);
  Expression& operator-=(const Expression& o);
  Expression& operator*=(const Scalar& c);
  friend Expression operator+(Expression a, const Expression& b) { return a += b; }
  friend Expression operator-(Expression a, const Expression& b) { return a -= b; }
  friend Expression operator*(Expression a, const Scalar& c) { return a *= c; }
  friend Expression operator*(const Scalar& c, Expression a) { return a *= c; }
  Expression operator-() const;

  /// Parity shared by every term; nullopt when the terms disagree.
  /// The zero expression reports Even.
  std::optional<Parity> parity() const;

  /// Applies `f` to every coefficient, dropping terms that become zero.
  Expression map_coefficients(const std::function<Scalar(const Scalar&)>& f) const;

  friend bool operator==(const Expression& a, const Expression& b);

 private:
  AlphabetPtr alphabet_;
  TermMap terms_;
};

/// Free-algebra product: bilinear word concatenation, not reduced.
/// Throws MixedPresentation when the alphabets differ.
Expression multiply(const Expression& a, const Expression& b);
inline Expression operator*(const Expression& a, const Expression& b) { return multiply(a, b); }

/// Renders in the expression grammar, terms in descending term order,
/// e.g. "th*x + h2*x*x". The zero expression renders as "0".
std::string to_string(const Expression& e);

}  // namespace hsp
