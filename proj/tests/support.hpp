#pragma once

#include <algorithm>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "hsp/algebra/expression.hpp"
#include "hsp/algebra/presentation.hpp"
#include "hsp/presentations/catalog.hpp"
#include "hsp/scalars/scalar.hpp"

namespace hsp {

inline void PrintTo(const Expression& e, std::ostream* os) { *os << to_string(e); }
inline void PrintTo(const Scalar& s, std::ostream* os) { *os << s.to_string(); }

}  // namespace hsp

namespace hsp::fixtures {

using Rng = std::mt19937_64;

/// Random words up to length 6 in the localized presentations need more than the kernel default.
inline constexpr std::size_t kFuel = 100000;

/// Built once per test binary; tests that mutate build their own.
inline const Catalog& shared_catalog() {
  static const Catalog c = Catalog::standard();
  return c;
}

/// Every catalog presentation except the printed primed reading.
inline std::vector<std::string> confluent_presentation_names() {
  std::vector<std::string> names = Catalog::presentation_names();
  std::erase(names, "primed_printed");
  return names;
}

inline GaussianRational random_gaussian(Rng& rng, int span = 4) {
  std::uniform_int_distribution<long> num(-span, span), den(1, span);
  return {mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng))};
}

/// Sparse polynomial of total degree <= max_degree with small coefficients.
inline Polynomial random_polynomial(Rng& rng, unsigned max_degree = 2, int terms = 3) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::vector<Polynomial::Term> ts;
  for (int k = 0; k < terms; ++k) {
    unsigned a = deg(rng), b = deg(rng);
    if (a + b > max_degree) b = max_degree - a;
    ts.push_back({Monomial{a, b}, random_gaussian(rng, 3)});
  }
  return Polynomial::from_terms(std::move(ts));
}

inline Scalar random_scalar(Rng& rng, bool allow_fraction = true) {
  Polynomial num = random_polynomial(rng);
  if (!allow_fraction || std::bernoulli_distribution(0.4)(rng)) return Scalar(num);
  Polynomial den = random_polynomial(rng, 2, 2);
  if (den.is_zero()) den = Polynomial(1);
  return Scalar(num, den);
}

inline Scalar random_nonzero_scalar(Rng& rng) {
  for (;;) {
    Scalar s = random_scalar(rng);
    if (!s.is_zero()) return s;
  }
}

/// Uniform word over the whole alphabet, parameters included.
inline Word random_word(Rng& rng, const Alphabet& al, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<GenId> gen(0, static_cast<GenId>(al.size() - 1));
  Word w(len(rng));
  for (auto& g : w) g = gen(rng);
  return w;
}

inline Expression random_expression(Rng& rng, const AlphabetPtr& al, std::size_t max_len = 4, int terms = 3,
                                    bool fractions = true) {
  Expression e(al);
  for (int k = 0; k < terms; ++k) e.add_term(random_word(rng, *al, max_len), random_scalar(rng, fractions));
  return e;
}

/// Copy of `pres` with the rule for `lhs` replaced by `rhs`, built leniently.
inline PresentationPtr with_rule(const PresentationPtr& pres, const Word& lhs, const Expression& rhs) {
  PresentationBuilder b(pres->name() + "_mutated", pres->alphabet());
  for (const auto& r : pres->rules()) b.rule(r.lhs, r.lhs == lhs ? rhs : r.rhs);
  return b.build(Validation::Lenient);
}

/// Every word of length 1..max_len over the alphabet, shortest first.
inline std::vector<Word> all_words(const Alphabet& al, std::size_t max_len) {
  std::vector<Word> out;
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer)
      for (GenId g = 0; g < al.size(); ++g) {
        Word u = w;
        u.push_back(g);
        next.push_back(u);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

/// Terms of `e` whose words contain no parameter generator.
inline Expression drop_parameters(const Expression& e) {
  const Alphabet& al = *e.alphabet();
  Expression out(e.alphabet());
  for (const auto& [w, c] : e.terms()) {
    bool param = false;
    for (GenId g : w) param = param || al.is_parameter(g);
    if (!param) out.add_term(w, c);
  }
  return out;
}

}  // namespace hsp::fixtures
