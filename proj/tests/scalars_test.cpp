#include <gtest/gtest.h>

#include "hsp/errors.hpp"
#include "hsp/scalars/scalar.hpp"
#include "hsp/text/parser.hpp"
#include "support.hpp"

namespace hsp {
namespace {

Scalar S(const char* text) { return parse_scalar(text); }

// Cross-multiplication: a == b as rational functions.
bool same_function(const Scalar& a, const Scalar& b) {
  return (a.numerator() * b.denominator() - b.numerator() * a.denominator()).is_zero();
}

TEST(GaussianRational, ArithmeticAndNormalization) {
  GaussianRational a(mpq_class(2, 4), mpq_class(-3, 6));
  EXPECT_EQ(a.re(), mpq_class(1, 2));
  EXPECT_EQ(a.im(), mpq_class(-1, 2));
  EXPECT_EQ(a.re().get_den(), 2);
  GaussianRational i = GaussianRational::imaginary_unit();
  EXPECT_EQ(i * i, GaussianRational(-1));
  EXPECT_EQ(a * a.inverse(), GaussianRational(1));
  EXPECT_EQ((GaussianRational(1) - GaussianRational(1)), GaussianRational());
  EXPECT_THROW(GaussianRational().inverse(), DivisionByZero);
  EXPECT_EQ(GaussianRational(mpq_class(2), mpq_class(3)).conj(), GaussianRational(mpq_class(2), mpq_class(-3)));
}

TEST(GaussianRational, Rendering) {
  EXPECT_EQ(GaussianRational(mpq_class(3, 2)).to_string(), "3/2");
  EXPECT_EQ(GaussianRational(0, -1).to_string(), "-i");
  EXPECT_EQ(GaussianRational(mpq_class(2), mpq_class(3)).to_string(), "2+3*i");
  EXPECT_EQ(GaussianRational(0, mpq_class(1, 2)).to_string(), "1/2*i");
}

TEST(Scalar, Addition) {
  EXPECT_TRUE((S("1/(p - 1)") + S("-1/(p - 1)")).is_zero());
  EXPECT_EQ(S("p*q - 1") + Scalar(1), Scalar::p() * Scalar::q());
  Scalar sum = S("1/(p - 1)") + S("1/(q - 1)");
  Scalar want(S("p + q - 2").numerator(), S("(p - 1)*(q - 1)").numerator());
  EXPECT_EQ(sum, want);
  EXPECT_TRUE(same_function(sum, want));
}

TEST(Scalar, Multiplication) {
  EXPECT_EQ(Scalar::p() * Scalar::q(), S("p*q"));
  EXPECT_TRUE((S("p - 1") * S("1/(p - 1)")).is_one());
  Scalar m = S("p*q - 1") * S("1/((p - 1)*(q - 1))");
  // Nothing cancels: gcd of numerator and denominator is a unit.
  EXPECT_TRUE(gcd(m.numerator(), m.denominator()).is_one());
  EXPECT_EQ(m.numerator(), S("p*q - 1").numerator());
}

TEST(Scalar, Inverse) {
  EXPECT_EQ(Scalar::p().inverse(), S("1/p"));
  EXPECT_EQ(S("(p - 1)/(q - 1)").inverse(), S("(q - 1)/(p - 1)"));
  EXPECT_THROW(Scalar().inverse(), DivisionByZero);
  EXPECT_THROW(Scalar(1) / (Scalar::p() - Scalar::p()), DivisionByZero);
  EXPECT_THROW(S("1/(p - p)"), SyntaxError);
}

TEST(Scalar, Evaluation) {
  EXPECT_EQ(S("p*q").evaluate(1, 1), GaussianRational(1));
  EXPECT_TRUE(S("p*q - 1").evaluate(1, 1).is_zero());
  EXPECT_THROW(S("1/(p - 1)").evaluate(1, 1), PoleAtPoint);
}

TEST(Scalar, ParseRejectsUnknownNames) { EXPECT_THROW(S("h"), UnknownGenerator); }

TEST(Scalar, RegularityAfterCancellation) {
  Scalar s = S("(p*q - p - q + 1)/(p - 1)");
  EXPECT_EQ(s, S("q - 1"));
  EXPECT_TRUE(s.is_regular_at(1, 1));
  EXPECT_FALSE(S("q/(p - 1)").is_regular_at(1, 1));
}

TEST(Scalar, Conjugation) {
  EXPECT_EQ(Scalar::i().conj(), -Scalar::i());
  EXPECT_EQ(Scalar::p().conj(true), Scalar::q());
  EXPECT_EQ(Scalar::p().conj(false), Scalar::p());
  EXPECT_EQ(S("(2 + 3*i)/(p - 1)").conj(), S("(2 - 3*i)/(p - 1)"));
}

TEST(Scalar, DenominatorIsMonicUnderGradedLex) {
  Scalar s = S("(2*i)/(3*p*q + 6*q)");
  EXPECT_TRUE(s.denominator().leading_coefficient().is_one());
  EXPECT_EQ(s.denominator().leading_monomial(), (Monomial{1, 1}));
  EXPECT_EQ(S("1/(-2)"), Scalar::rational(-1, 2));
}

TEST(Polynomial, GcdOfProducts) {
  Polynomial pm1 = S("p - 1").numerator();
  Polynomial a = pm1 * S("q - 1").numerator();
  Polynomial b = pm1 * S("p + q").numerator();
  EXPECT_EQ(gcd(a, b), pm1);
  EXPECT_TRUE(gcd(Polynomial(), Polynomial()).is_zero());
  EXPECT_TRUE(gcd(a, Polynomial(3)).is_one());
}

TEST(Polynomial, ExactDivision) {
  Polynomial a = S("p^2*q - q").numerator();
  auto q = a.divide_exact(S("p + 1").numerator());
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, S("p*q - q").numerator());
  EXPECT_FALSE(a.divide_exact(S("p + 2").numerator()).has_value());
}

class ScalarFieldLaws : public ::testing::TestWithParam<int> {};

TEST_P(ScalarFieldLaws, RandomSamples) {
  fixtures::Rng rng(static_cast<unsigned>(GetParam()));
  for (int k = 0; k < 25; ++k) {
    Scalar a = fixtures::random_scalar(rng), b = fixtures::random_scalar(rng), c = fixtures::random_scalar(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) { EXPECT_TRUE((a * a.inverse()).is_one()); }
    EXPECT_EQ(a.conj().conj(), a);
    EXPECT_EQ(a.conj(true).conj(true), a);
    EXPECT_EQ((a * b).conj(true), a.conj(true) * b.conj(true));
    EXPECT_EQ((a + b).conj(), a.conj() + b.conj());
  }
}

TEST_P(ScalarFieldLaws, CanonicalFormIsUnique) {
  fixtures::Rng rng(static_cast<unsigned>(GetParam()) + 100);
  for (int k = 0; k < 25; ++k) {
    Scalar a = fixtures::random_scalar(rng);
    Polynomial r = fixtures::random_polynomial(rng, 2, 2);
    if (r.is_zero()) continue;
    // Same function written with a common factor: must canonicalize equal.
    Scalar b(a.numerator() * r, a.denominator() * r);
    EXPECT_EQ(a, b);
    Scalar c = fixtures::random_scalar(rng);
    EXPECT_EQ(a == c, same_function(a, c));
    EXPECT_TRUE(gcd(a.numerator(), a.denominator()).is_one() || a.is_zero());
    EXPECT_TRUE(a.denominator().leading_coefficient().is_one());
  }
}

TEST_P(ScalarFieldLaws, EvaluationIsMultiplicative) {
  fixtures::Rng rng(static_cast<unsigned>(GetParam()) + 200);
  const GaussianRational p0(mpq_class(2, 3), mpq_class(1)), q0(mpq_class(-5, 7));
  for (int k = 0; k < 25; ++k) {
    Scalar a = fixtures::random_scalar(rng), b = fixtures::random_scalar(rng);
    if (!a.is_regular_at(p0, q0) || !b.is_regular_at(p0, q0)) continue;
    EXPECT_EQ((a * b).evaluate(p0, q0), a.evaluate(p0, q0) * b.evaluate(p0, q0));
    EXPECT_EQ((a + b).evaluate(p0, q0), a.evaluate(p0, q0) + b.evaluate(p0, q0));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, ScalarFieldLaws, ::testing::Values(1, 2, 3, 4));

}  // namespace
}  // namespace hsp
