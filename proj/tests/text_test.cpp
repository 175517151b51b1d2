#include <gtest/gtest.h>

#include <string>

#include "hsp/errors.hpp"
#include "hsp/text/parser.hpp"
#include "hsp/text/presentation_io.hpp"
#include "support.hpp"

namespace hsp {
namespace {

using fixtures::shared_catalog;

Expression P(const PresentationPtr& pres, const char* text) { return parse_expression(text, pres->alphabet()); }

std::size_t syntax_position(const char* text, const AlphabetPtr& al) {
  try {
    parse_expression(text, al);
  } catch (const SyntaxError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no syntax error for " << text;
  return 0;
}

TEST(Parser, ProductsPowersAndScalars) {
  PresentationPtr h = shared_catalog().h_calculus();
  const AlphabetPtr& al = h->alphabet();
  Expression x = h->gen("x"), th = h->gen("th");
  EXPECT_EQ(P(h, "x^2"), multiply(x, x));
  EXPECT_EQ(P(h, "2x th"), Expression(th) * Scalar(0) + multiply(x, th) * Scalar(2));
  EXPECT_EQ(P(h, "-(x - th)"), th - x);
  EXPECT_EQ(P(h, "x/(p*q - 1)"), x * parse_scalar("1/(p*q - 1)"));
  EXPECT_EQ(P(h, "(1 + i)*x"), x * (Scalar(1) + Scalar::i()));
  EXPECT_EQ(P(h, "inv(p)*p*x"), x);
  EXPECT_EQ(P(h, "0*x"), h->zero());
  EXPECT_EQ(P(h, "1"), h->scalar(1));
  EXPECT_EQ(to_string(P(h, "h1*x - 1/2*th")).empty(), false);
  EXPECT_EQ(P(h, "x*th").alphabet().get(), al.get());
}

TEST(Parser, UnicodeAliases) {
  PresentationPtr h = shared_catalog().h_calculus();
  EXPECT_EQ(P(h, "θ*∂θ"), P(h, "th*pth"));
  EXPECT_EQ(P(h, "∂x + ∂_x"), P(h, "2*px"));
  EXPECT_EQ(P(h, "h₁*h₂"), P(h, "h1*h2"));
  PresentationPtr osc = shared_catalog().oscillator();
  EXPECT_EQ(P(osc, "A⁺*B⁺"), P(osc, "Adag*Bdag"));
  EXPECT_EQ(P(osc, "A⁺"), osc->gen("Ap"));
}

TEST(Parser, Inverses) {
  PresentationPtr forms = shared_catalog().one_forms();
  EXPECT_EQ(P(forms, "inv(x)"), forms->gen("xinv"));
  EXPECT_EQ(P(forms, "inv(p - 1)*x"), P(forms, "x/(p - 1)"));
  PresentationPtr h = shared_catalog().h_calculus();
  EXPECT_THROW(P(h, "inv(x)"), Error);
  EXPECT_THROW(P(h, "inv(p - p)"), Error);
}

TEST(Parser, Errors) {
  const AlphabetPtr& al = shared_catalog().h_calculus()->alphabet();
  EXPECT_EQ(syntax_position("x + * th", al), 4u);
  EXPECT_EQ(syntax_position("(x", al), 2u);
  EXPECT_EQ(syntax_position("x )", al), 2u);
  EXPECT_EQ(syntax_position("x/th", al), 1u);
  EXPECT_EQ(syntax_position("3/0*x", al), 1u);
  EXPECT_THROW(parse_expression("", al), SyntaxError);
  try {
    parse_expression("x*bogus", al);
    ADD_FAILURE();
  } catch (const UnknownGenerator& e) {
    EXPECT_EQ(e.name(), "bogus");
  }
}

TEST(Parser, Bindings) {
  const Catalog& c = shared_catalog();
  PresentationPtr h = c.h_calculus();
  Bindings b{{"D", c.composites().D}};
  Expression e = parse_expression("D*x - x*D", h->alphabet(), &b);
  EXPECT_EQ(e, multiply(c.composites().D, h->gen("x")) - multiply(h->gen("x"), c.composites().D));
  EXPECT_THROW(parse_expression("D", h->alphabet()), UnknownGenerator);
}

class RenderRoundTrip : public ::testing::TestWithParam<std::string> {};

TEST_P(RenderRoundTrip, ParseOfRenderIsIdentity) {
  PresentationPtr pres = shared_catalog().presentation(GetParam());
  fixtures::Rng rng(23);
  for (int k = 0; k < 50; ++k) {
    Expression e = fixtures::random_expression(rng, pres->alphabet(), 4, 3);
    const std::string text = to_string(e);
    EXPECT_EQ(parse_expression(text, pres->alphabet()), e) << text;
  }
}

TEST_P(RenderRoundTrip, PresentationFile) {
  PresentationPtr pres = shared_catalog().presentation(GetParam());
  const std::string text = write_presentation(*pres);
  PresentationPtr back = read_presentation(text);
  EXPECT_EQ(write_presentation(*back), text);
  ASSERT_EQ(back->rules().size(), pres->rules().size());
  ASSERT_EQ(back->alphabet()->size(), pres->alphabet()->size());
  for (std::size_t k = 0; k < pres->rules().size(); ++k) {
    EXPECT_EQ(back->rules()[k].lhs, pres->rules()[k].lhs);
    EXPECT_EQ(to_string(back->rules()[k].rhs), to_string(pres->rules()[k].rhs));
  }
}

INSTANTIATE_TEST_SUITE_P(Catalog, RenderRoundTrip, ::testing::ValuesIn(Catalog::presentation_names()));

const char* const kOscillatorFile = R"(
presentation oscillator
gen h1 parity=odd class=parameter alias=h₁
gen h2 parity=odd class=parameter alias=h₂
gen Bp parity=odd class=oscillator alias=B⁺,Bdag
gen B parity=odd class=oscillator
gen Ap parity=even class=oscillator alias=A⁺,Adag
gen A parity=even class=oscillator
rule A*Ap -> p*q*Ap*A + (p*q - 1)*Bp*B + 1
rule B*Bp -> -Bp*B + 1
rule B*B -> 0
rule Bp*Bp -> 0
rule A*Bp -> p*Bp*A
rule A*B -> 1/p*B*A
rule Ap*B -> 1/q*B*Ap
rule Ap*Bp -> q*Bp*Ap
rule h1*h1 -> 0
rule h2*h2 -> 0
rule h2*h1 -> -h1*h2
rule Bp*h1 -> -h1*Bp
rule Bp*h2 -> -h2*Bp
rule B*h1 -> -h1*B
rule B*h2 -> -h2*B
rule Ap*h1 -> h1*Ap
rule Ap*h2 -> h2*Ap
rule A*h1 -> h1*A
rule A*h2 -> h2*A
)";

TEST(PresentationFile, OscillatorGolden) {
  EXPECT_EQ("\n" + write_presentation(*shared_catalog().oscillator()), std::string(kOscillatorFile));
}

TEST(PresentationFile, CommentsAndBlankLines) {
  const std::string text =
      "# two generators\n"
      "presentation tiny\n"
      "\n"
      "gen th parity=odd class=coordinate\n"
      "gen x parity=even class=coordinate   # trailing comment\n"
      "rule x*th -> th*x\n"
      "rule th*th -> 0\n";
  PresentationPtr p = read_presentation(text);
  EXPECT_EQ(p->name(), "tiny");
  EXPECT_EQ(p->rules().size(), 2u);
  EXPECT_EQ(normal_form(p, P(p, "x*th*x")), P(p, "th*x*x"));
}

TEST(PresentationFile, BadLines) {
  auto offset_of = [](const std::string& text) -> std::size_t {
    try {
      read_presentation(text);
    } catch (const SyntaxError& e) {
      return e.position();
    }
    ADD_FAILURE() << text;
    return 0;
  };
  const std::string head = "presentation t\ngen x parity=even class=coordinate\n";
  EXPECT_GE(offset_of(head + "frobnicate x\n"), head.size());
  EXPECT_GE(offset_of(head + "gen y parity=sideways class=coordinate\n"), head.size());
  EXPECT_GE(offset_of(head + "rule x*x => 0\n"), head.size());
  EXPECT_THROW(read_presentation(head + "rule x*y -> 0\n"), UnknownGenerator);
  EXPECT_EQ(read_presentation("gen x parity=even class=coordinate\n")->name(), "unnamed");
  // Offsets inside a rule count from the start of the file.
  const std::string bad_rhs = head + "rule x*x -> x + * x\n";
  EXPECT_EQ(offset_of(bad_rhs), bad_rhs.find("* x"));
  try {
    read_presentation(bad_rhs);
  } catch (const SyntaxError& e) {
    EXPECT_EQ(std::string(e.what()), "syntax error at " + std::to_string(e.position()) + ": expected a term");
  }
}

}  // namespace
}  // namespace hsp
