#include "hsp/text/parser.hpp"

#include <cctype>

#include "hsp/errors.hpp"

namespace hsp {

namespace {

enum class Tok { End, Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen };

struct Token {
  Tok kind = Tok::End;
  std::size_t pos = 0;
  std::string text;
};

bool is_name_byte(unsigned char c) { return std::isalnum(c) || c == '_' || c == '\'' || c >= 0x80; }

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    Token t;
    t.pos = i_;
    if (i_ >= s_.size()) return t;
    // U+2212 minus sign and U+00B7 middle dot.
    if (s_.substr(i_, 3) == "\xe2\x88\x92") {
      i_ += 3;
      t.kind = Tok::Minus;
      return t;
    }
    if (s_.substr(i_, 2) == "\xc2\xb7") {
      i_ += 2;
      t.kind = Tok::Star;
      return t;
    }
    unsigned char c = static_cast<unsigned char>(s_[i_]);
    if (std::isdigit(c)) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      t.kind = Tok::Number;
      t.text = std::string(s_.substr(i_, j - i_));
      i_ = j;
      return t;
    }
    if (is_name_byte(c) && c != '\'') {
      std::size_t j = i_;
      while (j < s_.size()) {
        if (s_.substr(j, 3) == "\xe2\x88\x92" || s_.substr(j, 2) == "\xc2\xb7") break;
        if (!is_name_byte(static_cast<unsigned char>(s_[j]))) break;
        ++j;
      }
      t.kind = Tok::Name;
      t.text = std::string(s_.substr(i_, j - i_));
      i_ = j;
      return t;
    }
    ++i_;
    switch (c) {
      case '+': t.kind = Tok::Plus; return t;
      case '-': t.kind = Tok::Minus; return t;
      case '*': t.kind = Tok::Star; return t;
      case '/': t.kind = Tok::Slash; return t;
      case '^': t.kind = Tok::Caret; return t;
      case '(': t.kind = Tok::LParen; return t;
      case ')': t.kind = Tok::RParen; return t;
      default: throw SyntaxError(t.pos, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  Parser(std::string_view text, const AlphabetPtr& alphabet, const Bindings* bindings)
      : lex_(text), alphabet_(alphabet), bindings_(bindings) {
    advance();
  }

  Expression parse() {
    Expression e = expr();
    if (tok_.kind != Tok::End) throw SyntaxError(tok_.pos, "unexpected trailing input");
    return e;
  }

 private:
  void advance() { tok_ = lex_.next(); }

  Expression expr() {
    Expression e = term();
    while (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
      bool minus = tok_.kind == Tok::Minus;
      advance();
      Expression t = term();
      if (minus) e -= t;
      else e += t;
    }
    return e;
  }

  bool starts_primary() const {
    return tok_.kind == Tok::Number || tok_.kind == Tok::Name || tok_.kind == Tok::LParen;
  }

  Expression term() {
    Expression e = unary();
    for (;;) {
      if (tok_.kind == Tok::Star) {
        advance();
        e = multiply(e, unary());
      } else if (tok_.kind == Tok::Slash) {
        std::size_t pos = tok_.pos;
        advance();
        Expression d = unary();
        auto s = as_scalar(d);
        if (!s) throw SyntaxError(pos, "division by a non-scalar");
        if (s->is_zero()) throw SyntaxError(pos, "division by zero");
        e *= s->inverse();
      } else if (starts_primary()) {
        e = multiply(e, unary());
      } else {
        return e;
      }
    }
  }

  Expression unary() {
    if (tok_.kind == Tok::Minus) {
      advance();
      return -unary();
    }
    return power();
  }

  Expression power() {
    Expression base = primary();
    if (tok_.kind != Tok::Caret) return base;
    advance();
    if (tok_.kind != Tok::Number) throw SyntaxError(tok_.pos, "exponent must be a nonnegative integer");
    if (tok_.text.size() > 4) throw SyntaxError(tok_.pos, "exponent too large");
    int n = std::stoi(tok_.text);
    advance();
    Expression r = Expression::constant(alphabet_, 1);
    for (int k = 0; k < n; ++k) r = multiply(r, base);
    return r;
  }

  Expression primary() {
    Token t = tok_;
    switch (t.kind) {
      case Tok::Number: {
        advance();
        return Expression::constant(alphabet_, GaussianRational(mpq_class(t.text)));
      }
      case Tok::LParen: {
        advance();
        Expression e = expr();
        if (tok_.kind != Tok::RParen) throw SyntaxError(tok_.pos, "expected ')'");
        advance();
        return e;
      }
      case Tok::Name: {
        advance();
        if (t.text == "inv" && tok_.kind == Tok::LParen) return inverse(t);
        return name(t);
      }
      case Tok::End:
        throw SyntaxError(t.pos, "unexpected end of input");
      default:
        throw SyntaxError(t.pos, "expected a term");
    }
  }

  Expression inverse(const Token& t) {
    advance();
    Expression e = expr();
    if (tok_.kind != Tok::RParen) throw SyntaxError(tok_.pos, "expected ')'");
    advance();
    if (auto s = as_scalar(e)) {
      if (s->is_zero()) throw SyntaxError(t.pos, "inverse of zero");
      return Expression::constant(alphabet_, s->inverse());
    }
    if (e.size() == 1) {
      const auto& [w, c] = *e.terms().begin();
      if (w.size() == 1 && c.is_one())
        if (auto inv = alphabet_->inverse(w[0])) return Expression::generator(alphabet_, *inv);
    }
    throw SyntaxError(t.pos, "inv() needs a scalar or an invertible generator");
  }

  Expression name(const Token& t) {
    if (t.text == "p") return Expression::constant(alphabet_, Scalar::p());
    if (t.text == "q") return Expression::constant(alphabet_, Scalar::q());
    if (t.text == "i") return Expression::constant(alphabet_, Scalar::i());
    if (bindings_ != nullptr)
      if (auto it = bindings_->find(t.text); it != bindings_->end()) {
        if (it->second.alphabet().get() != alphabet_.get()) throw MixedPresentation();
        return it->second;
      }
    if (auto g = alphabet_->find(t.text)) return Expression::generator(alphabet_, *g);
    throw UnknownGenerator(t.text);
  }

  static std::optional<Scalar> as_scalar(const Expression& e) {
    if (e.is_zero()) return Scalar();
    if (e.size() == 1 && e.terms().begin()->first.empty()) return e.terms().begin()->second;
    return std::nullopt;
  }

  Lexer lex_;
  Token tok_;
  const AlphabetPtr& alphabet_;
  const Bindings* bindings_;
};

}  // namespace

Expression parse_expression(std::string_view text, const AlphabetPtr& alphabet, const Bindings* bindings) {
  return Parser(text, alphabet, bindings).parse();
}

Scalar parse_scalar(std::string_view text) {
  static const AlphabetPtr empty = std::make_shared<const Alphabet>(std::vector<GeneratorDecl>{});
  Expression e = parse_expression(text, empty);
  if (e.is_zero()) return Scalar();
  return e.terms().begin()->second;
}

}  // namespace hsp
