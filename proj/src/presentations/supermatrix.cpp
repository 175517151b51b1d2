#include "hsp/presentations/supermatrix.hpp"

#include "hsp/errors.hpp"
#include "hsp/text/parser.hpp"

namespace hsp {

PresentationPtr coefficient_frame() {
  static const PresentationPtr frame = [] {
    std::vector<GeneratorDecl> gens{
        {"h1", Parity::Odd, GeneratorClass::Parameter, std::nullopt, {"h₁"}},
        {"h2", Parity::Odd, GeneratorClass::Parameter, std::nullopt, {"h₂"}},
    };
    PresentationBuilder b("coefficients", std::move(gens));
    b.add_parameter_swaps();
    return b.build();
  }();
  return frame;
}

SuperMatrix::SuperMatrix(Entries m) : m_(std::move(m)) {
  for (const auto& row : m_)
    for (const auto& e : row)
      if (e.alphabet().get() != coefficient_frame()->alphabet().get()) throw MixedPresentation();
}

SuperMatrix SuperMatrix::parse(const std::string& m00, const std::string& m01, const std::string& m10,
                               const std::string& m11) {
  const auto& al = coefficient_frame()->alphabet();
  Bindings b;
  Expression a = parse_expression("h1/(p - 1)", al);
  Expression bb = parse_expression("h2/(q - 1)", al);
  b.emplace("a", a);
  b.emplace("b", bb);
  b.emplace("ab", multiply(a, bb));
  auto p = [&](const std::string& s) { return normal_form(coefficient_frame(), parse_expression(s, al, &b)); };
  return SuperMatrix({{{p(m00), p(m01)}, {p(m10), p(m11)}}});
}

SuperMatrix SuperMatrix::identity() {
  const auto& f = coefficient_frame();
  return SuperMatrix({{{f->scalar(1), f->zero()}, {f->zero(), f->scalar(1)}}});
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
  Reducer r(coefficient_frame());
  SuperMatrix::Entries out{{{coefficient_frame()->zero(), coefficient_frame()->zero()},
                            {coefficient_frame()->zero(), coefficient_frame()->zero()}}};
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      for (int j = 0; j < 2; ++j) out[i][k] += r.multiply_reduced(a.m_[i][j], b.m_[j][k]);
  return SuperMatrix(std::move(out));
}

bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!(a.m_[i][j] == b.m_[i][j])) return false;
  return true;
}

SuperMatrix SuperMatrix::inverse() const {
  const auto& f = coefficient_frame();
  std::array<std::array<Scalar, 2>, 2> s;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) s[i][j] = m_[i][j].coefficient(Word{});
  Scalar det = s[0][0] * s[1][1] - s[0][1] * s[1][0];
  if (det.is_zero()) throw ConstructionFailure("parameter-free part of the matrix is singular");
  Scalar inv = det.inverse();
  SuperMatrix base({{{f->scalar(s[1][1] * inv), f->scalar(-s[0][1] * inv)},
                     {f->scalar(-s[1][0] * inv), f->scalar(s[0][0] * inv)}}});
  // base * this = 1 + e with e nilpotent.
  SuperMatrix e = base * *this;
  for (int i = 0; i < 2; ++i) e.m_[i][i] -= f->scalar(1);
  SuperMatrix sum = identity();
  SuperMatrix power = identity();
  for (int k = 1; k <= 8; ++k) {
    power = power * e;
    bool zero = true;
    for (const auto& row : power.m_)
      for (const auto& x : row) zero = zero && x.is_zero();
    if (zero) return sum * base;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) sum.m_[i][j] += (k % 2 ? -power.m_[i][j] : power.m_[i][j]);
  }
  throw ConstructionFailure("correction series did not terminate");
}

SuperMatrix SuperMatrix::supertranspose() const {
  return SuperMatrix({{{m_[0][0], m_[1][0]}, {-m_[0][1], m_[1][1]}}});
}

SuperMatrix SuperMatrix::left_differential() const {
  Entries out = m_;
  for (auto& row : out)
    for (auto& x : row) {
      auto parity = x.parity();
      if (!parity) throw ConstructionFailure("matrix entry " + hsp::to_string(x) + " has mixed parity");
      if (*parity == Parity::Odd) x = -x;
    }
  return SuperMatrix(std::move(out));
}

Expression lift_coefficient(const Expression& c, const AlphabetPtr& alphabet, const Word& tail) {
  Expression out(alphabet);
  const Alphabet& src = *c.alphabet();
  for (const auto& [w, k] : c.terms()) {
    Word t;
    for (GenId g : w) t.push_back(alphabet->id(src[g].name));
    t.insert(t.end(), tail.begin(), tail.end());
    out.add_term(std::move(t), k);
  }
  return out;
}

void SuperMatrix::install(Morphism& m, const std::array<std::string, 2>& source,
                          const std::array<std::string, 2>& target) const {
  const AlphabetPtr& al = m.target();
  for (int i = 0; i < 2; ++i) {
    Expression image(al);
    for (int j = 0; j < 2; ++j) image += lift_coefficient(m_[i][j], al, Word{al->id(target[j])});
    m.set(source[i], std::move(image));
  }
}

std::string SuperMatrix::to_string() const {
  return "[[" + hsp::to_string(m_[0][0]) + ", " + hsp::to_string(m_[0][1]) + "], [" + hsp::to_string(m_[1][0]) +
         ", " + hsp::to_string(m_[1][1]) + "]]";
}

}  // namespace hsp
