#include "hsp/algebra/morphism.hpp"

#include "hsp/errors.hpp"

namespace hsp {

Morphism::Morphism(AlphabetPtr source, AlphabetPtr target)
    : source_(std::move(source)), target_(std::move(target)), images_(source_->size()) {
  for (GenId g = 0; g < source_->num_parameters(); ++g)
    if (auto t = target_->find((*source_)[g].name)) images_[g] = Expression::generator(target_, *t);
}

Morphism& Morphism::set(GenId g, Expression image) {
  const Alphabet& src = *source_;
  if (image.alphabet().get() != target_.get()) throw MixedPresentation();
  if (!image.is_zero() && image.parity() != src.parity(g))
    throw ConstructionFailure("image of '" + src[g].name + "' has the wrong parity");
  if (src.is_parameter(g)) {
    bool single = image.size() == 1 && image.terms().begin()->first.size() == 1 &&
                  target_->is_parameter(image.terms().begin()->first[0]);
    if (!single) throw ConstructionFailure("parameter '" + src[g].name + "' must map to a parameter");
  }
  images_[g] = std::move(image);
  return *this;
}

namespace {

template <typename ImageFn, typename Mul>
Expression substitute(const Expression& e, const AlphabetPtr& target, bool reverse, ImageFn&& image,
                      Mul&& mul, const std::function<Scalar(const Scalar&)>& coef) {
  Expression out(target);
  for (const auto& [w, c] : e.terms()) {
    Expression t = Expression::constant(target, coef(c));
    if (reverse) {
      for (auto it = w.rbegin(); it != w.rend() && !t.is_zero(); ++it) t = mul(t, image(*it));
    } else {
      for (auto it = w.begin(); it != w.end() && !t.is_zero(); ++it) t = mul(t, image(*it));
    }
    out += t;
  }
  return out;
}

}  // namespace

Expression Morphism::apply(const Expression& e) const {
  if (e.alphabet().get() != source_.get()) throw MixedPresentation();
  auto image = [&](GenId g) -> const Expression& {
    if (!images_[g]) throw MissingImage((*source_)[g].name);
    return *images_[g];
  };
  return substitute(e, target_, false, image, [](const Expression& a, const Expression& b) { return multiply(a, b); },
                    [](const Scalar& c) { return c; });
}

Expression Morphism::apply(const Expression& e, Reducer& reducer, std::size_t fuel) const {
  if (e.alphabet().get() != source_.get()) throw MixedPresentation();
  if (reducer.presentation().alphabet().get() != target_.get()) throw MixedPresentation();
  auto image = [&](GenId g) -> const Expression& {
    if (!images_[g]) throw MissingImage((*source_)[g].name);
    return *images_[g];
  };
  Expression out = substitute(
      e, target_, false, image,
      [&](const Expression& a, const Expression& b) { return reducer.multiply_reduced(a, b, fuel); },
      [](const Scalar& c) { return c; });
  return reducer.normal_form(out, fuel);
}

Morphism compose(const Morphism& second, const Morphism& first, Reducer* reducer) {
  if (first.target().get() != second.source().get()) throw MixedPresentation();
  Morphism out(first.source(), second.target());
  for (GenId g = 0; g < first.source()->size(); ++g) {
    if (!first.image(g)) continue;
    out.set(g, reducer ? second.apply(*first.image(g), *reducer) : second.apply(*first.image(g)));
  }
  return out;
}

Involution::Involution(PresentationPtr pres, std::vector<std::optional<Expression>> images, bool swap_pq)
    : pres_(std::move(pres)), images_(std::move(images)), swap_pq_(swap_pq) {
  const Alphabet& al = *pres_->alphabet();
  if (images_.size() != al.size()) throw ConstructionFailure("involution image table has the wrong size");
  Reducer reducer(pres_);
  for (GenId g = 0; g < al.size(); ++g) {
    if (!images_[g]) throw MissingImage(al[g].name);
    if (images_[g]->alphabet().get() != pres_->alphabet().get()) throw MixedPresentation();
    if (!images_[g]->is_zero() && images_[g]->parity() != al.parity(g))
      throw ConstructionFailure("involution image of '" + al[g].name + "' has the wrong parity");
  }
  for (GenId g = 0; g < al.size(); ++g) {
    Expression twice = apply(apply(Expression::generator(pres_->alphabet(), g), reducer), reducer);
    if (!(twice == Expression::generator(pres_->alphabet(), g))) throw NotInvolutive(al[g].name);
  }
}

Expression Involution::apply(const Expression& e) const {
  if (e.alphabet().get() != pres_->alphabet().get()) throw MixedPresentation();
  auto image = [&](GenId g) -> const Expression& { return *images_[g]; };
  bool swap = swap_pq_;
  return substitute(e, pres_->alphabet(), true, image,
                    [](const Expression& a, const Expression& b) { return multiply(a, b); },
                    [swap](const Scalar& c) { return c.conj(swap); });
}

Expression Involution::apply(const Expression& e, Reducer& reducer, std::size_t fuel) const {
  if (e.alphabet().get() != pres_->alphabet().get()) throw MixedPresentation();
  auto image = [&](GenId g) -> const Expression& { return *images_[g]; };
  bool swap = swap_pq_;
  Expression out = substitute(
      e, pres_->alphabet(), true, image,
      [&](const Expression& a, const Expression& b) { return reducer.multiply_reduced(a, b, fuel); },
      [swap](const Scalar& c) { return c.conj(swap); });
  return reducer.normal_form(out, fuel);
}

}  // namespace hsp
