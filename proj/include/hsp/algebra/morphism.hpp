#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hsp/algebra/reducer.hpp"

namespace hsp {

/// Substitution of generators by expressions in another (or the same)
/// alphabet, extended multiplicatively.
class Morphism {
 public:
  /// Parameters of `source` map to the same-named parameters of `target`
  /// when present; every other image starts unset.
  Morphism(AlphabetPtr source, AlphabetPtr target);

  const AlphabetPtr& source() const { return source_; }
  const AlphabetPtr& target() const { return target_; }

  /// Throws ConstructionFailure when the image's parity differs from the
  /// generator's, or a parameter is not sent to a multiple of a parameter.
  Morphism& set(GenId g, Expression image);
  Morphism& set(std::string_view name, Expression image) { return set(source_->id(name), std::move(image)); }
  const std::optional<Expression>& image(GenId g) const { return images_[g]; }

  /// Unreduced image. Throws MissingImage.
  Expression apply(const Expression& e) const;
  /// Image reduced in `reducer`'s presentation after every factor; equal to
  /// reducing apply(e) on a confluent presentation, but much smaller.
  Expression apply(const Expression& e, Reducer& reducer, std::size_t fuel = kDefaultFuel) const;

 private:
  AlphabetPtr source_;
  AlphabetPtr target_;
  std::vector<std::optional<Expression>> images_;
};

/// second after first. Images are reduced when `reducer` is given.
Morphism compose(const Morphism& second, const Morphism& first, Reducer* reducer = nullptr);

/// Anti-automorphism: dagger(uv) = dagger(v) dagger(u), coefficients
/// conjugated (and p, q swapped when swap_pq is set).
class Involution {
 public:
  /// Verifies dagger(dagger(g)) = g after reduction for every generator.
  /// Throws NotInvolutive or MissingImage.
  Involution(PresentationPtr pres, std::vector<std::optional<Expression>> images, bool swap_pq);

  const PresentationPtr& presentation() const { return pres_; }
  bool swap_pq() const { return swap_pq_; }
  const std::optional<Expression>& image(GenId g) const { return images_[g]; }

  /// Unreduced image. Throws MissingImage.
  Expression apply(const Expression& e) const;
  Expression apply(const Expression& e, Reducer& reducer, std::size_t fuel = kDefaultFuel) const;

 private:
  PresentationPtr pres_;
  std::vector<std::optional<Expression>> images_;
  bool swap_pq_;
};

}  // namespace hsp
