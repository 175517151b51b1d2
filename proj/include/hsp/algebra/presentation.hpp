#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hsp/algebra/expression.hpp"

namespace hsp {

/// lhs -> rhs with lhs of length 1 or 2.
struct RewriteRule {
  Word lhs;
  Expression rhs;
};

class Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

/// Immutable oriented rewrite system over an alphabet.
class Presentation {
 public:
  const std::string& name() const { return name_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }

  const RewriteRule* rule_for(GenId a) const {
    std::int32_t k = unary_[a];
    return k < 0 ? nullptr : &rules_[static_cast<std::size_t>(k)];
  }
  const RewriteRule* rule_for(GenId a, GenId b) const {
    std::int32_t k = binary_[static_cast<std::size_t>(a) * alphabet_->size() + b];
    return k < 0 ? nullptr : &rules_[static_cast<std::size_t>(k)];
  }
  /// Looks up a rule by lhs word; nullptr if none.
  const RewriteRule* rule_for(const Word& lhs) const;

  Expression zero() const { return Expression(alphabet_); }
  Expression scalar(const Scalar& c) const { return Expression::constant(alphabet_, c); }
  /// Throws UnknownGenerator.
  Expression gen(std::string_view name) const { return Expression::generator(alphabet_, alphabet_->id(name)); }

 private:
  friend class PresentationBuilder;
  Presentation() = default;

  std::string name_;
  AlphabetPtr alphabet_;
  std::vector<RewriteRule> rules_;
  std::vector<std::int32_t> unary_;
  std::vector<std::int32_t> binary_;
};

enum class Validation {
  /// Descent, parity, parameter swaps, and a rule for every out-of-order
  /// pair and every odd square.
  Full,
  /// Descent and parity only; for provisional systems during derivations.
  Lenient,
};

class PresentationBuilder {
 public:
  PresentationBuilder(std::string name, std::vector<GeneratorDecl> generators);
  PresentationBuilder(std::string name, AlphabetPtr alphabet);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  Expression gen(std::string_view name) const { return Expression::generator(alphabet_, alphabet_->id(name)); }
  Expression scalar(const Scalar& c) const { return Expression::constant(alphabet_, c); }
  Word word(std::initializer_list<std::string_view> names) const;

  /// Adds or replaces the rule for `lhs`.
  PresentationBuilder& rule(Word lhs, Expression rhs);
  PresentationBuilder& rule(std::string_view a, std::string_view b, Expression rhs);
  bool has_rule(const Word& lhs) const;
  const std::vector<RewriteRule>& rules() const { return rules_; }

  /// Adds h*h -> 0, h2*h1 -> -h1*h2 and g*h -> (-1)^(|g||h|) h*g for every
  /// non-parameter g, skipping lhs words that already have rules.
  PresentationBuilder& add_parameter_swaps();

  /// Throws ConstructionFailure naming the first violated invariant.
  PresentationPtr build(Validation validation = Validation::Full) const;

 private:
  std::string name_;
  AlphabetPtr alphabet_;
  std::vector<RewriteRule> rules_;
};

/// The alphabet of `pres` with an even inverse of `g` inserted directly
/// after `g`.
AlphabetPtr inverse_alphabet(const Presentation& pres, GenId g, const std::string& inverse_name,
                             std::vector<std::string> aliases = {});

/// Re-expresses `e` over `target`, matching generators by name.
/// Throws UnknownGenerator when a name is missing from `target`.
Expression embed(const Expression& e, const AlphabetPtr& target);

/// Extends `pres` by an adjoined inverse. `derived_rules` are written over
/// an alphabet from inverse_alphabet() and must contain g*g^-1 -> 1,
/// g^-1*g -> 1 and an ordering rule between g^-1 and every other
/// non-parameter generator. The result must be locally confluent up to
/// length 4. Throws IncompleteLocalization or ConstructionFailure.
PresentationPtr adjoin_inverse(const Presentation& pres, GenId g, const std::vector<RewriteRule>& derived_rules,
                               std::string name = {});

}  // namespace hsp
