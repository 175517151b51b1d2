#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hsp/algebra/morphism.hpp"

namespace hsp {

/// Parameter swap rules only, over `alphabet`. Enough to normal-order the
/// coefficients of expressions that are linear in the other generators.
PresentationPtr parameter_frame(const AlphabetPtr& alphabet);

/// Re-expresses `e` over `target`, sending each generator to the one named
/// rename(name).
Expression rename(const Expression& e, const AlphabetPtr& target,
                  const std::function<std::string(const std::string&)>& rename);

/// Rules that transport `source` along a pair of mutually inverse
/// morphisms. For every lhs of `initial` the rule is recomputed as
/// NF_target(from_source(NF_source(to_source(lhs)))) until nothing changes.
/// `initial` seeds the target system used during the iteration.
/// Throws ConstructionFailure when the iteration does not settle or a
/// derived rule does not descend.
PresentationPtr derive_transported(const PresentationPtr& source, const Morphism& to_source,
                                   const Morphism& from_source, const std::vector<RewriteRule>& initial,
                                   const std::string& name, int max_iterations = 8);

/// Rules for an adjoined inverse of even generator `base` obtained from the
/// rule between `base` and every other generator s: g s = c s g + N gives
/// s g^-1 = c g^-1 s + g^-1 N g^-1 (and symmetrically), the correction
/// reduced and the orientation fixed by the term order. The result is over
/// inverse_alphabet(pres, base, inverse_name, aliases), ready for
/// adjoin_inverse(). Throws IncompleteLocalization when some generator has
/// no rule against `base` of that shape.
std::vector<RewriteRule> derive_inverse_rules(const Presentation& pres, GenId base, const std::string& inverse_name,
                                              std::vector<std::string> aliases = {}, int max_iterations = 8);

/// derive_inverse_rules followed by adjoin_inverse.
PresentationPtr localize(const PresentationPtr& pres, const std::string& base, const std::string& inverse_name,
                         std::vector<std::string> aliases = {}, std::string name = {});

/// Every coefficient evaluated at (p0, q0). Throws PoleAtPoint.
PresentationPtr specialize(const Presentation& pres, const GaussianRational& p0, const GaussianRational& q0,
                           std::string name);

/// Sub-presentation on the named generators (parameters are always kept).
/// Keeps the rules whose lhs lies in the subset; throws ConstructionFailure
/// when such a rule mentions a generator outside it.
PresentationPtr restrict_to(const Presentation& pres, const std::vector<std::string>& names, std::string name);

}  // namespace hsp
