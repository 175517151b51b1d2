#include "hsp/presentations/derivation.hpp"

#include <algorithm>
#include <set>

#include "hsp/errors.hpp"

namespace hsp {

PresentationPtr parameter_frame(const AlphabetPtr& alphabet) {
  PresentationBuilder b("parameters", alphabet);
  b.add_parameter_swaps();
  return b.build(Validation::Lenient);
}

Expression rename(const Expression& e, const AlphabetPtr& target,
                  const std::function<std::string(const std::string&)>& rename) {
  const Alphabet& src = *e.alphabet();
  std::vector<GenId> map(src.size());
  for (GenId g = 0; g < src.size(); ++g) map[g] = target->id(rename(src[g].name));
  Expression out(target);
  for (const auto& [w, c] : e.terms()) {
    Word t;
    for (GenId g : w) t.push_back(map[g]);
    out.add_term(std::move(t), c);
  }
  return out;
}

PresentationPtr derive_transported(const PresentationPtr& source, const Morphism& to_source,
                                   const Morphism& from_source, const std::vector<RewriteRule>& initial,
                                   const std::string& name, int max_iterations) {
  if (initial.empty()) throw ConstructionFailure(name + ": nothing to transport");
  const AlphabetPtr& al = initial.front().rhs.alphabet();
  if (to_source.source().get() != al.get() || from_source.target().get() != al.get() ||
      to_source.target().get() != source->alphabet().get())
    throw MixedPresentation();

  std::vector<RewriteRule> rules = initial;
  auto build = [&](Validation v) {
    PresentationBuilder b(name, al);
    for (const auto& r : rules) b.rule(r.lhs, r.rhs);
    b.add_parameter_swaps();
    return b.build(v);
  };
  Reducer src(source);
  for (int it = 0; it < max_iterations; ++it) {
    Reducer dst(build(Validation::Lenient));
    bool changed = false;
    std::vector<RewriteRule> next;
    next.reserve(rules.size());
    for (const auto& r : rules) {
      Expression image = to_source.apply(Expression::term(al, r.lhs), src);
      Expression back = from_source.apply(image, dst);
      if (!(back == r.rhs)) changed = true;
      next.push_back({r.lhs, std::move(back)});
    }
    rules = std::move(next);
    if (!changed) return build(Validation::Full);
  }
  throw ConstructionFailure(name + ": transported rules did not settle after " + std::to_string(max_iterations) +
                            " passes");
}

std::vector<RewriteRule> derive_inverse_rules(const Presentation& pres, GenId base, const std::string& inverse_name,
                                              std::vector<std::string> aliases, int max_iterations) {
  const Alphabet& old = *pres.alphabet();
  AlphabetPtr al = inverse_alphabet(pres, base, inverse_name, std::move(aliases));
  const GenId g = al->id(old[base].name);
  const GenId inv = *al->inverse(g);
  auto lift = [&](const Word& w) {
    Word t;
    for (GenId x : w) t.push_back(al->id(old[x].name));
    return t;
  };

  std::vector<RewriteRule> embedded;
  for (const auto& r : pres.rules()) embedded.push_back({lift(r.lhs), embed(r.rhs, al)});

  // g s = c s g + n (g_first) or s g = c g s + n.
  struct Seed {
    GenId s;
    bool g_first;
    Scalar c;
    Expression n;
  };
  std::vector<Seed> seeds;
  for (GenId s = static_cast<GenId>(al->num_parameters()); s < al->size(); ++s) {
    if (s == g || s == inv) continue;
    const GenId so = old.id((*al)[s].name);
    bool g_first = true;
    const RewriteRule* r = pres.rule_for(base, so);
    if (r == nullptr) {
      r = pres.rule_for(so, base);
      g_first = false;
    }
    if (r == nullptr)
      throw IncompleteLocalization("no rule between '" + old[base].name + "' and '" + old[so].name + "'");
    Word swapped = g_first ? Word{s, g} : Word{g, s};
    Expression rhs = embed(r->rhs, al);
    Scalar c = rhs.coefficient(swapped);
    if (c.is_zero())
      throw IncompleteLocalization("rule for '" + to_string(old, r->lhs) + "' has no reordered leading term");
    rhs -= Expression::term(al, swapped, c);
    seeds.push_back({s, g_first, c, std::move(rhs)});
  }

  auto make_rule = [&](const Seed& sd, const Expression& corr) -> RewriteRule {
    const GenId s = sd.s;
    if (sd.g_first) {
      // s g^-1 = c g^-1 s + corr
      if (s > inv) return {Word{s, inv}, Expression::term(al, Word{inv, s}, sd.c) + corr};
      return {Word{inv, s}, (Expression::term(al, Word{s, inv}) - corr) * sd.c.inverse()};
    }
    // g^-1 s = c s g^-1 + corr
    if (inv > s) return {Word{inv, s}, Expression::term(al, Word{s, inv}, sd.c) + corr};
    return {Word{s, inv}, (Expression::term(al, Word{inv, s}) - corr) * sd.c.inverse()};
  };

  std::vector<RewriteRule> current;
  for (const auto& sd : seeds) current.push_back(make_rule(sd, Expression(al)));
  const RewriteRule right_unit{Word{g, inv}, Expression::constant(al, 1)};
  const RewriteRule left_unit{Word{inv, g}, Expression::constant(al, 1)};
  const Expression ginv = Expression::generator(al, inv);

  for (int it = 0; it < max_iterations; ++it) {
    PresentationBuilder b(pres.name() + "+" + inverse_name, al);
    for (const auto& r : embedded) b.rule(r.lhs, r.rhs);
    for (const auto& r : current) b.rule(r.lhs, r.rhs);
    b.rule(right_unit.lhs, right_unit.rhs);
    b.rule(left_unit.lhs, left_unit.rhs);
    b.add_parameter_swaps();
    Reducer red(b.build(Validation::Lenient));

    bool changed = false;
    std::vector<RewriteRule> next;
    for (std::size_t k = 0; k < seeds.size(); ++k) {
      Expression corr = red.normal_form(multiply(multiply(ginv, seeds[k].n), ginv));
      RewriteRule r = make_rule(seeds[k], corr);
      if (!(r.rhs == current[k].rhs)) changed = true;
      next.push_back(std::move(r));
    }
    current = std::move(next);
    if (!changed) {
      current.push_back(right_unit);
      current.push_back(left_unit);
      return current;
    }
  }
  throw ConstructionFailure("rules for '" + inverse_name + "' did not settle after " +
                            std::to_string(max_iterations) + " passes");
}

PresentationPtr localize(const PresentationPtr& pres, const std::string& base, const std::string& inverse_name,
                         std::vector<std::string> aliases, std::string name) {
  GenId g = pres->alphabet()->id(base);
  auto rules = derive_inverse_rules(*pres, g, inverse_name, std::move(aliases));
  return adjoin_inverse(*pres, g, rules, std::move(name));
}

PresentationPtr specialize(const Presentation& pres, const GaussianRational& p0, const GaussianRational& q0,
                           std::string name) {
  PresentationBuilder b(std::move(name), pres.alphabet());
  auto at = [&](const Scalar& c) { return Scalar(c.evaluate(p0, q0)); };
  for (const auto& r : pres.rules()) b.rule(r.lhs, r.rhs.map_coefficients(at));
  return b.build(Validation::Full);
}

PresentationPtr restrict_to(const Presentation& pres, const std::vector<std::string>& names, std::string name) {
  const Alphabet& old = *pres.alphabet();
  std::set<GenId> keep;
  for (GenId g = 0; g < old.num_parameters(); ++g) keep.insert(g);
  for (const auto& n : names) keep.insert(old.id(n));
  std::vector<GeneratorDecl> gens;
  for (GenId g : keep) gens.push_back(old[g]);
  auto al = std::make_shared<const Alphabet>(std::move(gens));

  PresentationBuilder b(std::move(name), al);
  for (const auto& r : pres.rules()) {
    if (!std::all_of(r.lhs.begin(), r.lhs.end(), [&](GenId x) { return keep.count(x) != 0; })) continue;
    Word lhs;
    for (GenId x : r.lhs) lhs.push_back(al->id(old[x].name));
    Expression rhs(al);
    for (const auto& [w, c] : r.rhs.terms()) {
      Word t;
      for (GenId x : w) {
        if (keep.count(x) == 0)
          throw ConstructionFailure("rule for '" + to_string(old, r.lhs) + "' leaves the subset via '" + old[x].name +
                                    "'");
        t.push_back(al->id(old[x].name));
      }
      rhs.add_term(std::move(t), c);
    }
    b.rule(std::move(lhs), std::move(rhs));
  }
  return b.build(Validation::Full);
}

}  // namespace hsp
