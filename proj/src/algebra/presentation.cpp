#include "hsp/algebra/presentation.hpp"

#include <algorithm>

#include "hsp/algebra/confluence.hpp"
#include "hsp/errors.hpp"

namespace hsp {

const RewriteRule* Presentation::rule_for(const Word& lhs) const {
  if (lhs.size() == 1) return rule_for(lhs[0]);
  if (lhs.size() == 2) return rule_for(lhs[0], lhs[1]);
  return nullptr;
}

PresentationBuilder::PresentationBuilder(std::string name, std::vector<GeneratorDecl> generators)
    : name_(std::move(name)), alphabet_(std::make_shared<const Alphabet>(std::move(generators))) {}

PresentationBuilder::PresentationBuilder(std::string name, AlphabetPtr alphabet)
    : name_(std::move(name)), alphabet_(std::move(alphabet)) {}

Word PresentationBuilder::word(std::initializer_list<std::string_view> names) const {
  Word w;
  for (auto n : names) w.push_back(alphabet_->id(n));
  return w;
}

PresentationBuilder& PresentationBuilder::rule(Word lhs, Expression rhs) {
  if (rhs.alphabet().get() != alphabet_.get()) throw MixedPresentation();
  for (auto& r : rules_) {
    if (r.lhs == lhs) {
      r.rhs = std::move(rhs);
      return *this;
    }
  }
  rules_.push_back({std::move(lhs), std::move(rhs)});
  return *this;
}

PresentationBuilder& PresentationBuilder::rule(std::string_view a, std::string_view b, Expression rhs) {
  return rule(word({a, b}), std::move(rhs));
}

bool PresentationBuilder::has_rule(const Word& lhs) const {
  return std::any_of(rules_.begin(), rules_.end(), [&](const RewriteRule& r) { return r.lhs == lhs; });
}

PresentationBuilder& PresentationBuilder::add_parameter_swaps() {
  const Alphabet& al = *alphabet_;
  const auto np = static_cast<GenId>(al.num_parameters());
  auto add = [&](Word lhs, Expression rhs) {
    if (!has_rule(lhs)) rules_.push_back({std::move(lhs), std::move(rhs)});
  };
  for (GenId h = 0; h < np; ++h) {
    add(Word{h, h}, Expression(alphabet_));
    for (GenId k = 0; k < h; ++k) add(Word{h, k}, Expression::term(alphabet_, Word{k, h}, -1));
  }
  for (GenId g = np; g < al.size(); ++g)
    for (GenId h = 0; h < np; ++h) {
      long sign = (al.parity(g) == Parity::Odd && al.parity(h) == Parity::Odd) ? -1 : 1;
      add(Word{g, h}, Expression::term(alphabet_, Word{h, g}, sign));
    }
  return *this;
}

PresentationPtr PresentationBuilder::build(Validation validation) const {
  const Alphabet& al = *alphabet_;
  const std::size_t n = al.size();
  auto fail = [&](const std::string& what) { throw ConstructionFailure(name_ + ": " + what); };

  std::shared_ptr<Presentation> pres(new Presentation());
  pres->name_ = name_;
  pres->alphabet_ = alphabet_;
  pres->unary_.assign(n, -1);
  pres->binary_.assign(n * n, -1);

  for (const auto& r : rules_) {
    const std::string lhs_text = to_string(al, r.lhs);
    if (r.lhs.empty() || r.lhs.size() > 2) fail("rule lhs '" + lhs_text + "' must have length 1 or 2");
    if (std::any_of(r.lhs.begin(), r.lhs.end(), [&](GenId g) { return g >= n; })) fail("rule lhs out of range");
    Parity lp = word_parity(al, r.lhs);
    for (const auto& [w, c] : r.rhs.terms()) {
      if (compare_terms(al, w, r.lhs) >= 0)
        fail("rule " + lhs_text + " -> " + to_string(r.rhs) + " does not descend at '" + to_string(al, w) + "'");
      if (word_parity(al, w) != lp) fail("rule " + lhs_text + " mixes parities");
    }
    auto idx = static_cast<std::int32_t>(pres->rules_.size());
    std::int32_t& slot = r.lhs.size() == 1 ? pres->unary_[r.lhs[0]] : pres->binary_[r.lhs[0] * n + r.lhs[1]];
    if (slot >= 0) fail("duplicate rule for '" + lhs_text + "'");
    slot = idx;
    pres->rules_.push_back(r);
  }

  if (validation == Validation::Full) {
    const auto np = static_cast<GenId>(al.num_parameters());
    auto expect = [&](GenId a, GenId b, const Expression& rhs) {
      const RewriteRule* r = pres->rule_for(a, b);
      if (r == nullptr || !(r->rhs == rhs))
        fail("parameter rule for '" + to_string(al, Word{a, b}) + "' must be " + to_string(rhs));
    };
    for (GenId h = 0; h < np; ++h) {
      expect(h, h, Expression(alphabet_));
      for (GenId k = 0; k < h; ++k) expect(h, k, Expression::term(alphabet_, Word{k, h}, -1));
    }
    for (GenId g = np; g < n; ++g) {
      for (GenId h = 0; h < np; ++h) {
        long sign = (al.parity(g) == Parity::Odd && al.parity(h) == Parity::Odd) ? -1 : 1;
        expect(g, h, Expression::term(alphabet_, Word{h, g}, sign));
      }
      for (GenId k = np; k < g; ++k)
        if (pres->rule_for(g, k) == nullptr && pres->rule_for(g) == nullptr && pres->rule_for(k) == nullptr)
          fail("no rule for out-of-order pair '" + to_string(al, Word{g, k}) + "'");
      if (al.parity(g) == Parity::Odd && pres->rule_for(g, g) == nullptr && pres->rule_for(g) == nullptr)
        fail("no square rule for odd generator '" + al[g].name + "'");
    }
  }
  return pres;
}

AlphabetPtr inverse_alphabet(const Presentation& pres, GenId g, const std::string& inverse_name,
                             std::vector<std::string> aliases) {
  const Alphabet& al = *pres.alphabet();
  if (al.is_parameter(g) || al.parity(g) != Parity::Even)
    throw ConstructionFailure("cannot invert '" + al[g].name + "'");
  std::vector<GeneratorDecl> gens = al.generators();
  GeneratorDecl inv;
  inv.name = inverse_name;
  inv.parity = Parity::Even;
  inv.cls = al[g].cls == GeneratorClass::Group ? GeneratorClass::GroupInverse : GeneratorClass::CoordinateInverse;
  inv.inverse_of = al[g].name;
  inv.aliases = std::move(aliases);
  gens.insert(gens.begin() + g + 1, std::move(inv));
  return std::make_shared<const Alphabet>(std::move(gens));
}

Expression embed(const Expression& e, const AlphabetPtr& target) {
  const Alphabet& src = *e.alphabet();
  std::vector<GenId> map(src.size());
  for (GenId g = 0; g < src.size(); ++g) map[g] = target->id(src[g].name);
  Expression out(target);
  for (const auto& [w, c] : e.terms()) {
    Word t;
    t.reserve(w.size());
    for (GenId g : w) t.push_back(map[g]);
    out.add_term(std::move(t), c);
  }
  return out;
}

PresentationPtr adjoin_inverse(const Presentation& pres, GenId g, const std::vector<RewriteRule>& derived_rules,
                               std::string name) {
  const Alphabet& old = *pres.alphabet();
  if (derived_rules.empty()) throw IncompleteLocalization("no rules supplied for inverse of '" + old[g].name + "'");
  AlphabetPtr target = derived_rules.front().rhs.alphabet();
  const Alphabet& al = *target;
  auto base = al.find(old[g].name);
  if (!base || !al.inverse(*base)) throw IncompleteLocalization("alphabet lacks an inverse of '" + old[g].name + "'");
  const GenId b = *base;
  const GenId inv = *al.inverse(b);

  PresentationBuilder builder(name.empty() ? pres.name() + "+" + al[inv].name : std::move(name), target);
  for (const auto& r : pres.rules()) {
    Word lhs;
    for (GenId x : r.lhs) lhs.push_back(al.id(old[x].name));
    builder.rule(std::move(lhs), embed(r.rhs, target));
  }
  for (const auto& r : derived_rules) {
    if (r.rhs.alphabet().get() != target.get()) throw MixedPresentation();
    builder.rule(r.lhs, r.rhs);
  }

  auto require = [&](const Word& lhs) {
    if (!builder.has_rule(lhs)) throw IncompleteLocalization("missing rule for '" + to_string(al, lhs) + "'");
  };
  require(Word{b, inv});
  require(Word{inv, b});
  for (GenId s = static_cast<GenId>(al.num_parameters()); s < al.size(); ++s) {
    if (s == b || s == inv) continue;
    require(s > inv ? Word{s, inv} : Word{inv, s});
  }
  builder.add_parameter_swaps();
  PresentationPtr out = builder.build(Validation::Full);
  ConfluenceReport report = check_local_confluence(out, 4);
  if (!report.confluent()) {
    const auto& f = report.failures.front();
    throw ConstructionFailure(out->name() + ": ambiguity '" + to_string(al, f.pair.word) +
                              "' is not joinable, residual " + to_string(f.residual));
  }
  return out;
}

}  // namespace hsp
