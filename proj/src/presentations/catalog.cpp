#include "hsp/presentations/catalog.hpp"

#include <mutex>
#include <optional>

#include "hsp/errors.hpp"
#include "hsp/presentations/derivation.hpp"
#include "hsp/presentations/relations.hpp"
#include "hsp/text/parser.hpp"

namespace hsp {

namespace {

using G = GeneratorClass;

std::vector<GeneratorDecl> parameter_decls() {
  return {
      {"h1", Parity::Odd, G::Parameter, std::nullopt, {"h₁"}},
      {"h2", Parity::Odd, G::Parameter, std::nullopt, {"h₂"}},
  };
}

std::vector<GeneratorDecl> plane_decls() {
  return {
      {"dth", Parity::Even, G::Differential, std::nullopt, {"y", "dθ"}},
      {"dx", Parity::Odd, G::Differential, std::nullopt, {"phi", "φ"}},
      {"th", Parity::Odd, G::Coordinate, std::nullopt, {"θ"}},
      {"x", Parity::Even, G::Coordinate, std::nullopt, {}},
      {"px", Parity::Even, G::Derivative, std::nullopt, {"∂x", "∂_x"}},
      {"pth", Parity::Odd, G::Derivative, std::nullopt, {"∂θ", "∂_θ"}},
  };
}

std::vector<GeneratorDecl> primed_decls() {
  return {
      {"dth'", Parity::Even, G::Differential, std::nullopt, {"y'", "dθ'", "y′", "dθ′"}},
      {"dx'", Parity::Odd, G::Differential, std::nullopt, {"phi'", "φ'", "φ′", "dx′"}},
      {"th'", Parity::Odd, G::Coordinate, std::nullopt, {"θ'", "θ′", "th′"}},
      {"x'", Parity::Even, G::Coordinate, std::nullopt, {"x′"}},
      {"px'", Parity::Even, G::Derivative, std::nullopt, {"∂x'", "∂x′", "∂_x'"}},
      {"pth'", Parity::Odd, G::Derivative, std::nullopt, {"∂θ'", "∂θ′", "∂_θ'"}},
  };
}

std::vector<GeneratorDecl> group_decls() {
  return {
      {"gm", Parity::Odd, G::Group, std::nullopt, {"γ", "gamma"}},
      {"bt", Parity::Odd, G::Group, std::nullopt, {"β", "beta"}},
      {"d", Parity::Even, G::Group, std::nullopt, {}},
      {"a", Parity::Even, G::Group, std::nullopt, {}},
  };
}

std::vector<GeneratorDecl> oscillator_decls() {
  return {
      {"Bp", Parity::Odd, G::Oscillator, std::nullopt, {"B⁺", "Bdag"}},
      {"B", Parity::Odd, G::Oscillator, std::nullopt, {}},
      {"Ap", Parity::Even, G::Oscillator, std::nullopt, {"A⁺", "Adag"}},
      {"A", Parity::Even, G::Oscillator, std::nullopt, {}},
  };
}

std::vector<GeneratorDecl> concat(std::vector<GeneratorDecl> a, const std::vector<GeneratorDecl>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Parameters plus the named subset of `decls`, in their given order.
AlphabetPtr sub_alphabet(const std::vector<GeneratorDecl>& decls, const std::vector<std::string>& names) {
  auto gens = parameter_decls();
  for (const auto& d : decls)
    for (const auto& n : names)
      if (d.name == n) gens.push_back(d);
  return std::make_shared<const Alphabet>(std::move(gens));
}

/// The contraction shorthands a = h1/(p-1), b = h2/(q-1) and ab.
Bindings contraction_bindings(const AlphabetPtr& al) {
  Bindings b;
  Expression a = parse_expression("h1/(p - 1)", al);
  Expression bb = parse_expression("h2/(q - 1)", al);
  b.emplace("a", a);
  b.emplace("b", bb);
  b.emplace("ab", multiply(a, bb));
  return b;
}

Word parse_word(const std::string& text, const AlphabetPtr& al) {
  Expression e = parse_expression(text, al);
  if (e.size() != 1 || !e.terms().begin()->second.is_one() || e.terms().begin()->first.empty())
    throw ConstructionFailure("'" + text + "' is not a word");
  return e.terms().begin()->first;
}

struct RuleText {
  const char* lhs;
  const char* rhs;
};

void add_rules(PresentationBuilder& b, const std::vector<RuleText>& rules) {
  for (const auto& r : rules) b.rule(parse_word(r.lhs, b.alphabet()), parse_expression(r.rhs, b.alphabet()));
}

void add_rules(PresentationBuilder& b, const RelationTable& table) {
  for (const auto& r : table) b.rule(parse_word(r.lhs, b.alphabet()), parse_expression(r.rhs, b.alphabet()));
}

// Primed coordinate, differential and derivative rules at h = 0. The
// derivative-differential block is the unique choice compatible with the
// rest at generic p, q; it agrees with the h = 0, p = q = 1 limit.
const std::vector<RuleText> kPrimedShared{
    {"x'*th'", "q*th'*x'"},
    {"th'*th'", "0"},
    {"dx'*dx'", "0"},
    {"dx'*dth'", "1/p*dth'*dx'"},
    {"x'*dx'", "p*q*dx'*x'"},
    {"x'*dth'", "q*dth'*x' + (p*q - 1)*dx'*th'"},
    {"th'*dth'", "dth'*th'"},
    {"px'*x'", "1 + p*q*x'*px' + (p*q - 1)*th'*pth'"},
    {"px'*th'", "p*th'*px'"},
    {"pth'*x'", "q*x'*pth'"},
    {"pth'*th'", "1 - th'*pth'"},
    {"pth'*px'", "p*px'*pth'"},
    {"pth'*pth'", "0"},
    {"px'*dx'", "1/(p*q)*dx'*px'"},
    {"px'*dth'", "1/q*dth'*px'"},
    {"pth'*dx'", "-1/p*dx'*pth'"},
    {"pth'*dth'", "dth'*pth' + (p*q - 1)/(p*q)*dx'*px'"},
};

constexpr const char* kTransposedReading = "-p*dx'*th'";
constexpr const char* kPrintedReading = "-p*dth'*x'";

// Differentials and derivatives only, with the h = 0 derivative-differential
// rules read off the generic display.
const std::vector<RuleText> kPrimedDiffBlock{
    {"dx'*dx'", "0"},
    {"dx'*dth'", "1/p*dth'*dx'"},
    {"pth'*px'", "p*px'*pth'"},
    {"pth'*pth'", "0"},
    {"px'*dx'", "p*q*dx'*px' + (p*q - 1)*dth'*pth'"},
    {"px'*dth'", "p*dth'*px'"},
    {"pth'*dx'", "-q*dx'*pth'"},
    {"pth'*dth'", "dth'*pth'"},
};

PresentationPtr build_primed(const char* reading, const std::string& name) {
  PresentationBuilder b(name, primed_alphabet());
  add_rules(b, kPrimedShared);
  b.rule(parse_word("th'*dx'", b.alphabet()), parse_expression(reading, b.alphabet()));
  b.add_parameter_swaps();
  return b.build(Validation::Full);
}

std::string strip_prime(const std::string& n) {
  return !n.empty() && n.back() == '\'' ? n.substr(0, n.size() - 1) : n;
}

/// The source rules renamed onto `target`; seeds the transport.
std::vector<RewriteRule> stripped_rules(const Presentation& source, const AlphabetPtr& target) {
  std::vector<RewriteRule> out;
  const Alphabet& al = *source.alphabet();
  for (const auto& r : source.rules()) {
    bool param = false;
    for (GenId g : r.lhs) param = param || al.is_parameter(g);
    if (param) continue;
    Word lhs;
    for (GenId g : r.lhs) lhs.push_back(target->id(strip_prime(al[g].name)));
    out.push_back({std::move(lhs), rename(r.rhs, target, strip_prime)});
  }
  return out;
}

ContractionMap build_contraction() {
  SuperMatrix g = SuperMatrix::parse("1 + ab", "a", "b", "1");
  SuperMatrix coords = SuperMatrix::parse("1", "-a", "-b", "1 - ab");
  SuperMatrix diffs = SuperMatrix::parse("1", "a", "b", "1 - ab");
  SuperMatrix derivs = SuperMatrix::parse("1", "-b", "a", "1 - ab");

  const AlphabetPtr plain = plane_alphabet();
  const AlphabetPtr primed = primed_alphabet();
  Morphism fwd(plain, primed);
  coords.install(fwd, {"x", "th"}, {"x'", "th'"});
  diffs.install(fwd, {"dx", "dth"}, {"dx'", "dth'"});
  derivs.inverse().install(fwd, {"px", "pth"}, {"px'", "pth'"});
  Morphism inv(primed, plain);
  coords.inverse().install(inv, {"x'", "th'"}, {"x", "th"});
  diffs.inverse().install(inv, {"dx'", "dth'"}, {"dx", "dth"});
  derivs.install(inv, {"px'", "pth'"}, {"px", "pth"});

  Reducer plain_frame(parameter_frame(plain));
  Reducer primed_frame(parameter_frame(primed));
  auto round_trip = [](const Morphism& there, const Morphism& back, Reducer& mid, Reducer& end) {
    const Alphabet& al = *there.source();
    for (GenId s = static_cast<GenId>(al.num_parameters()); s < al.size(); ++s) {
      Expression e = Expression::generator(there.source(), s);
      Expression r = back.apply(there.apply(e, mid), end) - e;
      if (!r.is_zero()) throw RoundTripFailure(al[s].name, to_string(r));
    }
  };
  round_trip(fwd, inv, primed_frame, plain_frame);
  round_trip(inv, fwd, plain_frame, primed_frame);
  return ContractionMap{g, coords, diffs, derivs, std::move(fwd), std::move(inv)};
}

PresentationPtr build_supergroup() {
  PresentationBuilder b("supergroup", concat(parameter_decls(), group_decls()));
  add_rules(b, supergroup_relations());
  b.add_parameter_swaps();
  return b.build(Validation::Full);
}

PresentationPtr build_oscillator() {
  PresentationBuilder b("oscillator", concat(parameter_decls(), oscillator_decls()));
  add_rules(b, oscillator_relations());
  b.add_parameter_swaps();
  return b.build(Validation::Full);
}

PresentationPtr build_covariance_tensor(const Presentation& group, const Presentation& calculus) {
  PresentationBuilder b("covariance_tensor", concat(concat(parameter_decls(), group_decls()), plane_decls()));
  const AlphabetPtr& al = b.alphabet();
  for (const Presentation* src : {&group, &calculus})
    for (const auto& r : src->rules()) {
      Word lhs;
      for (GenId g : r.lhs) lhs.push_back(al->id((*src->alphabet())[g].name));
      b.rule(std::move(lhs), embed(r.rhs, al));
    }
  for (const auto& s : plane_decls())
    for (const auto& g : group_decls()) {
      Scalar sign = s.parity == Parity::Odd && g.parity == Parity::Odd ? -1 : 1;
      b.rule(Word{al->id(s.name), al->id(g.name)}, Expression::term(al, Word{al->id(g.name), al->id(s.name)}, sign));
    }
  b.add_parameter_swaps();
  PresentationPtr t = b.build(Validation::Full);
  t = localize(t, "a", "ainv", {"a⁻¹"});
  return localize(t, "d", "dinv", {"d⁻¹"}, "covariance_tensor");
}

Morphism build_coaction(const AlphabetPtr& calculus, const AlphabetPtr& tensor) {
  Morphism m(calculus, tensor);
  auto set = [&](const char* name, const char* image) { m.set(name, parse_expression(image, tensor)); };
  set("x", "a*x + bt*th");
  set("th", "gm*x + d*th");
  set("dx", "a*dx - bt*dth");
  set("dth", "-gm*dx + d*dth");
  set("px", "(ainv - ainv*gm*dinv*bt*ainv)*px - ainv*gm*dinv*pth");
  set("pth", "(dinv - dinv*bt*ainv*gm*dinv)*pth + dinv*bt*ainv*px");
  return m;
}

Involution build_plane_dagger(const PresentationPtr& phase) {
  const AlphabetPtr& al = phase->alphabet();
  std::vector<std::optional<Expression>> images(al->size());
  auto set = [&](const char* name, const char* image) { images[al->id(name)] = parse_expression(image, al); };
  set("h1", "h1");
  set("h2", "-h2");
  set("x", "(1 + 2*h1*h2)*x + 2*h1*th");
  set("th", "(1 - 2*h1*h2)*th + 2*h2*x");
  set("px", "-(1 + 2*h1*h2)*px + 2*h2*pth");
  set("pth", "(1 - 2*h1*h2)*pth + 2*h1*px");
  return Involution(phase, std::move(images), false);
}

Involution build_oscillator_star(const PresentationPtr& osc) {
  const AlphabetPtr& al = osc->alphabet();
  std::vector<std::optional<Expression>> images(al->size());
  auto set = [&](const char* name, const char* image) { images[al->id(name)] = parse_expression(image, al); };
  set("h1", "h1");
  set("h2", "h2");
  set("A", "Ap");
  set("Ap", "A");
  set("B", "Bp");
  set("Bp", "B");
  return Involution(osc, std::move(images), true);
}

CompositeElements build_composites(const AlphabetPtr& calculus, const AlphabetPtr& forms, const AlphabetPtr& phase,
                                   const AlphabetPtr& osc) {
  auto on = [](const AlphabetPtr& al, const char* text, const Bindings* b = nullptr) {
    Expression e = parse_expression(text, al, b);
    if (!e.parity()) throw ConstructionFailure(std::string("composite '") + text + "' has mixed parity");
    return e;
  };
  Bindings ob = contraction_bindings(osc);
  return CompositeElements{
      on(calculus, "dx*px + dth*pth"),
      on(calculus, "x*px + th*pth"),
      on(calculus, "x*pth"),
      on(forms, "dx*xinv"),
      on(forms, "dth*xinv - dx*xinv*th*xinv"),
      on(phase, "(1 + h1*h2)*x + h1*th"),
      on(phase, "(1 - h1*h2)*th + h2*x"),
      on(phase, "i*((1 + h1*h2)*px - h2*pth)"),
      on(phase, "(1 - h1*h2)*pth + h1*px"),
      on(osc, "Ap - a*Bp", &ob),
      on(osc, "(1 - ab)*Bp - b*Ap", &ob),
      on(osc, "(1 + ab)*A + b*B", &ob),
      on(osc, "B - a*A", &ob),
  };
}

}  // namespace

AlphabetPtr plane_alphabet() {
  static const AlphabetPtr al = std::make_shared<const Alphabet>(concat(parameter_decls(), plane_decls()));
  return al;
}

AlphabetPtr primed_alphabet() {
  static const AlphabetPtr al = std::make_shared<const Alphabet>(concat(parameter_decls(), primed_decls()));
  return al;
}

struct Catalog::State {
  std::recursive_mutex mu;
  bool empty = false;
  PresentationPtr primed, primed_printed, diff_block, h_pq, h_block_pq, h, supergroup, tensor, oscillator,
      one_forms, phase;
  std::optional<ContractionMap> contraction;
  std::optional<ReadingSelection> selection;
  std::optional<Involution> dagger, star;
  std::optional<Morphism> coaction;
  std::optional<CompositeElements> composites;

  std::unique_lock<std::recursive_mutex> guard() {
    std::unique_lock<std::recursive_mutex> lock(mu);
    if (empty) throw ConstructionFailure("the catalog is empty");
    return lock;
  }
};

Catalog Catalog::standard() { return Catalog(std::make_shared<State>()); }

Catalog Catalog::empty() {
  auto s = std::make_shared<State>();
  s->empty = true;
  return Catalog(std::move(s));
}

PresentationPtr Catalog::primed() const {
  auto lock = state_->guard();
  if (!state_->primed) state_->primed = build_primed(kTransposedReading, "primed");
  return state_->primed;
}

PresentationPtr Catalog::primed_printed() const {
  auto lock = state_->guard();
  if (!state_->primed_printed) state_->primed_printed = build_primed(kPrintedReading, "primed_printed");
  return state_->primed_printed;
}

PresentationPtr Catalog::primed_diff_block() const {
  auto lock = state_->guard();
  if (!state_->diff_block) {
    PresentationBuilder b("primed_diff_block", sub_alphabet(primed_decls(), {"dth'", "dx'", "px'", "pth'"}));
    add_rules(b, kPrimedDiffBlock);
    b.add_parameter_swaps();
    state_->diff_block = b.build(Validation::Full);
  }
  return state_->diff_block;
}

const ContractionMap& Catalog::contraction() const {
  auto lock = state_->guard();
  if (!state_->contraction) state_->contraction.emplace(build_contraction());
  return *state_->contraction;
}

const ReadingSelection& Catalog::reading_selection() const {
  auto lock = state_->guard();
  if (state_->selection) return *state_->selection;
  const ContractionMap& c = contraction();
  ReadingSelection sel;
  std::optional<std::size_t> chosen;
  std::vector<PresentationPtr> derived;
  const std::pair<const char*, PresentationPtr> candidates[] = {
      {"printed", primed_printed()},
      {"transposed", primed()},
  };
  for (const auto& [name, source] : candidates) {
    ReadingSelection::Candidate cand;
    cand.name = name;
    const AlphabetPtr& sal = source->alphabet();
    cand.rule = "th'*dx' -> " + to_string(source->rule_for(sal->id("th'"), sal->id("dx'"))->rhs);
    PresentationPtr u;
    try {
      u = derive_transported(source, c.forward, c.inverse, stripped_rules(*source, plane_alphabet()),
                             "h_calculus_pq");
      PresentationPtr at1 = specialize(*u, 1, 1, "h_calculus");
      std::vector<std::string> failed;
      for (const auto& r : h_calculus_relations()) {
        if (r.id.rfind("Eq38", 0) != 0) continue;
        const AlphabetPtr& al = at1->alphabet();
        if (!check_relation(at1, parse_expression(r.lhs, al), parse_expression(r.rhs, al)).holds)
          failed.push_back(r.id);
      }
      if (failed.empty()) {
        cand.accepted = true;
        cand.notes = "transported rules are regular at p = q = 1 and reproduce the four coordinate-differential "
                     "relations";
      } else {
        cand.notes = "transported rules miss";
        for (const auto& f : failed) cand.notes += " " + f;
      }
    } catch (const Error& e) {
      cand.notes = std::string("transport failed: ") + e.what();
      u.reset();
    }
    if (cand.accepted && !chosen) chosen = sel.candidates.size();
    sel.candidates.push_back(std::move(cand));
    derived.push_back(u);
  }
  if (!chosen) {
    std::string why;
    for (const auto& c : sel.candidates) why += "; " + c.name + ": " + c.notes;
    throw ConstructionFailure("no reading of the coordinate-differential ansatz reproduces the calculus" + why);
  }
  sel.selected = *chosen;
  state_->h_pq = derived[*chosen];
  state_->selection = std::move(sel);
  return *state_->selection;
}

PresentationPtr Catalog::h_calculus_pq() const {
  auto lock = state_->guard();
  if (!state_->h_pq) reading_selection();
  return state_->h_pq;
}

PresentationPtr Catalog::h_diff_block_pq() const {
  auto lock = state_->guard();
  if (state_->h_block_pq) return state_->h_block_pq;
  const ContractionMap& c = contraction();
  PresentationPtr block = primed_diff_block();
  AlphabetPtr plain = sub_alphabet(plane_decls(), {"dth", "dx", "px", "pth"});
  Morphism fwd(plain, block->alphabet());
  c.diffs.install(fwd, {"dx", "dth"}, {"dx'", "dth'"});
  c.derivs.inverse().install(fwd, {"px", "pth"}, {"px'", "pth'"});
  Morphism inv(block->alphabet(), plain);
  c.diffs.inverse().install(inv, {"dx'", "dth'"}, {"dx", "dth"});
  c.derivs.install(inv, {"px'", "pth'"}, {"px", "pth"});
  state_->h_block_pq = derive_transported(block, fwd, inv, stripped_rules(*block, plain), "h_diff_block_pq");
  return state_->h_block_pq;
}

PresentationPtr Catalog::h_calculus() const {
  auto lock = state_->guard();
  if (!state_->h) state_->h = specialize(*h_calculus_pq(), 1, 1, "h_calculus");
  return state_->h;
}

PresentationPtr Catalog::supergroup() const {
  auto lock = state_->guard();
  if (!state_->supergroup) state_->supergroup = build_supergroup();
  return state_->supergroup;
}

PresentationPtr Catalog::covariance_tensor() const {
  auto lock = state_->guard();
  if (!state_->tensor) state_->tensor = build_covariance_tensor(*supergroup(), *h_calculus());
  return state_->tensor;
}

PresentationPtr Catalog::oscillator() const {
  auto lock = state_->guard();
  if (!state_->oscillator) state_->oscillator = build_oscillator();
  return state_->oscillator;
}

PresentationPtr Catalog::one_forms() const {
  auto lock = state_->guard();
  if (!state_->one_forms) state_->one_forms = localize(h_calculus(), "x", "xinv", {"x⁻¹"}, "one_forms");
  return state_->one_forms;
}

PresentationPtr Catalog::phase_space() const {
  auto lock = state_->guard();
  if (!state_->phase) state_->phase = restrict_to(*h_calculus(), {"th", "x", "px", "pth"}, "phase_space");
  return state_->phase;
}

const Involution& Catalog::plane_dagger() const {
  auto lock = state_->guard();
  if (!state_->dagger) state_->dagger.emplace(build_plane_dagger(phase_space()));
  return *state_->dagger;
}

const Involution& Catalog::oscillator_star() const {
  auto lock = state_->guard();
  if (!state_->star) state_->star.emplace(build_oscillator_star(oscillator()));
  return *state_->star;
}

const Morphism& Catalog::coaction() const {
  auto lock = state_->guard();
  if (!state_->coaction) state_->coaction.emplace(build_coaction(h_calculus()->alphabet(), covariance_tensor()->alphabet()));
  return *state_->coaction;
}

const CompositeElements& Catalog::composites() const {
  auto lock = state_->guard();
  if (!state_->composites)
    state_->composites.emplace(build_composites(h_calculus()->alphabet(), one_forms()->alphabet(),
                                                phase_space()->alphabet(), oscillator()->alphabet()));
  return *state_->composites;
}

void Catalog::set_h_calculus(PresentationPtr pres) {
  auto lock = state_->guard();
  state_->h = std::move(pres);
  state_->tensor.reset();
  state_->one_forms.reset();
  state_->phase.reset();
  state_->dagger.reset();
  state_->coaction.reset();
  state_->composites.reset();
}

const std::vector<std::string>& Catalog::presentation_names() {
  static const std::vector<std::string> names{
      "primed",          "primed_printed", "primed_diff_block", "h_calculus_pq",     "h_diff_block_pq",
      "h_calculus",      "supergroup",     "covariance_tensor", "oscillator",        "one_forms",
      "phase_space",
  };
  return names;
}

PresentationPtr Catalog::presentation(const std::string& name) const {
  if (name == "primed") return primed();
  if (name == "primed_printed") return primed_printed();
  if (name == "primed_diff_block") return primed_diff_block();
  if (name == "h_calculus_pq") return h_calculus_pq();
  if (name == "h_diff_block_pq") return h_diff_block_pq();
  if (name == "h_calculus") return h_calculus();
  if (name == "supergroup") return supergroup();
  if (name == "covariance_tensor") return covariance_tensor();
  if (name == "oscillator") return oscillator();
  if (name == "one_forms") return one_forms();
  if (name == "phase_space") return phase_space();
  throw Error("unknown presentation '" + name + "'");
}

}  // namespace hsp
