#include "hsp/verify/suites.hpp"

#include <functional>
#include <map>

#include "hsp/errors.hpp"
#include "hsp/presentations/derivation.hpp"
#include "hsp/presentations/relations.hpp"
#include "hsp/text/parser.hpp"

namespace hsp {

namespace {

using Reduce = std::function<Expression(const Expression&)>;

struct Context {
  AlphabetPtr alphabet;
  const Bindings* bindings = nullptr;
  /// Maps lhs - rhs to the residual that decides the check.
  Reduce reduce;
  /// Re-expresses a failing lhs - rhs for the report; defaults to `reduce`.
  Reduce display;
};

CheckResult from_residual(std::string id, Expression residual, std::string notes = {}) {
  CheckResult r{std::move(id), Status::Pass, std::nullopt, std::move(notes)};
  if (!residual.is_zero()) {
    r.status = Status::Fail;
    r.residual = std::move(residual);
  }
  return r;
}

CheckResult fail(std::string id, const std::string& notes) { return {std::move(id), Status::Fail, std::nullopt, notes}; }

/// Runs `body`, turning kernel errors other than fuel exhaustion into a Fail.
CheckResult guarded(const std::string& id, const std::function<CheckResult()>& body) {
  try {
    return body();
  } catch (const FuelExhausted&) {
    throw;
  } catch (const PoleAtPoint& e) {
    return fail(id, e.what());
  } catch (const Error& e) {
    return fail(id, e.what());
  }
}

CheckResult relation_check(const PrintedRelation& rel, const Context& ctx, const std::string& id) {
  return guarded(id, [&] {
    const Expression lhs = parse_expression(rel.lhs, ctx.alphabet, ctx.bindings);
    const Expression diff = lhs - parse_expression(rel.rhs, ctx.alphabet, ctx.bindings);
    Expression res = ctx.reduce(diff);
    if (res.is_zero()) return CheckResult{id, Status::Pass, std::nullopt, rel.note};
    if (!rel.corrected.empty()) {
      Expression fixed = ctx.reduce(lhs - parse_expression(rel.corrected, ctx.alphabet, ctx.bindings));
      if (fixed.is_zero()) {
        Expression shown = ctx.display ? ctx.display(diff) : res;
        if (shown.is_zero()) shown = res;
        std::string notes = "displayed form fails; " + rel.lhs + " = " + rel.corrected + " holds";
        if (!rel.note.empty()) notes += " (" + rel.note + ")";
        return CheckResult{id, Status::Discrepancy, std::move(shown), notes};
      }
      return CheckResult{id, Status::Fail, std::move(res), "corrected form fails too"};
    }
    return CheckResult{id, Status::Fail, std::move(res), rel.note};
  });
}

void check_table(SuiteReport& rep, const RelationTable& table, const Context& ctx, const std::string& prefix = {},
                 const std::function<bool(const PrintedRelation&)>& keep = {}) {
  for (const auto& rel : table)
    if (!keep || keep(rel)) rep.results.push_back(relation_check(rel, ctx, prefix + rel.id));
}

bool starts_with(const std::string& s, std::string_view p) { return s.rfind(p, 0) == 0; }

Bindings contraction_bindings(const AlphabetPtr& al) {
  Bindings b;
  Expression a = parse_expression("h1/(p - 1)", al);
  Expression bb = parse_expression("h2/(q - 1)", al);
  b.emplace("a", a);
  b.emplace("b", bb);
  b.emplace("ab", multiply(a, bb));
  return b;
}

/// Generators renamed into `target`; throws UnknownGenerator only for a
/// generator that actually occurs in `e` and is missing there.
Expression transfer(const Expression& e, const AlphabetPtr& target,
                    const std::function<std::string(const std::string&)>& name = {}) {
  const Alphabet& src = *e.alphabet();
  Expression out(target);
  for (const auto& [w, c] : e.terms()) {
    Word t;
    for (GenId g : w) t.push_back(target->id(name ? name(src[g].name) : src[g].name));
    out.add_term(std::move(t), c);
  }
  return out;
}

/// First entry-wise difference, in the coefficient frame; zero when equal.
Expression matrix_difference(const SuperMatrix& a, const SuperMatrix& b) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Expression d = a(i, j) - b(i, j);
      if (!d.is_zero()) return d;
    }
  return Expression(coefficient_frame()->alphabet());
}

SuiteReport run_guarded(const std::string& name, const std::function<void(SuiteReport&)>& body) {
  SuiteReport rep;
  rep.suite = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(rep);
  } catch (const FuelExhausted&) {
    throw;
  } catch (const Error& e) {
    rep.results.push_back(fail("construction", e.what()));
  }
  rep.elapsed = std::chrono::steady_clock::now() - t0;
  return rep;
}

}  // namespace

SuiteReport run_contraction_suite(const Catalog& catalog, const SuiteOptions& options) {
  return run_guarded("contraction", [&](SuiteReport& rep) {
    const std::size_t fuel = options.fuel;
    const ContractionMap& c = catalog.contraction();
    PresentationPtr primed = catalog.primed();
    PresentationPtr block = catalog.primed_diff_block();
    PresentationPtr h_pq = catalog.h_calculus_pq();
    PresentationPtr block_pq = catalog.h_diff_block_pq();
    PresentationPtr h = catalog.h_calculus();
    for (const auto& p : {primed, block, h_pq, block_pq, h}) rep.fingerprints.push_back(fingerprint(*p));

    Reducer rp(primed), rb(block), rh_pq(h_pq), rblock_pq(block_pq), rh(h);
    Reducer frame(parameter_frame(primed->alphabet()));
    const Morphism& sigma = c.forward;

    Context generic{sigma.source(), nullptr, [&](const Expression& e) { return sigma.apply(e, rp, fuel); },
                    [&](const Expression& e) { return rh_pq.normal_form(e, fuel); }};
    check_table(rep, superplane_relations(), generic);
    check_table(rep, dual_plane_relations(), generic);
    check_table(rep, derivative_coordinate_relations(), generic);
    check_table(rep, derivative_relations(), generic);

    // The derivative-differential relations live in the block without coordinates.
    Context diff{block_pq->alphabet(), nullptr,
                 [&](const Expression& e) {
                   Expression image = sigma.apply(transfer(e, sigma.source()), frame, fuel);
                   return rb.normal_form(transfer(image, block->alphabet()), fuel);
                 },
                 [&](const Expression& e) { return rblock_pq.normal_form(e, fuel); }};
    check_table(rep, derivative_differential_relations(), diff);

    rep.results.push_back(guarded("Eq24-primed", [&] {
      for (const auto& r : block->rules()) {
        if (block->alphabet()->is_parameter(r.lhs.front())) continue;
        Expression lhs = transfer(Expression::term(block->alphabet(), r.lhs), primed->alphabet());
        Expression res = rp.normal_form(lhs - transfer(r.rhs, primed->alphabet()), fuel);
        if (!res.is_zero())
          return CheckResult{"Eq24-primed", Status::Discrepancy, res,
                             "the generic derivative-differential relations hold in the block of differentials and "
                             "derivatives alone; with the coordinates present they contradict the coordinate "
                             "relations, first at " +
                                 to_string(*block->alphabet(), r.lhs)};
      }
      return CheckResult{"Eq24-primed", Status::Pass, std::nullopt, ""};
    }));

    for (const auto& p : {h_pq, block_pq}) {
      const std::string id = "regular-" + p->name();
      rep.results.push_back(guarded(id, [&] {
        std::size_t n = 0;
        for (const auto& r : p->rules())
          for (const auto& [w, s] : r.rhs.terms()) {
            ++n;
            if (!s.is_regular_at(1, 1))
              return CheckResult{id, Status::Fail, r.rhs,
                                 "pole at p = q = 1 in the rule for " + to_string(*p->alphabet(), r.lhs)};
          }
        return CheckResult{id, Status::Pass, std::nullopt,
                           std::to_string(n) + " coefficients in " + std::to_string(p->rules().size()) +
                               " rules, all regular at p = q = 1"};
      }));
    }

    rep.results.push_back(guarded("specialization", [&] {
      PresentationPtr expected = specialize(*h_pq, 1, 1, "expected");
      const AlphabetPtr& al = expected->alphabet();
      if (expected->rules().size() != h->rules().size())
        return fail("specialization", "rule count differs from the p = q = 1 value of the derived calculus");
      for (const auto& r : expected->rules()) {
        Word lhs;
        for (GenId g : r.lhs) lhs.push_back(h->alphabet()->id((*al)[g].name));
        const RewriteRule* actual = h->rule_for(lhs);
        if (actual == nullptr)
          return fail("specialization", "no rule for " + to_string(*al, r.lhs));
        Expression d = transfer(actual->rhs, al) - r.rhs;
        if (!d.is_zero())
          return CheckResult{"specialization", Status::Fail, d,
                             "rule for " + to_string(*al, r.lhs) + " differs from the p = q = 1 value"};
      }
      return CheckResult{"specialization", Status::Pass, std::nullopt,
                         "every rule equals the p = q = 1 value of the derived calculus"};
    }));

    Context at_one{h->alphabet(), nullptr, [&](const Expression& e) { return rh.normal_form(e, fuel); }, {}};
    check_table(rep, h_calculus_relations(), at_one);

    rep.results.push_back(guarded("Eq13", [&] {
      const ReadingSelection& sel = catalog.reading_selection();
      std::string notes;
      for (const auto& cand : sel.candidates)
        notes += (notes.empty() ? "" : "; ") + cand.name + " [" + cand.rule + "]: " +
                 (cand.accepted ? "accepted, " : "rejected, ") + cand.notes;
      const std::string& chosen = sel.candidates[sel.selected].name;
      if (chosen == "printed") return CheckResult{"Eq13", Status::Pass, std::nullopt, notes};
      PresentationPtr printed = catalog.primed_printed();
      const AlphabetPtr& al = primed->alphabet();
      const Word lhs{al->id("th'"), al->id("dx'")};
      Expression d = printed->rule_for(lhs)->rhs - primed->rule_for(lhs)->rhs;
      return CheckResult{"Eq13", Status::Discrepancy, d, "selected " + chosen + "; " + notes};
    }));

    rep.results.push_back(guarded("g-inverse", [&] {
      return from_residual("g-inverse", matrix_difference(c.coords.inverse(), c.g_matrix),
                           "coordinate substitution " + c.coords.to_string() + " inverts g = " +
                               c.g_matrix.to_string());
    }));
    rep.results.push_back(guarded("derivative-matrix", [&] {
      return from_residual("derivative-matrix", matrix_difference(c.g_matrix.supertranspose().inverse(), c.derivs),
                           "inverse supertranspose of g is " + c.derivs.to_string());
    }));
  });
}

SuiteReport run_differential_structure_suite(const Catalog& catalog, const SuiteOptions& options) {
  return run_guarded("differential", [&](SuiteReport& rep) {
    PresentationPtr h = catalog.h_calculus();
    rep.fingerprints.push_back(fingerprint(*h));
    Reducer rh(h);
    Bindings b{{"D", catalog.composites().D}};
    Context ctx{h->alphabet(), &b, [&](const Expression& e) { return rh.normal_form(e, options.fuel); }, {}};
    static const RelationTable checks{
        {"Eq7", "D*D", "0", "", "nilpotency of d = dx*px + dth*pth"},
        {"Eq23a-dx", "D*dx", "-dx*D", "", ""},
        {"Eq23a-dth", "D*dth", "dth*D", "", ""},
        {"unit", "D*1", "D", "", ""},
        {"leibniz-x", "D*x", "dx + x*D", "", ""},
        {"leibniz-th", "D*th", "dth - th*D", "", ""},
    };
    check_table(rep, checks, ctx);
  });
}

SuiteReport run_covariance_suite(const Catalog& catalog, const SuiteOptions& options) {
  return run_guarded("covariance", [&](SuiteReport& rep) {
    PresentationPtr h = catalog.h_calculus();
    PresentationPtr tensor = catalog.covariance_tensor();
    rep.fingerprints.push_back(fingerprint(*catalog.supergroup()));
    rep.fingerprints.push_back(fingerprint(*h));
    rep.fingerprints.push_back(fingerprint(*tensor));
    Reducer rt(tensor);
    const Morphism& delta = catalog.coaction();
    Context ctx{h->alphabet(), nullptr, [&](const Expression& e) { return delta.apply(e, rt, options.fuel); }, {}};
    check_table(rep, h_calculus_relations(), ctx);

    rep.results.push_back(guarded("identity-coaction", [&] {
      Morphism id(h->alphabet(), tensor->alphabet());
      const Alphabet& al = *h->alphabet();
      for (GenId g = static_cast<GenId>(al.num_parameters()); g < al.size(); ++g)
        id.set(g, Expression::generator(tensor->alphabet(), tensor->alphabet()->id(al[g].name)));
      Reducer rh(h);
      for (const auto& rel : h_calculus_relations()) {
        const std::string& rhs = rel.corrected.empty() ? rel.rhs : rel.corrected;
        Expression e = parse_expression(rel.lhs, h->alphabet()) - parse_expression(rhs, h->alphabet());
        if (!rh.normal_form(e, options.fuel).is_zero()) continue;
        Expression res = id.apply(e, rt, options.fuel);
        if (!res.is_zero()) return CheckResult{"identity-coaction", Status::Fail, res, rel.id};
      }
      return CheckResult{"identity-coaction", Status::Pass, std::nullopt,
                         "a = d = 1, beta = gamma = 0 leaves every relation in place"};
    }));

    rep.results.push_back(guarded("Eq13-reading", [&] {
      const ReadingSelection& sel = catalog.reading_selection();
      const auto& cand = sel.candidates[sel.selected];
      return CheckResult{"Eq13-reading", Status::Pass, std::nullopt,
                         "calculus built from the " + cand.name + " reading " + cand.rule};
    }));
  });
}

SuiteReport run_forms_suite(const Catalog& catalog, const SuiteOptions& options) {
  return run_guarded("forms", [&](SuiteReport& rep) {
    PresentationPtr forms = catalog.one_forms();
    rep.fingerprints.push_back(fingerprint(*forms));
    Reducer rf(forms);
    const CompositeElements& k = catalog.composites();
    const AlphabetPtr& al = forms->alphabet();
    Bindings b{{"w", k.w}, {"u", k.u}, {"T", embed(k.T, al)}, {"nabla", embed(k.nabla, al)}};
    Context ctx{al, &b, [&](const Expression& e) { return rf.normal_form(e, options.fuel); }, {}};
    check_table(rep, one_form_relations(), ctx);
    check_table(rep, operator_relations(), ctx);
  });
}

SuiteReport run_phase_space_suite(const Catalog& catalog, const SuiteOptions& options) {
  return run_guarded("phase_space", [&](SuiteReport& rep) {
    PresentationPtr phase = catalog.phase_space();
    rep.fingerprints.push_back(fingerprint(*phase));
    Reducer rps(phase);
    const Involution& dagger = catalog.plane_dagger();
    const CompositeElements& k = catalog.composites();
    const AlphabetPtr& al = phase->alphabet();

    const std::pair<const char*, Expression> ops[] = {
        {"xh", k.x_hat}, {"thh", k.th_hat}, {"pxh", k.px_hat}, {"pthh", k.pth_hat}};
    for (const auto& [name, e] : ops) {
      const std::string id = std::string("hermitian-") + name;
      rep.results.push_back(guarded(id, [&] { return from_residual(id, dagger.apply(e, rps, options.fuel) - e); }));
    }

    Context inv{al, nullptr, [&](const Expression& e) { return dagger.apply(e, rps, options.fuel); }, {}};
    check_table(rep, h_calculus_relations(), inv, "dagger-", [](const PrintedRelation& r) {
      return starts_with(r.id, "Eq35a") || starts_with(r.id, "Eq35b") || starts_with(r.id, "Eq36") ||
             starts_with(r.id, "Eq37");
    });

    Bindings hats{{"xh", k.x_hat}, {"thh", k.th_hat}, {"pxh", k.px_hat}, {"pthh", k.pth_hat}};
    Context ps{al, &hats, [&](const Expression& e) { return rps.normal_form(e, options.fuel); }, {}};
    check_table(rep, phase_space_relations(), ps);

    Bindings cl{{"g1", k.gamma1()}, {"g2", k.gamma2()}, {"c1", k.c1()}, {"c2", k.c2()}};
    Context cc{al, &cl, ps.reduce, {}};
    check_table(rep, clifford_relations(), cc);
  });
}

SuiteReport run_oscillator_suite(const Catalog& catalog, const SuiteOptions& options) {
  return run_guarded("oscillator", [&](SuiteReport& rep) {
    PresentationPtr osc = catalog.oscillator();
    rep.fingerprints.push_back(fingerprint(*osc));
    Reducer ro(osc);
    const CompositeElements& k = catalog.composites();
    const AlphabetPtr& al = osc->alphabet();
    auto nf = [&](const Expression& e) { return ro.normal_form(e, options.fuel); };

    Bindings b{{"x", k.osc_x}, {"th", k.osc_th}, {"px", k.osc_px}, {"pth", k.osc_pth}};
    Context ctx{al, &b, nf, {}};
    check_table(rep, superplane_relations(), ctx);
    check_table(rep, derivative_coordinate_relations(), ctx);
    check_table(rep, derivative_relations(), ctx);

    const std::pair<std::string, std::string> to_osc[] = {
        {"x'", "Ap"}, {"th'", "Bp"}, {"px'", "A"}, {"pth'", "B"}};
    auto osc_name = [&](const std::string& n) {
      for (const auto& [from, to] : to_osc)
        if (n == from) return to;
      return n;
    };

    rep.results.push_back(guarded("composites-forward", [&] {
      const ContractionMap& c = catalog.contraction();
      Reducer frame(parameter_frame(c.forward.target()));
      const std::pair<const char*, Expression> comps[] = {
          {"x", k.osc_x}, {"th", k.osc_th}, {"px", k.osc_px}, {"pth", k.osc_pth}};
      for (const auto& [name, e] : comps) {
        Expression image = c.forward.apply(Expression::generator(c.forward.source(), c.forward.source()->id(name)),
                                           frame, options.fuel);
        Expression d = nf(transfer(image, al, osc_name) - e);
        if (!d.is_zero()) return CheckResult{"composites-forward", Status::Fail, d, name};
      }
      return CheckResult{"composites-forward", Status::Pass, std::nullopt,
                         "each composite is the contraction image with x' -> Ap, th' -> Bp, px' -> A, pth' -> B"};
    }));

    rep.results.push_back(guarded("h0-limit", [&] {
      auto drop_h = [&](const Expression& e) {
        Expression out(al);
        for (const auto& [w, c] : e.terms()) {
          bool param = false;
          for (GenId g : w) param = param || al->is_parameter(g);
          if (!param) out.add_term(w, c);
        }
        return out;
      };
      const std::pair<const char*, Expression> comps[] = {
          {"Ap", k.osc_x}, {"Bp", k.osc_th}, {"A", k.osc_px}, {"B", k.osc_pth}};
      for (const auto& [name, e] : comps) {
        Expression d = drop_h(e) - Expression::generator(al, al->id(name));
        if (!d.is_zero()) return CheckResult{"h0-limit", Status::Fail, d, name};
      }
      PresentationPtr primed = catalog.primed();
      const Alphabet& pal = *primed->alphabet();
      std::size_t n = 0;
      for (const auto& r : primed->rules()) {
        bool inside = true;
        for (GenId g : r.lhs) inside = inside && osc_name(pal[g].name) != pal[g].name;
        if (!inside) continue;
        ++n;
        Expression lhs = transfer(Expression::term(primed->alphabet(), r.lhs), al, osc_name);
        Expression d = nf(lhs - transfer(r.rhs, al, osc_name));
        if (!d.is_zero())
          return CheckResult{"h0-limit", Status::Fail, d, "primed rule for " + to_string(pal, r.lhs)};
      }
      return CheckResult{"h0-limit", Status::Pass, std::nullopt,
                         "at h1 = h2 = 0 the composites are Ap, Bp, A, B and the " + std::to_string(n) +
                             " primed coordinate-derivative rules hold"};
    }));

    const Involution& star = catalog.oscillator_star();
    Context sc{al, nullptr, [&](const Expression& e) { return star.apply(e, ro, options.fuel); }, {}};
    check_table(rep, oscillator_relations(), sc, "star-");
  });
}

SuiteReport run_appendix_suite(const Catalog& catalog, const SuiteOptions& options) {
  return run_guarded("appendix", [&](SuiteReport& rep) {
    const std::size_t fuel = options.fuel;
    const ContractionMap& c = catalog.contraction();
    const AlphabetPtr plain = c.forward.source();
    const AlphabetPtr primed = c.forward.target();
    Reducer plain_frame(parameter_frame(plain));
    Reducer primed_frame(parameter_frame(primed));

    auto round_trip = [&](const Morphism& there, const Morphism& back, Reducer& mid, Reducer& end) {
      const Alphabet& al = *there.source();
      for (GenId g = static_cast<GenId>(al.num_parameters()); g < al.size(); ++g) {
        const std::string id = "roundtrip-" + al[g].name;
        rep.results.push_back(guarded(id, [&] {
          Expression e = Expression::generator(there.source(), g);
          return from_residual(id, back.apply(there.apply(e, mid, fuel), end, fuel) - e);
        }));
      }
    };
    round_trip(c.forward, c.inverse, primed_frame, plain_frame);
    round_trip(c.inverse, c.forward, plain_frame, primed_frame);

    rep.results.push_back(guarded("left-differential", [&] {
      return from_residual("left-differential", matrix_difference(c.diffs, c.coords.left_differential()),
                           "differentials transform by the left differential of the coordinate substitution");
    }));

    // Right-acting differentials and derivatives: the chain-rule matrices
    // do not compose to the identity.
    auto negative = [&](const std::string& id, const SuperMatrix& m, const std::array<std::string, 2>& from,
                        const std::array<std::string, 2>& to, const AlphabetPtr& src, const AlphabetPtr& dst,
                        const char* rhs, const char* target, const char* expected, Reducer& frame) {
      rep.results.push_back(guarded(id, [&] {
        Morphism map(src, dst);
        m.install(map, from, to);
        Bindings sb = contraction_bindings(src);
        Bindings db = contraction_bindings(dst);
        Expression got = map.apply(parse_expression(rhs, src, &sb), frame, fuel) - parse_expression(target, dst);
        Expression want = parse_expression(expected, dst, &db);
        std::string notes = "RHS - " + std::string(target) + " = " + to_string(got) + ", expected " + to_string(want);
        if (got.is_zero()) return CheckResult{id, Status::Fail, std::nullopt, notes + "; the map closed up"};
        return from_residual(id, got - want, notes);
      }));
    };
    negative("A4-right-differentials", SuperMatrix::parse("1", "-a", "b", "1 + ab"), {"dx", "dth"}, {"dx'", "dth'"},
             plain, primed, "(1 + ab)*dx + a*dth", "dx'", "2*ab*dx'", primed_frame);
    negative("A7-right-derivatives", SuperMatrix::parse("1", "-b", "-a", "1 - ab"), {"px'", "pth'"}, {"px", "pth"},
             primed, plain, "a*px' + pth'", "pth", "-2*ab*pth", plain_frame);
  });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"contraction", "differential", "covariance", "forms",
                                              "phase_space", "oscillator",   "appendix"};
  return names;
}

SuiteReport run_suite(const std::string& name, const Catalog& catalog, const SuiteOptions& options) {
  using Runner = SuiteReport (*)(const Catalog&, const SuiteOptions&);
  static const std::map<std::string, Runner, std::less<>> runners{
      {"contraction", run_contraction_suite}, {"differential", run_differential_structure_suite},
      {"covariance", run_covariance_suite},   {"forms", run_forms_suite},
      {"phase_space", run_phase_space_suite}, {"oscillator", run_oscillator_suite},
      {"appendix", run_appendix_suite},
  };
  auto it = runners.find(name);
  if (it == runners.end()) throw Error("unknown suite '" + name + "'");
  return it->second(catalog, options);
}

std::vector<SuiteReport> run_all(const Catalog& catalog, const SuiteOptions& options) {
  std::vector<SuiteReport> out;
  for (const auto& n : suite_names()) out.push_back(run_suite(n, catalog, options));
  return out;
}

}  // namespace hsp
