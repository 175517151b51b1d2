// Acceptance gate: one line per criterion, exit status 1 if any line fails.
//
// A check counts toward a criterion when it is Pass, or when it is one of the
// listed Discrepancy ids: the displayed relation is misprinted and the
// corrected relation holds with zero residual. Any other Discrepancy, and any
// Fail, fails the criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hsp/algebra/confluence.hpp"
#include "hsp/errors.hpp"
#include "hsp/presentations/relations.hpp"
#include "hsp/text/parser.hpp"
#include "hsp/verify/suites.hpp"
#include "support.hpp"

namespace hsp {
namespace {

struct Verdict {
  bool ok = true;
  std::string details;
};

class Gate {
 public:
  void criterion(int n, const std::string& what, const std::function<Verdict()>& body) {
    Verdict v;
    try {
      v = body();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    all_ok_ = all_ok_ && v.ok;
    std::cout << "criterion " << n << ": " << (v.ok ? "PASS" : "FAIL") << ": " << what << " (" << v.details << ")"
              << std::endl;
  }
  bool ok() const { return all_ok_; }

 private:
  bool all_ok_ = true;
};

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
  return out.empty() ? "none" : out;
}

const CheckResult* find(const SuiteReport& r, const std::string& id) {
  for (const auto& c : r.results)
    if (c.id == id) return &c;
  return nullptr;
}

// Every id in `required` must be Pass, or a Discrepancy listed in `misprints`
// whose corrected form holds. The suite itself must contain no Fail and no
// Discrepancy outside `allowed`.
Verdict require(const SuiteReport& r, const std::vector<std::string>& required, const std::set<std::string>& misprints,
                const std::set<std::string>& allowed) {
  Verdict v;
  std::vector<std::string> bad, printed;
  std::size_t exact = 0;
  for (const auto& id : required) {
    const CheckResult* c = find(r, id);
    if (!c) {
      bad.push_back(id + " missing");
      continue;
    }
    if (c->status == Status::Pass) {
      ++exact;
      continue;
    }
    const bool corrected = c->notes.find("displayed form fails;") == 0 && c->notes.find("holds") != std::string::npos;
    if (c->status == Status::Discrepancy && misprints.count(id) && corrected)
      printed.push_back(id);
    else
      bad.push_back(id + " " + std::string(to_string(c->status)));
  }
  for (const auto& c : r.results) {
    if (c.status == Status::Fail) bad.push_back(c.id + " fail");
    if (c.status == Status::Discrepancy && !misprints.count(c.id) && !allowed.count(c.id))
      bad.push_back(c.id + " unexpected discrepancy");
  }
  v.ok = bad.empty();
  std::ostringstream d;
  d << exact << " of " << required.size() << " checks exact as displayed";
  if (!printed.empty()) d << "; misprinted, corrected form exact: " << join(printed);
  if (!bad.empty()) d << "; problems: " << join(bad);
  v.details = d.str();
  return v;
}

std::vector<std::string> ids(const std::string& prefix, const std::string& letters) {
  std::vector<std::string> out;
  for (char c : letters) out.push_back(prefix + c);
  return out;
}

std::vector<std::string> concat(std::initializer_list<std::vector<std::string>> parts) {
  std::vector<std::string> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Sampled laws over one presentation; returns the first violation or "".
std::string laws(const PresentationPtr& pres) {
  const Alphabet& al = *pres->alphabet();
  fixtures::Rng rng(2024);
  Reducer r(pres);
  const std::size_t f = fixtures::kFuel;
  for (int k = 0; k < 30; ++k) {
    Expression e = fixtures::random_expression(rng, pres->alphabet(), 5, 2);
    Expression nf = r.normal_form(e, f);
    if (!(r.normal_form(nf, f) == nf)) return "idempotence";
    for (const auto& [w, c] : nf.terms()) {
      if (!r.is_normal(w)) return "reducible term in normal form";
      std::size_t lead = 0;
      while (lead < w.size() && al.is_parameter(w[lead])) ++lead;
      if (lead != parameter_count(al, w) || lead > 2) return "parameter monomial beyond h1*h2";
    }
  }
  for (int k = 0; k < 10; ++k) {
    Expression a = fixtures::random_expression(rng, pres->alphabet(), 2, 2, false);
    Expression b = fixtures::random_expression(rng, pres->alphabet(), 2, 2, false);
    Expression c = fixtures::random_expression(rng, pres->alphabet(), 2, 2, false);
    if (!(r.multiply_reduced(r.multiply_reduced(a, b, f), c, f) == r.multiply_reduced(a, r.multiply_reduced(b, c, f), f)))
      return "associativity";
  }
  for (int k = 0; k < 30; ++k) {
    Word w = fixtures::random_word(rng, al, 5);
    Expression nf = r.normal_form(w, f);
    if (!nf.parity() || (!nf.is_zero() && *nf.parity() != word_parity(al, w))) return "parity";
    Word padded = w;
    padded.insert(padded.begin(), {al.id("h1"), al.id("h2")});
    padded.push_back(al.id("h1"));
    if (!r.normal_form(padded, f).is_zero()) return "Grassmann truncation";
  }
  return "";
}

std::string strip_elapsed(const std::string& text) {
  return std::regex_replace(text, std::regex("\"elapsed_ms\":[0-9.e+-]+"), "\"elapsed_ms\":0");
}

int run() {
  const auto start = std::chrono::steady_clock::now();
  const Catalog& catalog = fixtures::shared_catalog();
  std::map<std::string, SuiteReport> reports;
  for (auto& r : run_all(catalog)) reports.emplace(r.suite, std::move(r));
  Gate gate;

  gate.criterion(1, "contraction relations exact over Q(i)(p,q), coefficients regular at p=q=1", [&] {
    const SuiteReport& r = reports.at("contraction");
    auto required = concat({ids("Eq3", "ab"), ids("Eq12", "ab"), ids("Eq20", "abcd"), ids("Eq21", "ab"),
                            ids("Eq24", "abcd"), {"regular-h_calculus_pq", "regular-h_diff_block_pq"}});
    return require(r, required, {"Eq20a", "Eq20d", "Eq24d"}, {"Eq24-primed", "Eq39d", "Eq13"});
  });

  gate.criterion(2, "left round trip is the identity, right residuals match the appendix displays", [&] {
    const SuiteReport& r = reports.at("appendix");
    Verdict v = require(r, {"left-differential", "A4-right-differentials", "A7-right-derivatives"}, {}, {});
    std::size_t trips = 0;
    for (const auto& c : r.results)
      if (c.id.rfind("roundtrip-", 0) == 0 && c.status == Status::Pass) ++trips;
    v.ok = v.ok && trips == 12;
    v.details += "; " + std::to_string(trips) + "/12 generators round trip";
    return v;
  });

  gate.criterion(3, "coaction preserves the h-calculus relations, reading recorded", [&] {
    const SuiteReport& r = reports.at("covariance");
    auto required = concat({ids("Eq35", "abcd"), ids("Eq36", "abcd"), ids("Eq37", "ab"), ids("Eq38", "abcd"),
                            ids("Eq39", "abcd"), {"Eq13-reading"}});
    Verdict v = require(r, required, {"Eq39d"}, {});
    const CheckResult* reading = find(r, "Eq13-reading");
    const bool named = reading && reading->notes.find("transposed") != std::string::npos;
    v.ok = v.ok && named;
    v.details += named ? "; reading: transposed" : "; reading not recorded";
    return v;
  });

  gate.criterion(4, "D*D = 0 and the graded Leibniz checks", [&] {
    return require(reports.at("differential"), {"Eq7", "Eq23a-dx", "Eq23a-dth", "unit", "leibniz-x", "leibniz-th"},
                   {}, {});
  });

  gate.criterion(5, "one-form relations in the x^-1 localization", [&] {
    auto required = concat({ids("Eq26", "abcd"), ids("Eq27", "ab"), ids("Eq29", "ab"), ids("Eq30", "abcd")});
    return require(reports.at("forms"), required, {"Eq26d", "Eq30d"}, {});
  });

  gate.criterion(6, "hermiticity, dagger invariance, phase-space and Clifford relations", [&] {
    auto required = concat({{"hermitian-xh", "hermitian-thh", "hermitian-pxh", "hermitian-pthh"},
                            {"dagger-Eq35a", "dagger-Eq35b"},
                            ids("dagger-Eq36", "abcd"),
                            ids("dagger-Eq37", "ab"),
                            ids("Eq48", "abcdefgh"),
                            ids("Eq50", "abcdefgh")});
    return require(reports.at("phase_space"), required, {"Eq48e", "Eq50a", "Eq50e"}, {});
  });

  gate.criterion(7, "oscillator composites satisfy the plane and derivative relations over symbolic p, q", [&] {
    const SuiteReport& r = reports.at("oscillator");
    auto required = concat({ids("Eq3", "ab"), ids("Eq20", "abcd"), ids("Eq21", "ab"), {"composites-forward"},
                            {"h0-limit"}});
    Verdict v = require(r, required, {"Eq20a", "Eq20d"}, {});
    // Zero residual means no h1, h2 dependence survives: check it directly.
    const CompositeElements& k = catalog.composites();
    PresentationPtr osc = catalog.oscillator();
    Bindings b{{"x", k.osc_x}, {"th", k.osc_th}, {"px", k.osc_px}, {"pth", k.osc_pth}};
    std::size_t terms = 0, h_terms = 0, checked = 0;
    for (const RelationTable* table : {&superplane_relations(), &derivative_coordinate_relations()})
      for (const auto& rel : *table) {
        const std::string& rhs = rel.corrected.empty() ? rel.rhs : rel.corrected;
        Expression res = normal_form(osc,
                                     parse_expression(rel.lhs, osc->alphabet(), &b) -
                                         parse_expression(rhs, osc->alphabet(), &b),
                                     fixtures::kFuel);
        ++checked;
        terms += res.size();
        for (const auto& [w, c] : res.terms()) h_terms += parameter_count(*osc->alphabet(), w) > 0;
      }
    v.ok = v.ok && terms == 0 && checked >= 6;
    v.details += "; " + std::to_string(checked) + " relations recomputed, residual terms " + std::to_string(terms) +
                 ", of them h-dependent " + std::to_string(h_terms);
    return v;
  });

  gate.criterion(8, "reduction laws, confluence at max_len 4, mutation detected", [&] {
    Verdict v;
    std::vector<std::string> bad;
    std::size_t pairs = 0;
    const auto names = fixtures::confluent_presentation_names();
    for (const auto& name : names) {
      PresentationPtr pres = catalog.presentation(name);
      if (std::string why = laws(pres); !why.empty()) bad.push_back(name + ": " + why);
      ConfluenceReport c = check_local_confluence(pres, 4, fixtures::kFuel);
      pairs += c.pairs_checked;
      if (!c.confluent()) bad.push_back(name + ": " + std::to_string(c.failures.size()) + " non-joinable");
    }
    // The rejected printed reading must stay visibly inconsistent.
    const std::size_t rejected = check_local_confluence(catalog.primed_printed(), 4).failures.size();
    if (rejected == 0) bad.push_back("primed_printed unexpectedly confluent");
    // One flipped sign: the confluence check and the suites must both notice.
    Catalog mutated = Catalog::standard();
    PresentationPtr h = mutated.h_calculus();
    const Word lhs{h->alphabet()->id("th"), h->alphabet()->id("th")};
    PresentationPtr flipped = fixtures::with_rule(h, lhs, -h->rule_for(lhs)->rhs);
    const bool cp_detects = !check_local_confluence(flipped, 4).confluent();
    mutated.set_h_calculus(flipped);
    const bool suite_detects = run_suite("covariance", mutated).failed();
    if (!cp_detects) bad.push_back("mutation missed by critical pairs");
    if (!suite_detects) bad.push_back("mutation missed by covariance suite");
    v.ok = bad.empty();
    v.details = std::to_string(names.size()) + " presentations, " + std::to_string(pairs) +
                " critical pairs joinable; rejected printed reading has " + std::to_string(rejected) +
                " non-joinable; flipped th*th sign detected";
    if (!bad.empty()) v.details += "; problems: " + join(bad);
    return v;
  });

  gate.criterion(9, "two verify-all runs give identical structured reports", [&] {
    std::string first, second;
    for (const auto& r : run_all(Catalog::standard())) first += strip_elapsed(render_structured(r));
    for (const auto& r : run_all(Catalog::standard())) second += strip_elapsed(render_structured(r));
    return Verdict{first == second && !first.empty(), std::to_string(first.size()) + " bytes compared"};
  });

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("acceptance: %s in %.1f s\n", gate.ok() ? "all criteria pass" : "some criteria fail", seconds);
  return gate.ok() ? 0 : 1;
}

}  // namespace
}  // namespace hsp

int main() { return hsp::run(); }
