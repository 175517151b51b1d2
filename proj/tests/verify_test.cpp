#include <gtest/gtest.h>

#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "hsp/errors.hpp"
#include "hsp/verify/suites.hpp"
#include "json.hpp"
#include "support.hpp"

namespace hsp {
namespace {

using fixtures::shared_catalog;

const std::vector<SuiteReport>& all_reports() {
  static const std::vector<SuiteReport> reports = run_all(shared_catalog());
  return reports;
}

const SuiteReport& report(const std::string& suite) {
  for (const auto& r : all_reports())
    if (r.suite == suite) return r;
  throw Error("no report for " + suite);
}

const CheckResult& result(const std::string& suite, const std::string& id) {
  for (const auto& c : report(suite).results)
    if (c.id == id) return c;
  throw Error("no check " + id + " in " + suite);
}

std::set<std::string> ids_with(const SuiteReport& r, Status s) {
  std::set<std::string> out;
  for (const auto& c : r.results)
    if (c.status == s) out.insert(c.id);
  return out;
}

TEST(Suites, NamesAndOrder) {
  std::vector<std::string> got;
  for (const auto& r : all_reports()) got.push_back(r.suite);
  EXPECT_EQ(got, suite_names());
  EXPECT_THROW(run_suite("nonesuch", shared_catalog()), Error);
}

TEST(Suites, NothingFails) {
  for (const auto& r : all_reports()) {
    EXPECT_EQ(r.count(Status::Fail), 0u) << r.suite << "\n" << render_text(r);
    EXPECT_FALSE(r.results.empty()) << r.suite;
  }
}

TEST(Suites, StatusInvariant) {
  for (const auto& r : all_reports())
    for (const auto& c : r.results) {
      SCOPED_TRACE(r.suite + "/" + c.id);
      if (c.status == Status::Pass) { EXPECT_FALSE(c.residual.has_value()); }
      if (c.residual) { EXPECT_FALSE(c.residual->is_zero()); }
      if (c.status == Status::Discrepancy) { EXPECT_TRUE(c.residual.has_value()); }
      if (c.status != Status::Pass) { EXPECT_FALSE(c.notes.empty()); }
    }
}

TEST(Suites, IdsAreUniqueWithinASuite) {
  for (const auto& r : all_reports()) {
    std::set<std::string> seen;
    for (const auto& c : r.results) EXPECT_TRUE(seen.insert(c.id).second) << r.suite << "/" << c.id;
  }
}

TEST(Suites, ExactDiscrepancySets) {
  const std::map<std::string, std::set<std::string>> want{
      {"contraction", {"Eq20a", "Eq20d", "Eq24d", "Eq24-primed", "Eq39d", "Eq13"}},
      {"differential", {}},
      {"covariance", {"Eq39d"}},
      {"forms", {"Eq26d", "Eq30d"}},
      {"phase_space", {"Eq48e", "Eq50a", "Eq50e"}},
      {"oscillator", {"Eq20a", "Eq20d"}},
      {"appendix", {}},
  };
  for (const auto& [suite, ids] : want) EXPECT_EQ(ids_with(report(suite), Status::Discrepancy), ids) << suite;
}

TEST(Suites, ResidualWitnesses) {
  EXPECT_EQ(to_string(*result("contraction", "Eq20a").residual), "-2*h1*th*px");
  EXPECT_EQ(to_string(*result("contraction", "Eq39d").residual), "-2*h1*h2*dx*px - 2*h1*h2*dth*pth");
  EXPECT_EQ(to_string(*result("forms", "Eq26d").residual), "h2*dth");
  EXPECT_EQ(to_string(*result("phase_space", "Eq48e").residual), "-(1-i)*h1*h2");
  EXPECT_EQ(to_string(*result("contraction", "Eq13").residual), "p*dx'*th' - p*dth'*x'");
  // A relation that holds under the correction says so in its notes.
  EXPECT_EQ(result("forms", "Eq26d").notes.rfind("displayed form fails; th*u = u*th holds", 0), 0u);
}

TEST(Suites, AppendixNegativeChecks) {
  const SuiteReport& r = report("appendix");
  EXPECT_EQ(r.count(Status::Pass), r.results.size());
  EXPECT_EQ(result("appendix", "A4-right-differentials").status, Status::Pass);
  EXPECT_EQ(result("appendix", "A7-right-derivatives").status, Status::Pass);
  EXPECT_EQ(ids_with(r, Status::Pass).count("left-differential"), 1u);
}

TEST(Suites, CovarianceNamesTheReading) {
  const CheckResult& c = result("covariance", "Eq13-reading");
  EXPECT_EQ(c.status, Status::Pass);
  EXPECT_NE(c.notes.find("transposed"), std::string::npos);
}

TEST(Suites, FingerprintsCoverUsedPresentations) {
  std::set<std::string> names;
  for (const auto& f : report("contraction").fingerprints) {
    names.insert(f.presentation);
    EXPECT_TRUE(std::regex_match(f.hash, std::regex("[0-9a-f]{16}"))) << f.hash;
  }
  EXPECT_TRUE(names.count("primed") && names.count("h_calculus_pq") && names.count("h_calculus"));
  EXPECT_EQ(fingerprint(*shared_catalog().primed()).hash, fingerprint(*Catalog::standard().primed()).hash);
  EXPECT_NE(fingerprint(*shared_catalog().primed()).hash, fingerprint(*shared_catalog().h_calculus()).hash);
}

// A sign error planted in the h-calculus must surface as a Fail downstream.
TEST(Suites, PlantedSignErrorFails) {
  Catalog c = Catalog::standard();
  PresentationPtr h = c.h_calculus();
  const Alphabet& al = *h->alphabet();
  const Word lhs{al.id("th"), al.id("th")};
  c.set_h_calculus(fixtures::with_rule(h, lhs, -h->rule_for(lhs)->rhs));
  std::size_t fails = 0;
  for (const auto& name : {"covariance", "differential", "forms"}) fails += run_suite(name, c).count(Status::Fail);
  EXPECT_GT(fails, 0u);
}

TEST(Suites, EmptyCatalogFailsConstruction) {
  Catalog empty = Catalog::empty();
  for (const auto& name : suite_names()) {
    SuiteReport r = run_suite(name, empty);
    ASSERT_TRUE(r.failed()) << name;
    EXPECT_EQ(r.results.back().id, "construction") << name;
  }
}

TEST(Suites, FuelExhaustionPropagates) {
  SuiteOptions tiny;
  tiny.fuel = 2;
  EXPECT_THROW(run_suite("covariance", shared_catalog(), tiny), FuelExhausted);
}

std::string strip_elapsed(const std::string& text) {
  return std::regex_replace(text, std::regex("\"elapsed_ms\":[0-9.e+-]+"), "\"elapsed_ms\":0");
}

TEST(Reports, StructuredOutputIsDeterministic) {
  Catalog fresh = Catalog::standard();
  for (const auto& r : all_reports()) {
    SuiteReport again = run_suite(r.suite, fresh);
    EXPECT_EQ(strip_elapsed(render_structured(again)), strip_elapsed(render_structured(r))) << r.suite;
  }
}

TEST(Reports, StructuredLinesAreJson) {
  for (const auto& r : all_reports()) {
    std::istringstream in(render_structured(r));
    std::string line;
    std::size_t checks = 0, summaries = 0;
    while (std::getline(in, line)) {
      auto j = nlohmann::json::parse(line);
      EXPECT_EQ(j["suite"], r.suite);
      if (j.contains("record")) {
        ++summaries;
        EXPECT_EQ(j["pass"].get<std::size_t>(), r.count(Status::Pass));
        EXPECT_EQ(j["discrepancy"].get<std::size_t>(), r.count(Status::Discrepancy));
        EXPECT_EQ(j["fail"].get<std::size_t>(), 0u);
      } else {
        ++checks;
        EXPECT_TRUE(j["status"] == "pass" || j["status"] == "discrepancy");
        EXPECT_EQ(j["status"] == "pass", j["residual"] == "0");
      }
    }
    EXPECT_EQ(checks, r.results.size());
    EXPECT_EQ(summaries, 1u);
  }
}

TEST(Reports, TextHeaderAndLines) {
  const SuiteReport& r = report("forms");
  const std::string text = render_text(r);
  EXPECT_EQ(text.rfind("suite forms: 12 checks, 10 pass, 2 discrepancy, 0 fail (", 0), 0u);
  EXPECT_NE(text.find("DISCREPANCY Eq26d  residual h2*dth"), std::string::npos);
  EXPECT_EQ(to_string(Status::Discrepancy), "discrepancy");
}

}  // namespace
}  // namespace hsp
