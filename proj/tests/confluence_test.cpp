#include <gtest/gtest.h>

#include <algorithm>
#include <tuple>

#include "hsp/algebra/confluence.hpp"
#include "hsp/errors.hpp"
#include "hsp/text/parser.hpp"
#include "support.hpp"

namespace hsp {
namespace {

using fixtures::shared_catalog;

struct Occurrence {
  std::size_t pos;
  const RewriteRule* rule;
};

std::vector<Occurrence> occurrences(const Presentation& pres, const Word& w) {
  std::vector<Occurrence> out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (const RewriteRule* r = pres.rule_for(w[k])) out.push_back({k, r});
    if (k + 1 < w.size())
      if (const RewriteRule* r = pres.rule_for(w[k], w[k + 1])) out.push_back({k, r});
  }
  return out;
}

Expression rewrite_at(const Presentation& pres, const Word& w, const Occurrence& o) {
  Expression out = pres.zero();
  for (const auto& [rw, c] : o.rule->rhs.terms()) {
    Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(o.pos));
    u.insert(u.end(), rw.begin(), rw.end());
    u.insert(u.end(), w.begin() + static_cast<std::ptrdiff_t>(o.pos + o.rule->lhs.size()), w.end());
    out.add_term(u, c);
  }
  return out;
}

struct Ambiguity {
  Word word;
  std::size_t first, second;
  Expression a, b;
};

// Two occurrences that share a factor and together cover the word; the one
// at position 0 comes first, the longer one when both start there.
std::vector<Ambiguity> brute_force(const Presentation& pres, std::size_t max_len) {
  std::vector<Ambiguity> out;
  for (const Word& w : fixtures::all_words(*pres.alphabet(), max_len)) {
    auto occ = occurrences(pres, w);
    for (const auto& x : occ)
      for (const auto& y : occ) {
        if (&x == &y || x.pos != 0) continue;
        const std::size_t xe = x.pos + x.rule->lhs.size(), ye = y.pos + y.rule->lhs.size();
        if (y.pos >= xe || std::max(xe, ye) != w.size()) continue;
        if (y.pos == 0 && y.rule->lhs.size() >= x.rule->lhs.size()) continue;
        out.push_back({w, x.pos, y.pos, rewrite_at(pres, w, x), rewrite_at(pres, w, y)});
      }
  }
  std::sort(out.begin(), out.end(), [](const Ambiguity& l, const Ambiguity& r) {
    return std::tie(l.word, l.first, l.second) < std::tie(r.word, r.first, r.second);
  });
  return out;
}

class CriticalPairOracle : public ::testing::TestWithParam<std::string> {};

TEST_P(CriticalPairOracle, MatchesBruteForceUpToLengthThree) {
  PresentationPtr pres = shared_catalog().presentation(GetParam());
  auto want = brute_force(*pres, 3);
  auto got = critical_pairs(*pres, 3);
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t k = 0; k < got.size(); ++k) {
    const Alphabet& al = *pres->alphabet();
    SCOPED_TRACE(to_string(al, want[k].word));
    EXPECT_EQ(got[k].word, want[k].word);
    EXPECT_EQ(got[k].first_pos, want[k].first);
    EXPECT_EQ(got[k].second_pos, want[k].second);
    EXPECT_EQ(got[k].first, want[k].a);
    EXPECT_EQ(got[k].second, want[k].b);
  }
}

INSTANTIATE_TEST_SUITE_P(Catalog, CriticalPairOracle, ::testing::ValuesIn(Catalog::presentation_names()));

// Stronger than the critical pair test: every pair of one-step reducts of
// every short word joins.
class LocalConfluence : public ::testing::TestWithParam<std::string> {};

TEST_P(LocalConfluence, EveryShortWordJoins) {
  PresentationPtr pres = shared_catalog().presentation(GetParam());
  Reducer r(pres);
  for (const Word& w : fixtures::all_words(*pres->alphabet(), 3)) {
    auto occ = occurrences(*pres, w);
    for (std::size_t k = 1; k < occ.size(); ++k)
      EXPECT_EQ(r.normal_form(rewrite_at(*pres, w, occ[0]), fixtures::kFuel),
                r.normal_form(rewrite_at(*pres, w, occ[k]), fixtures::kFuel))
          << to_string(*pres->alphabet(), w);
  }
}

INSTANTIATE_TEST_SUITE_P(Catalog, LocalConfluence, ::testing::ValuesIn(fixtures::confluent_presentation_names()));

bool listed(const Presentation& pres, std::initializer_list<const char*> names, std::size_t max_len = 3) {
  Word w;
  for (const char* n : names) w.push_back(pres.alphabet()->id(n));
  auto pairs = critical_pairs(pres, max_len);
  return std::any_of(pairs.begin(), pairs.end(), [&](const CriticalPair& c) { return c.word == w; });
}

TEST(CriticalPairs, KnownWords) {
  PresentationPtr h = shared_catalog().h_calculus();
  EXPECT_TRUE(listed(*h, {"h2", "h1", "h1"}));
  // h1*h1 is a rule but h1*h2 is normal: no overlap.
  EXPECT_FALSE(listed(*h, {"h1", "h1", "h2"}));
  EXPECT_TRUE(listed(*h, {"pth", "th", "th"}));
  EXPECT_FALSE(listed(*h, {"x", "th", "px"}));
}

TEST(CriticalPairs, FreeAlgebraHasNone) {
  PresentationPtr free = PresentationBuilder("free", plane_alphabet()).build(Validation::Lenient);
  EXPECT_TRUE(critical_pairs(*free, 5).empty());
  EXPECT_TRUE(check_local_confluence(free, 5).confluent());
}

TEST(CriticalPairs, LengthBound) {
  PresentationPtr h = shared_catalog().h_calculus();
  EXPECT_THROW(critical_pairs(*h, 2), Error);
  EXPECT_LE(critical_pairs(*h, 3).size(), critical_pairs(*h, 4).size());
}

TEST(CriticalPairs, FlippedSignIsDetected) {
  PresentationPtr h = shared_catalog().h_calculus();
  const Alphabet& al = *h->alphabet();
  Word lhs{al.id("th"), al.id("th")};
  const Expression flipped = -h->rule_for(lhs)->rhs;
  PresentationPtr bad = fixtures::with_rule(h, lhs, flipped);
  ConfluenceReport report = check_local_confluence(bad, 4);
  EXPECT_FALSE(report.confluent());
  EXPECT_TRUE(check_local_confluence(h, 4).confluent());
}

}  // namespace
}  // namespace hsp
