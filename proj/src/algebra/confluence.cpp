#include "hsp/algebra/confluence.hpp"

#include <algorithm>
#include <tuple>

#include "hsp/errors.hpp"

namespace hsp {

namespace {

Expression reduct(const Presentation& pres, const Word& w, std::size_t pos, const RewriteRule& rule) {
  Expression out = pres.zero();
  for (const auto& [rw, c] : rule.rhs.terms()) {
    Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    next.insert(next.end(), rw.begin(), rw.end());
    next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + rule.lhs.size()), w.end());
    out.add_term(std::move(next), c);
  }
  return out;
}

bool occurs_at(const Word& w, std::size_t pos, const Word& lhs) {
  if (pos + lhs.size() > w.size()) return false;
  return std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
}

}  // namespace

std::vector<CriticalPair> critical_pairs(const Presentation& pres, std::size_t max_len) {
  if (max_len < 3) throw Error("critical pair length bound must be at least 3");
  struct Key {
    Word word;
    std::size_t i;
    std::size_t j;
    const RewriteRule* a;
    const RewriteRule* b;
  };
  std::vector<Key> keys;
  const auto& rules = pres.rules();
  for (const auto& ra : rules) {
    const Word& u = ra.lhs;
    for (const auto& rb : rules) {
      const Word& v = rb.lhs;
      // Proper overlap: a suffix of u equals a prefix of v.
      for (std::size_t j = 1; j < u.size(); ++j) {
        std::size_t shared = u.size() - j;
        if (shared >= v.size()) continue;
        if (!std::equal(u.begin() + static_cast<std::ptrdiff_t>(j), u.end(), v.begin())) continue;
        Word w = u;
        w.insert(w.end(), v.begin() + static_cast<std::ptrdiff_t>(shared), v.end());
        if (w.size() <= max_len) keys.push_back({std::move(w), 0, j, &ra, &rb});
      }
      // Inclusion: v sits inside u.
      if (&ra != &rb && v.size() <= u.size()) {
        for (std::size_t j = 0; j + v.size() <= u.size(); ++j)
          if (occurs_at(u, j, v) && u.size() <= max_len) keys.push_back({u, 0, j, &ra, &rb});
      }
    }
  }
  std::sort(keys.begin(), keys.end(), [](const Key& x, const Key& y) {
    return std::tie(x.word, x.i, x.j) < std::tie(y.word, y.i, y.j);
  });
  std::vector<CriticalPair> out;
  out.reserve(keys.size());
  for (const auto& k : keys) {
    // Equal-length inclusions are listed once.
    if (!out.empty() && out.back().word == k.word && out.back().first_pos == k.i && out.back().second_pos == k.j)
      continue;
    out.push_back({k.word, k.i, k.j, reduct(pres, k.word, k.i, *k.a), reduct(pres, k.word, k.j, *k.b)});
  }
  return out;
}

ConfluenceReport check_local_confluence(Reducer& reducer, std::size_t max_len, std::size_t fuel) {
  ConfluenceReport report;
  for (auto& pair : critical_pairs(reducer.presentation(), max_len)) {
    ++report.pairs_checked;
    Expression residual = reducer.normal_form(pair.first, fuel) - reducer.normal_form(pair.second, fuel);
    if (!residual.is_zero()) report.failures.push_back({std::move(pair), std::move(residual)});
  }
  return report;
}

ConfluenceReport check_local_confluence(const PresentationPtr& pres, std::size_t max_len, std::size_t fuel) {
  Reducer r(pres);
  return check_local_confluence(r, max_len, fuel);
}

}  // namespace hsp
