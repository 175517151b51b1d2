#include "hsp/algebra/reducer.hpp"

#include <utility>
#include <vector>

#include "hsp/errors.hpp"

namespace hsp {

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (GenId g : w) {
    h ^= g;
    h *= 1099511628211ULL;
  }
  return h ^ w.size();
}

Reducer::Reducer(PresentationPtr pres, Strategy strategy) : pres_(std::move(pres)), strategy_(strategy) {}

bool Reducer::find_redex(const Word& w, std::size_t& pos, const RewriteRule*& rule) const {
  const std::size_t n = w.size();
  auto at = [&](std::size_t k) -> const RewriteRule* {
    if (const RewriteRule* r = pres_->rule_for(w[k])) return r;
    if (k + 1 < n) return pres_->rule_for(w[k], w[k + 1]);
    return nullptr;
  };
  if (strategy_ == Strategy::Leftmost) {
    for (std::size_t k = 0; k < n; ++k) {
      if (const RewriteRule* r = at(k)) {
        pos = k;
        rule = r;
        return true;
      }
    }
  } else {
    for (std::size_t k = n; k-- > 0;) {
      if (k + 1 < n) {
        if (const RewriteRule* r = pres_->rule_for(w[k], w[k + 1])) {
          pos = k;
          rule = r;
          return true;
        }
      }
      if (const RewriteRule* r = pres_->rule_for(w[k])) {
        pos = k;
        rule = r;
        return true;
      }
    }
  }
  return false;
}

bool Reducer::is_normal(const Word& w) const {
  std::size_t pos = 0;
  const RewriteRule* rule = nullptr;
  return !find_redex(w, pos, rule);
}

namespace {

// One pending rewrite: the word, the reducts of its chosen redex, and the
// sum collected so far. Kept on the heap so long chains cannot blow the stack.
struct Frame {
  Word word;
  std::vector<std::pair<Word, Scalar>> children;
  std::size_t next = 0;
  Expression sum;
};

}  // namespace

const Expression& Reducer::reduce_word(const Word& w) {
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  std::vector<Frame> stack;
  // Either caches `u` directly when it is normal, or pushes a frame for it.
  auto open = [&](const Word& u) -> const Expression* {
    std::size_t pos = 0;
    const RewriteRule* rule = nullptr;
    if (!find_redex(u, pos, rule)) {
      Expression self(pres_->alphabet());
      self.add_term(u, 1);
      return &cache_.emplace(u, std::move(self)).first->second;
    }
    if (fuel_left_ == 0) throw FuelExhausted(budget_);
    --fuel_left_;
    Frame f{u, {}, 0, Expression(pres_->alphabet())};
    const std::size_t len = rule->lhs.size();
    for (const auto& [rw, c] : rule->rhs.terms()) {
      Word next;
      next.reserve(u.size() - len + rw.size());
      next.insert(next.end(), u.begin(), u.begin() + static_cast<std::ptrdiff_t>(pos));
      next.insert(next.end(), rw.begin(), rw.end());
      next.insert(next.end(), u.begin() + static_cast<std::ptrdiff_t>(pos + len), u.end());
      f.children.emplace_back(std::move(next), c);
    }
    stack.push_back(std::move(f));
    return nullptr;
  };
  if (const Expression* done = open(w)) return *done;
  for (;;) {
    Frame& top = stack.back();
    if (top.next < top.children.size()) {
      const Word& child = top.children[top.next].first;
      const Expression* sub = nullptr;
      if (auto it = cache_.find(child); it != cache_.end())
        sub = &it->second;
      else
        sub = open(child);
      if (!sub) continue;
      // `top` may dangle after open() pushed; re-fetch.
      Frame& cur = stack.back();
      const Scalar& c = cur.children[cur.next].second;
      for (const auto& [sw, sc] : sub->terms()) cur.sum.add_term(sw, c * sc);
      ++cur.next;
      continue;
    }
    // unordered_map keeps element references valid across rehashing.
    const Expression& finished = cache_.emplace(std::move(top.word), std::move(top.sum)).first->second;
    stack.pop_back();
    if (stack.empty()) return finished;
    Frame& parent = stack.back();
    const Scalar& c = parent.children[parent.next].second;
    for (const auto& [sw, sc] : finished.terms()) parent.sum.add_term(sw, c * sc);
    ++parent.next;
  }
}

Expression Reducer::normal_form(const Word& w, std::size_t fuel) {
  budget_ = fuel;
  fuel_left_ = fuel;
  return reduce_word(w);
}

Expression Reducer::normal_form(const Expression& e, std::size_t fuel) {
  if (e.alphabet().get() != pres_->alphabet().get()) throw MixedPresentation();
  budget_ = fuel;
  fuel_left_ = fuel;
  Expression out(pres_->alphabet());
  for (const auto& [w, c] : e.terms()) {
    const Expression& nf = reduce_word(w);
    for (const auto& [nw, nc] : nf.terms()) out.add_term(nw, c * nc);
  }
  return out;
}

Expression Reducer::multiply_reduced(const Expression& a, const Expression& b, std::size_t fuel) {
  return normal_form(multiply(a, b), fuel);
}

Expression normal_form(const PresentationPtr& pres, const Expression& e, std::size_t fuel, Strategy strategy) {
  Reducer r(pres, strategy);
  return r.normal_form(e, fuel);
}

RelationCheck check_relation(Reducer& reducer, const Expression& lhs, const Expression& rhs, std::size_t fuel) {
  RelationCheck out{false, reducer.normal_form(lhs - rhs, fuel)};
  out.holds = out.residual.is_zero();
  return out;
}

RelationCheck check_relation(const PresentationPtr& pres, const Expression& lhs, const Expression& rhs,
                             std::size_t fuel) {
  Reducer r(pres);
  return check_relation(r, lhs, rhs, fuel);
}

}  // namespace hsp
