#pragma once

#include <cstddef>
#include <unordered_map>

#include "hsp/algebra/presentation.hpp"

namespace hsp {

inline constexpr std::size_t kDefaultFuel = 10000;

/// Which redex a single rewrite step picks.
enum class Strategy { Leftmost, Rightmost };

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Normal-form engine with a per-instance word cache. Not thread safe;
/// give each thread its own Reducer.
class Reducer {
 public:
  explicit Reducer(PresentationPtr pres, Strategy strategy = Strategy::Leftmost);

  const Presentation& presentation() const { return *pres_; }
  const PresentationPtr& presentation_ptr() const { return pres_; }

  /// Fuel counts rule applications not served from the cache within one
  /// call. Throws FuelExhausted or MixedPresentation.
  Expression normal_form(const Expression& e, std::size_t fuel = kDefaultFuel);
  Expression normal_form(const Word& w, std::size_t fuel = kDefaultFuel);

  /// True when no rule lhs occurs in `w`.
  bool is_normal(const Word& w) const;

  /// Product of two expressions followed by reduction.
  Expression multiply_reduced(const Expression& a, const Expression& b, std::size_t fuel = kDefaultFuel);

  std::size_t cache_size() const { return cache_.size(); }

 private:
  const Expression& reduce_word(const Word& w);
  /// Position of the redex chosen by the strategy and its lhs length.
  bool find_redex(const Word& w, std::size_t& pos, const RewriteRule*& rule) const;

  PresentationPtr pres_;
  Strategy strategy_;
  std::unordered_map<Word, Expression, WordHash> cache_;
  std::size_t fuel_left_ = 0;
  std::size_t budget_ = 0;
};

Expression normal_form(const PresentationPtr& pres, const Expression& e, std::size_t fuel = kDefaultFuel,
                       Strategy strategy = Strategy::Leftmost);

struct RelationCheck {
  bool holds = false;
  /// Normal form of lhs - rhs; zero when the relation holds.
  Expression residual;
};

RelationCheck check_relation(Reducer& reducer, const Expression& lhs, const Expression& rhs,
                             std::size_t fuel = kDefaultFuel);
RelationCheck check_relation(const PresentationPtr& pres, const Expression& lhs, const Expression& rhs,
                             std::size_t fuel = kDefaultFuel);

}  // namespace hsp
