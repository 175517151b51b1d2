#pragma once

#include <cstddef>
#include <vector>

#include "hsp/algebra/reducer.hpp"

namespace hsp {

/// An overlap or inclusion ambiguity: `word` is covered by two rule lhs
/// occurrences that share at least one factor.
struct CriticalPair {
  Word word;
  std::size_t first_pos = 0;
  std::size_t second_pos = 0;
  /// One-step reducts at first_pos and second_pos.
  Expression first;
  Expression second;
};

/// Every ambiguity word of length <= max_len with both one-step reducts,
/// sorted by word then positions. Disjoint redex pairs are joinable in one
/// step each and are not listed. Throws Error when max_len < 3.
std::vector<CriticalPair> critical_pairs(const Presentation& pres, std::size_t max_len);

struct NonJoinable {
  CriticalPair pair;
  /// Normal form of first minus normal form of second.
  Expression residual;
};

struct ConfluenceReport {
  std::size_t pairs_checked = 0;
  std::vector<NonJoinable> failures;
  bool confluent() const { return failures.empty(); }
};

ConfluenceReport check_local_confluence(const PresentationPtr& pres, std::size_t max_len,
                                        std::size_t fuel = kDefaultFuel);
ConfluenceReport check_local_confluence(Reducer& reducer, std::size_t max_len, std::size_t fuel = kDefaultFuel);

}  // namespace hsp
