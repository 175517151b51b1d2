#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hsp/algebra/generator.hpp"

namespace hsp {

/// Product of generators, left to right. The empty word is the unit.
using Word = std::vector<GenId>;

Word concat(const Word& a, const Word& b);
Parity word_parity(const Alphabet& alphabet, const Word& w);
std::size_t parameter_count(const Alphabet& alphabet, const Word& w);
std::size_t weighted_degree(const Alphabet& alphabet, const Word& w);

/// Factors joined by '*'; "1" for the empty word.
std::string to_string(const Alphabet& alphabet, const Word& w);

/// Term order. A word with more parameter factors is smaller; then lower
/// weighted degree is smaller; then lexicographic by sort position.
/// Every correction term in a rule carries an extra parameter, so putting
/// the parameter count first is what makes the localized rules descend.
struct TermLess {
  const Alphabet* alphabet = nullptr;
  bool operator()(const Word& a, const Word& b) const;
};

/// Three-way form of TermLess: negative, zero or positive.
int compare_terms(const Alphabet& alphabet, const Word& a, const Word& b);

}  // namespace hsp
