#include "hsp/algebra/word.hpp"

#include <algorithm>

namespace hsp {

Word concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

Parity word_parity(const Alphabet& alphabet, const Word& w) {
  Parity p = Parity::Even;
  for (GenId g : w) p = p + alphabet.parity(g);
  return p;
}

std::size_t parameter_count(const Alphabet& alphabet, const Word& w) {
  return static_cast<std::size_t>(
      std::count_if(w.begin(), w.end(), [&](GenId g) { return alphabet.is_parameter(g); }));
}

std::size_t weighted_degree(const Alphabet& alphabet, const Word& w) {
  std::size_t d = 0;
  for (GenId g : w) d += alphabet[g].weight();
  return d;
}

std::string to_string(const Alphabet& alphabet, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (GenId g : w) {
    if (!s.empty()) s += "*";
    s += alphabet[g].name;
  }
  return s;
}

int compare_terms(const Alphabet& alphabet, const Word& a, const Word& b) {
  std::size_t pa = parameter_count(alphabet, a);
  std::size_t pb = parameter_count(alphabet, b);
  if (pa != pb) return pa > pb ? -1 : 1;
  std::size_t da = weighted_degree(alphabet, a);
  std::size_t db = weighted_degree(alphabet, b);
  if (da != db) return da < db ? -1 : 1;
  if (a == b) return 0;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()) ? -1 : 1;
}

bool TermLess::operator()(const Word& a, const Word& b) const { return compare_terms(*alphabet, a, b) < 0; }

}  // namespace hsp
