#pragma once

#include <array>
#include <string>
#include <vector>

#include "hsp/algebra/morphism.hpp"

namespace hsp {

/// The Grassmann coefficient algebra: h1, h2 with their swap rules and
/// scalars from Q(i)(p, q). Shared by every SuperMatrix.
PresentationPtr coefficient_frame();

/// 2x2 matrix over the coefficient frame. Row i gives the image of the
/// i-th source generator as sum_j m[i][j] * target_j, coefficients on the
/// left.
class SuperMatrix {
 public:
  using Entries = std::array<std::array<Expression, 2>, 2>;

  explicit SuperMatrix(Entries m);
  /// Entries parsed in the coefficient grammar; "a", "b" and "ab" are bound
  /// to h1/(p-1), h2/(q-1) and their product.
  static SuperMatrix parse(const std::string& m00, const std::string& m01, const std::string& m10,
                           const std::string& m11);
  static SuperMatrix identity();

  const Expression& operator()(int i, int j) const { return m_[i][j]; }

  /// Composition in the substitution sense: (A * B)[i][k] = sum_j A[i][j] B[j][k].
  friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
  friend bool operator==(const SuperMatrix& a, const SuperMatrix& b);

  /// Inverse by the nilpotent series around the parameter-free part.
  /// Throws ConstructionFailure when that part is singular.
  SuperMatrix inverse() const;
  /// [[A, B], [C, D]] -> [[A, C], [-B, D]].
  SuperMatrix supertranspose() const;
  /// Entry-wise alpha -> (-1)^|alpha| alpha: the matrix of the left
  /// differential of the substitution. Entries must be parity-homogeneous.
  SuperMatrix left_differential() const;

  /// Morphism images: source[i] -> sum_j m[i][j] target[j], in `target`'s alphabet.
  void install(Morphism& m, const std::array<std::string, 2>& source,
               const std::array<std::string, 2>& target) const;

  std::string to_string() const;

 private:
  Entries m_;
};

/// Lifts a coefficient-frame expression into `alphabet` multiplied on the
/// right by `tail` (which may be empty).
Expression lift_coefficient(const Expression& c, const AlphabetPtr& alphabet, const Word& tail);

}  // namespace hsp
