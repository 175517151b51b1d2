#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hsp/presentations/supermatrix.hpp"

namespace hsp {

/// The contraction between the (p, q) calculus (primed names) and the
/// h-deformed one (plain names), left convention.
struct ContractionMap {
  /// x' = g x as printed.
  SuperMatrix g_matrix;
  /// x, th in terms of x', th'.
  SuperMatrix coords;
  /// dx, dth in terms of dx', dth'.
  SuperMatrix diffs;
  /// px', pth' in terms of px, pth, as printed.
  SuperMatrix derivs;
  /// Plain -> primed on all six generators; the derivative part is derivs^-1.
  Morphism forward;
  /// Primed -> plain, computed by series inversion.
  Morphism inverse;
};

/// Composite elements, each over the alphabet noted on its group.
struct CompositeElements {
  /// Over the h-calculus alphabet.
  Expression D, T, nabla;
  /// Over the one-forms alphabet.
  Expression w, u;
  /// Over the phase-space alphabet.
  Expression x_hat, th_hat, px_hat, pth_hat;
  Expression gamma1() const { return pth_hat; }
  Expression gamma2() const { return th_hat; }
  Expression c1() const { return px_hat; }
  Expression c2() const { return x_hat; }
  /// Images of the plain coordinates and derivatives inside the oscillator.
  Expression osc_x, osc_th, osc_px, osc_pth;
};

/// Outcome of choosing the C21, C22 reading of the coordinate-differential
/// ansatz: each candidate is transported and compared with the printed
/// p = q = 1 coordinate-differential relations.
struct ReadingSelection {
  struct Candidate {
    std::string name;
    std::string rule;
    bool accepted = false;
    std::string notes;
  };
  std::vector<Candidate> candidates;
  std::size_t selected = 0;
};

/// Every algebra, map and composite, built lazily on first use. Copies
/// share state. Safe to read from several threads.
class Catalog {
 public:
  /// Builds from the stored relation tables.
  static Catalog standard();
  /// A catalog with nothing in it: every accessor throws ConstructionFailure.
  static Catalog empty();

  PresentationPtr primed() const;
  PresentationPtr primed_printed() const;
  PresentationPtr primed_diff_block() const;
  const ContractionMap& contraction() const;
  const ReadingSelection& reading_selection() const;
  PresentationPtr h_calculus_pq() const;
  PresentationPtr h_diff_block_pq() const;
  PresentationPtr h_calculus() const;
  PresentationPtr supergroup() const;
  PresentationPtr covariance_tensor() const;
  PresentationPtr oscillator() const;
  PresentationPtr one_forms() const;
  PresentationPtr phase_space() const;
  const Involution& plane_dagger() const;
  const Involution& oscillator_star() const;
  /// Group coaction from the h-calculus into the covariance tensor.
  const Morphism& coaction() const;
  const CompositeElements& composites() const;

  /// Replaces the h-calculus; everything built from it is rebuilt.
  void set_h_calculus(PresentationPtr pres);

  /// Names accepted by presentation().
  static const std::vector<std::string>& presentation_names();
  /// Throws Error for unknown names.
  PresentationPtr presentation(const std::string& name) const;

 private:
  struct State;
  explicit Catalog(std::shared_ptr<State> state) : state_(std::move(state)) {}
  std::shared_ptr<State> state_;
};

/// Unprimed plane generators with the parameters, in sort order.
AlphabetPtr plane_alphabet();
/// Primed plane generators with the parameters, in sort order.
AlphabetPtr primed_alphabet();

}  // namespace hsp
