#pragma once

#include <string>
#include <vector>

#include "hsp/algebra/reducer.hpp"
#include "hsp/presentations/catalog.hpp"
#include "hsp/verify/report.hpp"

namespace hsp {

/// The first reductions in the covariance tensor fill an empty word cache
/// and take a little over 10^4 fresh steps in a single call.
inline constexpr std::size_t kSuiteFuel = 100000;

struct SuiteOptions {
  /// Per normal-form call. FuelExhausted propagates out of the suite.
  std::size_t fuel = kSuiteFuel;
};

/// Contraction images of the generic relations, regularity of the derived
/// rules and their p = q = 1 values against the displayed calculus.
SuiteReport run_contraction_suite(const Catalog& catalog, const SuiteOptions& options = {});
/// d = dx*px + dth*pth: nilpotency, graded commutation with the
/// differentials and the Leibniz rule on the coordinates.
SuiteReport run_differential_structure_suite(const Catalog& catalog, const SuiteOptions& options = {});
/// Every calculus relation under the group coaction.
SuiteReport run_covariance_suite(const Catalog& catalog, const SuiteOptions& options = {});
/// One-forms w, u and the operators T, nabla.
SuiteReport run_forms_suite(const Catalog& catalog, const SuiteOptions& options = {});
/// Hermitian operators, involution invariance, phase-space and Clifford relations.
SuiteReport run_phase_space_suite(const Catalog& catalog, const SuiteOptions& options = {});
/// Oscillator images of the plane generators and the star anti-automorphism.
SuiteReport run_oscillator_suite(const Catalog& catalog, const SuiteOptions& options = {});
/// Left-convention round trips and the right-convention counterexamples.
SuiteReport run_appendix_suite(const Catalog& catalog, const SuiteOptions& options = {});

/// contraction, differential, covariance, forms, phase_space, oscillator, appendix.
const std::vector<std::string>& suite_names();
/// Throws Error for an unknown name.
SuiteReport run_suite(const std::string& name, const Catalog& catalog, const SuiteOptions& options = {});
/// Every suite in suite_names() order.
std::vector<SuiteReport> run_all(const Catalog& catalog, const SuiteOptions& options = {});

}  // namespace hsp
