#pragma once

#include <string>
#include <vector>

namespace hsp {

/// A displayed relation lhs = rhs in the expression grammar. Composite
/// names (w, u, T, nabla, xh, ...) are resolved through parser bindings.
struct PrintedRelation {
  std::string id;
  std::string lhs;
  std::string rhs;
  /// Right-hand side that actually holds when the displayed one does not;
  /// empty when the display is taken as correct.
  std::string corrected;
  std::string note;
};

using RelationTable = std::vector<PrintedRelation>;

/// x, th at generic p, q.
const RelationTable& superplane_relations();
/// dx, dth at generic p, q.
const RelationTable& dual_plane_relations();
/// Derivatives against coordinates, generic p, q.
const RelationTable& derivative_coordinate_relations();
/// Derivatives among themselves, generic p, q.
const RelationTable& derivative_relations();
/// Derivatives against differentials, generic p, q.
const RelationTable& derivative_differential_relations();
/// The full calculus at p = q = 1.
const RelationTable& h_calculus_relations();
/// Rules of the supergroup.
const RelationTable& supergroup_relations();
/// w, u against x, th and among themselves.
const RelationTable& one_form_relations();
/// T, nabla among themselves and against x, th.
const RelationTable& operator_relations();
/// xh, thh, pxh, pthh.
const RelationTable& phase_space_relations();
/// g1, g2, c1, c2.
const RelationTable& clifford_relations();
/// Rules of the (p, q) superoscillator.
const RelationTable& oscillator_relations();

}  // namespace hsp
