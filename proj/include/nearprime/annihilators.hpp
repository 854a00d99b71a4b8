#ifndef NEARPRIME_ANNIHILATORS_HPP_
#define NEARPRIME_ANNIHILATORS_HPP_

#include <vector>

#include "nearprime/element_set.hpp"
#include "nearprime/near_ring.hpp"
#include "nearprime/primeness.hpp"
#include "nearprime/report.hpp"

namespace nearprime {

struct AnnihilatorResult {
  ElementSet subject;
  /// Left annihilator {r in R : rP = 0}.
  ElementSet annihilator;
  /// Kinds that were checked and hold.
  std::vector<SubstructureKind> verified_kinds;
  /// Kinds that were checked and fail.
  std::vector<SubstructureKind> failed_kinds;
};

/// Left annihilator of P over M, or over R when P is a ring subset. Checks
/// left_ideal always and ideal when P is a left R-subgroup of R.
/// Throws EmptySet.
AnnihilatorResult annihilator(const FiniteModule &m, const ElementSet &p);
AnnihilatorResult annihilator(const FiniteNearRing &r, const ElementSet &p);

/// True when the action table is the ring multiplication (M = R_R).
bool is_regular_module(const FiniteModule &m);

/// Ann(S) = {0} for every nonzero R-ideal S (stated for R^n, R a near-field).
VerifierReport verify_ann_nonzero_ideals(const ModuleContext &ctx);

/**
 * For u1, u2 with Ru1 and Ru2 meeting only in 0: Ann(Ru1) + Ann(Ru2) equals
 * Ann(Ru1 + Ru2) whenever Ann(Ru_j) R u_i = 0 for j != i. Pairs where the
 * side condition fails but equality still breaks are listed as notes.
 */
VerifierReport verify_ann_direct_sum(const ModuleContext &ctx);

/// Every annihilator statement that applies to the module.
std::vector<VerifierReport> verify_annihilator_props(const ModuleContext &ctx);

} // namespace nearprime

#endif // NEARPRIME_ANNIHILATORS_HPP_
