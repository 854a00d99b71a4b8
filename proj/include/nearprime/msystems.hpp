#ifndef NEARPRIME_MSYSTEMS_HPP_
#define NEARPRIME_MSYSTEMS_HPP_

#include <optional>

#include "nearprime/element_set.hpp"
#include "nearprime/primeness.hpp"
#include "nearprime/report.hpp"

namespace nearprime {

struct MSystemVerdict {
  ElementSet subset;
  Variant variant = Variant::v0;
  bool holds = true;
  /// (A, B, K, L) or (a, b, K, L) on failure.
  std::optional<Witness> witness;
};

/**
 * Classical m_v-system test for S inside M \ {0}. A, B range over ideals
 * (v=0) or left R-subgroups (v=2), a, b over R (v=3,c); K, L over
 * R-submodules. K + XL is the plain sumset of K with the product set XL.
 * The conclusion set is K + ABL, K + (aR)(bR)L for v=3 and K + abL for v=c.
 * Throws EmptySet, ContainsZero or V1NotDefined.
 */
MSystemVerdict is_classical_m_system(const ModuleContext &ctx,
                                     const ElementSet &s, Variant v);

/// P is v-classical prime exactly when M \ P is a classical m_v-system, for
/// every R-ideal P with RM not inside P and v = 0,2,3,c.
VerifierReport verify_complement_theorem(const ModuleContext &ctx);

} // namespace nearprime

#endif // NEARPRIME_MSYSTEMS_HPP_
