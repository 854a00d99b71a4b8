#ifndef NEARPRIME_SUBSTRUCTURES_HPP_
#define NEARPRIME_SUBSTRUCTURES_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nearprime/element_set.hpp"
#include "nearprime/near_ring.hpp"

namespace nearprime {

/// Outcome of a membership test; on failure `clause` names the first
/// violated condition and `witness` the element indices violating it.
struct SubstructureCheck {
  bool holds = true;
  std::string clause;
  std::vector<std::size_t> witness;
  /// Set when {0} was accepted only through the zero-substructure convention.
  bool by_zero_convention = false;
};

/**
 * Membership test for one substructure kind.
 *
 * {0} counts as a substructure of every kind. On zero-symmetric structures
 * that is a consequence of the axioms; elsewhere (r*0 != 0) it is a
 * convention, reported through `by_zero_convention`. Pass
 * `zero_convention = false` for the literal clause-by-clause test.
 *
 * Ring kinds take subsets of R; r_submodule and r_ideal take subsets of M.
 * The module overload forwards ring-carrier subsets to the ring overload.
 */
SubstructureCheck is_substructure(const FiniteNearRing &ring,
                                  const ElementSet &s, SubstructureKind kind,
                                  bool zero_convention = true);
SubstructureCheck is_substructure(const FiniteModule &module,
                                  const ElementSet &s, SubstructureKind kind,
                                  bool zero_convention = true);

enum class EnumerationStrategy {
  /// Subgroup lattice first, falling back to the closure lattice when the
  /// carrier has more than `kSubgroupLatticeCap` subgroups.
  automatic,
  subgroup_lattice,
  /// Breadth-first joins gen(H + x) of the kind itself.
  closure_lattice,
};

inline constexpr std::size_t kSubgroupLatticeCap = 50000;

/// All additive subgroups, or nullopt once more than `cap` have been found.
std::optional<std::vector<ElementSet>>
subgroup_lattice(const Group &group, Carrier carrier,
                 std::size_t cap = static_cast<std::size_t>(-1));

/// Every substructure of the kind, sorted by size then member list.
std::vector<ElementSet>
enumerate(const FiniteNearRing &ring, SubstructureKind kind,
          EnumerationStrategy strategy = EnumerationStrategy::automatic);
std::vector<ElementSet>
enumerate(const FiniteModule &module, SubstructureKind kind,
          EnumerationStrategy strategy = EnumerationStrategy::automatic);

/// gen(V): the least substructure of the kind containing V.
ElementSet generated(const FiniteNearRing &ring, const ElementSet &v,
                     SubstructureKind kind);
ElementSet generated(const FiniteModule &module, const ElementSet &v,
                     SubstructureKind kind);

} // namespace nearprime

#endif // NEARPRIME_SUBSTRUCTURES_HPP_
