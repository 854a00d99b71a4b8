#ifndef NEARPRIME_NEARFIELD_HPP_
#define NEARPRIME_NEARFIELD_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nearprime/near_ring.hpp"
#include "nearprime/report.hpp"

namespace nearprime {

/// Labels of GF(9) = Z3[x]/(x^2+1) in table order.
const std::vector<std::string> &dickson_labels();

/**
 * The Dickson near-field DN(3,2) on GF(9): the field product when the right
 * factor is a square, otherwise the left factor is replaced by its cube.
 * This is the rule that reproduces the printed operation table; the rule
 * keyed on the left factor gives its transpose, a left near-field.
 */
RawRing dickson_3_2_raw();
RingPtr build_dickson_3_2();

/// Lexicographically least (a, b, c) with a(b+c) != ab + ac, if any.
std::optional<std::array<std::size_t, 3>>
find_left_distributivity_failure(const FiniteNearRing &ring);

inline constexpr std::size_t kDefaultPowerBound = 1024;

/**
 * R^n with componentwise addition and r(v1,...,vn) = (rv1,...,rvn).
 * Tuples are indexed with the first component most significant, so index 0
 * is the zero tuple. Throws BoundExceeded when |R|^n exceeds `bound`.
 */
ModulePtr build_power_module(RingPtr ring, std::size_t n,
                             std::size_t bound = kDefaultPowerBound);

/// Components of a tuple index in R^n.
std::vector<std::size_t> tuple_components(std::size_t index,
                                          std::size_t ring_size,
                                          std::size_t n);
/// Coordinates where the tuple is nonzero, as a bitmask.
unsigned support_mask(std::size_t index, std::size_t ring_size, std::size_t n);

/**
 * Nonzero vectors u_1..u_l with pairwise disjoint supports such that T is the
 * sum of the cyclic pieces Ru_i. Depth-first search covering the least
 * uncovered coordinate first; nullopt when no such family exists.
 */
std::optional<std::vector<std::size_t>>
decompose_disjoint_supports(const FiniteModule &power, std::size_t n,
                            const ElementSet &t);

/**
 * Structure statements for R^n over a near-field R: ideal shape, disjoint
 * support decompositions (and their converse), c-classical primeness of
 * proper R-ideals and of R^n itself, commutation inside decompositions, and
 * the R^n annihilator statements. Throws NotANearField.
 */
std::vector<VerifierReport> verify_rn_theorems(RingPtr ring, std::size_t n,
                                               std::size_t bound =
                                                   kDefaultPowerBound);

} // namespace nearprime

#endif // NEARPRIME_NEARFIELD_HPP_
