#ifndef NEARPRIME_CHARACTERIZATIONS_HPP_
#define NEARPRIME_CHARACTERIZATIONS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "nearprime/element_set.hpp"
#include "nearprime/primeness.hpp"
#include "nearprime/report.hpp"

namespace nearprime {

struct Condition {
  std::string label; // "(i)", "(ii)", ...
  bool value = false;
  /// Counterexample or failing residual when value is false.
  std::string detail;
};

struct CharacterizationResult {
  Variant variant = Variant::v0;
  /// False when RM lies inside P (the conditions are not stated there).
  bool applicable = true;
  std::vector<Condition> conditions;
  /// Whether the residuals (P:Rm), m not in P, form a chain.
  bool residuals_totally_ordered = true;
  /// Set when M/P could not be built and (0:R m) was taken as (P:Rm).
  bool quotient_fallback = false;

  bool agree() const;
};

/**
 * Evaluates every condition of the characterization for v (0, 2, 3 or c)
 * independently. v = 0, 2 have four conditions, v = 3, c five. Ideals
 * named in a condition must be ideals and satisfy the prime condition;
 * properness is not required. Throws NotAnRIdeal.
 */
CharacterizationResult characterization_conditions(const ModuleContext &ctx,
                                                   const ElementSet &p,
                                                   Variant v);

/// One report per v over every R-ideal P: "char-0", "char-2", ...
VerifierReport verify_characterization(const ModuleContext &ctx, Variant v);
/// Single-P form.
VerifierReport verify_characterization(const ModuleContext &ctx,
                                       const ElementSet &p, Variant v);

enum class Transfer {
  tilde_ideal,     // (P:M) is an ideal of R
  tilde_prime,     // v-prime P gives v-prime (P:M)
  tilde_classical, // v-classical P gives v-classical (P:M)
  quotient,        // M/P at {0} classifies like M at P
  residual_prime,  // v-classical P gives v-prime (P:N) for R-ideals N
  residual_classical, // v-prime P gives v-classical (P:N) for R-ideals N
};

std::string_view to_string(Transfer t);

/// Checks the transfer statement for one R-ideal P, all applicable v.
VerifierReport verify_transfer(const ModuleContext &ctx, const ElementSet &p,
                               Transfer which);
/// Same over every R-ideal P.
VerifierReport verify_transfer(const ModuleContext &ctx, Transfer which);

/// c => 3 => 2 => 0 for the classical notion.
VerifierReport verify_chain(const ModuleContext &ctx);
/// v-prime (Dauns) => v-classical for v = 0,2,3,c.
VerifierReport verify_prime_implies_classical(const ModuleContext &ctx);
/// Dauns 0-prime => Juglal 0-prime; notes where the conventions differ.
VerifierReport verify_convention_containment(const ModuleContext &ctx);
/// With an identity: 2-classical <=> 3-classical.
VerifierReport verify_identity_2eq3(const ModuleContext &ctx);

} // namespace nearprime

#endif // NEARPRIME_CHARACTERIZATIONS_HPP_
