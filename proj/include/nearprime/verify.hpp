#ifndef NEARPRIME_VERIFY_HPP_
#define NEARPRIME_VERIFY_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "nearprime/primeness.hpp"
#include "nearprime/report.hpp"

namespace nearprime {

/// Names accepted by verify_theorem, in "all" order.
const std::vector<std::string> &theorem_names();

/**
 * Runs one named statement (or "all") over every R-ideal of the module.
 * "ann" expands to every annihilator statement. Throws UnknownKey.
 */
std::vector<VerifierReport> verify_theorem(const ModuleContext &ctx,
                                           std::string_view name,
                                           std::size_t jobs = 1);

} // namespace nearprime

#endif // NEARPRIME_VERIFY_HPP_
