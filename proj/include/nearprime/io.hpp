#ifndef NEARPRIME_IO_HPP_
#define NEARPRIME_IO_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nearprime/annihilators.hpp"
#include "nearprime/msystems.hpp"
#include "nearprime/near_ring.hpp"
#include "nearprime/primeness.hpp"
#include "nearprime/report.hpp"

namespace nearprime {

using Json = nlohmann::ordered_json;

inline constexpr std::size_t kDefaultMaxOrder = 256;

/// NEARPRIME_MAX_ORDER if set and numeric, else `fallback`.
std::size_t max_order_from_env(std::size_t fallback = kDefaultMaxOrder);

struct LoadOptions {
  bool strict = false;
  /// Files may also ask for record mode with "axiom_policy": "record".
  AxiomPolicy policy = AxiomPolicy::enforce;
  std::size_t max_order = kDefaultMaxOrder;
};

/// A ring file yields its regular module R_R; a module file its module.
struct LoadedStructure {
  RingPtr ring;
  ModulePtr module;
  bool module_file = false;
  std::vector<AxiomViolation> module_violations;
};

RawRing ring_from_json(const Json &doc);
RawModule module_from_json(const Json &doc);

/**
 * Parses a ring or module document. A module's "ring" is an inline ring
 * object or a name, resolved first as <base_dir>/<name>.json and then as a
 * catalog key. Throws Error (BadInput, axiom codes, BoundExceeded).
 */
LoadedStructure load_structure(const Json &doc, const LoadOptions &options,
                               const std::filesystem::path &base_dir = {});
LoadedStructure load_structure_file(const std::filesystem::path &path,
                                    const LoadOptions &options);

Json to_json(const RawRing &raw);
/// Module document with the ring inlined.
Json to_json(const RawModule &raw, const RawRing &ring);
/// Ring document, or module document when the module is not R_R.
Json structure_json(const FiniteNearRing &ring, const FiniteModule *module,
                    bool record_policy);

/// "0,3" or "{0,3}" or "" (empty set) to a subset of the carrier.
/// Throws BadInput on malformed or out-of-range indices.
ElementSet parse_subset(std::string_view text, Carrier carrier,
                        std::size_t universe);

Json set_json(const ElementSet &s);
/// "A=0,1;B=0,2", the form classify --check-witness reads back.
std::string witness_argument(const Witness &w);
Json witness_json(const Witness &w, const std::vector<std::string> &ring_labels,
                  const std::vector<std::string> &module_labels);
Json verdict_json(const Verdict &v, const std::vector<std::string> &ring_labels,
                  const std::vector<std::string> &module_labels);
Json classification_json(const Classification &c,
                         const std::vector<std::string> &ring_labels,
                         const std::vector<std::string> &module_labels);
Json report_json(const VerifierReport &r);
Json violation_json(const AxiomViolation &v);

} // namespace nearprime

#endif // NEARPRIME_IO_HPP_
