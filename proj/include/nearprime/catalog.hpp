#ifndef NEARPRIME_CATALOG_HPP_
#define NEARPRIME_CATALOG_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nearprime/near_ring.hpp"
#include "nearprime/primeness.hpp"
#include "nearprime/report.hpp"

namespace nearprime {

enum class ClaimKind {
  module_verdict,       // verdict of P in R_R
  ring_verdict,         // verdict of P as an ideal of R
  restricted_classical, // classical verdict with N from an explicit list
  witness_replay,       // a stated counterexample replays
  nonzero_submodules,   // nonzero R-submodules of R_R
  ideals,               // ideals of R
  table_fidelity,       // constructed DN(3,2) table equals the stored one
  near_field,           // near-field flag
  not_a_field,          // a left distributivity failure exists
};

struct ExpectedClaim {
  std::string id;
  std::string statement;
  std::string source;
  ClaimKind kind = ClaimKind::module_verdict;
  std::vector<std::size_t> subject{0};
  Variant variant = Variant::v0;
  Notion notion = Notion::classical;
  Convention convention = Convention::dauns;
  bool expected = true;
  /// witness_replay: "a=3;b=2;N=0,1,2,3".
  std::string witness;
  /// Expected list (submodules, ideals) or the N range (restricted).
  std::vector<std::vector<std::size_t>> sets;
};

struct CatalogEntry {
  std::string key;
  std::string title;
  std::string provenance;
  RawRing ring;
  AxiomPolicy policy = AxiomPolicy::enforce;
  std::vector<ExpectedClaim> claims;
  /// Documented defects of the stored table.
  std::vector<std::string> known_issues;
  /// Contradicted claims are findings here, not failures.
  bool tolerate_contradictions = false;
  /// Verifier names allowed to fail on this entry, with the reason.
  std::vector<std::pair<std::string, std::string>> whitelisted;
  /// Set for z4: the entry it resolves to.
  std::string alias_of;
};

/// klein4, z3, z4, z4-klein, z4-cyclic, z6, dn32.
const std::vector<CatalogEntry> &catalog_entries();
std::vector<std::string> catalog_keys();
/// nullptr for an unknown key.
const CatalogEntry *find_catalog_entry(std::string_view key);
/// Throws UnknownKey.
const CatalogEntry &load_example(std::string_view key);

/// The z4 candidate whose nonzero R-submodules are {0,1}, {0,2}, M.
std::string resolve_z4_alias();

RingPtr build_entry_ring(const CatalogEntry &entry);

/// The DN(3,2) operation table as printed, by element label.
const std::vector<std::vector<std::string>> &printed_dickson_table();

enum class ClaimStatus { confirmed, contradicted, not_applicable };
std::string_view to_string(ClaimStatus s);

struct ClaimResult {
  std::string id;
  std::string statement;
  std::string source;
  std::string expected;
  std::string observed;
  ClaimStatus status = ClaimStatus::confirmed;
  bool tolerated = false;
  std::string detail;
};

struct EntryRun {
  std::string key;
  std::string alias_of;
  std::size_t ring_size = 0;
  std::vector<ClaimResult> claims;
  std::vector<Classification> classifications;
  std::vector<std::string> ring_labels;
  std::vector<VerifierReport> reports;
  /// Reports that failed on a whitelisted theorem.
  std::vector<std::string> whitelisted_failures;
  std::vector<std::string> findings;

  bool ok() const;
};

struct CatalogRun {
  std::vector<EntryRun> entries;
  std::size_t confirmed = 0;
  std::size_t contradicted = 0;
  std::size_t tolerated = 0;
  std::size_t not_applicable = 0;
  std::size_t verifier_failures = 0;
  std::size_t whitelisted = 0;

  bool ok() const;
};

EntryRun run_entry(const CatalogEntry &entry);
/// Entries in the order given; an empty list gives an empty run.
CatalogRun run_catalog(const std::vector<std::string> &keys,
                       std::size_t jobs = 1);

nlohmann::ordered_json catalog_run_json(const CatalogRun &run);
std::string catalog_run_text(const CatalogRun &run);

/// Writes <dir>/<key>.json for every entry except aliases.
std::vector<std::filesystem::path>
export_fixtures(const std::filesystem::path &dir);
/// The JSON text written for one entry.
std::string fixture_text(const CatalogEntry &entry);

} // namespace nearprime

#endif // NEARPRIME_CATALOG_HPP_
