#ifndef NEARPRIME_REPORT_HPP_
#define NEARPRIME_REPORT_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nearprime {

enum class ReportOutcome { holds, fails, vacuous };

inline std::string_view to_string(ReportOutcome o) {
  switch (o) {
  case ReportOutcome::holds: return "holds";
  case ReportOutcome::fails: return "fails";
  case ReportOutcome::vacuous: return "vacuous";
  }
  return "?";
}

/// Outcome of one named statement checked exhaustively on one structure.
struct VerifierReport {
  static constexpr std::size_t kKeptFailures = 16;

  std::string theorem;
  std::string structure;
  std::size_t instances_checked = 0;
  ReportOutcome outcome = ReportOutcome::vacuous;
  /// First failing instance, in label form.
  std::string witness;
  /// Up to kKeptFailures failing instances; failure_count counts them all.
  std::vector<std::string> failures;
  std::size_t failure_count = 0;
  std::vector<std::string> notes;

  VerifierReport() = default;
  VerifierReport(std::string theorem_, std::string structure_)
      : theorem(std::move(theorem_)), structure(std::move(structure_)) {}

  /// Counts one instance; keeps every failure, the first as the witness.
  template <class F> void check(bool ok, F &&describe) {
    ++instances_checked;
    if (ok) {
      if (outcome == ReportOutcome::vacuous)
        outcome = ReportOutcome::holds;
      return;
    }
    ++failure_count;
    if (failures.size() >= kKeptFailures) {
      outcome = ReportOutcome::fails;
      return;
    }
    std::string w = describe();
    if (outcome != ReportOutcome::fails)
      witness = w;
    outcome = ReportOutcome::fails;
    failures.push_back(std::move(w));
  }
  void note(std::string text) { notes.push_back(std::move(text)); }

  bool ok() const { return outcome != ReportOutcome::fails; }
};

} // namespace nearprime

#endif // NEARPRIME_REPORT_HPP_
