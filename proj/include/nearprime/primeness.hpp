#ifndef NEARPRIME_PRIMENESS_HPP_
#define NEARPRIME_PRIMENESS_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nearprime/element_set.hpp"
#include "nearprime/near_ring.hpp"

namespace nearprime {

enum class Variant { v0, v1, v2, v3, vc };
enum class Notion { prime, classical };
/// Range of B in the module 0-prime test: R-submodules or R-ideals.
enum class Convention { dauns, juglal };

/// The variants defined for modules, in report order.
inline constexpr std::array<Variant, 4> kModuleVariants{
    Variant::v0, Variant::v2, Variant::v3, Variant::vc};

std::string_view to_string(Variant v);
std::string_view to_string(Notion n);
std::string_view to_string(Convention c);
std::optional<Variant> parse_variant(std::string_view text);
std::optional<Notion> parse_notion(std::string_view text);
std::optional<Convention> parse_convention(std::string_view text);

/// One named component of a counterexample: a set (A, B, N, ...) or a single
/// element (a, b, m, ...).
struct WitnessPart {
  std::string name;
  Carrier carrier = Carrier::ring;
  std::optional<ElementSet> set;
  std::size_t element = 0;

  bool is_set() const { return set.has_value(); }
};

struct Witness {
  std::vector<WitnessPart> parts;
  /// Which clause failed, e.g. "ABN in P but AN, BN not in P".
  std::string clause;

  const WitnessPart *find(std::string_view name) const;
};

/// "A={0,2} B={0,2} N={0,1,2,3}" with ring labels for ring parts and module
/// labels for module parts.
std::string format_witness(const Witness &w,
                           const std::vector<std::string> &ring_labels,
                           const std::vector<std::string> &module_labels);

enum class Outcome { holds, fails, not_applicable };
std::string_view to_string(Outcome o);

struct Verdict {
  Outcome outcome = Outcome::holds;
  std::optional<Witness> witness;
  /// Why a verdict is not applicable.
  std::string reason;

  bool holds() const { return outcome == Outcome::holds; }
  bool fails() const { return outcome == Outcome::fails; }

  static Verdict yes() { return {}; }
  static Verdict no(Witness w) { return {Outcome::fails, std::move(w), {}}; }
  static Verdict na(std::string reason) {
    return {Outcome::not_applicable, std::nullopt, std::move(reason)};
  }
};

/// Enumerated quantifier domains of a near-ring, computed once.
class RingContext {
public:
  explicit RingContext(RingPtr ring);

  const FiniteNearRing &ring() const { return *ring_; }
  const RingPtr &ring_ptr() const { return ring_; }
  const std::vector<ElementSet> &ideals() const { return ideals_; }
  const std::vector<ElementSet> &left_ideals() const { return left_ideals_; }
  const std::vector<ElementSet> &left_r_subgroups() const {
    return left_r_subgroups_;
  }
  ElementSet all() const { return ring_->all(); }
  /// aR for every a.
  const ElementSet &a_r(std::size_t a) const { return a_r_[a]; }

private:
  RingPtr ring_;
  std::vector<ElementSet> ideals_;
  std::vector<ElementSet> left_ideals_;
  std::vector<ElementSet> left_r_subgroups_;
  std::vector<ElementSet> a_r_;
};

/// Module plus its ring context and enumerated R-submodules and R-ideals.
class ModuleContext {
public:
  explicit ModuleContext(ModulePtr module);

  const FiniteModule &module() const { return *module_; }
  const ModulePtr &module_ptr() const { return module_; }
  const RingContext &rings() const { return ring_; }
  const FiniteNearRing &ring() const { return ring_.ring(); }
  const std::vector<ElementSet> &submodules() const { return submodules_; }
  const std::vector<ElementSet> &r_ideals() const { return r_ideals_; }
  ElementSet all() const { return module_->all(); }
  /// RM, the image of the action.
  const ElementSet &rm() const { return rm_; }

private:
  ModulePtr module_;
  RingContext ring_;
  std::vector<ElementSet> submodules_;
  std::vector<ElementSet> r_ideals_;
  ElementSet rm_;
};

// Ring ideals.

/// Prime test for a proper two-sided ideal P (v = 0,1,2,3,c).
/// Throws NotAnIdeal or NotProper.
Verdict is_prime_ring_ideal(const RingContext &ctx, const ElementSet &p,
                            Variant v);
/// "Q is a v-prime ideal" without the properness requirement: fails when Q
/// is not an ideal, otherwise evaluates the prime condition.
Verdict ring_prime_condition(const RingContext &ctx, const ElementSet &q,
                             Variant v);
/// Classical prime test for a proper ideal (v = 0,2,3,c).
/// Throws NotAnIdeal, NotProper or V1NotDefined.
Verdict is_classical_prime_ring_ideal(const RingContext &ctx,
                                      const ElementSet &p, Variant v);
/// Classical condition without properness; fails when Q is not an ideal.
Verdict ring_classical_condition(const RingContext &ctx, const ElementSet &q,
                                 Variant v);

// Module R-ideals.

/// Which N the module classical test quantifies over.
struct ClassicalOptions {
  enum class Range { r_submodules, r_ideals, explicit_list };
  Range range = Range::r_submodules;
  /// Used when range == explicit_list.
  std::vector<ElementSet> n_list;
};

/// Prime test for an R-ideal P with RM not inside P. Not applicable when
/// RM is inside P. Throws NotAnRIdeal or V1NotDefined.
Verdict is_prime_module_ideal(const ModuleContext &ctx, const ElementSet &p,
                              Variant v,
                              Convention convention = Convention::dauns);
/// Classical prime test; same preconditions as the prime test.
Verdict is_classical_prime_module_ideal(const ModuleContext &ctx,
                                        const ElementSet &p, Variant v,
                                        const ClassicalOptions &options = {});

/// What a classification or witness refers to.
enum class Target { ring_ideal, module_r_ideal };
std::string_view to_string(Target t);

/**
 * Re-evaluates a reported counterexample: true when every part lies in its
 * quantifier domain, the hypothesis holds and the conclusion fails.
 */
bool replay_witness(const ModuleContext &ctx, Target target,
                    const ElementSet &p, Notion notion, Variant v,
                    Convention convention, const Witness &w);

/// Parses "A=0,2;B=0,2;N=0,1,2,3" or "a=3;b=2;N=0,1,2,3". Upper-case names
/// are sets, lower-case names elements; the carrier follows from the name,
/// the target and the notion. Throws BadInput.
Witness parse_witness(std::string_view text, Target target, Notion notion,
                      std::size_t ring_size, std::size_t module_size);

struct VerdictEntry {
  Variant variant;
  Notion notion;
  Convention convention;
  Verdict verdict;
};

/// Full verdict matrix for one subject P.
struct Classification {
  ElementSet subject;
  Target target = Target::module_r_ideal;
  std::vector<VerdictEntry> verdicts;

  const Verdict *find(Variant v, Notion n,
                      Convention c = Convention::dauns) const;
};

/// Module R-ideal: prime (Dauns for every v, Juglal for v=0) and classical,
/// v = 0,1,2,3,c; v=1 is always not applicable.
Classification classify(const ModuleContext &ctx, const ElementSet &p);
/// Ring ideal: prime v = 0,1,2,3,c and classical v = 0,2,3,c (v=1 not
/// applicable). Non-ideals throw; an improper P yields not applicable.
Classification classify_ring(const RingContext &ctx, const ElementSet &p);
/// Every proper R-ideal of the module.
std::vector<Classification> classify_all(const ModuleContext &ctx);
/// Every proper ideal of the ring.
std::vector<Classification> classify_all_ring(const RingContext &ctx);

} // namespace nearprime

#endif // NEARPRIME_PRIMENESS_HPP_
