#ifndef NEARPRIME_NEAR_RING_HPP_
#define NEARPRIME_NEAR_RING_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nearprime/element_set.hpp"
#include "nearprime/error.hpp"

namespace nearprime {

using Elem = std::uint16_t;

/// Cayley table stored row-major. Entry (r, c) is the index of r op c.
class CayleyTable {
public:
  CayleyTable() = default;
  CayleyTable(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

  Elem operator()(std::size_t r, std::size_t c) const {
    return cells_[r * cols_ + c];
  }
  Elem &at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::vector<std::vector<std::size_t>> to_rows() const;

  friend bool operator==(const CayleyTable &, const CayleyTable &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> cells_;
};

/// Unvalidated table input, as read from JSON or built in code.
struct RawRing {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::vector<long long>> add;
  std::vector<std::vector<long long>> mul;
};

struct RawModule {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::vector<long long>> add;
  /// Rows indexed by ring element, columns by module element.
  std::vector<std::vector<long long>> action;
};

/// A finite group given by its addition table; index 0 is the identity.
class Group {
public:
  Group() = default;
  Group(std::vector<std::string> labels, CayleyTable add,
        std::vector<Elem> negatives);

  std::size_t size() const { return labels_.size(); }
  Elem add(std::size_t a, std::size_t b) const { return add_(a, b); }
  Elem neg(std::size_t a) const { return neg_[a]; }
  /// a - b, i.e. a + (-b).
  Elem sub(std::size_t a, std::size_t b) const { return add_(a, neg_[b]); }
  bool abelian() const { return abelian_; }

  const std::vector<std::string> &labels() const { return labels_; }
  const std::string &label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> index_of(const std::string &label) const;
  const CayleyTable &table() const { return add_; }

  friend bool operator==(const Group &, const Group &) = default;

private:
  std::vector<std::string> labels_;
  CayleyTable add_;
  std::vector<Elem> neg_;
  bool abelian_ = true;
};

/// One failed axiom, recorded instead of thrown under AxiomPolicy::record.
struct AxiomViolation {
  ErrorCode code;
  std::string message;
  std::vector<std::size_t> witness;
};

enum class AxiomPolicy {
  /// Throw on the first failed near-ring axiom.
  enforce,
  /// Keep the tables verbatim and list every failed axiom.
  record,
};

struct ValidationOptions {
  /// Reject rings with r*0 != 0 instead of flagging them.
  bool strict_zero_symmetric = false;
  AxiomPolicy policy = AxiomPolicy::enforce;
};

struct RingFlags {
  bool zero_symmetric = false;
  std::optional<std::size_t> identity;
  bool abelian_addition = false;
  bool near_field = false;
};

/// A validated zero-symmetric (or flagged) right near-ring.
class FiniteNearRing {
public:
  FiniteNearRing(std::string name, Group group, CayleyTable mul,
                 std::vector<AxiomViolation> violations);

  const std::string &name() const { return name_; }
  std::size_t size() const { return group_.size(); }
  const Group &group() const { return group_; }
  const CayleyTable &mul_table() const { return mul_; }
  const RingFlags &flags() const { return flags_; }

  Elem add(std::size_t a, std::size_t b) const { return group_.add(a, b); }
  Elem neg(std::size_t a) const { return group_.neg(a); }
  Elem sub(std::size_t a, std::size_t b) const { return group_.sub(a, b); }
  Elem mul(std::size_t a, std::size_t b) const { return mul_(a, b); }

  const std::string &label(std::size_t i) const { return group_.label(i); }
  const std::vector<std::string> &labels() const { return group_.labels(); }

  /// Axiom failures kept under AxiomPolicy::record; empty for valid rings.
  const std::vector<AxiomViolation> &violations() const { return violations_; }
  bool satisfies_axioms() const { return violations_.empty(); }

  ElementSet all() const { return ElementSet::full(Carrier::ring, size()); }
  ElementSet zero() const { return ElementSet::zero(Carrier::ring, size()); }
  ElementSet singleton(std::size_t i) const {
    return ElementSet::of(Carrier::ring, size(), {i});
  }

private:
  std::string name_;
  Group group_;
  CayleyTable mul_;
  RingFlags flags_;
  std::vector<AxiomViolation> violations_;
};

using RingPtr = std::shared_ptr<const FiniteNearRing>;

struct ModuleFlags {
  bool faithful = false;
  /// Elements m with Rm = M; empty when the module is not monogenic.
  std::vector<std::size_t> generators;
  bool monogenic() const { return !generators.empty(); }
};

/// A (left) near-ring module over a FiniteNearRing.
class FiniteModule {
public:
  FiniteModule(std::string name, RingPtr ring, Group group, CayleyTable action);

  const std::string &name() const { return name_; }
  const FiniteNearRing &ring() const { return *ring_; }
  const RingPtr &ring_ptr() const { return ring_; }
  std::size_t size() const { return group_.size(); }
  const Group &group() const { return group_; }
  const CayleyTable &action_table() const { return action_; }
  const ModuleFlags &flags() const { return flags_; }

  Elem add(std::size_t a, std::size_t b) const { return group_.add(a, b); }
  Elem neg(std::size_t a) const { return group_.neg(a); }
  Elem sub(std::size_t a, std::size_t b) const { return group_.sub(a, b); }
  /// r o m.
  Elem act(std::size_t r, std::size_t m) const { return action_(r, m); }

  const std::string &label(std::size_t i) const { return group_.label(i); }
  const std::vector<std::string> &labels() const { return group_.labels(); }

  ElementSet all() const { return ElementSet::full(Carrier::module, size()); }
  ElementSet zero() const { return ElementSet::zero(Carrier::module, size()); }
  ElementSet singleton(std::size_t i) const {
    return ElementSet::of(Carrier::module, size(), {i});
  }

private:
  std::string name_;
  RingPtr ring_;
  Group group_;
  CayleyTable action_;
  ModuleFlags flags_;
};

using ModulePtr = std::shared_ptr<const FiniteModule>;

/// Checks the group axioms of an addition table with identity at index 0.
Group validate_group(const std::vector<std::string> &labels,
                     const std::vector<std::vector<long long>> &add);

/// Moves the element labelled `identity` to index 0, permuting all tables.
RawRing normalize_identity(RawRing raw, const std::string &identity);

RingPtr validate_near_ring(const RawRing &raw, ValidationOptions options = {});

/// Under AxiomPolicy::record a module over a ring with recorded violations is
/// built even if its own axioms fail; the violations are returned through
/// `violations` when non-null.
ModulePtr validate_module(RingPtr ring, const RawModule &raw,
                          AxiomPolicy policy = AxiomPolicy::enforce,
                          std::vector<AxiomViolation> *violations = nullptr);

/// The module R_R: R acting on itself by multiplication.
ModulePtr regular_module(RingPtr ring);

RawRing to_raw(const FiniteNearRing &ring);
RawModule to_raw(const FiniteModule &module);

/// {a*x : a in A, x in X}, no additive closure. X may be over R or M.
ElementSet set_product(const FiniteModule &m, const ElementSet &a,
                       const ElementSet &x);
/// {a*x : a in A, x in X} with both sets over R.
ElementSet set_product(const FiniteNearRing &r, const ElementSet &a,
                       const ElementSet &x);
/// {k + y : k in K, y in Y}, no closure.
ElementSet sumset(const Group &g, const ElementSet &k, const ElementSet &y,
                  Carrier carrier);

/// (P:N) = {r in R : rN is contained in P}.
ElementSet residual(const FiniteModule &m, const ElementSet &p,
                    const ElementSet &n);

/// M/P with cosets ordered by least representative; requires P an R-ideal.
ModulePtr quotient_module(const FiniteModule &m, const ElementSet &p);

/// Returns the coset index of every element of M in quotient_module(m, p).
std::vector<std::size_t> coset_map(const FiniteModule &m, const ElementSet &p);

} // namespace nearprime

#endif // NEARPRIME_NEAR_RING_HPP_
