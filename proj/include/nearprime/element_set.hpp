#ifndef NEARPRIME_ELEMENT_SET_HPP_
#define NEARPRIME_ELEMENT_SET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nearprime {

/// Which carrier a subset lives in: the near-ring itself or a module over it.
enum class Carrier : std::uint8_t { ring, module };

enum class SubstructureKind : std::uint8_t {
  subgroup,
  normal_subgroup,
  left_r_subgroup,
  right_r_subgroup,
  invariant_r_subgroup,
  left_ideal,
  right_ideal,
  ideal,
  r_submodule,
  r_ideal,
};

std::string_view to_string(SubstructureKind kind);
std::optional<SubstructureKind> parse_kind(std::string_view text);
/// Ring kinds live over R; r_submodule and r_ideal live over a module.
bool is_module_kind(SubstructureKind kind);
std::string_view to_string(Carrier carrier);

/**
 * A subset of a finite carrier, stored as a bitset over element indices.
 *
 * Equality ignores the optional kind tag. Ordering is by size, then by the
 * sorted member list, which is the order every enumeration reports in.
 */
class ElementSet {
public:
  ElementSet() = default;
  ElementSet(Carrier carrier, std::size_t universe);

  static ElementSet of(Carrier carrier, std::size_t universe,
                       std::initializer_list<std::size_t> members);
  static ElementSet of(Carrier carrier, std::size_t universe,
                       std::span<const std::size_t> members);
  static ElementSet full(Carrier carrier, std::size_t universe);
  static ElementSet zero(Carrier carrier, std::size_t universe);

  Carrier carrier() const { return carrier_; }
  std::size_t universe() const { return universe_; }

  bool contains(std::size_t i) const {
    return i < universe_ && (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void insert(std::size_t i);
  void erase(std::size_t i);
  /// Inserts and reports whether the element was new.
  bool add(std::size_t i);

  std::size_t size() const;
  bool empty() const;
  bool is_full() const { return size() == universe_; }
  bool is_zero() const { return size() == 1 && contains(0); }

  bool subset_of(const ElementSet &other) const;
  bool intersects(const ElementSet &other) const;
  ElementSet operator|(const ElementSet &other) const;
  ElementSet operator&(const ElementSet &other) const;
  /// Members of the universe not in this set.
  ElementSet complement() const;
  /// Same members viewed over another carrier of equal size (R versus R_R).
  ElementSet as(Carrier carrier) const;

  std::vector<std::size_t> members() const;
  std::size_t min_member() const;

  template <class F> void for_each(F &&f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int tz = std::countr_zero(bits);
        f(w * 64 + static_cast<std::size_t>(tz));
        bits &= bits - 1;
      }
    }
  }

  std::optional<SubstructureKind> kind;

  friend bool operator==(const ElementSet &a, const ElementSet &b) {
    return a.carrier_ == b.carrier_ && a.universe_ == b.universe_ &&
           a.words_ == b.words_;
  }
  friend std::strong_ordering operator<=>(const ElementSet &a,
                                          const ElementSet &b);

  std::size_t hash() const;

private:
  Carrier carrier_ = Carrier::ring;
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// "{0,2,3}" using indices.
std::string format_indices(const ElementSet &s);
/// "{0,x,1+x}" using element labels.
std::string format_labels(const ElementSet &s,
                          const std::vector<std::string> &labels);

struct ElementSetHash {
  std::size_t operator()(const ElementSet &s) const { return s.hash(); }
};

} // namespace nearprime

#endif // NEARPRIME_ELEMENT_SET_HPP_
