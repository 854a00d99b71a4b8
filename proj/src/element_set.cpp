#include "nearprime/element_set.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <utility>

namespace nearprime {

namespace {

constexpr std::array<std::pair<SubstructureKind, std::string_view>, 10>
    kKindNames{{
        {SubstructureKind::subgroup, "subgroup"},
        {SubstructureKind::normal_subgroup, "normal-subgroup"},
        {SubstructureKind::left_r_subgroup, "left-r-subgroup"},
        {SubstructureKind::right_r_subgroup, "right-r-subgroup"},
        {SubstructureKind::invariant_r_subgroup, "invariant-r-subgroup"},
        {SubstructureKind::left_ideal, "left-ideal"},
        {SubstructureKind::right_ideal, "right-ideal"},
        {SubstructureKind::ideal, "ideal"},
        {SubstructureKind::r_submodule, "r-submodule"},
        {SubstructureKind::r_ideal, "r-ideal"},
    }};

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

} // namespace

std::string_view to_string(SubstructureKind kind) {
  for (const auto &[k, name] : kKindNames)
    if (k == kind)
      return name;
  return "?";
}

std::optional<SubstructureKind> parse_kind(std::string_view text) {
  for (const auto &[k, name] : kKindNames)
    if (name == text)
      return k;
  return std::nullopt;
}

bool is_module_kind(SubstructureKind kind) {
  return kind == SubstructureKind::r_submodule ||
         kind == SubstructureKind::r_ideal;
}

std::string_view to_string(Carrier carrier) {
  return carrier == Carrier::ring ? "ring" : "module";
}

ElementSet::ElementSet(Carrier carrier, std::size_t universe)
    : carrier_(carrier), universe_(universe), words_(word_count(universe), 0) {}

ElementSet ElementSet::of(Carrier carrier, std::size_t universe,
                          std::initializer_list<std::size_t> members) {
  ElementSet s(carrier, universe);
  for (auto m : members)
    s.insert(m);
  return s;
}

ElementSet ElementSet::of(Carrier carrier, std::size_t universe,
                          std::span<const std::size_t> members) {
  ElementSet s(carrier, universe);
  for (auto m : members)
    s.insert(m);
  return s;
}

ElementSet ElementSet::full(Carrier carrier, std::size_t universe) {
  ElementSet s(carrier, universe);
  for (std::size_t i = 0; i < universe; ++i)
    s.insert(i);
  return s;
}

ElementSet ElementSet::zero(Carrier carrier, std::size_t universe) {
  return of(carrier, universe, {0});
}

void ElementSet::insert(std::size_t i) {
  assert(i < universe_);
  words_[i >> 6] |= std::uint64_t{1} << (i & 63);
}

void ElementSet::erase(std::size_t i) {
  assert(i < universe_);
  words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

bool ElementSet::add(std::size_t i) {
  if (contains(i))
    return false;
  insert(i);
  return true;
}

std::size_t ElementSet::size() const {
  std::size_t n = 0;
  for (auto w : words_)
    n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

bool ElementSet::subset_of(const ElementSet &other) const {
  assert(universe_ == other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~other.words_[w])
      return false;
  return true;
}

bool ElementSet::intersects(const ElementSet &other) const {
  assert(universe_ == other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & other.words_[w])
      return true;
  return false;
}

ElementSet ElementSet::operator|(const ElementSet &other) const {
  assert(universe_ == other.universe_);
  ElementSet r = *this;
  r.kind.reset();
  for (std::size_t w = 0; w < words_.size(); ++w)
    r.words_[w] |= other.words_[w];
  return r;
}

ElementSet ElementSet::operator&(const ElementSet &other) const {
  assert(universe_ == other.universe_);
  ElementSet r = *this;
  r.kind.reset();
  for (std::size_t w = 0; w < words_.size(); ++w)
    r.words_[w] &= other.words_[w];
  return r;
}

ElementSet ElementSet::complement() const {
  ElementSet r(carrier_, universe_);
  for (std::size_t i = 0; i < universe_; ++i)
    if (!contains(i))
      r.insert(i);
  return r;
}

ElementSet ElementSet::as(Carrier carrier) const {
  ElementSet r = *this;
  r.carrier_ = carrier;
  r.kind.reset();
  return r;
}

std::vector<std::size_t> ElementSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t ElementSet::min_member() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w])
      return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return universe_;
}

std::strong_ordering operator<=>(const ElementSet &a, const ElementSet &b) {
  if (auto c = a.carrier_ <=> b.carrier_; c != 0)
    return c;
  if (auto c = a.universe_ <=> b.universe_; c != 0)
    return c;
  if (auto c = a.size() <=> b.size(); c != 0)
    return c;
  // Same size: the first differing element decides; the set holding the
  // smaller element comes first.
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    const std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff) {
      const std::uint64_t low = diff & (~diff + 1);
      return (a.words_[w] & low) ? std::strong_ordering::less
                                 : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

std::size_t ElementSet::hash() const {
  std::size_t h = universe_ * 1099511628211ull;
  for (auto w : words_)
    h = (h ^ static_cast<std::size_t>(w)) * 1099511628211ull;
  return h;
}

std::string format_indices(const ElementSet &s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first)
      out += ',';
    out += std::to_string(i);
    first = false;
  });
  return out + "}";
}

std::string format_labels(const ElementSet &s,
                          const std::vector<std::string> &labels) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first)
      out += ',';
    out += labels[i];
    first = false;
  });
  return out + "}";
}

} // namespace nearprime
