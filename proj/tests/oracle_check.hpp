// Compares enumerate() and generated() against the 2^n oracle on every
// structure with at most 8 elements. Shared by the unit tests and the
// acceptance binary.
#ifndef NEARPRIME_TESTS_ORACLE_CHECK_HPP_
#define NEARPRIME_TESTS_ORACLE_CHECK_HPP_

#include <algorithm>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "oracle.hpp"

#include "nearprime/catalog.hpp"
#include "nearprime/nearfield.hpp"
#include "nearprime/substructures.hpp"

namespace oracle {

struct Subject {
  nearprime::RingPtr ring;
  nearprime::ModulePtr module;
};

/// Corpus rings, catalog rings up to 8 elements and a few small modules.
inline std::vector<Subject> small_subjects() {
  using namespace nearprime;
  std::vector<Subject> out;
  for (const auto &raw : corpus::small_near_rings()) {
    auto r = validate_near_ring(raw);
    out.push_back({r, regular_module(r)});
  }
  for (const auto &e : catalog_entries()) {
    if (!e.alias_of.empty() || e.ring.elements.size() > 8)
      continue;
    auto r = build_entry_ring(e);
    out.push_back({r, regular_module(r)});
  }
  auto z2 = validate_near_ring(corpus::zn_ring(2));
  out.push_back({z2, build_power_module(z2, 2)});
  out.push_back({z2, build_power_module(z2, 3)});
  auto sel = validate_near_ring(corpus::selector("z2-sel", corpus::cyclic(2), 0b10u));
  out.push_back({sel, build_power_module(sel, 3)});
  // Z4 acting componentwise on Z2 x Z4, index 4a + b.
  auto z4 = validate_near_ring(corpus::zn_ring(4));
  RawModule z2z4{"z4-on-z2xz4", corpus::labels(8),
                 corpus::table(8, [](auto x, auto y) {
                   return static_cast<long long>(((x / 4 + y / 4) % 2) * 4 + (x + y) % 4);
                 }),
                 std::vector<std::vector<long long>>(4, std::vector<long long>(8))};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t m = 0; m < 8; ++m)
      z2z4.action[r][m] = static_cast<long long>((r * (m / 4) % 2) * 4 + r * m % 4);
  out.push_back({z4, validate_module(z4, z2z4)});
  return out;
}

struct Mismatch {
  std::string structure;
  std::string what;
};

inline std::vector<Mismatch> compare_with_oracle(const Subject &s,
                                                 std::size_t *checks = nullptr) {
  using namespace nearprime;
  std::vector<Mismatch> bad;
  const auto &r = *s.ring;
  const auto &m = *s.module;
  const Ring orr = ring_of(r);
  const Module om = module_of(m);
  auto count = [&] {
    if (checks)
      ++*checks;
  };
  const std::vector<EnumerationStrategy> strategies{
      EnumerationStrategy::automatic, EnumerationStrategy::subgroup_lattice,
      EnumerationStrategy::closure_lattice};

  auto sweep = [&](SubstructureKind kind, std::size_t n, auto &&pred,
                   auto &&enumerate_with, auto &&gen, Carrier carrier) {
    const auto expected = filter_all(n, pred);
    std::vector<Mask> expected_sorted;
    for (const auto &strategy : strategies) {
      std::vector<Mask> got;
      for (const auto &e : enumerate_with(strategy))
        got.push_back(to_mask(e));
      auto want = expected;
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      count();
      if (got != want)
        bad.push_back({m.name(), std::string(to_string(kind)) + " enumeration (" +
                                     std::to_string(got.size()) + " vs " +
                                     std::to_string(want.size()) + ")"});
    }
    for (Mask v = 0; v <= full(n); ++v) {
      const Mask want = meet_containing(expected, v, n);
      const Mask got = to_mask(gen(to_set(v, carrier, n)));
      count();
      if (got != want)
        bad.push_back({m.name(), std::string(to_string(kind)) + " gen of mask " +
                                     std::to_string(v)});
    }
  };

  const bool regular = m.size() == r.size() && m.action_table() == r.mul_table();
  if (regular) {
    for (auto kind : {SubstructureKind::subgroup, SubstructureKind::normal_subgroup,
                      SubstructureKind::left_r_subgroup, SubstructureKind::right_r_subgroup,
                      SubstructureKind::invariant_r_subgroup, SubstructureKind::left_ideal,
                      SubstructureKind::right_ideal, SubstructureKind::ideal})
      sweep(
          kind, r.size(), [&](Mask x) { return ring_kind(orr, x, kind); },
          [&](EnumerationStrategy st) { return enumerate(r, kind, st); },
          [&](const ElementSet &v) { return generated(r, v, kind); }, Carrier::ring);
  }
  for (auto kind : {SubstructureKind::r_submodule, SubstructureKind::r_ideal})
    sweep(
        kind, m.size(), [&](Mask x) { return module_kind(om, r.size(), x, kind); },
        [&](EnumerationStrategy st) { return enumerate(m, kind, st); },
        [&](const ElementSet &v) { return generated(m, v, kind); }, Carrier::module);
  return bad;
}

} // namespace oracle

#endif // NEARPRIME_TESTS_ORACLE_CHECK_HPP_
