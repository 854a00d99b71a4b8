#include <doctest.h>

#include "oracle_check.hpp"
#include "tables.hpp"

#include "nearprime/nearfield.hpp"
#include "nearprime/substructures.hpp"

using namespace nearprime;

namespace {

std::vector<std::vector<std::size_t>> members(const std::vector<ElementSet> &sets) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto &s : sets)
    out.push_back(s.members());
  return out;
}

using Lists = std::vector<std::vector<std::size_t>>;

} // namespace

TEST_CASE("membership examples") {
  auto k = validate_near_ring(tables::klein4());
  auto km = regular_module(k);
  CHECK(is_substructure(*km, ElementSet::of(Carrier::module, 4, {0, 1}),
                        SubstructureKind::r_submodule)
            .holds);
  for (int kind = 0; kind <= static_cast<int>(SubstructureKind::r_ideal); ++kind) {
    const auto kd = static_cast<SubstructureKind>(kind);
    CHECK(is_substructure(*km, is_module_kind(kd) ? km->zero() : k->zero(), kd).holds);
  }
  auto z3 = validate_near_ring(tables::z3());
  auto chk = is_substructure(*z3, ElementSet::of(Carrier::ring, 3, {0, 1}),
                             SubstructureKind::subgroup);
  CHECK_FALSE(chk.holds);
  // Reported as -1 = 2 not in S; 1 + 1 is the same element.
  REQUIRE(chk.witness == std::vector<std::size_t>{1});
  CHECK(z3->neg(1) == 2);
  CHECK(z3->add(1, 1) == 2);
}

TEST_CASE("zero convention is reported on non-zero-symmetric rings") {
  auto z6 = validate_near_ring(tables::z6());
  auto chk = is_substructure(*z6, z6->zero(), SubstructureKind::left_r_subgroup);
  CHECK(chk.holds);
  CHECK(chk.by_zero_convention);
  CHECK_FALSE(is_substructure(*z6, z6->zero(), SubstructureKind::left_r_subgroup, false).holds);
}

TEST_CASE("enumeration examples") {
  auto k = validate_near_ring(tables::klein4());
  auto km = regular_module(k);
  CHECK(members(enumerate(*km, SubstructureKind::r_submodule)) ==
        Lists{{0}, {0, 1}, {0, 2}, {0, 1, 2, 3}});
  CHECK(members(enumerate(*k, SubstructureKind::ideal)) == Lists{{0}, {0, 1, 2, 3}});

  auto z6 = validate_near_ring(tables::z6());
  CHECK(members(enumerate(*regular_module(z6), SubstructureKind::r_submodule)) ==
        Lists{{0}, {0, 3}, {0, 1, 2, 3, 4, 5}});

  // Both readings of the z4 addition, and which one gives {0,1}, {0,2}, M.
  auto zk = validate_near_ring(tables::z4_klein(), {.policy = AxiomPolicy::record});
  CHECK(members(enumerate(*regular_module(zk), SubstructureKind::r_submodule)) ==
        Lists{{0}, {0, 1}, {0, 2}, {0, 1, 2, 3}});
  auto zc = validate_near_ring(tables::z4_cyclic(), {.policy = AxiomPolicy::record});
  CHECK(members(enumerate(*regular_module(zc), SubstructureKind::r_submodule)) !=
        Lists{{0}, {0, 1}, {0, 2}, {0, 1, 2, 3}});
}

TEST_CASE("generated substructures") {
  auto k = validate_near_ring(tables::klein4());
  auto km = regular_module(k);
  CHECK(generated(*km, ElementSet(Carrier::module, 4), SubstructureKind::r_submodule) ==
        km->zero());
  CHECK(generated(*km, km->singleton(1), SubstructureKind::r_submodule).members() ==
        std::vector<std::size_t>{0, 1});
  auto dm = regular_module(build_dickson_3_2());
  CHECK(generated(*dm, dm->singleton(1), SubstructureKind::r_submodule).is_full());
}

TEST_CASE("enumerated sets respect the kind hierarchy") {
  for (const auto &s : oracle::small_subjects()) {
    const auto &r = *s.ring;
    const auto &m = *s.module;
    if (!r.flags().zero_symmetric)
      continue;
    for (const auto &i : enumerate(m, SubstructureKind::r_ideal))
      CHECK(is_substructure(m, i, SubstructureKind::r_submodule).holds);
    for (const auto &i : enumerate(r, SubstructureKind::ideal)) {
      CHECK(is_substructure(r, i, SubstructureKind::left_ideal).holds);
      CHECK(is_substructure(r, i, SubstructureKind::right_ideal).holds);
    }
    for (const auto &i : enumerate(r, SubstructureKind::normal_subgroup))
      CHECK(is_substructure(r, i, SubstructureKind::subgroup).holds);
  }
}

TEST_CASE("enumeration and gen agree with the 2^n oracle") {
  std::size_t checks = 0;
  for (const auto &s : oracle::small_subjects()) {
    CAPTURE(s.module->name());
    const auto bad = oracle::compare_with_oracle(s, &checks);
    for (const auto &b : bad)
      FAIL_CHECK(b.structure << ": " << b.what);
  }
  CHECK(checks > 1000);
}

TEST_CASE("subgroup lattice of the 81-element elementary abelian group") {
  auto m = build_power_module(build_dickson_3_2(), 2);
  auto lattice = subgroup_lattice(m->group(), Carrier::module);
  REQUIRE(lattice.has_value());
  // Subgroups of (Z3)^4: 1 + 40 + 130 + 40 + 1.
  CHECK(lattice->size() == 212);
  CHECK_FALSE(subgroup_lattice(m->group(), Carrier::module, 100).has_value());
}
