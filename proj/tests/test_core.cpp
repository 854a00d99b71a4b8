#include <doctest.h>

#include "corpus.hpp"
#include "oracle.hpp"
#include "tables.hpp"

#include "nearprime/nearfield.hpp"
#include "nearprime/near_ring.hpp"

using namespace nearprime;

namespace {

ElementSet rset(const FiniteNearRing &r, std::initializer_list<std::size_t> xs) {
  return ElementSet::of(Carrier::ring, r.size(), xs);
}
ElementSet mset(const FiniteModule &m, std::initializer_list<std::size_t> xs) {
  return ElementSet::of(Carrier::module, m.size(), xs);
}

ErrorCode code_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::bad_input;
}

} // namespace

TEST_CASE("klein selector ring validates as zero-symmetric") {
  auto r = validate_near_ring(tables::klein4());
  CHECK(r->flags().zero_symmetric);
  CHECK(r->flags().abelian_addition);
  CHECK_FALSE(r->flags().identity.has_value());
  CHECK_FALSE(r->flags().near_field);
  auto m = regular_module(r);
  CHECK(m->flags().monogenic());
  CHECK(m->flags().generators == std::vector<std::size_t>{3});
  CHECK(m->flags().faithful);
}

TEST_CASE("zero multiplication over any group is a near-ring") {
  for (auto add : {corpus::cyclic(5), corpus::klein(), corpus::s3()}) {
    const std::size_t n = add.size();
    auto r = validate_near_ring(corpus::make("zero", add, corpus::table(n, [](auto, auto) {
                                               return 0LL;
                                             })));
    CHECK(r->flags().zero_symmetric);
    CHECK(r->satisfies_axioms());
  }
  auto s3 = validate_near_ring(corpus::make("s3", corpus::s3(), corpus::Rows(6, std::vector<long long>(6, 0))));
  CHECK_FALSE(s3->flags().abelian_addition);
}

TEST_CASE("z6 table fails zero symmetry only under strict validation") {
  try {
    validate_near_ring(tables::z6(), {.strict_zero_symmetric = true});
    FAIL("strict validation accepted r*0 != 0");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::not_zero_symmetric);
    REQUIRE(e.witness().size() >= 1);
    CHECK(e.witness()[0] == 1); // 1*0 = 3
  }
  auto r = validate_near_ring(tables::z6());
  CHECK_FALSE(r->flags().zero_symmetric);
  CHECK(r->mul(1, 0) == 3);
}

TEST_CASE("validation rejects broken tables with the failing axiom") {
  SUBCASE("not a group") {
    auto raw = corpus::make("bad", corpus::cyclic(3), corpus::Rows(3, std::vector<long long>(3, 0)));
    raw.add[1][1] = 1;
    CHECK(code_of([&] { validate_near_ring(raw); }) == ErrorCode::not_a_group);
  }
  SUBCASE("out of range entry") {
    auto raw = corpus::make("bad", corpus::cyclic(3), corpus::Rows(3, std::vector<long long>(3, 0)));
    raw.mul[2][2] = 7;
    CHECK(code_of([&] { validate_near_ring(raw); }) == ErrorCode::bad_input);
  }
  SUBCASE("ring-like table that is not associative") {
    // a*b = a + b - 1 style rule folded into Z3: a*b = (a*b + 1) mod 3 is
    // neither zero-symmetric nor associative.
    auto raw = corpus::make("bad", corpus::cyclic(3), corpus::table(3, [](auto a, auto b) {
                              return static_cast<long long>((a + 2 * b) % 3);
                            }));
    const auto code = code_of([&] { validate_near_ring(raw); });
    CHECK((code == ErrorCode::not_associative_mul || code == ErrorCode::not_right_distributive));
  }
  SUBCASE("not right distributive") {
    // a*b = a^2 over Z3: (1+1)*1 = 1 but 1*1 + 1*1 = 2.
    auto raw = corpus::make("bad", corpus::cyclic(3), corpus::table(3, [](auto a, auto b) {
                              return b == 0 ? 0LL : static_cast<long long>(a * a % 3);
                            }));
    CHECK(code_of([&] { validate_near_ring(raw); }) == ErrorCode::not_right_distributive);
  }
  SUBCASE("record policy keeps the table") {
    auto r = validate_near_ring(tables::z4_cyclic(), {.policy = AxiomPolicy::record});
    CHECK_FALSE(r->satisfies_axioms());
    CHECK(r->mul(3, 3) == 1);
  }
}

TEST_CASE("trivial module over the klein ring is not faithful") {
  auto r = validate_near_ring(tables::klein4());
  RawModule raw{"zero", {"0"}, {{0}}, std::vector<std::vector<long long>>(4, {0})};
  auto m = validate_module(r, raw);
  CHECK(m->size() == 1);
  CHECK_FALSE(m->flags().faithful);
}

TEST_CASE("near-field acting on itself is faithful") {
  auto m = regular_module(build_dickson_3_2());
  CHECK(m->flags().faithful);
  CHECK(m->flags().generators.size() == 8);
}

TEST_CASE("set products are pointwise") {
  auto k = validate_near_ring(tables::klein4());
  auto km = regular_module(k);
  CHECK(set_product(*km, rset(*k, {0, 2}), mset(*km, {0, 2})) == mset(*km, {0}));
  CHECK(set_product(*k, rset(*k, {0}), k->all()) == k->zero());
  auto z3 = validate_near_ring(tables::z3());
  CHECK(set_product(*z3, rset(*z3, {1}), z3->all()) == rset(*z3, {0, 1}));
  // ABI is evaluated left to right: ({0,2}{0,2})M.
  CHECK(set_product(*km, set_product(*k, rset(*k, {0, 2}), rset(*k, {0, 2})), km->all()) ==
        km->zero());
}

TEST_CASE("sumsets are not closed") {
  auto z6 = validate_near_ring(corpus::zn_ring(6));
  auto s = sumset(z6->group(), rset(*z6, {1}), rset(*z6, {1, 2}), Carrier::ring);
  CHECK(s == rset(*z6, {2, 3}));
}

TEST_CASE("residuals match the brute-force oracle") {
  auto k = validate_near_ring(tables::klein4());
  auto km = regular_module(k);
  CHECK(residual(*km, km->zero(), km->all()) == k->zero());
  CHECK(residual(*km, km->all(), km->all()) == k->all());
  // rM inside {0,1} needs r*3 = r in {0,1}.
  CHECK(residual(*km, mset(*km, {0, 1}), km->all()) == rset(*k, {0, 1}));

  for (const auto &raw : corpus::small_near_rings()) {
    auto r = validate_near_ring(raw);
    auto m = regular_module(r);
    const auto orr = oracle::ring_of(*r);
    const auto om = oracle::module_of(*m);
    const std::size_t n = r->size();
    for (oracle::Mask p = 1; p <= oracle::full(n); p += 2)
      for (oracle::Mask q = 1; q <= oracle::full(n); q += 3) {
        auto got = residual(*m, oracle::to_set(p, Carrier::module, n),
                            oracle::to_set(q, Carrier::module, n));
        REQUIRE(oracle::to_mask(got) == oracle::residual(orr, om, p, q));
      }
  }
}

TEST_CASE("quotient modules") {
  auto k = validate_near_ring(tables::klein4());
  auto km = regular_module(k);
  CHECK(quotient_module(*km, km->all())->size() == 1);
  auto same = quotient_module(*km, km->zero());
  CHECK(same->group().table() == km->group().table());
  CHECK(same->action_table() == km->action_table());

  auto z6 = validate_near_ring(tables::z6());
  auto m = regular_module(z6);
  const auto p = mset(*m, {0, 3});
  auto q = quotient_module(*m, p);
  REQUIRE(q->size() == 3);
  // Cosets {0,3}, {1,4}, {2,5}; the action is computed on representatives.
  const auto cm = coset_map(*m, p);
  CHECK(cm == std::vector<std::size_t>{0, 1, 2, 0, 1, 2});
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t x = 0; x < 6; ++x) {
      CHECK(q->act(r, cm[x]) == cm[m->act(r, x)]);
      for (std::size_t y = 0; y < 6; ++y)
        CHECK(q->add(cm[x], cm[y]) == cm[m->add(x, y)]);
    }
}

TEST_CASE("power modules") {
  auto dn = build_dickson_3_2();
  CHECK(build_power_module(dn, 2)->size() == 81);
  auto k = validate_near_ring(tables::klein4());
  auto k2 = build_power_module(k, 2);
  CHECK(k2->size() == 16);
  // n = 1 reproduces R_R.
  auto k1 = build_power_module(k, 1);
  CHECK(k1->group().table() == regular_module(k)->group().table());
  CHECK(k1->action_table() == regular_module(k)->action_table());
  CHECK(tuple_components(7, 4, 2) == std::vector<std::size_t>{1, 3});
  CHECK(support_mask(4, 4, 2) == 0b01u); // (1,0)
  CHECK(support_mask(1, 4, 2) == 0b10u); // (0,1)
  CHECK(code_of([&] { build_power_module(dn, 4); }) == ErrorCode::bound_exceeded);
  // Componentwise action.
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t v = 0; v < 16; ++v) {
      const auto c = tuple_components(v, 4, 2);
      CHECK(tuple_components(k2->act(r, v), 4, 2) ==
            std::vector<std::size_t>{k->mul(r, c[0]), k->mul(r, c[1])});
    }
}

TEST_CASE("identity can be moved to index 0") {
  auto raw = corpus::make("z3", corpus::cyclic(3), tables::z3_mul);
  // Relabel so that "0" sits at index 2.
  RawRing shuffled = raw;
  const std::vector<std::size_t> perm{2, 1, 0}; // new index -> old index
  std::vector<std::size_t> inv(3);
  for (std::size_t i = 0; i < 3; ++i)
    inv[perm[i]] = i;
  for (std::size_t a = 0; a < 3; ++a) {
    shuffled.elements[a] = raw.elements[perm[a]];
    for (std::size_t b = 0; b < 3; ++b) {
      shuffled.add[a][b] = static_cast<long long>(inv[raw.add[perm[a]][perm[b]]]);
      shuffled.mul[a][b] = static_cast<long long>(inv[raw.mul[perm[a]][perm[b]]]);
    }
  }
  auto back = normalize_identity(shuffled, "0");
  CHECK(back.elements == raw.elements);
  CHECK(back.add == raw.add);
  CHECK(back.mul == raw.mul);
}
