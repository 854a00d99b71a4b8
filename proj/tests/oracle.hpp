// Brute-force reference implementations. Everything here works on plain
// bitmasks straight from the definitions: no lattices, no closures, no
// caching. Carriers must have at most 64 elements.
#ifndef NEARPRIME_TESTS_ORACLE_HPP_
#define NEARPRIME_TESTS_ORACLE_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "nearprime/near_ring.hpp"
#include "nearprime/primeness.hpp"

namespace oracle {

using Mask = std::uint64_t;
using Grid = std::vector<std::vector<std::size_t>>;

struct Ring {
  std::size_t n = 0;
  Grid add, mul;
  std::vector<std::size_t> neg;
};

struct Module {
  std::size_t n = 0;
  Grid add, act; // act[r][m]
  std::vector<std::size_t> neg;
};

inline bool has(Mask s, std::size_t i) { return (s >> i) & 1u; }
inline Mask bit(std::size_t i) { return Mask{1} << i; }
inline Mask full(std::size_t n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

template <class F> void each(Mask s, F &&f) {
  while (s) {
    f(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
}

inline std::vector<std::size_t> negs(const Grid &add) {
  std::vector<std::size_t> out(add.size());
  for (std::size_t a = 0; a < add.size(); ++a)
    for (std::size_t b = 0; b < add.size(); ++b)
      if (add[a][b] == 0)
        out[a] = b;
  return out;
}

inline Ring ring_of(const nearprime::FiniteNearRing &r) {
  Ring o;
  o.n = r.size();
  o.add.assign(o.n, std::vector<std::size_t>(o.n));
  o.mul = o.add;
  for (std::size_t a = 0; a < o.n; ++a)
    for (std::size_t b = 0; b < o.n; ++b) {
      o.add[a][b] = r.group().table()(a, b);
      o.mul[a][b] = r.mul_table()(a, b);
    }
  o.neg = negs(o.add);
  return o;
}

inline Module module_of(const nearprime::FiniteModule &m) {
  Module o;
  o.n = m.size();
  o.add.assign(o.n, std::vector<std::size_t>(o.n));
  for (std::size_t a = 0; a < o.n; ++a)
    for (std::size_t b = 0; b < o.n; ++b)
      o.add[a][b] = m.group().table()(a, b);
  o.act.assign(m.ring().size(), std::vector<std::size_t>(o.n));
  for (std::size_t r = 0; r < m.ring().size(); ++r)
    for (std::size_t x = 0; x < o.n; ++x)
      o.act[r][x] = m.action_table()(r, x);
  o.neg = negs(o.add);
  return o;
}

inline Module regular(const Ring &r) { return Module{r.n, r.add, r.mul, r.neg}; }

inline Mask to_mask(const nearprime::ElementSet &s) {
  Mask m = 0;
  for (auto i : s.members())
    m |= bit(i);
  return m;
}

inline nearprime::ElementSet to_set(Mask m, nearprime::Carrier c, std::size_t n) {
  nearprime::ElementSet s(c, n);
  each(m, [&](std::size_t i) { s.insert(i); });
  return s;
}

// Substructure tests, one clause at a time.

inline bool subgroup(const Grid &add, const std::vector<std::size_t> &neg, Mask s) {
  if (!has(s, 0))
    return false;
  bool ok = true;
  each(s, [&](std::size_t a) {
    if (!has(s, neg[a]))
      ok = false;
    each(s, [&](std::size_t b) {
      if (!has(s, add[a][b]))
        ok = false;
    });
  });
  return ok;
}

inline bool normal(const Grid &add, const std::vector<std::size_t> &neg,
                   std::size_t n, Mask s) {
  if (!subgroup(add, neg, s))
    return false;
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t x = 0; x < n; ++x)
      if (has(s, x) && !has(s, add[add[g][x]][neg[g]]))
        return false;
  return true;
}

inline bool left_closed(const Grid &act, std::size_t rn, Mask s) {
  for (std::size_t r = 0; r < rn; ++r)
    for (std::size_t x = 0; x < act[r].size(); ++x)
      if (has(s, x) && !has(s, act[r][x]))
        return false;
  return true;
}

inline bool right_closed(const Ring &r, Mask s) {
  for (std::size_t x = 0; x < r.n; ++x)
    for (std::size_t b = 0; b < r.n; ++b)
      if (has(s, x) && !has(s, r.mul[x][b]))
        return false;
  return true;
}

/// r(m + i) - rm in S for every r, m and i in S.
inline bool absorbs(const Grid &add, const std::vector<std::size_t> &neg,
                    const Grid &act, std::size_t rn, std::size_t n, Mask s) {
  for (std::size_t r = 0; r < rn; ++r)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t i = 0; i < n; ++i)
        if (has(s, i) && !has(s, add[act[r][add[m][i]]][neg[act[r][m]]]))
          return false;
  return true;
}

using nearprime::SubstructureKind;

/// With the zero convention: {0} always qualifies.
inline bool ring_kind(const Ring &r, Mask s, SubstructureKind k) {
  if (s == 1)
    return true;
  switch (k) {
  case SubstructureKind::subgroup: return subgroup(r.add, r.neg, s);
  case SubstructureKind::normal_subgroup: return normal(r.add, r.neg, r.n, s);
  case SubstructureKind::left_r_subgroup:
    return subgroup(r.add, r.neg, s) && left_closed(r.mul, r.n, s);
  case SubstructureKind::right_r_subgroup:
    return subgroup(r.add, r.neg, s) && right_closed(r, s);
  case SubstructureKind::invariant_r_subgroup:
    return subgroup(r.add, r.neg, s) && left_closed(r.mul, r.n, s) &&
           right_closed(r, s);
  case SubstructureKind::left_ideal:
    return normal(r.add, r.neg, r.n, s) &&
           absorbs(r.add, r.neg, r.mul, r.n, r.n, s);
  case SubstructureKind::right_ideal:
    return normal(r.add, r.neg, r.n, s) && right_closed(r, s);
  case SubstructureKind::ideal:
    return normal(r.add, r.neg, r.n, s) && right_closed(r, s) &&
           absorbs(r.add, r.neg, r.mul, r.n, r.n, s);
  default: return false;
  }
}

inline bool module_kind(const Module &m, std::size_t rn, Mask s,
                        SubstructureKind k) {
  if (s == 1)
    return true;
  if (k == SubstructureKind::r_submodule)
    return subgroup(m.add, m.neg, s) && left_closed(m.act, rn, s);
  if (k == SubstructureKind::r_ideal)
    return normal(m.add, m.neg, m.n, s) &&
           absorbs(m.add, m.neg, m.act, rn, m.n, s);
  return false;
}

template <class Pred> std::vector<Mask> filter_all(std::size_t n, Pred &&pred) {
  std::vector<Mask> out;
  for (Mask s = 1; s <= full(n); ++s)
    if (has(s, 0) && pred(s))
      out.push_back(s);
  return out;
}

inline Mask meet_containing(const std::vector<Mask> &all, Mask v, std::size_t n) {
  Mask out = full(n);
  for (Mask s : all)
    if ((s & v) == v)
      out &= s;
  return out;
}

// Set arithmetic.

/// {a x : a in A, x in X} under `act`.
inline Mask product(const Grid &act, Mask a, Mask x) {
  Mask out = 0;
  each(a, [&](std::size_t i) { each(x, [&](std::size_t j) { out |= bit(act[i][j]); }); });
  return out;
}

inline Mask sum(const Grid &add, Mask k, Mask y) {
  Mask out = 0;
  each(k, [&](std::size_t i) { each(y, [&](std::size_t j) { out |= bit(add[i][j]); }); });
  return out;
}

inline bool within(Mask a, Mask b) { return (a & ~b) == 0; }

inline Mask residual(const Ring &r, const Module &m, Mask p, Mask n) {
  Mask out = 0;
  for (std::size_t x = 0; x < r.n; ++x)
    if (within(product(m.act, bit(x), n), p))
      out |= bit(x);
  return out;
}

inline Mask annihilator(const Ring &r, const Grid &act, Mask p) {
  Mask out = 0;
  for (std::size_t x = 0; x < r.n; ++x)
    if (product(act, bit(x), p) == 1)
      out |= bit(x);
  return out;
}

// Primeness, quantifying over 2^n-filtered domains.

using nearprime::Variant;

struct Domains {
  std::vector<Mask> ideals, left_ideals, left_rsub, submodules, r_ideals;
};

inline Domains domains(const Ring &r, const Module &m) {
  Domains d;
  d.ideals = filter_all(r.n, [&](Mask s) { return ring_kind(r, s, SubstructureKind::ideal); });
  d.left_ideals = filter_all(r.n, [&](Mask s) { return ring_kind(r, s, SubstructureKind::left_ideal); });
  d.left_rsub = filter_all(r.n, [&](Mask s) { return ring_kind(r, s, SubstructureKind::left_r_subgroup); });
  d.submodules = filter_all(m.n, [&](Mask s) { return module_kind(m, r.n, s, SubstructureKind::r_submodule); });
  d.r_ideals = filter_all(m.n, [&](Mask s) { return module_kind(m, r.n, s, SubstructureKind::r_ideal); });
  return d;
}

inline const std::vector<Mask> &set_domain(const Domains &d, Variant v) {
  if (v == Variant::v0)
    return d.ideals;
  if (v == Variant::v1)
    return d.left_ideals;
  return d.left_rsub;
}

/// aRb, or {ab} for v = c.
inline Mask elem_product(const Ring &r, Variant v, std::size_t a, std::size_t b) {
  if (v == Variant::vc)
    return bit(r.mul[a][b]);
  return product(r.mul, product(r.mul, bit(a), full(r.n)), bit(b));
}

inline bool ring_prime(const Ring &r, const Domains &d, Mask p, Variant v) {
  if (v == Variant::v3 || v == Variant::vc) {
    for (std::size_t a = 0; a < r.n; ++a)
      for (std::size_t b = 0; b < r.n; ++b)
        if (within(elem_product(r, v, a, b), p) && !has(p, a) && !has(p, b))
          return false;
    return true;
  }
  for (Mask a : set_domain(d, v))
    for (Mask b : set_domain(d, v))
      if (within(product(r.mul, a, b), p) && !within(a, p) && !within(b, p))
        return false;
  return true;
}

inline bool ring_classical(const Ring &r, const Domains &d, Mask p, Variant v) {
  for (Mask i : d.ideals) {
    if (v == Variant::v3 || v == Variant::vc) {
      for (std::size_t a = 0; a < r.n; ++a)
        for (std::size_t b = 0; b < r.n; ++b) {
          Mask x = v == Variant::v3
                       ? product(r.mul, product(r.mul, bit(a), full(r.n)),
                                 product(r.mul, bit(b), full(r.n)))
                       : elem_product(r, Variant::v3, a, b);
          if (within(product(r.mul, x, i), p) &&
              !within(product(r.mul, bit(a), i), p) &&
              !within(product(r.mul, bit(b), i), p))
            return false;
        }
      continue;
    }
    for (Mask a : set_domain(d, v))
      for (Mask b : set_domain(d, v))
        if (within(product(r.mul, product(r.mul, a, b), i), p) &&
            !within(product(r.mul, a, i), p) && !within(product(r.mul, b, i), p))
          return false;
  }
  return true;
}

/// B over R-submodules (juglal = false) or R-ideals (juglal = true) for v=0.
inline bool module_prime(const Ring &r, const Module &m, const Domains &d,
                         Mask p, Variant v, bool juglal = false) {
  const Mask mm = full(m.n);
  if (v == Variant::v3 || v == Variant::vc) {
    for (std::size_t a = 0; a < r.n; ++a)
      for (std::size_t x = 0; x < m.n; ++x) {
        Mask lhs = v == Variant::v3
                       ? product(m.act, product(r.mul, bit(a), full(r.n)), bit(x))
                       : bit(m.act[a][x]);
        if (within(lhs, p) && !within(product(m.act, bit(a), mm), p) && !has(p, x))
          return false;
      }
    return true;
  }
  const auto &bs = (v == Variant::v0 && juglal) ? d.r_ideals : d.submodules;
  for (Mask a : set_domain(d, v))
    for (Mask b : bs)
      if (within(product(m.act, a, b), p) && !within(product(m.act, a, mm), p) &&
          !within(b, p))
        return false;
  return true;
}

inline bool module_classical(const Ring &r, const Module &m, const Domains &d,
                             Mask p, Variant v) {
  for (Mask n : d.submodules) {
    if (v == Variant::v3 || v == Variant::vc) {
      for (std::size_t a = 0; a < r.n; ++a)
        for (std::size_t b = 0; b < r.n; ++b) {
          Mask x = v == Variant::v3
                       ? product(r.mul, product(r.mul, bit(a), full(r.n)),
                                 product(r.mul, bit(b), full(r.n)))
                       : elem_product(r, Variant::v3, a, b);
          if (within(product(m.act, x, n), p) &&
              !within(product(m.act, bit(a), n), p) &&
              !within(product(m.act, bit(b), n), p))
            return false;
        }
      continue;
    }
    for (Mask a : set_domain(d, v))
      for (Mask b : set_domain(d, v))
        if (within(product(m.act, product(r.mul, a, b), n), p) &&
            !within(product(m.act, a, n), p) && !within(product(m.act, b, n), p))
          return false;
  }
  return true;
}

/// Classical m_v-system test for S inside M \ {0}.
inline bool m_system(const Ring &r, const Module &m, const Domains &d, Mask s,
                     Variant v) {
  auto meets = [&](Mask k, Mask x, Mask l) {
    return (sum(m.add, k, product(m.act, x, l)) & s) != 0;
  };
  const bool sets = v == Variant::v0 || v == Variant::v2;
  std::vector<Mask> factors;
  if (sets)
    factors = set_domain(d, v);
  else
    for (std::size_t a = 0; a < r.n; ++a)
      factors.push_back(bit(a));
  for (Mask a : factors)
    for (Mask b : factors) {
      Mask x;
      if (sets) {
        x = product(r.mul, a, b);
      } else {
        const auto ai = static_cast<std::size_t>(std::countr_zero(a));
        const auto bi = static_cast<std::size_t>(std::countr_zero(b));
        x = v == Variant::v3
                ? product(r.mul, product(r.mul, a, full(r.n)),
                          product(r.mul, b, full(r.n)))
                : bit(r.mul[ai][bi]);
      }
      for (Mask k : d.submodules)
        for (Mask l : d.submodules)
          if (meets(k, a, l) && meets(k, b, l) && !meets(k, x, l))
            return false;
    }
  return true;
}

} // namespace oracle

#endif // NEARPRIME_TESTS_ORACLE_HPP_
