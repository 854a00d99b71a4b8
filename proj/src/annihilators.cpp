#include "nearprime/annihilators.hpp"

#include "nearprime/substructures.hpp"

namespace nearprime {

namespace {

constexpr std::size_t kExhaustiveSubsetLimit = 12;

ElementSet ann_set(const FiniteModule &m, const ElementSet &p) {
  const FiniteNearRing &r = m.ring();
  ElementSet out(Carrier::ring, r.size());
  for (std::size_t x = 0; x < r.size(); ++x) {
    bool kills = true;
    p.for_each([&](std::size_t y) { kills = kills && m.act(x, y) == 0; });
    if (kills)
      out.insert(x);
  }
  return out;
}

void check_kinds(const FiniteNearRing &r, AnnihilatorResult &res,
                 bool check_ideal) {
  auto check = [&](SubstructureKind k) {
    if (is_substructure(r, res.annihilator, k).holds)
      res.verified_kinds.push_back(k);
    else
      res.failed_kinds.push_back(k);
  };
  check(SubstructureKind::left_ideal);
  if (check_ideal)
    check(SubstructureKind::ideal);
}

std::string ring_labels_of(const FiniteNearRing &r, const ElementSet &s) {
  return format_labels(s, r.labels());
}

std::string module_labels_of(const FiniteModule &m, const ElementSet &s) {
  return format_labels(s, m.labels());
}

} // namespace

AnnihilatorResult annihilator(const FiniteModule &m, const ElementSet &p) {
  if (p.carrier() == Carrier::ring)
    return annihilator(m.ring(), p);
  if (p.universe() != m.size())
    throw Error(ErrorCode::carrier_mismatch, "P is not a subset of the module");
  if (p.empty())
    throw Error(ErrorCode::empty_set, "annihilator of the empty set");
  AnnihilatorResult res;
  res.subject = p;
  res.annihilator = ann_set(m, p);
  check_kinds(m.ring(), res, false);
  return res;
}

AnnihilatorResult annihilator(const FiniteNearRing &r, const ElementSet &p) {
  if (p.carrier() != Carrier::ring || p.universe() != r.size())
    throw Error(ErrorCode::carrier_mismatch, "P is not a subset of the ring");
  if (p.empty())
    throw Error(ErrorCode::empty_set, "annihilator of the empty set");
  AnnihilatorResult res;
  res.subject = p;
  res.annihilator = ElementSet(Carrier::ring, r.size());
  for (std::size_t x = 0; x < r.size(); ++x) {
    bool kills = true;
    p.for_each([&](std::size_t y) { kills = kills && r.mul(x, y) == 0; });
    if (kills)
      res.annihilator.insert(x);
  }
  check_kinds(r, res,
              is_substructure(r, p, SubstructureKind::left_r_subgroup).holds);
  return res;
}

bool is_regular_module(const FiniteModule &m) {
  const FiniteNearRing &r = m.ring();
  return m.size() == r.size() && m.group().table() == r.group().table() &&
         m.action_table() == r.mul_table();
}

VerifierReport verify_ann_nonzero_ideals(const ModuleContext &ctx) {
  const FiniteModule &m = ctx.module();
  VerifierReport rep("ann-nonzero-ideals", m.name());
  if (!ctx.ring().flags().near_field) {
    rep.note("stated for modules over a near-field; not applicable");
    return rep;
  }
  for (const auto &s : ctx.r_ideals()) {
    if (s.is_zero())
      continue;
    const ElementSet ann = ann_set(m, s);
    rep.check(ann.is_zero(), [&] {
      return "Ann(" + module_labels_of(m, s) +
             ")=" + ring_labels_of(ctx.ring(), ann);
    });
  }
  return rep;
}

VerifierReport verify_ann_direct_sum(const ModuleContext &ctx) {
  const FiniteModule &m = ctx.module();
  const FiniteNearRing &r = ctx.ring();
  VerifierReport rep("ann-direct-sum", m.name());
  std::vector<ElementSet> cyc;
  std::vector<ElementSet> ann;
  cyc.reserve(m.size());
  for (std::size_t u = 0; u < m.size(); ++u) {
    cyc.push_back(set_product(m, r.all(), m.singleton(u)));
    ann.push_back(ann_set(m, cyc.back()));
  }
  std::size_t free_breaks = 0;
  for (std::size_t u1 = 1; u1 < m.size(); ++u1)
    for (std::size_t u2 = u1 + 1; u2 < m.size(); ++u2) {
      if (!(cyc[u1] & cyc[u2]).is_zero())
        continue;
      const ElementSet lhs =
          sumset(r.group(), ann[u1], ann[u2], Carrier::ring);
      const ElementSet rhs =
          ann_set(m, sumset(m.group(), cyc[u1], cyc[u2], Carrier::module));
      auto kills = [&](std::size_t j, std::size_t i) {
        return set_product(m, set_product(r, ann[j], r.all()), m.singleton(i))
            .is_zero();
      };
      auto describe = [&] {
        return "u1=" + m.label(u1) + " u2=" + m.label(u2) + ": sum of Ann=" +
               ring_labels_of(r, lhs) + ", Ann(sum)=" + ring_labels_of(r, rhs);
      };
      if (kills(u1, u2) && kills(u2, u1)) {
        rep.check(lhs == rhs, describe);
      } else if (lhs != rhs) {
        if (++free_breaks <= 4)
          rep.note("without the side condition: " + describe());
      }
    }
  if (free_breaks > 4)
    rep.note(std::to_string(free_breaks) +
             " pairs break the equality without the side condition");
  return rep;
}

std::vector<VerifierReport> verify_annihilator_props(const ModuleContext &ctx) {
  const FiniteModule &m = ctx.module();
  const FiniteNearRing &r = ctx.ring();
  std::vector<VerifierReport> out;

  {
    VerifierReport rep("ann-left-ideal", m.name());
    auto check = [&](const ElementSet &p) {
      const AnnihilatorResult res = annihilator(m, p);
      rep.check(res.failed_kinds.empty(), [&] {
        return "Ann(" + module_labels_of(m, p) +
               ")=" + ring_labels_of(r, res.annihilator) +
               " is not a left ideal";
      });
    };
    if (m.size() <= kExhaustiveSubsetLimit) {
      for (std::size_t mask = 1; mask < (std::size_t{1} << m.size()); ++mask) {
        ElementSet p(Carrier::module, m.size());
        for (std::size_t i = 0; i < m.size(); ++i)
          if (mask >> i & 1u)
            p.insert(i);
        check(p);
      }
    } else {
      for (const auto &p : ctx.submodules())
        check(p);
      for (std::size_t x = 0; x < m.size(); ++x)
        check(m.singleton(x));
      rep.note("subjects: submodules and singletons");
    }
    out.push_back(std::move(rep));
  }

  {
    VerifierReport rep("ann-classical", m.name());
    if (!is_regular_module(m)) {
      rep.note("stated for M = R_R; not applicable");
    } else {
      const RingContext &rc = ctx.rings();
      for (const auto &p : ctx.r_ideals()) {
        if (p.is_zero() || ctx.rm().subset_of(p))
          continue;
        const ElementSet ann = ann_set(m, p);
        for (Variant v : kModuleVariants) {
          if (!is_classical_prime_module_ideal(ctx, p, v).holds())
            continue;
          const Verdict q = ring_classical_condition(rc, ann, v);
          rep.check(q.holds(), [&] {
            return "P=" + module_labels_of(m, p) + " v=" +
                   std::string(to_string(v)) + ": Ann(P)=" +
                   ring_labels_of(r, ann) + " fails (" +
                   (q.witness ? q.witness->clause + "; " +
                                    format_witness(*q.witness, r.labels(),
                                                   m.labels())
                              : q.reason) +
                   ")";
          });
          if (ann.is_full())
            rep.note("P=" + module_labels_of(m, p) + ": Ann(P) = R");
        }
      }
    }
    out.push_back(std::move(rep));
  }

  {
    VerifierReport rep("ann-faithful-3prime", m.name());
    const ElementSet zero = m.zero();
    const Verdict three = is_prime_module_ideal(ctx, zero, Variant::v3);
    if (!three.holds()) {
      rep.note("M is not 3-prime; not applicable");
    } else {
      const bool faithful = m.flags().faithful;
      bool all_zero = true;
      std::string first;
      for (std::size_t x = 1; x < m.size(); ++x) {
        const ElementSet g = generated(m, m.singleton(x), SubstructureKind::r_submodule);
        const ElementSet a = ann_set(m, g);
        if (!a.is_zero() && all_zero) {
          all_zero = false;
          first = "Ann(gen(" + m.label(x) + "))=" + ring_labels_of(r, a);
        }
      }
      rep.check(faithful == all_zero, [&] {
        return std::string(faithful ? "faithful but " : "not faithful but ") +
               (all_zero ? "every Ann(gen(m)) is 0" : first);
      });
    }
    out.push_back(std::move(rep));
  }

  {
    VerifierReport rep("ann-faithful-submodules", m.name());
    const ElementSet zero = m.zero();
    const bool c0 = is_classical_prime_module_ideal(ctx, zero, Variant::v0).holds();
    const bool c2 = is_classical_prime_module_ideal(ctx, zero, Variant::v2).holds();
    if (!c0 && !c2) {
      rep.note("M is neither 0- nor 2-classical prime; not applicable");
    } else {
      std::size_t relaxed_breaks = 0;
      for (const auto &a : ctx.submodules()) {
        const ElementSet ann_a = ann_set(m, a);
        for (const auto &b : ctx.submodules()) {
          const ElementSet ann_b = ann_set(m, b);
          const bool hyp = !set_product(m, ann_b, a).is_zero();
          if (!hyp)
            continue;
          if (ann_a.is_zero() && ann_b.is_zero())
            rep.check(ann_a.is_zero(), [] { return std::string(); });
          else if (!a.is_zero() && !b.is_zero() && !ann_a.is_zero())
            ++relaxed_breaks;
        }
      }
      if (rep.instances_checked == 0)
        rep.note("no faithful pair satisfies Ann(B)A != 0; for faithful B, "
                 "Ann(B)A = 0 always");
      if (relaxed_breaks)
        rep.note("reading faithful as nonzero: " +
                 std::to_string(relaxed_breaks) +
                 " pairs with Ann(B)A != 0 and Ann(A) != 0");
    }
    out.push_back(std::move(rep));
  }

  out.push_back(verify_ann_nonzero_ideals(ctx));
  out.push_back(verify_ann_direct_sum(ctx));
  return out;
}

} // namespace nearprime
