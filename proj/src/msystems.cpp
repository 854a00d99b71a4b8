#include "nearprime/msystems.hpp"

namespace nearprime {

namespace {

struct Factor {
  ElementSet set; // A or {a}
  bool element = false;
  std::size_t index = 0;
};

WitnessPart part_of(const Factor &f, const char *set_name,
                    const char *elem_name) {
  WitnessPart p;
  p.name = f.element ? elem_name : set_name;
  p.carrier = Carrier::ring;
  if (f.element)
    p.element = f.index;
  else
    p.set = f.set;
  return p;
}

WitnessPart module_part(const char *name, const ElementSet &s) {
  WitnessPart p;
  p.name = name;
  p.carrier = Carrier::module;
  p.set = s;
  p.set->kind.reset();
  return p;
}

} // namespace

MSystemVerdict is_classical_m_system(const ModuleContext &ctx,
                                     const ElementSet &s, Variant v) {
  const FiniteModule &m = ctx.module();
  const FiniteNearRing &r = ctx.ring();
  if (s.carrier() != Carrier::module || s.universe() != m.size())
    throw Error(ErrorCode::carrier_mismatch, "S is not a subset of the module");
  if (s.empty())
    throw Error(ErrorCode::empty_set, "an m-system must be nonempty");
  if (s.contains(0))
    throw Error(ErrorCode::contains_zero, "an m-system must avoid 0", {0});
  if (v == Variant::v1)
    throw Error(ErrorCode::v1_not_defined,
                "variant 1 m-systems are not defined");

  std::vector<Factor> factors;
  if (v == Variant::v0 || v == Variant::v2) {
    const auto &dom = v == Variant::v0 ? ctx.rings().ideals()
                                       : ctx.rings().left_r_subgroups();
    for (const auto &a : dom)
      factors.push_back({a, false, 0});
  } else {
    for (std::size_t a = 0; a < r.size(); ++a)
      factors.push_back({r.singleton(a), true, a});
  }

  const auto &subs = ctx.submodules();
  const std::size_t nf = factors.size();
  const std::size_t ns = subs.size();
  // hit[(k * ns + l) * nf + f]: (K + F L) meets S.
  std::vector<char> hit(ns * ns * nf);
  std::vector<std::vector<ElementSet>> fl(nf, std::vector<ElementSet>(ns));
  for (std::size_t f = 0; f < nf; ++f)
    for (std::size_t l = 0; l < ns; ++l)
      fl[f][l] = set_product(m, factors[f].set, subs[l]);
  for (std::size_t k = 0; k < ns; ++k)
    for (std::size_t l = 0; l < ns; ++l)
      for (std::size_t f = 0; f < nf; ++f)
        hit[(k * ns + l) * nf + f] =
            sumset(m.group(), subs[k], fl[f][l], Carrier::module).intersects(s);

  MSystemVerdict out;
  out.subset = s;
  out.variant = v;
  for (std::size_t fa = 0; fa < nf; ++fa)
    for (std::size_t fb = 0; fb < nf; ++fb) {
      ElementSet x;
      if (v == Variant::v0 || v == Variant::v2)
        x = set_product(r, factors[fa].set, factors[fb].set);
      else if (v == Variant::v3)
        x = set_product(r, ctx.rings().a_r(factors[fa].index),
                        ctx.rings().a_r(factors[fb].index));
      else
        x = r.singleton(r.mul(factors[fa].index, factors[fb].index));
      for (std::size_t k = 0; k < ns; ++k)
        for (std::size_t l = 0; l < ns; ++l) {
          const std::size_t base = (k * ns + l) * nf;
          if (!hit[base + fa] || !hit[base + fb])
            continue;
          const ElementSet concl = sumset(
              m.group(), subs[k], set_product(m, x, subs[l]), Carrier::module);
          if (!concl.intersects(s)) {
            out.holds = false;
            out.witness = Witness{{part_of(factors[fa], "A", "a"),
                                   part_of(factors[fb], "B", "b"),
                                   module_part("K", subs[k]),
                                   module_part("L", subs[l])},
                                  "K+AL and K+BL meet S but the conclusion "
                                  "set does not"};
            return out;
          }
        }
    }
  return out;
}

VerifierReport verify_complement_theorem(const ModuleContext &ctx) {
  const FiniteModule &m = ctx.module();
  VerifierReport rep("complement", m.name());
  for (const auto &p : ctx.r_ideals()) {
    if (ctx.rm().subset_of(p))
      continue;
    const ElementSet s = p.complement();
    for (Variant v : kModuleVariants) {
      const Verdict c = is_classical_prime_module_ideal(ctx, p, v);
      const MSystemVerdict ms = is_classical_m_system(ctx, s, v);
      rep.check(c.holds() == ms.holds, [&] {
        std::string w = "P=" + format_labels(p, m.labels()) +
                        " v=" + std::string(to_string(v)) + ": classical=" +
                        (c.holds() ? "true" : "false") +
                        " m-system=" + (ms.holds ? "true" : "false");
        if (c.witness)
          w += " [" + format_witness(*c.witness, ctx.ring().labels(),
                                     m.labels()) + "]";
        if (ms.witness)
          w += " [" + format_witness(*ms.witness, ctx.ring().labels(),
                                     m.labels()) + "]";
        return w;
      });
    }
  }
  return rep;
}

} // namespace nearprime
