#include "nearprime/characterizations.hpp"

#include <algorithm>

#include "nearprime/substructures.hpp"

namespace nearprime {

namespace {

std::string labels(const FiniteModule &m, const ElementSet &s) {
  return format_labels(s, m.labels());
}

std::string ring_labels(const FiniteNearRing &r, const ElementSet &s) {
  return format_labels(s, r.labels());
}

std::string verdict_detail(const ModuleContext &ctx, const Verdict &v) {
  if (v.witness)
    return v.witness->clause + ": " +
           format_witness(*v.witness, ctx.ring().labels(),
                          ctx.module().labels());
  return v.reason;
}

void require_r_ideal(const ModuleContext &ctx, const ElementSet &p) {
  const SubstructureCheck c =
      is_substructure(ctx.module(), p, SubstructureKind::r_ideal);
  if (!c.holds)
    throw Error(ErrorCode::not_an_r_ideal,
                "P is not an R-ideal (" + c.clause + ")", c.witness);
}

std::string char_name(Variant v) {
  return "char-" + std::string(to_string(v));
}

const std::vector<ElementSet> &two_domain(const RingContext &rc, Variant v) {
  return v == Variant::v0 ? rc.ideals() : rc.left_r_subgroups();
}

} // namespace

bool CharacterizationResult::agree() const {
  if (conditions.empty())
    return true;
  return std::all_of(conditions.begin(), conditions.end(),
                     [&](const Condition &c) {
                       return c.value == conditions.front().value;
                     });
}

CharacterizationResult characterization_conditions(const ModuleContext &ctx,
                                                   const ElementSet &p,
                                                   Variant v) {
  require_r_ideal(ctx, p);
  if (v == Variant::v1)
    throw Error(ErrorCode::v1_not_defined,
                "variant 1 classical primeness is not defined");
  const FiniteModule &m = ctx.module();
  const FiniteNearRing &r = ctx.ring();
  const RingContext &rc = ctx.rings();
  CharacterizationResult out;
  out.variant = v;
  if (ctx.rm().subset_of(p)) {
    out.applicable = false;
    return out;
  }
  const bool elementwise = v == Variant::v3 || v == Variant::vc;
  std::vector<ElementSet> rm_of;
  rm_of.reserve(m.size());
  for (std::size_t x = 0; x < m.size(); ++x)
    rm_of.push_back(set_product(m, r.all(), m.singleton(x)));

  // (i) the definition.
  {
    const Verdict d = is_classical_prime_module_ideal(ctx, p, v);
    out.conditions.push_back({"(i)", d.holds(), verdict_detail(ctx, d)});
  }

  if (!elementwise) {
    // (ii) cyclic-submodule form: AB(Rm) in P => A(Rm) or B(Rm) in P.
    Condition c{"(ii)", true, {}};
    const auto &dom = two_domain(rc, v);
    for (const auto &a : dom) {
      for (const auto &b : dom) {
        const ElementSet ab = set_product(r, a, b);
        for (std::size_t x = 0; x < m.size() && c.value; ++x)
          if (set_product(m, ab, rm_of[x]).subset_of(p) &&
              !set_product(m, a, rm_of[x]).subset_of(p) &&
              !set_product(m, b, rm_of[x]).subset_of(p)) {
            c.value = false;
            c.detail = "A=" + ring_labels(r, a) + " B=" + ring_labels(r, b) +
                       " m=" + m.label(x);
          }
        if (!c.value)
          break;
      }
      if (!c.value)
        break;
    }
    out.conditions.push_back(std::move(c));
  } else {
    // (ii) (aRb)N in P => aN or bN in P, N an R-submodule.
    Condition c2{"(ii)", true, {}};
    // (iii) (aR)(bR)m (v=3) or (aRb)m (v=c) in P => aRm or bRm in P.
    Condition c3{"(iii)", true, {}};
    for (std::size_t a = 0; a < r.size(); ++a)
      for (std::size_t b = 0; b < r.size(); ++b) {
        const ElementSet arb = set_product(r, rc.a_r(a), r.singleton(b));
        if (c2.value)
          for (const auto &n : ctx.submodules())
            if (set_product(m, arb, n).subset_of(p) &&
                !set_product(m, r.singleton(a), n).subset_of(p) &&
                !set_product(m, r.singleton(b), n).subset_of(p)) {
              c2.value = false;
              c2.detail = "a=" + r.label(a) + " b=" + r.label(b) +
                          " N=" + labels(m, n);
              break;
            }
        if (c3.value) {
          const ElementSet x =
              v == Variant::v3 ? set_product(r, rc.a_r(a), rc.a_r(b)) : arb;
          for (std::size_t y = 0; y < m.size(); ++y)
            if (set_product(m, x, m.singleton(y)).subset_of(p) &&
                !set_product(m, rc.a_r(a), m.singleton(y)).subset_of(p) &&
                !set_product(m, rc.a_r(b), m.singleton(y)).subset_of(p)) {
              c3.value = false;
              c3.detail = "a=" + r.label(a) + " b=" + r.label(b) +
                          " m=" + m.label(y);
              break;
            }
        }
      }
    out.conditions.push_back(std::move(c2));
    out.conditions.push_back(std::move(c3));
  }

  // (0:R m) for every nonzero coset, computed inside M/P.
  {
    Condition c{elementwise ? "(iv)" : "(iii)", true, {}};
    std::vector<std::pair<std::string, ElementSet>> anns;
    try {
      const ModulePtr q = quotient_module(m, p);
      for (std::size_t cs = 1; cs < q->size(); ++cs) {
        const ElementSet rcs = set_product(*q, r.all(), q->singleton(cs));
        anns.emplace_back(q->label(cs) + "+P", residual(*q, q->zero(), rcs));
      }
    } catch (const Error &) {
      out.quotient_fallback = true;
      anns.clear();
      for (std::size_t x = 0; x < m.size(); ++x)
        if (!p.contains(x))
          anns.emplace_back(m.label(x) + "+P", residual(m, p, rm_of[x]));
    }
    for (const auto &[name, ann] : anns) {
      const Verdict q = ring_prime_condition(rc, ann, v);
      if (!q.holds()) {
        c.value = false;
        c.detail = "(0:R " + name + ")=" + ring_labels(r, ann) + ": " +
                   verdict_detail(ctx, q);
        break;
      }
    }
    out.conditions.push_back(std::move(c));
  }

  // (P:Rm) for m outside P, and (P:M) (2-prime for v = 3, c as stated).
  {
    Condition c{elementwise ? "(v)" : "(iv)", true, {}};
    std::vector<ElementSet> residuals;
    for (std::size_t x = 0; x < m.size(); ++x) {
      if (p.contains(x))
        continue;
      const ElementSet res = residual(m, p, rm_of[x]);
      residuals.push_back(res);
      if (!c.value)
        continue;
      const Verdict q = ring_prime_condition(rc, res, v);
      if (!q.holds()) {
        c.value = false;
        c.detail = "(P:R" + m.label(x) + ")=" + ring_labels(r, res) + ": " +
                   verdict_detail(ctx, q);
      }
    }
    const ElementSet pm = residual(m, p, m.all());
    const Variant pm_variant = elementwise ? Variant::v2 : v;
    if (c.value) {
      const Verdict q = ring_prime_condition(rc, pm, pm_variant);
      if (!q.holds()) {
        c.value = false;
        c.detail = "(P:M)=" + ring_labels(r, pm) + ": " + verdict_detail(ctx, q);
      }
    }
    out.conditions.push_back(std::move(c));
    for (std::size_t i = 0; i < residuals.size() && out.residuals_totally_ordered;
         ++i)
      for (std::size_t j = i + 1; j < residuals.size(); ++j)
        if (!residuals[i].subset_of(residuals[j]) &&
            !residuals[j].subset_of(residuals[i])) {
          out.residuals_totally_ordered = false;
          break;
        }
  }
  return out;
}

VerifierReport verify_characterization(const ModuleContext &ctx,
                                       const ElementSet &p, Variant v) {
  const FiniteModule &m = ctx.module();
  VerifierReport rep(char_name(v), m.name());
  const CharacterizationResult res = characterization_conditions(ctx, p, v);
  if (!res.applicable) {
    rep.note("P=" + labels(m, p) + ": RM lies in P, not applicable");
    return rep;
  }
  rep.check(res.agree(), [&] {
    std::string w = "P=" + labels(m, p) + ":";
    for (const auto &c : res.conditions) {
      w += " " + c.label + "=" + (c.value ? "true" : "false");
      if (!c.value && !c.detail.empty())
        w += " [" + c.detail + "]";
    }
    return w;
  });
  if (!res.residuals_totally_ordered)
    rep.note("P=" + labels(m, p) +
             ": residuals (P:Rm) are not totally ordered");
  if (res.quotient_fallback)
    rep.note("P=" + labels(m, p) +
             ": M/P not constructible, (0:R m) taken as (P:Rm)");
  return rep;
}

VerifierReport verify_characterization(const ModuleContext &ctx, Variant v) {
  VerifierReport all(char_name(v), ctx.module().name());
  for (const auto &p : ctx.r_ideals()) {
    VerifierReport one = verify_characterization(ctx, p, v);
    if (one.instances_checked)
      all.check(one.ok(), [&] { return one.witness; });
    for (auto &n : one.notes)
      if (n.find("not applicable") == std::string::npos)
        all.note(std::move(n));
  }
  return all;
}

std::string_view to_string(Transfer t) {
  switch (t) {
  case Transfer::tilde_ideal: return "tilde-ideal";
  case Transfer::tilde_prime: return "tilde-prime";
  case Transfer::tilde_classical: return "tilde-classical";
  case Transfer::quotient: return "quotient";
  case Transfer::residual_prime: return "residual-prime";
  case Transfer::residual_classical: return "residual-classical";
  }
  return "?";
}

VerifierReport verify_transfer(const ModuleContext &ctx, const ElementSet &p,
                               Transfer which) {
  require_r_ideal(ctx, p);
  const FiniteModule &m = ctx.module();
  const FiniteNearRing &r = ctx.ring();
  const RingContext &rc = ctx.rings();
  VerifierReport rep(std::string(to_string(which)), m.name());
  const std::string ps = "P=" + labels(m, p);
  const ElementSet pt = residual(m, p, m.all());

  if (which == Transfer::tilde_ideal) {
    const SubstructureCheck c = is_substructure(r, pt, SubstructureKind::ideal);
    rep.check(c.holds, [&] {
      return ps + ": (P:M)=" + ring_labels(r, pt) + " fails " + c.clause;
    });
    return rep;
  }
  if (ctx.rm().subset_of(p))
    return rep;

  switch (which) {
  case Transfer::tilde_prime:
    for (Variant v : kModuleVariants)
      for (Convention conv : {Convention::dauns, Convention::juglal}) {
        if (conv == Convention::juglal && v != Variant::v0)
          continue;
        if (!is_prime_module_ideal(ctx, p, v, conv).holds())
          continue;
        const Verdict q = ring_prime_condition(rc, pt, v);
        rep.check(q.holds(), [&] {
          return ps + " v=" + std::string(to_string(v)) + " (" +
                 std::string(to_string(conv)) + "): (P:M)=" +
                 ring_labels(r, pt) + " " + verdict_detail(ctx, q);
        });
      }
    break;
  case Transfer::tilde_classical:
    for (Variant v : kModuleVariants) {
      if (!is_classical_prime_module_ideal(ctx, p, v).holds())
        continue;
      const Verdict q = ring_classical_condition(rc, pt, v);
      rep.check(q.holds(), [&] {
        return ps + " v=" + std::string(to_string(v)) + ": (P:M)=" +
               ring_labels(r, pt) + " " + verdict_detail(ctx, q);
      });
    }
    break;
  case Transfer::quotient: {
    ModulePtr q;
    try {
      q = quotient_module(m, p);
    } catch (const Error &e) {
      rep.check(false, [&] { return ps + ": M/P not constructible: " + e.what(); });
      break;
    }
    const ModuleContext qc(q);
    for (Variant v : kModuleVariants) {
      const Verdict a = is_classical_prime_module_ideal(ctx, p, v);
      const Verdict b = is_classical_prime_module_ideal(qc, q->zero(), v);
      rep.check(a.outcome == b.outcome, [&] {
        return ps + " v=" + std::string(to_string(v)) + ": M at P " +
               std::string(to_string(a.outcome)) + ", M/P at 0 " +
               std::string(to_string(b.outcome));
      });
    }
    break;
  }
  case Transfer::residual_prime:
  case Transfer::residual_classical: {
    const bool from_classical = which == Transfer::residual_prime;
    for (Variant v : kModuleVariants) {
      const Verdict h = from_classical
                            ? is_classical_prime_module_ideal(ctx, p, v)
                            : is_prime_module_ideal(ctx, p, v);
      if (!h.holds())
        continue;
      for (const auto &n : ctx.r_ideals()) {
        const ElementSet pn = residual(m, p, n);
        const Verdict q = from_classical ? ring_prime_condition(rc, pn, v)
                                         : ring_classical_condition(rc, pn, v);
        rep.check(q.holds(), [&] {
          return ps + " N=" + labels(m, n) + " v=" +
                 std::string(to_string(v)) + ": (P:N)=" + ring_labels(r, pn) +
                 " " + verdict_detail(ctx, q);
        });
      }
    }
    break;
  }
  case Transfer::tilde_ideal:
    break;
  }
  return rep;
}

VerifierReport verify_transfer(const ModuleContext &ctx, Transfer which) {
  VerifierReport all(std::string(to_string(which)), ctx.module().name());
  for (const auto &p : ctx.r_ideals()) {
    VerifierReport one = verify_transfer(ctx, p, which);
    for (std::size_t i = 0; i < one.instances_checked; ++i) {
      const bool failed = i < one.failures.size();
      all.check(!failed, [&] { return one.failures[i]; });
    }
    for (auto &n : one.notes)
      all.note(std::move(n));
  }
  return all;
}

VerifierReport verify_chain(const ModuleContext &ctx) {
  const FiniteModule &m = ctx.module();
  VerifierReport rep("chain", m.name());
  for (const auto &p : ctx.r_ideals()) {
    if (ctx.rm().subset_of(p))
      continue;
    const bool c = is_classical_prime_module_ideal(ctx, p, Variant::vc).holds();
    const bool t = is_classical_prime_module_ideal(ctx, p, Variant::v3).holds();
    const bool s = is_classical_prime_module_ideal(ctx, p, Variant::v2).holds();
    const bool z = is_classical_prime_module_ideal(ctx, p, Variant::v0).holds();
    const std::string ps = "P=" + labels(m, p);
    rep.check(!c || t, [&] { return ps + ": c-classical but not 3-classical"; });
    rep.check(!t || s, [&] { return ps + ": 3-classical but not 2-classical"; });
    rep.check(!s || z, [&] { return ps + ": 2-classical but not 0-classical"; });
  }
  return rep;
}

VerifierReport verify_prime_implies_classical(const ModuleContext &ctx) {
  const FiniteModule &m = ctx.module();
  VerifierReport rep("prime-implies-classical", m.name());
  for (const auto &p : ctx.r_ideals()) {
    if (ctx.rm().subset_of(p))
      continue;
    for (Variant v : kModuleVariants) {
      const bool pr = is_prime_module_ideal(ctx, p, v).holds();
      const Verdict cl = is_classical_prime_module_ideal(ctx, p, v);
      rep.check(!pr || cl.holds(), [&] {
        return "P=" + labels(m, p) + " v=" + std::string(to_string(v)) +
               ": prime but not classical (" + verdict_detail(ctx, cl) + ")";
      });
    }
  }
  return rep;
}

VerifierReport verify_convention_containment(const ModuleContext &ctx) {
  const FiniteModule &m = ctx.module();
  VerifierReport rep("convention-containment", m.name());
  std::size_t differ = 0;
  for (const auto &p : ctx.r_ideals()) {
    if (ctx.rm().subset_of(p))
      continue;
    const bool d = is_prime_module_ideal(ctx, p, Variant::v0, Convention::dauns).holds();
    const bool j = is_prime_module_ideal(ctx, p, Variant::v0, Convention::juglal).holds();
    rep.check(!d || j, [&] {
      return "P=" + labels(m, p) + ": 0-prime over submodules but not over R-ideals";
    });
    if (d != j) {
      ++differ;
      rep.note("P=" + labels(m, p) + ": 0-prime (dauns)=" +
               (d ? "true" : "false") + ", (juglal)=" + (j ? "true" : "false"));
    }
  }
  if (differ == 0 && rep.instances_checked)
    rep.note("the convention changes no verdict");
  return rep;
}

VerifierReport verify_identity_2eq3(const ModuleContext &ctx) {
  const FiniteModule &m = ctx.module();
  VerifierReport rep("identity-2eq3", m.name());
  if (!ctx.ring().flags().identity) {
    rep.note("R has no identity; not applicable");
    return rep;
  }
  for (const auto &p : ctx.r_ideals()) {
    if (ctx.rm().subset_of(p))
      continue;
    const bool s = is_classical_prime_module_ideal(ctx, p, Variant::v2).holds();
    const bool t = is_classical_prime_module_ideal(ctx, p, Variant::v3).holds();
    rep.check(s == t, [&] {
      return "P=" + labels(m, p) + ": 2-classical=" + (s ? "true" : "false") +
             ", 3-classical=" + (t ? "true" : "false");
    });
  }
  return rep;
}

} // namespace nearprime
