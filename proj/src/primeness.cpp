#include "nearprime/primeness.hpp"

#include <algorithm>
#include <cctype>

#include "nearprime/substructures.hpp"

namespace nearprime {

namespace {

// Shorthand for the pieces every definition is built from.
struct Ops {
  const RingContext &rc;
  const FiniteModule *m; // null when working inside R

  const FiniteNearRing &ring() const { return rc.ring(); }
  std::size_t rn() const { return ring().size(); }

  ElementSet relem(std::size_t a) const { return ring().singleton(a); }
  ElementSet rr(const ElementSet &a, const ElementSet &b) const {
    return set_product(ring(), a, b);
  }
  // Products landing in the module (or in R when m is null).
  ElementSet act(const ElementSet &a, const ElementSet &x) const {
    return m ? set_product(*m, a, x) : set_product(ring(), a, x);
  }
  // aRb
  ElementSet arb(std::size_t a, std::size_t b) const {
    return rr(rc.a_r(a), relem(b));
  }
  // (aR)(bR), formed literally so recorded non-associative tables are
  // evaluated as written.
  ElementSet arbr(std::size_t a, std::size_t b) const {
    return rr(rc.a_r(a), rc.a_r(b));
  }
  ElementSet elem_product(Variant v, std::size_t a, std::size_t b) const {
    return v == Variant::v3 ? arbr(a, b) : arb(a, b);
  }
};

WitnessPart set_part(std::string name, const ElementSet &s) {
  WitnessPart p;
  p.name = std::move(name);
  p.carrier = s.carrier();
  p.set = s;
  p.set->kind.reset();
  return p;
}

WitnessPart elem_part(std::string name, Carrier c, std::size_t x) {
  WitnessPart p;
  p.name = std::move(name);
  p.carrier = c;
  p.element = x;
  return p;
}

const std::vector<ElementSet> &ring_domain(const RingContext &ctx, Variant v) {
  switch (v) {
  case Variant::v0: return ctx.ideals();
  case Variant::v1: return ctx.left_ideals();
  default: return ctx.left_r_subgroups();
  }
}

bool in_domain(const std::vector<ElementSet> &domain, const ElementSet &s) {
  return std::find(domain.begin(), domain.end(), s) != domain.end();
}

ElementSet ring_carrier(const ElementSet &p) {
  return p.carrier() == Carrier::ring ? p : p.as(Carrier::ring);
}

// Single-instance tests; each returns true when the instance violates the
// definition (hypothesis holds, conclusion fails).

bool ring_prime_sets(const Ops &o, const ElementSet &p, const ElementSet &a,
                     const ElementSet &b) {
  return o.rr(a, b).subset_of(p) && !a.subset_of(p) && !b.subset_of(p);
}

bool ring_prime_elems(const Ops &o, const ElementSet &p, Variant v,
                      std::size_t a, std::size_t b) {
  const bool hyp = v == Variant::v3 ? o.arb(a, b).subset_of(p)
                                    : p.contains(o.ring().mul(a, b));
  return hyp && !p.contains(a) && !p.contains(b);
}

// Shared by ring classical (x = I, products in R) and module classical
// (x = N, products in M).
bool classical_sets(const Ops &o, const ElementSet &p, const ElementSet &a,
                    const ElementSet &b, const ElementSet &x) {
  return o.act(o.rr(a, b), x).subset_of(p) && !o.act(a, x).subset_of(p) &&
         !o.act(b, x).subset_of(p);
}

bool classical_elems(const Ops &o, const ElementSet &p, const ElementSet &ab,
                     std::size_t a, std::size_t b, const ElementSet &x) {
  return o.act(ab, x).subset_of(p) && !o.act(o.relem(a), x).subset_of(p) &&
         !o.act(o.relem(b), x).subset_of(p);
}

bool module_prime_sets(const Ops &o, const ElementSet &p, const ElementSet &a,
                       const ElementSet &b) {
  return o.act(a, b).subset_of(p) && !o.act(a, o.m->all()).subset_of(p) &&
         !b.subset_of(p);
}

bool module_prime_elems(const Ops &o, const ElementSet &p, Variant v,
                        std::size_t a, std::size_t m) {
  const bool hyp = v == Variant::v3
                       ? o.act(o.rc.a_r(a), o.m->singleton(m)).subset_of(p)
                       : p.contains(o.m->act(a, m));
  return hyp && !o.act(o.relem(a), o.m->all()).subset_of(p) && !p.contains(m);
}

Verdict ring_prime_eval(const RingContext &ctx, const ElementSet &p,
                        Variant v) {
  const Ops o{ctx, nullptr};
  if (v == Variant::v3 || v == Variant::vc) {
    const char *clause = v == Variant::v3 ? "aRb in P but a, b not in P"
                                          : "ab in P but a, b not in P";
    for (std::size_t a = 0; a < o.rn(); ++a)
      for (std::size_t b = 0; b < o.rn(); ++b)
        if (ring_prime_elems(o, p, v, a, b))
          return Verdict::no(Witness{{elem_part("a", Carrier::ring, a),
                                      elem_part("b", Carrier::ring, b)},
                                     clause});
    return Verdict::yes();
  }
  const auto &dom = ring_domain(ctx, v);
  for (const auto &a : dom)
    for (const auto &b : dom)
      if (ring_prime_sets(o, p, a, b))
        return Verdict::no(Witness{{set_part("A", a), set_part("B", b)},
                                   "AB in P but A, B not in P"});
  return Verdict::yes();
}

Verdict ring_classical_eval(const RingContext &ctx, const ElementSet &p,
                            Variant v) {
  const Ops o{ctx, nullptr};
  const auto &is = ctx.ideals();
  if (v == Variant::v3 || v == Variant::vc) {
    const char *clause = v == Variant::v3
                             ? "(aR)(bR)I in P but aI, bI not in P"
                             : "(aRb)I in P but aI, bI not in P";
    for (std::size_t a = 0; a < o.rn(); ++a)
      for (std::size_t b = 0; b < o.rn(); ++b) {
        const ElementSet ab = o.elem_product(v, a, b);
        for (const auto &i : is)
          if (classical_elems(o, p, ab, a, b, i))
            return Verdict::no(Witness{{elem_part("a", Carrier::ring, a),
                                        elem_part("b", Carrier::ring, b),
                                        set_part("I", i)},
                                       clause});
      }
    return Verdict::yes();
  }
  const auto &dom = ring_domain(ctx, v);
  for (const auto &a : dom)
    for (const auto &b : dom)
      for (const auto &i : is)
        if (classical_sets(o, p, a, b, i))
          return Verdict::no(
              Witness{{set_part("A", a), set_part("B", b), set_part("I", i)},
                      "ABI in P but AI, BI not in P"});
  return Verdict::yes();
}

std::optional<Verdict> not_an_ideal(const RingContext &ctx,
                                    const ElementSet &q) {
  const SubstructureCheck c =
      is_substructure(ctx.ring(), q, SubstructureKind::ideal);
  if (c.holds)
    return std::nullopt;
  Witness w;
  w.clause = "not an ideal: " + c.clause;
  for (std::size_t i = 0; i < c.witness.size(); ++i)
    w.parts.push_back(
        elem_part("x" + std::to_string(i + 1), Carrier::ring, c.witness[i]));
  return Verdict::no(std::move(w));
}

void require_proper_ideal(const RingContext &ctx, const ElementSet &p) {
  const SubstructureCheck c =
      is_substructure(ctx.ring(), p, SubstructureKind::ideal);
  if (!c.holds)
    throw Error(ErrorCode::not_an_ideal, "P is not an ideal (" + c.clause + ")",
                c.witness);
  if (p.is_full())
    throw Error(ErrorCode::not_proper, "P is not a proper ideal");
}

std::optional<Verdict> module_preconditions(const ModuleContext &ctx,
                                            const ElementSet &p, Variant v) {
  if (p.carrier() != Carrier::module || p.universe() != ctx.module().size())
    throw Error(ErrorCode::carrier_mismatch, "P is not a subset of the module");
  const SubstructureCheck c =
      is_substructure(ctx.module(), p, SubstructureKind::r_ideal);
  if (!c.holds)
    throw Error(ErrorCode::not_an_r_ideal,
                "P is not an R-ideal (" + c.clause + ")", c.witness);
  if (v == Variant::v1)
    throw Error(ErrorCode::v1_not_defined,
                "variant 1 is not defined for modules");
  if (ctx.rm().subset_of(p))
    return Verdict::na("RM is contained in P");
  return std::nullopt;
}

const std::vector<ElementSet> &
classical_range(const ModuleContext &ctx, const ClassicalOptions &options) {
  switch (options.range) {
  case ClassicalOptions::Range::r_ideals: return ctx.r_ideals();
  case ClassicalOptions::Range::explicit_list: return options.n_list;
  default: return ctx.submodules();
  }
}

Carrier part_carrier(std::string_view name, Target target, Notion notion) {
  if (target == Target::ring_ideal)
    return Carrier::ring;
  if (name == "N" || name == "m" || name == "K" || name == "L")
    return Carrier::module;
  if (name == "B" && notion == Notion::prime)
    return Carrier::module;
  return Carrier::ring;
}

} // namespace

std::string_view to_string(Variant v) {
  switch (v) {
  case Variant::v0: return "0";
  case Variant::v1: return "1";
  case Variant::v2: return "2";
  case Variant::v3: return "3";
  case Variant::vc: return "c";
  }
  return "?";
}

std::string_view to_string(Notion n) {
  return n == Notion::prime ? "prime" : "classical";
}

std::string_view to_string(Convention c) {
  return c == Convention::dauns ? "dauns" : "juglal";
}

std::string_view to_string(Outcome o) {
  switch (o) {
  case Outcome::holds: return "true";
  case Outcome::fails: return "false";
  case Outcome::not_applicable: return "not-applicable";
  }
  return "?";
}

std::string_view to_string(Target t) {
  return t == Target::ring_ideal ? "ring-ideal" : "module-r-ideal";
}

std::optional<Variant> parse_variant(std::string_view text) {
  for (Variant v :
       {Variant::v0, Variant::v1, Variant::v2, Variant::v3, Variant::vc})
    if (text == to_string(v))
      return v;
  return std::nullopt;
}

std::optional<Notion> parse_notion(std::string_view text) {
  if (text == "prime")
    return Notion::prime;
  if (text == "classical" || text == "classical-prime")
    return Notion::classical;
  return std::nullopt;
}

std::optional<Convention> parse_convention(std::string_view text) {
  if (text == "dauns")
    return Convention::dauns;
  if (text == "juglal")
    return Convention::juglal;
  return std::nullopt;
}

const WitnessPart *Witness::find(std::string_view name) const {
  for (const auto &p : parts)
    if (p.name == name)
      return &p;
  return nullptr;
}

std::string format_witness(const Witness &w,
                           const std::vector<std::string> &ring_labels,
                           const std::vector<std::string> &module_labels) {
  std::string out;
  for (const auto &p : w.parts) {
    if (!out.empty())
      out += ' ';
    const auto &labels =
        p.carrier == Carrier::ring ? ring_labels : module_labels;
    out += p.name + '=';
    out += p.is_set() ? format_labels(*p.set, labels) : labels[p.element];
  }
  return out;
}

RingContext::RingContext(RingPtr ring) : ring_(std::move(ring)) {
  ideals_ = enumerate(*ring_, SubstructureKind::ideal);
  left_ideals_ = enumerate(*ring_, SubstructureKind::left_ideal);
  left_r_subgroups_ = enumerate(*ring_, SubstructureKind::left_r_subgroup);
  const ElementSet all = ring_->all();
  a_r_.reserve(ring_->size());
  for (std::size_t a = 0; a < ring_->size(); ++a)
    a_r_.push_back(set_product(*ring_, ring_->singleton(a), all));
}

ModuleContext::ModuleContext(ModulePtr module)
    : module_(std::move(module)), ring_(module_->ring_ptr()) {
  submodules_ = enumerate(*module_, SubstructureKind::r_submodule);
  r_ideals_ = enumerate(*module_, SubstructureKind::r_ideal);
  rm_ = set_product(*module_, ring_.all(), module_->all());
}

Verdict is_prime_ring_ideal(const RingContext &ctx, const ElementSet &p,
                            Variant v) {
  require_proper_ideal(ctx, p);
  return ring_prime_eval(ctx, p, v);
}

Verdict ring_prime_condition(const RingContext &ctx, const ElementSet &q,
                             Variant v) {
  if (auto bad = not_an_ideal(ctx, q))
    return *bad;
  return ring_prime_eval(ctx, q, v);
}

Verdict is_classical_prime_ring_ideal(const RingContext &ctx,
                                      const ElementSet &p, Variant v) {
  if (v == Variant::v1)
    throw Error(ErrorCode::v1_not_defined,
                "variant 1 classical primeness is not defined");
  require_proper_ideal(ctx, p);
  return ring_classical_eval(ctx, p, v);
}

Verdict ring_classical_condition(const RingContext &ctx, const ElementSet &q,
                                 Variant v) {
  if (v == Variant::v1)
    throw Error(ErrorCode::v1_not_defined,
                "variant 1 classical primeness is not defined");
  if (auto bad = not_an_ideal(ctx, q))
    return *bad;
  return ring_classical_eval(ctx, q, v);
}

Verdict is_prime_module_ideal(const ModuleContext &ctx, const ElementSet &p,
                              Variant v, Convention convention) {
  if (auto na = module_preconditions(ctx, p, v))
    return *na;
  const Ops o{ctx.rings(), &ctx.module()};
  if (v == Variant::v3 || v == Variant::vc) {
    const char *clause = v == Variant::v3 ? "aRm in P but aM not in P, m not in P"
                                          : "am in P but aM not in P, m not in P";
    for (std::size_t a = 0; a < o.rn(); ++a)
      for (std::size_t m = 0; m < ctx.module().size(); ++m)
        if (module_prime_elems(o, p, v, a, m))
          return Verdict::no(Witness{{elem_part("a", Carrier::ring, a),
                                      elem_part("m", Carrier::module, m)},
                                     clause});
    return Verdict::yes();
  }
  const auto &as = ring_domain(ctx.rings(), v);
  const auto &bs = (v == Variant::v0 && convention == Convention::juglal)
                       ? ctx.r_ideals()
                       : ctx.submodules();
  for (const auto &a : as)
    for (const auto &b : bs)
      if (module_prime_sets(o, p, a, b))
        return Verdict::no(Witness{{set_part("A", a), set_part("B", b)},
                                   "AB in P but AM not in P, B not in P"});
  return Verdict::yes();
}

Verdict is_classical_prime_module_ideal(const ModuleContext &ctx,
                                        const ElementSet &p, Variant v,
                                        const ClassicalOptions &options) {
  if (auto na = module_preconditions(ctx, p, v))
    return *na;
  const Ops o{ctx.rings(), &ctx.module()};
  const auto &ns = classical_range(ctx, options);
  if (v == Variant::v3 || v == Variant::vc) {
    const char *clause = v == Variant::v3
                             ? "(aR)(bR)N in P but aN, bN not in P"
                             : "(aRb)N in P but aN, bN not in P";
    for (std::size_t a = 0; a < o.rn(); ++a)
      for (std::size_t b = 0; b < o.rn(); ++b) {
        const ElementSet ab = o.elem_product(v, a, b);
        for (const auto &n : ns)
          if (classical_elems(o, p, ab, a, b, n))
            return Verdict::no(Witness{{elem_part("a", Carrier::ring, a),
                                        elem_part("b", Carrier::ring, b),
                                        set_part("N", n)},
                                       clause});
      }
    return Verdict::yes();
  }
  const auto &dom = ring_domain(ctx.rings(), v);
  for (const auto &a : dom)
    for (const auto &b : dom)
      for (const auto &n : ns)
        if (classical_sets(o, p, a, b, n))
          return Verdict::no(
              Witness{{set_part("A", a), set_part("B", b), set_part("N", n)},
                      "ABN in P but AN, BN not in P"});
  return Verdict::yes();
}

bool replay_witness(const ModuleContext &ctx, Target target,
                    const ElementSet &p, Notion notion, Variant v,
                    Convention convention, const Witness &w) {
  const RingContext &rc = ctx.rings();
  const bool elementwise = v == Variant::v3 || v == Variant::vc;
  auto set_of = [&](std::string_view name) -> const ElementSet * {
    const WitnessPart *part = w.find(name);
    return part && part->is_set() ? &*part->set : nullptr;
  };
  auto elem_of = [&](std::string_view name,
                     std::size_t bound) -> std::optional<std::size_t> {
    const WitnessPart *part = w.find(name);
    if (!part || part->is_set() || part->element >= bound)
      return std::nullopt;
    return part->element;
  };
  const std::size_t rn = rc.ring().size();

  if (target == Target::ring_ideal) {
    const Ops o{rc, nullptr};
    const ElementSet rp = ring_carrier(p);
    if (notion == Notion::prime) {
      if (elementwise) {
        auto a = elem_of("a", rn), b = elem_of("b", rn);
        return a && b && ring_prime_elems(o, rp, v, *a, *b);
      }
      const ElementSet *a = set_of("A"), *b = set_of("B");
      const auto &dom = ring_domain(rc, v);
      return a && b && in_domain(dom, *a) && in_domain(dom, *b) &&
             ring_prime_sets(o, rp, *a, *b);
    }
    const ElementSet *i = set_of("I");
    if (!i || !in_domain(rc.ideals(), *i))
      return false;
    if (elementwise) {
      auto a = elem_of("a", rn), b = elem_of("b", rn);
      return a && b &&
             classical_elems(o, rp, o.elem_product(v, *a, *b), *a, *b, *i);
    }
    const ElementSet *a = set_of("A"), *b = set_of("B");
    const auto &dom = ring_domain(rc, v);
    return a && b && in_domain(dom, *a) && in_domain(dom, *b) &&
           classical_sets(o, rp, *a, *b, *i);
  }

  const Ops o{rc, &ctx.module()};
  const std::size_t mn = ctx.module().size();
  if (notion == Notion::prime) {
    if (elementwise) {
      auto a = elem_of("a", rn), m = elem_of("m", mn);
      return a && m && module_prime_elems(o, p, v, *a, *m);
    }
    const ElementSet *a = set_of("A"), *b = set_of("B");
    const auto &bs = (v == Variant::v0 && convention == Convention::juglal)
                         ? ctx.r_ideals()
                         : ctx.submodules();
    return a && b && in_domain(ring_domain(rc, v), *a) && in_domain(bs, *b) &&
           module_prime_sets(o, p, *a, *b);
  }
  const ElementSet *n = set_of("N");
  if (!n || !in_domain(ctx.submodules(), *n))
    return false;
  if (elementwise) {
    auto a = elem_of("a", rn), b = elem_of("b", rn);
    return a && b &&
           classical_elems(o, p, o.elem_product(v, *a, *b), *a, *b, *n);
  }
  const ElementSet *a = set_of("A"), *b = set_of("B");
  const auto &dom = ring_domain(rc, v);
  return a && b && in_domain(dom, *a) && in_domain(dom, *b) &&
         classical_sets(o, p, *a, *b, *n);
}

Witness parse_witness(std::string_view text, Target target, Notion notion,
                      std::size_t ring_size, std::size_t module_size) {
  Witness w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos)
      end = text.size();
    const std::string_view item = text.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty())
      continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw Error(ErrorCode::bad_input,
                  "witness part '" + std::string(item) + "' lacks name=value");
    const std::string name(item.substr(0, eq));
    const Carrier carrier = part_carrier(name, target, notion);
    const std::size_t bound =
        carrier == Carrier::ring ? ring_size : module_size;
    std::vector<std::size_t> values;
    std::string_view rest = item.substr(eq + 1);
    while (!rest.empty()) {
      const std::size_t comma = rest.find(',');
      const std::string_view tok = rest.substr(0, comma);
      if (tok.empty() ||
          !std::all_of(tok.begin(), tok.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw Error(ErrorCode::bad_input,
                    "bad index '" + std::string(tok) + "' in witness");
      const std::size_t x = std::stoul(std::string(tok));
      if (x >= bound)
        throw Error(ErrorCode::bad_input,
                    "index " + std::to_string(x) + " out of range in witness");
      values.push_back(x);
      if (comma == std::string_view::npos)
        break;
      rest = rest.substr(comma + 1);
    }
    if (std::isupper(static_cast<unsigned char>(name[0]))) {
      w.parts.push_back(
          set_part(name, ElementSet::of(carrier, bound, values)));
    } else {
      if (values.size() != 1)
        throw Error(ErrorCode::bad_input,
                    "element part '" + name + "' needs exactly one index");
      w.parts.push_back(elem_part(name, carrier, values[0]));
    }
  }
  return w;
}

const Verdict *Classification::find(Variant v, Notion n, Convention c) const {
  for (const auto &e : verdicts)
    if (e.variant == v && e.notion == n &&
        (e.convention == c || !(n == Notion::prime && v == Variant::v0 &&
                                target == Target::module_r_ideal)))
      return &e.verdict;
  return nullptr;
}

Classification classify(const ModuleContext &ctx, const ElementSet &p) {
  Classification out;
  out.subject = p;
  out.target = Target::module_r_ideal;
  const auto na = module_preconditions(ctx, p, Variant::v0);
  auto add = [&](Variant v, Notion n, Convention c, Verdict verdict) {
    out.verdicts.push_back({v, n, c, std::move(verdict)});
  };
  const Verdict v1 = Verdict::na("variant 1 is not defined for modules");
  for (Variant v : {Variant::v0, Variant::v1, Variant::v2, Variant::v3,
                    Variant::vc}) {
    if (v == Variant::v1) {
      add(v, Notion::prime, Convention::dauns, v1);
      continue;
    }
    add(v, Notion::prime, Convention::dauns,
        na ? *na : is_prime_module_ideal(ctx, p, v, Convention::dauns));
    if (v == Variant::v0)
      add(v, Notion::prime, Convention::juglal,
          na ? *na : is_prime_module_ideal(ctx, p, v, Convention::juglal));
  }
  for (Variant v : {Variant::v0, Variant::v1, Variant::v2, Variant::v3,
                    Variant::vc}) {
    if (v == Variant::v1) {
      add(v, Notion::classical, Convention::dauns, v1);
      continue;
    }
    add(v, Notion::classical, Convention::dauns,
        na ? *na : is_classical_prime_module_ideal(ctx, p, v));
  }
  return out;
}

Classification classify_ring(const RingContext &ctx, const ElementSet &p) {
  Classification out;
  out.subject = p;
  out.target = Target::ring_ideal;
  const SubstructureCheck c =
      is_substructure(ctx.ring(), p, SubstructureKind::ideal);
  if (!c.holds)
    throw Error(ErrorCode::not_an_ideal, "P is not an ideal (" + c.clause + ")",
                c.witness);
  const bool improper = p.is_full();
  const Verdict not_proper = Verdict::na("P is not proper");
  for (Variant v : {Variant::v0, Variant::v1, Variant::v2, Variant::v3,
                    Variant::vc})
    out.verdicts.push_back({v, Notion::prime, Convention::dauns,
                            improper ? not_proper
                                     : ring_prime_eval(ctx, p, v)});
  for (Variant v : {Variant::v0, Variant::v1, Variant::v2, Variant::v3,
                    Variant::vc}) {
    Verdict verdict =
        v == Variant::v1
            ? Verdict::na("variant 1 classical primeness is not defined")
        : improper ? not_proper
                   : ring_classical_eval(ctx, p, v);
    out.verdicts.push_back(
        {v, Notion::classical, Convention::dauns, std::move(verdict)});
  }
  return out;
}

std::vector<Classification> classify_all(const ModuleContext &ctx) {
  std::vector<Classification> out;
  for (const auto &p : ctx.r_ideals())
    if (!p.is_full())
      out.push_back(classify(ctx, p));
  return out;
}

std::vector<Classification> classify_all_ring(const RingContext &ctx) {
  std::vector<Classification> out;
  for (const auto &p : ctx.ideals())
    if (!p.is_full())
      out.push_back(classify_ring(ctx, p));
  return out;
}

} // namespace nearprime
