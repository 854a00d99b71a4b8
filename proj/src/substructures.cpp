#include "nearprime/substructures.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace nearprime {

namespace {

enum class Clause {
  group,
  normal,
  left_closed,  // R S in S (ring) or R o S in S (module)
  right_closed, // S R in S
  left_ideal,   // r1(r2+i) - r1 r2 in S, or r(m+n) - rm in S for modules
};

std::vector<Clause> clauses_of(SubstructureKind kind) {
  using K = SubstructureKind;
  switch (kind) {
  case K::subgroup: return {Clause::group};
  case K::normal_subgroup: return {Clause::group, Clause::normal};
  case K::left_r_subgroup: return {Clause::group, Clause::left_closed};
  case K::right_r_subgroup: return {Clause::group, Clause::right_closed};
  case K::invariant_r_subgroup:
    return {Clause::group, Clause::left_closed, Clause::right_closed};
  case K::left_ideal:
    return {Clause::group, Clause::normal, Clause::left_ideal};
  case K::right_ideal:
    return {Clause::group, Clause::normal, Clause::right_closed};
  case K::ideal:
    return {Clause::group, Clause::normal, Clause::right_closed,
            Clause::left_ideal};
  case K::r_submodule: return {Clause::group, Clause::left_closed};
  case K::r_ideal: return {Clause::group, Clause::normal, Clause::left_ideal};
  }
  return {};
}

// Uniform access to R acting on either R itself or a module.
struct View {
  const FiniteNearRing &ring;
  const Group &group;
  const FiniteModule *module; // null for ring kinds
  Carrier carrier;

  std::size_t size() const { return group.size(); }
  std::size_t scalars() const { return ring.size(); }
  Elem act(std::size_t r, std::size_t x) const {
    return module ? module->act(r, x) : ring.mul(r, x);
  }
  Elem right(std::size_t x, std::size_t r) const { return ring.mul(x, r); }
  ElementSet empty_set() const { return ElementSet(carrier, size()); }
};

View ring_view(const FiniteNearRing &ring) {
  return View{ring, ring.group(), nullptr, Carrier::ring};
}

View module_view(const FiniteModule &module) {
  return View{module.ring(), module.group(), &module, Carrier::module};
}

SubstructureCheck fail(std::string clause, std::vector<std::size_t> witness) {
  SubstructureCheck c;
  c.holds = false;
  c.clause = std::move(clause);
  c.witness = std::move(witness);
  return c;
}

SubstructureCheck check_clause(const View &v, const ElementSet &s,
                               Clause clause) {
  const std::size_t n = v.size();
  const std::size_t nr = v.scalars();
  std::optional<SubstructureCheck> bad;
  switch (clause) {
  case Clause::group:
    if (!s.contains(0))
      return fail("0 in S", {});
    s.for_each([&](std::size_t a) {
      if (bad)
        return;
      if (!s.contains(v.group.neg(a))) {
        bad = fail("-a in S", {a});
        return;
      }
      s.for_each([&](std::size_t b) {
        if (!bad && !s.contains(v.group.add(a, b)))
          bad = fail("a+b in S", {a, b});
      });
    });
    break;
  case Clause::normal:
    if (v.group.abelian())
      break;
    for (std::size_t g = 0; g < n && !bad; ++g)
      s.for_each([&](std::size_t h) {
        if (!bad && !s.contains(v.group.sub(v.group.add(g, h), g)))
          bad = fail("g+h-g in S", {g, h});
      });
    break;
  case Clause::left_closed:
    for (std::size_t r = 0; r < nr && !bad; ++r)
      s.for_each([&](std::size_t h) {
        if (!bad && !s.contains(v.act(r, h)))
          bad = fail("rh in S", {r, h});
      });
    break;
  case Clause::right_closed:
    s.for_each([&](std::size_t h) {
      for (std::size_t r = 0; r < nr && !bad; ++r)
        if (!s.contains(v.right(h, r)))
          bad = fail("hr in S", {h, r});
    });
    break;
  case Clause::left_ideal:
    // Ring: r1(r2+i) - r1r2. Module: r(m+n) - rm. Same shape with the
    // second quantifier running over the carrier.
    for (std::size_t r = 0; r < nr && !bad; ++r)
      for (std::size_t m = 0; m < n && !bad; ++m) {
        const std::size_t rm = v.act(r, m);
        s.for_each([&](std::size_t i) {
          if (!bad && !s.contains(v.group.sub(v.act(r, v.group.add(m, i)), rm)))
            bad = fail(v.module ? "r(m+n)-rm in S" : "r1(r2+i)-r1r2 in S",
                       {r, m, i});
        });
      }
    break;
  }
  if (bad)
    return *bad;
  return {};
}

SubstructureCheck check(const View &v, const ElementSet &s,
                        SubstructureKind kind, bool zero_convention) {
  if (s.carrier() != v.carrier || s.universe() != v.size())
    throw Error(ErrorCode::carrier_mismatch,
                std::string("subset is not over the ") +
                    std::string(to_string(v.carrier)) + " carrier");
  for (Clause c : clauses_of(kind)) {
    SubstructureCheck r = check_clause(v, s, c);
    if (!r.holds) {
      if (zero_convention && s.is_zero()) {
        SubstructureCheck ok;
        ok.by_zero_convention = true;
        ok.clause = r.clause;
        return ok;
      }
      return r;
    }
  }
  return {};
}

// Worklist closure: grows `s` until every clause of the kind holds.
void close(const View &v, SubstructureKind kind, ElementSet &s,
           std::deque<std::size_t> work) {
  const auto clauses = clauses_of(kind);
  const std::size_t n = v.size();
  const std::size_t nr = v.scalars();
  auto push = [&](std::size_t x) {
    if (s.add(x))
      work.push_back(x);
  };
  for (std::size_t x : work)
    s.insert(x);
  while (!work.empty()) {
    const std::size_t x = work.front();
    work.pop_front();
    for (Clause c : clauses) {
      switch (c) {
      case Clause::group: {
        push(v.group.neg(x));
        std::vector<std::size_t> current = s.members();
        for (std::size_t y : current) {
          push(v.group.add(x, y));
          push(v.group.add(y, x));
        }
        break;
      }
      case Clause::normal:
        if (!v.group.abelian())
          for (std::size_t g = 0; g < n; ++g)
            push(v.group.sub(v.group.add(g, x), g));
        break;
      case Clause::left_closed:
        for (std::size_t r = 0; r < nr; ++r)
          push(v.act(r, x));
        break;
      case Clause::right_closed:
        for (std::size_t r = 0; r < nr; ++r)
          push(v.right(x, r));
        break;
      case Clause::left_ideal:
        for (std::size_t r = 0; r < nr; ++r)
          for (std::size_t m = 0; m < n; ++m)
            push(v.group.sub(v.act(r, v.group.add(m, x)), v.act(r, m)));
        break;
      }
    }
  }
}

ElementSet generated_in(const View &v, const ElementSet &seed,
                        SubstructureKind kind) {
  if (seed.carrier() != v.carrier || seed.universe() != v.size())
    throw Error(ErrorCode::carrier_mismatch,
                "generating set is not over the expected carrier");
  ElementSet s = v.empty_set();
  if (seed.subset_of(ElementSet::zero(v.carrier, v.size()))) {
    s.insert(0);
    s.kind = kind;
    return s;
  }
  std::deque<std::size_t> work;
  work.push_back(0);
  s.insert(0);
  seed.for_each([&](std::size_t x) {
    if (s.add(x))
      work.push_back(x);
  });
  close(v, kind, s, std::move(work));
  s.kind = kind;
  return s;
}

void sort_sets(std::vector<ElementSet> &sets) {
  std::sort(sets.begin(), sets.end());
}

std::vector<ElementSet> closure_lattice(const View &v, SubstructureKind kind) {
  std::vector<ElementSet> out;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::deque<ElementSet> queue;
  ElementSet start = ElementSet::zero(v.carrier, v.size());
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    ElementSet k = std::move(queue.front());
    queue.pop_front();
    const bool at_zero = k.is_zero();
    for (std::size_t x = 0; x < v.size(); ++x) {
      if (k.contains(x))
        continue;
      ElementSet j = k;
      std::deque<std::size_t> work;
      // {0} may be present only by convention, so its consequences have not
      // been propagated yet.
      if (at_zero)
        work.push_back(0);
      j.insert(x);
      work.push_back(x);
      close(v, kind, j, std::move(work));
      if (seen.insert(j).second)
        queue.push_back(j);
    }
    out.push_back(std::move(k));
  }
  for (auto &s : out)
    s.kind = kind;
  sort_sets(out);
  return out;
}

std::vector<ElementSet> enumerate_in(const View &v, SubstructureKind kind,
                                     EnumerationStrategy strategy) {
  if (strategy != EnumerationStrategy::closure_lattice) {
    const std::size_t cap = strategy == EnumerationStrategy::automatic
                                ? kSubgroupLatticeCap
                                : static_cast<std::size_t>(-1);
    if (auto subgroups = subgroup_lattice(v.group, v.carrier, cap)) {
      std::vector<ElementSet> out;
      for (auto &h : *subgroups)
        if (check(v, h, kind, true).holds) {
          h.kind = kind;
          out.push_back(std::move(h));
        }
      // {0} is always listed, even where only the convention admits it.
      sort_sets(out);
      return out;
    }
  }
  return closure_lattice(v, kind);
}

} // namespace

SubstructureCheck is_substructure(const FiniteNearRing &ring,
                                  const ElementSet &s, SubstructureKind kind,
                                  bool zero_convention) {
  if (is_module_kind(kind))
    throw Error(ErrorCode::carrier_mismatch,
                std::string(to_string(kind)) + " is a module kind");
  return check(ring_view(ring), s, kind, zero_convention);
}

SubstructureCheck is_substructure(const FiniteModule &module,
                                  const ElementSet &s, SubstructureKind kind,
                                  bool zero_convention) {
  if (s.carrier() == Carrier::ring)
    return is_substructure(module.ring(), s, kind, zero_convention);
  if (!is_module_kind(kind) && kind != SubstructureKind::subgroup &&
      kind != SubstructureKind::normal_subgroup)
    throw Error(ErrorCode::carrier_mismatch,
                std::string(to_string(kind)) + " is a ring kind");
  return check(module_view(module), s, kind, zero_convention);
}

std::optional<std::vector<ElementSet>>
subgroup_lattice(const Group &group, Carrier carrier, std::size_t cap) {
  const std::size_t n = group.size();
  struct Node {
    ElementSet set;
    std::vector<std::size_t> gens;
  };
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::deque<Node> queue;
  std::vector<ElementSet> out;

  Node trivial{ElementSet::zero(carrier, n), {}};
  seen.insert(trivial.set);
  queue.push_back(trivial);
  while (!queue.empty()) {
    Node h = std::move(queue.front());
    queue.pop_front();
    for (std::size_t x = 0; x < n; ++x) {
      if (h.set.contains(x))
        continue;
      std::vector<std::size_t> gens = h.gens;
      gens.push_back(x);
      // A finite group is generated as a monoid by its generators.
      ElementSet j = ElementSet::zero(carrier, n);
      std::vector<std::size_t> frontier{0};
      while (!frontier.empty()) {
        const std::size_t y = frontier.back();
        frontier.pop_back();
        for (std::size_t g : gens) {
          const std::size_t z = group.add(y, g);
          if (j.add(z))
            frontier.push_back(z);
        }
      }
      if (seen.insert(j).second) {
        if (seen.size() > cap)
          return std::nullopt;
        queue.push_back(Node{std::move(j), std::move(gens)});
      }
    }
    out.push_back(std::move(h.set));
  }
  sort_sets(out);
  return out;
}

std::vector<ElementSet> enumerate(const FiniteNearRing &ring,
                                  SubstructureKind kind,
                                  EnumerationStrategy strategy) {
  if (is_module_kind(kind))
    throw Error(ErrorCode::carrier_mismatch,
                std::string(to_string(kind)) + " is a module kind");
  return enumerate_in(ring_view(ring), kind, strategy);
}

std::vector<ElementSet> enumerate(const FiniteModule &module,
                                  SubstructureKind kind,
                                  EnumerationStrategy strategy) {
  if (!is_module_kind(kind) && kind != SubstructureKind::subgroup &&
      kind != SubstructureKind::normal_subgroup)
    return enumerate(module.ring(), kind, strategy);
  return enumerate_in(module_view(module), kind, strategy);
}

ElementSet generated(const FiniteNearRing &ring, const ElementSet &v,
                     SubstructureKind kind) {
  if (is_module_kind(kind))
    throw Error(ErrorCode::carrier_mismatch,
                std::string(to_string(kind)) + " is a module kind");
  return generated_in(ring_view(ring), v, kind);
}

ElementSet generated(const FiniteModule &module, const ElementSet &v,
                     SubstructureKind kind) {
  if (v.carrier() == Carrier::ring)
    return generated(module.ring(), v, kind);
  return generated_in(module_view(module), v, kind);
}

} // namespace nearprime
