#include "nearprime/near_ring.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "nearprime/substructures.hpp"

namespace nearprime {

namespace {

std::string triple(const std::vector<std::string> &labels, std::size_t a,
                   std::size_t b, std::size_t c) {
  return "(" + labels[a] + ", " + labels[b] + ", " + labels[c] + ")";
}

CayleyTable checked_table(const std::vector<std::vector<long long>> &rows,
                          std::size_t expect_rows, std::size_t expect_cols,
                          std::size_t value_bound, const std::string &what) {
  if (rows.size() != expect_rows)
    throw Error(ErrorCode::bad_input,
                what + " has " + std::to_string(rows.size()) +
                    " rows, expected " + std::to_string(expect_rows));
  CayleyTable t(expect_rows, expect_cols);
  for (std::size_t r = 0; r < expect_rows; ++r) {
    if (rows[r].size() != expect_cols)
      throw Error(ErrorCode::bad_input,
                  what + " row " + std::to_string(r) + " has " +
                      std::to_string(rows[r].size()) + " entries, expected " +
                      std::to_string(expect_cols));
    for (std::size_t c = 0; c < expect_cols; ++c) {
      const long long v = rows[r][c];
      if (v < 0 || static_cast<std::size_t>(v) >= value_bound)
        throw Error(ErrorCode::bad_input,
                    what + " entry (" + std::to_string(r) + "," +
                        std::to_string(c) + ") = " + std::to_string(v) +
                        " is out of range");
      t.at(r, c) = static_cast<Elem>(v);
    }
  }
  return t;
}

void check_labels(const std::vector<std::string> &labels) {
  if (labels.empty())
    throw Error(ErrorCode::bad_input, "element list is empty");
  if (labels.size() > 65535)
    throw Error(ErrorCode::bound_exceeded, "carrier too large");
  std::set<std::string> seen;
  for (const auto &l : labels)
    if (!seen.insert(l).second)
      throw Error(ErrorCode::bad_input, "duplicate element label '" + l + "'");
}

// Records or throws depending on the policy.
class ViolationSink {
public:
  explicit ViolationSink(AxiomPolicy policy) : policy_(policy) {}

  void report(ErrorCode code, std::string message,
              std::vector<std::size_t> witness) {
    if (policy_ == AxiomPolicy::enforce)
      throw Error(code, std::move(message), std::move(witness));
    found_.push_back({code, std::move(message), std::move(witness)});
  }

  std::vector<AxiomViolation> take() { return std::move(found_); }

private:
  AxiomPolicy policy_;
  std::vector<AxiomViolation> found_;
};

} // namespace

std::vector<std::vector<std::size_t>> CayleyTable::to_rows() const {
  std::vector<std::vector<std::size_t>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      out[r].push_back((*this)(r, c));
  return out;
}

Group::Group(std::vector<std::string> labels, CayleyTable add,
             std::vector<Elem> negatives)
    : labels_(std::move(labels)), add_(std::move(add)),
      neg_(std::move(negatives)) {
  const std::size_t n = labels_.size();
  for (std::size_t a = 0; a < n && abelian_; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (add_(a, b) != add_(b, a)) {
        abelian_ = false;
        break;
      }
}

std::optional<std::size_t> Group::index_of(const std::string &label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Group validate_group(const std::vector<std::string> &labels,
                     const std::vector<std::vector<long long>> &add) {
  check_labels(labels);
  const std::size_t n = labels.size();
  CayleyTable t = checked_table(add, n, n, n, "addition table");

  for (std::size_t a = 0; a < n; ++a)
    if (t(0, a) != a || t(a, 0) != a)
      throw Error(ErrorCode::not_a_group,
                  "element 0 ('" + labels[0] + "') is not an identity at '" +
                      labels[a] + "'",
                  {0, a});

  std::vector<Elem> neg(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n; ++b)
      if (t(a, b) == 0 && t(b, a) == 0) {
        neg[a] = static_cast<Elem>(b);
        found = true;
        break;
      }
    if (!found)
      throw Error(ErrorCode::not_a_group,
                  "'" + labels[a] + "' has no additive inverse", {a});
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = t(a, b);
      for (std::size_t c = 0; c < n; ++c)
        if (t(ab, c) != t(a, t(b, c)))
          throw Error(ErrorCode::not_a_group,
                      "addition is not associative at " +
                          triple(labels, a, b, c),
                      {a, b, c});
    }

  return Group(labels, std::move(t), std::move(neg));
}

RawRing normalize_identity(RawRing raw, const std::string &identity) {
  auto it = std::find(raw.elements.begin(), raw.elements.end(), identity);
  if (it == raw.elements.end())
    throw Error(ErrorCode::bad_input,
                "identity '" + identity + "' is not an element");
  const auto k = static_cast<long long>(it - raw.elements.begin());
  if (k == 0)
    return raw;
  auto swap_idx = [k](long long v) { return v == 0 ? k : (v == k ? 0 : v); };
  auto permute = [&](std::vector<std::vector<long long>> &rows) {
    if (rows.size() <= static_cast<std::size_t>(k))
      return;
    std::swap(rows[0], rows[static_cast<std::size_t>(k)]);
    for (auto &row : rows) {
      if (row.size() > static_cast<std::size_t>(k))
        std::swap(row[0], row[static_cast<std::size_t>(k)]);
      for (auto &v : row)
        v = swap_idx(v);
    }
  };
  std::swap(raw.elements[0], raw.elements[static_cast<std::size_t>(k)]);
  permute(raw.add);
  permute(raw.mul);
  return raw;
}

FiniteNearRing::FiniteNearRing(std::string name, Group group, CayleyTable mul,
                               std::vector<AxiomViolation> violations)
    : name_(std::move(name)), group_(std::move(group)), mul_(std::move(mul)),
      violations_(std::move(violations)) {
  const std::size_t n = size();
  flags_.abelian_addition = group_.abelian();

  flags_.zero_symmetric = true;
  for (std::size_t r = 0; r < n; ++r)
    if (mul_(r, 0) != 0)
      flags_.zero_symmetric = false;

  for (std::size_t e = 0; e < n && !flags_.identity; ++e) {
    bool ok = true;
    for (std::size_t r = 0; r < n && ok; ++r)
      ok = mul_(e, r) == r && mul_(r, e) == r;
    if (ok)
      flags_.identity = e;
  }

  // Nonzero elements form a group under multiplication: closure, an identity
  // and inverses (associativity is an axiom of the ring).
  bool nf = n >= 2 && flags_.identity && *flags_.identity != 0;
  for (std::size_t a = 1; a < n && nf; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 1; b < n; ++b) {
      if (mul_(a, b) == 0) {
        nf = false;
        break;
      }
      if (mul_(a, b) == *flags_.identity && mul_(b, a) == *flags_.identity)
        has_inverse = true;
    }
    nf = nf && has_inverse;
  }
  flags_.near_field = nf && violations_.empty();
}

RingPtr validate_near_ring(const RawRing &raw, ValidationOptions options) {
  Group group = validate_group(raw.elements, raw.add);
  const std::size_t n = group.size();
  CayleyTable mul = checked_table(raw.mul, n, n, n, "multiplication table");
  const auto &labels = raw.elements;
  ViolationSink sink(options.policy);

  [&] {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t ab = mul(a, b);
        for (std::size_t c = 0; c < n; ++c)
          if (mul(ab, c) != mul(a, mul(b, c))) {
            sink.report(ErrorCode::not_associative_mul,
                        "(ab)c != a(bc) at " + triple(labels, a, b, c),
                        {a, b, c});
            return;
          }
      }
  }();

  [&] {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t ab = group.add(a, b);
        for (std::size_t c = 0; c < n; ++c)
          if (mul(ab, c) != group.add(mul(a, c), mul(b, c))) {
            sink.report(ErrorCode::not_right_distributive,
                        "(a+b)c != ac+bc at " + triple(labels, a, b, c),
                        {a, b, c});
            return;
          }
      }
  }();

  if (options.strict_zero_symmetric)
    for (std::size_t r = 0; r < n; ++r)
      if (mul(r, 0) != 0) {
        sink.report(ErrorCode::not_zero_symmetric,
                    labels[r] + "*0 = " + labels[mul(r, 0)] + " != 0",
                    {r, mul(r, 0)});
        break;
      }

  return std::make_shared<const FiniteNearRing>(raw.name, std::move(group),
                                                std::move(mul), sink.take());
}

FiniteModule::FiniteModule(std::string name, RingPtr ring, Group group,
                           CayleyTable action)
    : name_(std::move(name)), ring_(std::move(ring)), group_(std::move(group)),
      action_(std::move(action)) {
  const std::size_t nr = ring_->size();
  const std::size_t nm = group_.size();

  flags_.faithful = true;
  for (std::size_t r = 1; r < nr && flags_.faithful; ++r) {
    bool kills = true;
    for (std::size_t x = 0; x < nm && kills; ++x)
      kills = action_(r, x) == 0;
    if (kills)
      flags_.faithful = false;
  }
  // The one-element ring acts faithfully on anything; any nonzero ring acts
  // unfaithfully on the zero module, which the loop above already detects.

  for (std::size_t m = 0; m < nm; ++m) {
    ElementSet orbit(Carrier::module, nm);
    for (std::size_t r = 0; r < nr; ++r)
      orbit.insert(action_(r, m));
    if (orbit.is_full())
      flags_.generators.push_back(m);
  }
}

ModulePtr validate_module(RingPtr ring, const RawModule &raw,
                          AxiomPolicy policy,
                          std::vector<AxiomViolation> *violations) {
  Group group = validate_group(raw.elements, raw.add);
  const FiniteNearRing &r = *ring;
  const std::size_t nr = r.size();
  const std::size_t nm = group.size();
  CayleyTable action = checked_table(raw.action, nr, nm, nm, "action table");
  ViolationSink sink(policy);

  [&] {
    for (std::size_t a = 0; a < nr; ++a)
      for (std::size_t b = 0; b < nr; ++b)
        for (std::size_t x = 0; x < nm; ++x)
          if (action(r.add(a, b), x) != group.add(action(a, x), action(b, x))) {
            sink.report(ErrorCode::action_not_additive_in_scalar,
                        "(r1+r2)x != r1x + r2x at (" + r.label(a) + ", " +
                            r.label(b) + ", " + raw.elements[x] + ")",
                        {a, b, x});
            return;
          }
  }();

  [&] {
    for (std::size_t a = 0; a < nr; ++a)
      for (std::size_t b = 0; b < nr; ++b)
        for (std::size_t x = 0; x < nm; ++x)
          if (action(r.mul(a, b), x) != action(a, action(b, x))) {
            sink.report(ErrorCode::action_not_associative,
                        "(r1r2)x != r1(r2x) at (" + r.label(a) + ", " +
                            r.label(b) + ", " + raw.elements[x] + ")",
                        {a, b, x});
            return;
          }
  }();

  auto found = sink.take();
  if (violations)
    *violations = std::move(found);
  return std::make_shared<const FiniteModule>(raw.name, std::move(ring),
                                              std::move(group),
                                              std::move(action));
}

ModulePtr regular_module(RingPtr ring) {
  const FiniteNearRing &r = *ring;
  std::string name = r.name() + "_R";
  return std::make_shared<const FiniteModule>(std::move(name), ring, r.group(),
                                              r.mul_table());
}

RawRing to_raw(const FiniteNearRing &ring) {
  RawRing raw;
  raw.name = ring.name();
  raw.elements = ring.labels();
  const std::size_t n = ring.size();
  raw.add.assign(n, std::vector<long long>(n));
  raw.mul.assign(n, std::vector<long long>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      raw.add[a][b] = ring.add(a, b);
      raw.mul[a][b] = ring.mul(a, b);
    }
  return raw;
}

RawModule to_raw(const FiniteModule &module) {
  RawModule raw;
  raw.name = module.name();
  raw.elements = module.labels();
  const std::size_t nm = module.size();
  const std::size_t nr = module.ring().size();
  raw.add.assign(nm, std::vector<long long>(nm));
  raw.action.assign(nr, std::vector<long long>(nm));
  for (std::size_t a = 0; a < nm; ++a)
    for (std::size_t b = 0; b < nm; ++b)
      raw.add[a][b] = module.add(a, b);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t x = 0; x < nm; ++x)
      raw.action[r][x] = module.act(r, x);
  return raw;
}

ElementSet set_product(const FiniteModule &m, const ElementSet &a,
                       const ElementSet &x) {
  if (a.carrier() != Carrier::ring || a.universe() != m.ring().size())
    throw Error(ErrorCode::carrier_mismatch,
                "left factor of a product must be a subset of the ring");
  if (x.carrier() == Carrier::ring)
    return set_product(m.ring(), a, x);
  if (x.universe() != m.size())
    throw Error(ErrorCode::carrier_mismatch,
                "right factor is not a subset of the module");
  ElementSet out(Carrier::module, m.size());
  a.for_each([&](std::size_t r) {
    x.for_each([&](std::size_t v) { out.insert(m.act(r, v)); });
  });
  return out;
}

ElementSet set_product(const FiniteNearRing &r, const ElementSet &a,
                       const ElementSet &x) {
  if (a.carrier() != Carrier::ring || a.universe() != r.size() ||
      x.carrier() != Carrier::ring || x.universe() != r.size())
    throw Error(ErrorCode::carrier_mismatch,
                "both factors must be subsets of the ring");
  ElementSet out(Carrier::ring, r.size());
  a.for_each([&](std::size_t p) {
    x.for_each([&](std::size_t q) { out.insert(r.mul(p, q)); });
  });
  return out;
}

ElementSet sumset(const Group &g, const ElementSet &k, const ElementSet &y,
                  Carrier carrier) {
  if (k.universe() != g.size() || y.universe() != g.size())
    throw Error(ErrorCode::carrier_mismatch, "sumset operands differ in size");
  ElementSet out(carrier, g.size());
  k.for_each([&](std::size_t a) {
    y.for_each([&](std::size_t b) { out.insert(g.add(a, b)); });
  });
  return out;
}

ElementSet residual(const FiniteModule &m, const ElementSet &p,
                    const ElementSet &n) {
  for (const ElementSet *s : {&p, &n})
    if (s->carrier() != Carrier::module || s->universe() != m.size())
      throw Error(ErrorCode::carrier_mismatch,
                  "residual operands must be subsets of the module");
  const std::size_t nr = m.ring().size();
  ElementSet out(Carrier::ring, nr);
  for (std::size_t r = 0; r < nr; ++r) {
    bool inside = true;
    n.for_each([&](std::size_t x) {
      if (inside && !p.contains(m.act(r, x)))
        inside = false;
    });
    if (inside)
      out.insert(r);
  }
  return out;
}

std::vector<std::size_t> coset_map(const FiniteModule &m, const ElementSet &p) {
  const std::size_t n = m.size();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset(n, unset);
  std::size_t next = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (coset[x] != unset)
      continue;
    p.for_each([&](std::size_t q) { coset[m.add(x, q)] = next; });
    ++next;
  }
  return coset;
}

ModulePtr quotient_module(const FiniteModule &m, const ElementSet &p) {
  if (p.carrier() != Carrier::module || p.universe() != m.size())
    throw Error(ErrorCode::carrier_mismatch, "P is not a subset of the module");
  if (auto check = is_substructure(m, p, SubstructureKind::r_ideal);
      !check.holds)
    throw Error(ErrorCode::not_an_r_ideal,
                format_labels(p, m.labels()) + " is not an R-ideal: " +
                    check.clause,
                check.witness);

  const std::vector<std::size_t> coset = coset_map(m, p);
  const std::size_t k =
      1 + *std::max_element(coset.begin(), coset.end());
  std::vector<std::size_t> rep(k, 0);
  for (std::size_t x = m.size(); x-- > 0;)
    rep[coset[x]] = x;

  const std::size_t nm = m.size();
  const std::size_t nr = m.ring().size();
  // Exhaustive well-definedness check over all representatives.
  for (std::size_t x = 0; x < nm; ++x)
    for (std::size_t y = 0; y < nm; ++y)
      if (coset[x] == coset[y]) {
        for (std::size_t z = 0; z < nm; ++z)
          if (coset[m.add(x, z)] != coset[m.add(y, z)] ||
              coset[m.add(z, x)] != coset[m.add(z, y)])
            throw Error(ErrorCode::not_an_r_ideal,
                        "coset addition is not well defined", {x, y, z});
        for (std::size_t r = 0; r < nr; ++r)
          if (coset[m.act(r, x)] != coset[m.act(r, y)])
            throw Error(ErrorCode::not_an_r_ideal,
                        "coset action is not well defined", {r, x, y});
      }

  RawModule raw;
  raw.name = m.name() + "/" + format_labels(p, m.labels());
  raw.add.assign(k, std::vector<long long>(k));
  raw.action.assign(nr, std::vector<long long>(k));
  for (std::size_t i = 0; i < k; ++i) {
    raw.elements.push_back(m.label(rep[i]));
    for (std::size_t j = 0; j < k; ++j)
      raw.add[i][j] = static_cast<long long>(coset[m.add(rep[i], rep[j])]);
    for (std::size_t r = 0; r < nr; ++r)
      raw.action[r][i] = static_cast<long long>(coset[m.act(r, rep[i])]);
  }
  // A ring with recorded violations may yield a quotient that fails the
  // module axioms as well; keep it verbatim in that case.
  const AxiomPolicy policy = m.ring().satisfies_axioms()
                                 ? AxiomPolicy::enforce
                                 : AxiomPolicy::record;
  return validate_module(m.ring_ptr(), raw, policy);
}

} // namespace nearprime
