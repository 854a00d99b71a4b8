#include "nearprime/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "nearprime/io.hpp"
#include "nearprime/nearfield.hpp"
#include "nearprime/parallel.hpp"
#include "nearprime/substructures.hpp"
#include "nearprime/verify.hpp"

namespace nearprime {

namespace {

using Rows = std::vector<std::vector<long long>>;
using Sets = std::vector<std::vector<std::size_t>>;

Rows cyclic_add(std::size_t n) {
  Rows t(n, std::vector<long long>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t[a][b] = static_cast<long long>((a + b) % n);
  return t;
}

Rows klein_add() {
  Rows t(4, std::vector<long long>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      t[a][b] = static_cast<long long>(a ^ b);
  return t;
}

std::vector<std::string> numeric_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(std::to_string(i));
  return out;
}

RawRing table_ring(std::string name, Rows add, Rows mul) {
  RawRing r;
  r.name = std::move(name);
  r.elements = numeric_labels(add.size());
  r.add = std::move(add);
  r.mul = std::move(mul);
  return r;
}

ExpectedClaim verdict(std::string id, std::string statement, std::string source,
                      Notion n, Variant v, bool expected,
                      Convention c = Convention::dauns) {
  ExpectedClaim e;
  e.id = std::move(id);
  e.statement = std::move(statement);
  e.source = std::move(source);
  e.kind = ClaimKind::module_verdict;
  e.notion = n;
  e.variant = v;
  e.convention = c;
  e.expected = expected;
  return e;
}

ExpectedClaim replay(std::string id, std::string statement, std::string source,
                     Notion n, Variant v, std::string witness) {
  ExpectedClaim e = verdict(std::move(id), std::move(statement),
                            std::move(source), n, v, true);
  e.kind = ClaimKind::witness_replay;
  e.witness = std::move(witness);
  return e;
}

ExpectedClaim set_list(std::string id, std::string statement,
                       std::string source, ClaimKind kind, Sets sets) {
  ExpectedClaim e;
  e.id = std::move(id);
  e.statement = std::move(statement);
  e.source = std::move(source);
  e.kind = kind;
  e.sets = std::move(sets);
  return e;
}

ExpectedClaim flag(std::string id, std::string statement, std::string source,
                   ClaimKind kind) {
  ExpectedClaim e;
  e.id = std::move(id);
  e.statement = std::move(statement);
  e.source = std::move(source);
  e.kind = kind;
  return e;
}

CatalogEntry klein4() {
  const std::string src = "Klein-4 example";
  CatalogEntry e;
  e.key = "klein4";
  e.title = "Klein-4 group with r*b = r if b = 3, else 0";
  e.provenance = src;
  e.ring = table_ring("klein4", klein_add(),
                      {{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 2}, {0, 0, 0, 3}});
  e.claims = {
      set_list("klein4/submodules", "nonzero R-submodules of R_R are {0,1}, {0,2}, M",
               src, ClaimKind::nonzero_submodules, {{0, 1}, {0, 2}, {0, 1, 2, 3}}),
      set_list("klein4/ideals", "R has no nonzero proper ideals", src,
               ClaimKind::ideals, {{0}, {0, 1, 2, 3}}),
      verdict("klein4/classical-0", "{0} is a 0-classical prime R-ideal", src,
              Notion::classical, Variant::v0, true),
      verdict("klein4/classical-2", "{0} is not 2-classical prime", src,
              Notion::classical, Variant::v2, false),
      replay("klein4/classical-2-witness",
             "{0,2}{0,2}M = 0 but {0,2}M != 0", src, Notion::classical,
             Variant::v2, "A=0,2;B=0,2;N=0,1,2,3"),
      verdict("klein4/classical-c", "{0} is not c-classical prime", src,
              Notion::classical, Variant::vc, false),
      replay("klein4/classical-c-witness", "3R2M = 0 but 2M, 3M != 0", src,
             Notion::classical, Variant::vc, "a=3;b=2;N=0,1,2,3"),
  };
  return e;
}

CatalogEntry z3() {
  const std::string src = "Z3 example";
  CatalogEntry e;
  e.key = "z3";
  e.title = "Z3 with rows (0,0,0), (0,0,1), (0,0,2)";
  e.provenance = src;
  e.ring = table_ring("z3", cyclic_add(3), {{0, 0, 0}, {0, 0, 1}, {0, 0, 2}});
  ExpectedClaim ring0 = verdict("z3/ring-classical-0",
                                "{0} is a 0-classical prime ideal of R", src,
                                Notion::classical, Variant::v0, true);
  ring0.kind = ClaimKind::ring_verdict;
  ExpectedClaim ringc = verdict("z3/ring-classical-c",
                                "{0} is not a c-classical prime ideal of R",
                                src, Notion::classical, Variant::vc, false);
  ringc.kind = ClaimKind::ring_verdict;
  e.claims = {
      set_list("z3/submodules", "M has no proper nonzero R-submodules", src,
               ClaimKind::nonzero_submodules, {{0, 1, 2}}),
      verdict("z3/classical-2", "{0} is 2-classical prime", src,
              Notion::classical, Variant::v2, true),
      verdict("z3/classical-3", "{0} is not 3-classical prime", src,
              Notion::classical, Variant::v3, false),
      replay("z3/classical-3-witness", "(1R)(1R)M = 0 but 1M != 0", src,
             Notion::classical, Variant::v3, "a=1;b=1;N=0,1,2"),
      verdict("z3/classical-c", "{0} is not c-classical prime", src,
              Notion::classical, Variant::vc, false),
      replay("z3/classical-c-witness", "1R1M = 0 but 1M != 0", src,
             Notion::classical, Variant::vc, "a=1;b=1;N=0,1,2"),
      ring0,
      ringc,
  };
  return e;
}

CatalogEntry z4_candidate(bool klein) {
  const std::string src = "Z4 example";
  CatalogEntry e;
  e.key = klein ? "z4-klein" : "z4-cyclic";
  e.title = std::string("Z4 multiplication table with ") +
            (klein ? "Klein-4 addition" : "addition mod 4");
  e.provenance = src;
  e.ring = table_ring(e.key, klein ? klein_add() : cyclic_add(4),
                      {{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 1}});
  e.policy = AxiomPolicy::record;
  e.tolerate_contradictions = true;
  e.known_issues = {
      "the printed multiplication violates the near-ring axioms under either "
      "addition; the table is kept verbatim and the violations are recorded",
      "{0,1} is not closed under addition mod 4, so the stated submodule list "
      "needs a different addition; both readings are shipped",
  };
  e.claims = {
      set_list("z4/submodules", "nonzero R-submodules of R_R are {0,1}, {0,2}, M",
               src, ClaimKind::nonzero_submodules, {{0, 1}, {0, 2}, {0, 1, 2, 3}}),
      verdict("z4/classical-3", "{0} is 3-classical prime", src,
              Notion::classical, Variant::v3, true),
      verdict("z4/classical-c", "{0} is c-classical prime", src,
              Notion::classical, Variant::vc, true),
      verdict("z4/prime-3", "{0} is not 3-prime", src, Notion::prime,
              Variant::v3, false),
      replay("z4/prime-3-witness", "1R2 = 0 but 1M != 0 and 2 != 0", src,
             Notion::prime, Variant::v3, "a=1;m=2"),
      verdict("z4/prime-c", "{0} is not c-prime", src, Notion::prime,
              Variant::vc, false),
      replay("z4/prime-c-witness", "1*2 = 0 but 1M != 0 and 2 != 0", src,
             Notion::prime, Variant::vc, "a=1;m=2"),
      verdict("z4/prime-0", "{0} is not 0-prime", src, Notion::prime,
              Variant::v0, false),
      replay("z4/prime-0-witness",
             "{0,1}{0,2} = 0 but {0,1}M != 0 and {0,2} is not in {0}", src,
             Notion::prime, Variant::v0, "A=0,1;B=0,2"),
  };
  return e;
}

CatalogEntry z6() {
  const std::string src = "Z6 example";
  CatalogEntry e;
  e.key = "z6";
  e.title = "Z6 with the printed multiplication (not zero-symmetric)";
  e.provenance = src;
  e.ring = table_ring("z6", cyclic_add(6),
                      {{0, 0, 0, 0, 0, 0},
                       {3, 5, 1, 3, 5, 1},
                       {0, 4, 2, 0, 4, 2},
                       {3, 3, 3, 3, 3, 3},
                       {0, 2, 4, 0, 2, 4},
                       {3, 1, 5, 3, 1, 5}});
  e.tolerate_contradictions = true;
  e.known_issues = {
      "rows 1, 3 and 5 give r*0 = 3, so the ring is not zero-symmetric; "
      "{0} is admitted as a substructure by convention",
      "under the printed table 3R3 = {3}, not {0}",
  };
  ExpectedClaim c3 = verdict("z6/classical-3-on-N",
                             "with N = {0,3}: (aR)(bR)N = 0 forces aN = 0 or bN = 0",
                             src, Notion::classical, Variant::v3, true);
  c3.kind = ClaimKind::restricted_classical;
  c3.sets = {{0, 3}};
  ExpectedClaim cc = verdict("z6/classical-c-on-N",
                             "with N = {0,3} the c-classical condition fails",
                             src, Notion::classical, Variant::vc, false);
  cc.kind = ClaimKind::restricted_classical;
  cc.sets = {{0, 3}};
  e.claims = {
      set_list("z6/submodules", "nonzero R-submodules of R_R are {0,3}, M", src,
               ClaimKind::nonzero_submodules, {{0, 3}, {0, 1, 2, 3, 4, 5}}),
      c3,
      cc,
      replay("z6/classical-c-witness", "3R3 = 0 but 3N != 0", src,
             Notion::classical, Variant::vc, "a=3;b=3;N=0,3"),
  };
  return e;
}

CatalogEntry dn32() {
  const std::string src = "DN(3,2) example";
  CatalogEntry e;
  e.key = "dn32";
  e.title = "Dickson near-field DN(3,2) on GF(9)";
  e.provenance = src;
  RawRing r = dickson_3_2_raw();
  const auto &labels = dickson_labels();
  const auto &printed = printed_dickson_table();
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = 0; b < labels.size(); ++b)
      r.mul[a][b] = std::find(labels.begin(), labels.end(), printed[a][b]) -
                    labels.begin();
  e.ring = std::move(r);
  e.claims = {
      flag("dn32/table", "the operation table matches the construction", src,
           ClaimKind::table_fidelity),
      flag("dn32/near-field", "R is a near-field", src, ClaimKind::near_field),
      flag("dn32/not-a-field", "R is not a field", src, ClaimKind::not_a_field),
      set_list("dn32/submodules", "R has no proper nonzero R-submodules", src,
               ClaimKind::nonzero_submodules, {{0, 1, 2, 3, 4, 5, 6, 7, 8}}),
      verdict("dn32/classical-c", "{0} is a c-classical prime R-ideal", src,
              Notion::classical, Variant::vc, true),
  };
  return e;
}

std::vector<std::vector<std::size_t>> nonzero_submodules(const RawRing &raw,
                                                         AxiomPolicy policy) {
  const RingPtr r = validate_near_ring(raw, {false, policy});
  std::vector<std::vector<std::size_t>> out;
  for (const auto &s : enumerate(*regular_module(r), SubstructureKind::r_submodule))
    if (!s.is_zero())
      out.push_back(s.members());
  return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string sets_text(const std::vector<ElementSet> &sets,
                      const std::vector<std::string> &labels) {
  std::string out;
  for (const auto &s : sets)
    out += (out.empty() ? "" : " ") + format_labels(s, labels);
  return out.empty() ? "none" : out;
}

std::vector<ElementSet> to_sets(const Sets &sets, Carrier c, std::size_t n) {
  std::vector<ElementSet> out;
  for (const auto &s : sets)
    out.push_back(ElementSet::of(c, n, std::span<const std::size_t>(s)));
  return out;
}

std::string verdict_text(const Verdict &v, const FiniteNearRing &r,
                         const FiniteModule &m) {
  if (v.witness)
    return format_witness(*v.witness, r.labels(), m.labels());
  return v.reason;
}

ClaimResult evaluate(const CatalogEntry &entry, const ExpectedClaim &c,
                     const ModuleContext &ctx) {
  const FiniteModule &m = ctx.module();
  const FiniteNearRing &r = ctx.ring();
  ClaimResult out;
  out.id = c.id;
  out.statement = c.statement;
  out.source = c.source;
  auto set_verdict = [&](const Verdict &v) {
    out.expected = bool_text(c.expected);
    if (v.outcome == Outcome::not_applicable) {
      out.status = ClaimStatus::not_applicable;
      out.observed = "not-applicable";
      out.detail = v.reason;
      return;
    }
    out.observed = bool_text(v.holds());
    out.status = v.holds() == c.expected ? ClaimStatus::confirmed
                                         : ClaimStatus::contradicted;
    out.detail = verdict_text(v, r, m);
  };
  auto compare_sets = [&](const std::vector<ElementSet> &got,
                          const std::vector<std::string> &labels,
                          Carrier carrier) {
    const auto want = to_sets(c.sets, carrier, labels.size());
    out.expected = sets_text(want, labels);
    out.observed = sets_text(got, labels);
    out.status = got == want ? ClaimStatus::confirmed : ClaimStatus::contradicted;
  };
  const ElementSet p_mod =
      ElementSet::of(Carrier::module, m.size(), std::span<const std::size_t>(c.subject));

  switch (c.kind) {
  case ClaimKind::module_verdict:
    set_verdict(c.notion == Notion::prime
                    ? is_prime_module_ideal(ctx, p_mod, c.variant, c.convention)
                    : is_classical_prime_module_ideal(ctx, p_mod, c.variant));
    break;
  case ClaimKind::ring_verdict: {
    const ElementSet p = p_mod.as(Carrier::ring);
    set_verdict(c.notion == Notion::prime
                    ? is_prime_ring_ideal(ctx.rings(), p, c.variant)
                    : is_classical_prime_ring_ideal(ctx.rings(), p, c.variant));
    break;
  }
  case ClaimKind::restricted_classical: {
    ClassicalOptions opt;
    opt.range = ClassicalOptions::Range::explicit_list;
    opt.n_list = to_sets(c.sets, Carrier::module, m.size());
    set_verdict(is_classical_prime_module_ideal(ctx, p_mod, c.variant, opt));
    break;
  }
  case ClaimKind::witness_replay: {
    const Witness w = parse_witness(c.witness, Target::module_r_ideal, c.notion,
                                    r.size(), m.size());
    const bool ok = replay_witness(ctx, Target::module_r_ideal, p_mod, c.notion,
                                   c.variant, c.convention, w);
    out.expected = "counterexample";
    out.observed = ok ? "counterexample" : "not a counterexample";
    out.status = ok ? ClaimStatus::confirmed : ClaimStatus::contradicted;
    out.detail = format_witness(w, r.labels(), m.labels());
    break;
  }
  case ClaimKind::nonzero_submodules: {
    std::vector<ElementSet> got;
    for (const auto &s : ctx.submodules())
      if (!s.is_zero())
        got.push_back(s);
    compare_sets(got, m.labels(), Carrier::module);
    break;
  }
  case ClaimKind::ideals:
    compare_sets(ctx.rings().ideals(), r.labels(), Carrier::ring);
    break;
  case ClaimKind::table_fidelity: {
    const RawRing built = dickson_3_2_raw();
    const RawRing stored = entry.ring;
    std::size_t same = 0, total = 0;
    std::string first;
    for (std::size_t a = 0; a < built.mul.size(); ++a)
      for (std::size_t b = 0; b < built.mul[a].size(); ++b) {
        ++total;
        if (built.mul[a][b] == stored.mul[a][b])
          ++same;
        else if (first.empty())
          first = built.elements[a] + " o " + built.elements[b];
      }
    out.expected = std::to_string(total) + "/" + std::to_string(total);
    out.observed = std::to_string(same) + "/" + std::to_string(total);
    out.status = same == total ? ClaimStatus::confirmed : ClaimStatus::contradicted;
    out.detail = first.empty() ? "cells equal" : "first difference at " + first;
    break;
  }
  case ClaimKind::near_field:
    out.expected = "true";
    out.observed = bool_text(r.flags().near_field);
    out.status = r.flags().near_field ? ClaimStatus::confirmed
                                      : ClaimStatus::contradicted;
    break;
  case ClaimKind::not_a_field: {
    const auto w = find_left_distributivity_failure(r);
    out.expected = "left distributivity fails";
    out.observed = w ? "left distributivity fails" : "distributive";
    out.status = w ? ClaimStatus::confirmed : ClaimStatus::contradicted;
    if (w)
      out.detail = "a=" + r.label((*w)[0]) + " b=" + r.label((*w)[1]) +
                   " c=" + r.label((*w)[2]);
    break;
  }
  }
  out.tolerated = out.status == ClaimStatus::contradicted &&
                  entry.tolerate_contradictions;
  return out;
}

std::vector<CatalogEntry> build_entries() {
  const std::string alias = resolve_z4_alias();
  std::vector<CatalogEntry> out;
  out.push_back(klein4());
  out.push_back(z3());
  CatalogEntry z4 = z4_candidate(alias == "z4-klein");
  z4.key = "z4";
  z4.ring.name = "z4";
  z4.alias_of = alias;
  out.push_back(std::move(z4));
  out.push_back(z4_candidate(true));
  out.push_back(z4_candidate(false));
  out.push_back(z6());
  out.push_back(dn32());
  const std::string not_a_near_ring =
      "the stored table violates the near-ring axioms (recorded violations)";
  for (auto &e : out) {
    if (e.key.rfind("z4", 0) == 0)
      for (const char *name :
           {"char-0", "char-2", "char-3", "tilde-ideal", "tilde-prime", "tilde-classical",
            "residual-prime", "ann-left-ideal", "ann-direct-sum"})
        e.whitelisted.emplace_back(name, not_a_near_ring);
    if (e.key == "z6") {
      e.whitelisted.emplace_back(
          "chain", "not zero-symmetric: the ideal {0,2,4} is not a left "
                   "R-subgroup, so 2-classical no longer implies 0-classical");
      e.whitelisted.emplace_back(
          "ann-classical", "Ann({0,2,4}) = {0} is not 0-classical although "
                           "{0,2,4} is; the table is not zero-symmetric");
    }
  }
  return out;
}

} // namespace

const std::vector<std::vector<std::string>> &printed_dickson_table() {
  static const std::vector<std::vector<std::string>> t{
      {"0", "0", "0", "0", "0", "0", "0", "0", "0"},
      {"0", "1", "2", "x", "1+x", "2+x", "2x", "1+2x", "2+2x"},
      {"0", "2", "1", "2x", "2+2x", "1+2x", "x", "2+x", "1+x"},
      {"0", "x", "2x", "2", "1+2x", "1+x", "1", "2+2x", "2+x"},
      {"0", "1+x", "2+2x", "2+x", "2", "2x", "1+2x", "x", "1"},
      {"0", "2+x", "1+2x", "2+2x", "x", "2", "1+x", "1", "2x"},
      {"0", "2x", "x", "1", "2+x", "2+2x", "2", "1+x", "1+2x"},
      {"0", "1+2x", "2+x", "1+x", "2x", "1", "2+2x", "2", "x"},
      {"0", "2+2x", "1+x", "1+2x", "1", "x", "2+x", "2x", "2"},
  };
  return t;
}

std::string resolve_z4_alias() {
  const Sets want{{0, 1}, {0, 2}, {0, 1, 2, 3}};
  for (bool klein : {true, false}) {
    const CatalogEntry e = z4_candidate(klein);
    if (nonzero_submodules(e.ring, e.policy) == want)
      return e.key;
  }
  return "z4-klein";
}

const std::vector<CatalogEntry> &catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_entries();
  return entries;
}

std::vector<std::string> catalog_keys() {
  std::vector<std::string> out;
  for (const auto &e : catalog_entries())
    out.push_back(e.key);
  return out;
}

const CatalogEntry *find_catalog_entry(std::string_view key) {
  for (const auto &e : catalog_entries())
    if (e.key == key)
      return &e;
  return nullptr;
}

const CatalogEntry &load_example(std::string_view key) {
  const CatalogEntry *e = find_catalog_entry(key);
  if (!e)
    throw Error(ErrorCode::unknown_key,
                "no catalog entry '" + std::string(key) + "'");
  return *e;
}

RingPtr build_entry_ring(const CatalogEntry &entry) {
  return validate_near_ring(entry.ring, {false, entry.policy});
}

std::string_view to_string(ClaimStatus s) {
  switch (s) {
  case ClaimStatus::confirmed: return "confirmed";
  case ClaimStatus::contradicted: return "contradicted";
  case ClaimStatus::not_applicable: return "not-applicable";
  }
  return "?";
}

bool EntryRun::ok() const {
  for (const auto &c : claims)
    if (c.status == ClaimStatus::contradicted && !c.tolerated)
      return false;
  for (const auto &r : reports)
    if (!r.ok() &&
        std::none_of(whitelisted_failures.begin(), whitelisted_failures.end(),
                     [&](const std::string &w) {
                       return w.rfind(r.theorem + ":", 0) == 0;
                     }))
      return false;
  return true;
}

bool CatalogRun::ok() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const EntryRun &e) { return e.ok(); });
}

EntryRun run_entry(const CatalogEntry &entry) {
  EntryRun out;
  out.key = entry.key;
  out.alias_of = entry.alias_of;
  const RingPtr ring = build_entry_ring(entry);
  out.ring_size = ring->size();
  out.ring_labels = ring->labels();
  for (const auto &v : ring->violations())
    out.findings.push_back(std::string(to_string(v.code)) + ": " + v.message);
  if (!ring->flags().zero_symmetric)
    out.findings.push_back("not zero-symmetric; {0} counts as a substructure by convention");
  for (const auto &k : entry.known_issues)
    out.findings.push_back(k);
  const ModuleContext ctx(regular_module(ring));
  for (const auto &c : entry.claims)
    out.claims.push_back(evaluate(entry, c, ctx));
  out.classifications = classify_all(ctx);
  out.reports = verify_theorem(ctx, "all");
  if (ring->flags().near_field)
    for (std::size_t n : {1u, 2u}) {
      auto rn = verify_rn_theorems(ring, n);
      out.reports.insert(out.reports.end(), rn.begin(), rn.end());
    }
  for (const auto &r : out.reports) {
    if (r.ok())
      continue;
    for (const auto &[name, why] : entry.whitelisted)
      if (name == r.theorem)
        out.whitelisted_failures.push_back(r.theorem + ": " + why);
  }
  return out;
}

CatalogRun run_catalog(const std::vector<std::string> &keys, std::size_t jobs) {
  std::vector<const CatalogEntry *> entries;
  for (const auto &k : keys)
    entries.push_back(&load_example(k));
  CatalogRun run;
  run.entries = parallel_map<EntryRun>(
      entries.size(), jobs, [&](std::size_t i) { return run_entry(*entries[i]); });
  for (const auto &e : run.entries) {
    for (const auto &c : e.claims) {
      if (c.status == ClaimStatus::confirmed)
        ++run.confirmed;
      else if (c.status == ClaimStatus::not_applicable)
        ++run.not_applicable;
      else if (c.tolerated)
        ++run.tolerated;
      else
        ++run.contradicted;
    }
    for (const auto &r : e.reports)
      if (!r.ok())
        ++run.verifier_failures;
    run.whitelisted += e.whitelisted_failures.size();
  }
  return run;
}

nlohmann::ordered_json catalog_run_json(const CatalogRun &run) {
  Json entries = Json::array();
  for (const auto &e : run.entries) {
    Json je;
    je["key"] = e.key;
    if (!e.alias_of.empty())
      je["alias_of"] = e.alias_of;
    je["ok"] = e.ok();
    Json claims = Json::array();
    for (const auto &c : e.claims) {
      Json jc;
      jc["id"] = c.id;
      jc["statement"] = c.statement;
      jc["source"] = c.source;
      jc["expected"] = c.expected;
      jc["observed"] = c.observed;
      jc["status"] = std::string(to_string(c.status));
      jc["tolerated"] = c.tolerated;
      if (!c.detail.empty())
        jc["detail"] = c.detail;
      claims.push_back(std::move(jc));
    }
    je["claims"] = std::move(claims);
    Json cls = Json::array();
    for (const auto &c : e.classifications)
      cls.push_back(classification_json(c, e.ring_labels, e.ring_labels));
    je["classifications"] = std::move(cls);
    Json reps = Json::array();
    for (const auto &r : e.reports)
      reps.push_back(report_json(r));
    je["reports"] = std::move(reps);
    je["whitelisted_failures"] = e.whitelisted_failures;
    je["findings"] = e.findings;
    entries.push_back(std::move(je));
  }
  Json out;
  out["entries"] = std::move(entries);
  Json s;
  s["confirmed"] = run.confirmed;
  s["contradicted"] = run.contradicted;
  s["tolerated"] = run.tolerated;
  s["not_applicable"] = run.not_applicable;
  s["verifier_failures"] = run.verifier_failures;
  s["whitelisted"] = run.whitelisted;
  s["ok"] = run.ok();
  out["summary"] = std::move(s);
  return out;
}

std::string catalog_run_text(const CatalogRun &run) {
  std::ostringstream os;
  for (const auto &e : run.entries) {
    os << "== " << e.key;
    if (!e.alias_of.empty())
      os << " (alias of " << e.alias_of << ")";
    os << (e.ok() ? "" : "  [FAILED]") << "\n";
    for (const auto &f : e.findings)
      os << "  finding: " << f << "\n";
    for (const auto &c : e.claims) {
      os << "  claim " << c.id << ": " << to_string(c.status);
      if (c.tolerated)
        os << " (tolerated)";
      os << "  expected " << c.expected << ", observed " << c.observed;
      if (c.status != ClaimStatus::confirmed && !c.detail.empty())
        os << "  [" << c.detail << "]";
      os << "\n";
    }
    for (const auto &r : e.reports) {
      os << "  verify " << r.theorem;
      if (r.structure.find('^') != std::string::npos)
        os << " [" << r.structure << "]";
      os << ": " << to_string(r.outcome) << " ("
         << r.instances_checked << " instances)";
      if (!r.ok())
        os << "  first failure: " << r.witness;
      os << "\n";
    }
    for (const auto &w : e.whitelisted_failures)
      os << "  whitelisted: " << w << "\n";
  }
  os << "summary: " << run.confirmed << " confirmed, " << run.contradicted
     << " contradicted, " << run.tolerated << " tolerated, "
     << run.not_applicable << " not applicable, " << run.verifier_failures
     << " verifier failures (" << run.whitelisted << " whitelisted)\n";
  return os.str();
}

std::string fixture_text(const CatalogEntry &entry) {
  Json doc = to_json(entry.ring);
  if (entry.policy == AxiomPolicy::record)
    doc["axiom_policy"] = "record";
  return doc.dump(2) + "\n";
}

std::vector<std::filesystem::path>
export_fixtures(const std::filesystem::path &dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> out;
  for (const auto &e : catalog_entries()) {
    const auto path = dir / (e.key + ".json");
    std::ofstream f(path, std::ios::binary);
    if (!f)
      throw Error(ErrorCode::bad_input, "cannot write " + path.string());
    f << fixture_text(e);
    out.push_back(path);
  }
  return out;
}

} // namespace nearprime
