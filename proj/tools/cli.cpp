#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nearprime/annihilators.hpp"
#include "nearprime/catalog.hpp"
#include "nearprime/io.hpp"
#include "nearprime/msystems.hpp"
#include "nearprime/nearfield.hpp"
#include "nearprime/primeness.hpp"
#include "nearprime/substructures.hpp"
#include "nearprime/verify.hpp"

namespace nearprime::cli {

namespace {

struct Common {
  bool json = false;
  bool strict = false;
  bool record = false;
  std::size_t jobs = 1;
};

void add_common(CLI::App *sub, Common &c) {
  sub->add_flag("--json", c.json, "Structured JSON output");
  sub->add_flag("--strict", c.strict, "Reject rings with r*0 != 0");
  sub->add_flag("--record", c.record,
                "Keep tables that violate the near-ring axioms and list the "
                "violations");
  sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

LoadOptions load_options(const Common &c, std::size_t fallback = kDefaultMaxOrder) {
  LoadOptions o;
  o.strict = c.strict;
  o.policy = c.record ? AxiomPolicy::record : AxiomPolicy::enforce;
  o.max_order = max_order_from_env(fallback);
  return o;
}

/// A path, or a catalog key when no such file exists.
LoadedStructure load(const std::string &source, const Common &c,
                     std::size_t fallback = kDefaultMaxOrder) {
  if (!std::filesystem::exists(source)) {
    if (const CatalogEntry *e = find_catalog_entry(source)) {
      Json doc = to_json(e->ring);
      if (e->policy == AxiomPolicy::record)
        doc["axiom_policy"] = "record";
      return load_structure(doc, load_options(c, fallback));
    }
  }
  return load_structure_file(source, load_options(c, fallback));
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

void print_json(std::ostream &out, const Json &doc) { out << doc.dump(2) << "\n"; }

std::string flags_line(const FiniteNearRing &r) {
  std::string s = "zero_symmetric=" + yes_no(r.flags().zero_symmetric) +
                  " identity=" +
                  (r.flags().identity ? r.label(*r.flags().identity) : "none") +
                  " abelian_addition=" + yes_no(r.flags().abelian_addition) +
                  " near_field=" + yes_no(r.flags().near_field);
  return s;
}

Json ring_flags_json(const FiniteNearRing &r) {
  Json f;
  f["zero_symmetric"] = r.flags().zero_symmetric;
  f["identity"] = r.flags().identity ? Json(*r.flags().identity) : Json(nullptr);
  f["abelian_addition"] = r.flags().abelian_addition;
  f["near_field"] = r.flags().near_field;
  return f;
}

Json module_flags_json(const FiniteModule &m) {
  Json f;
  f["faithful"] = m.flags().faithful;
  f["monogenic"] = m.flags().monogenic();
  f["generators"] = m.flags().generators;
  return f;
}

// validate ----------------------------------------------------------------

int cmd_validate(const std::string &file, const Common &c, std::ostream &out,
                 std::ostream &err) {
  const LoadedStructure s = load(file, c);
  const FiniteNearRing &r = *s.ring;
  const FiniteModule &m = *s.module;
  std::vector<AxiomViolation> all = r.violations();
  all.insert(all.end(), s.module_violations.begin(), s.module_violations.end());
  if (c.json) {
    Json doc;
    doc["ring"] = r.name();
    doc["ring_size"] = r.size();
    doc["ring_flags"] = ring_flags_json(r);
    if (s.module_file) {
      doc["module"] = m.name();
      doc["module_size"] = m.size();
    }
    doc["module_flags"] = module_flags_json(m);
    Json v = Json::array();
    for (const auto &x : all)
      v.push_back(violation_json(x));
    doc["violations"] = std::move(v);
    doc["valid"] = all.empty();
    print_json(out, doc);
  } else {
    out << "ring " << r.name() << ": " << r.size() << " elements, "
        << flags_line(r) << "\n";
    out << (s.module_file ? "module " + m.name() : std::string("module R_R"))
        << ": " << m.size() << " elements, faithful=" << yes_no(m.flags().faithful)
        << " monogenic=" << yes_no(m.flags().monogenic()) << "\n";
    for (const auto &x : all)
      out << "violation: " << to_string(x.code) << ": " << x.message << "\n";
    if (!r.flags().zero_symmetric)
      err << "warning: ring is not zero-symmetric; {0} is treated as a "
             "substructure by convention\n";
    out << (all.empty() ? "valid" : "invalid (kept under --record)") << "\n";
  }
  return all.empty() ? kOk : kValidation;
}

// enumerate ---------------------------------------------------------------

int cmd_enumerate(const std::string &file, const std::string &kind_text,
                  const std::string &strategy_text, const Common &c,
                  std::ostream &out) {
  const auto kind = parse_kind(kind_text);
  if (!kind)
    throw Error(ErrorCode::unknown_key, "unknown kind '" + kind_text + "'");
  EnumerationStrategy strategy = EnumerationStrategy::automatic;
  if (strategy_text == "subgroup-lattice")
    strategy = EnumerationStrategy::subgroup_lattice;
  else if (strategy_text == "closure")
    strategy = EnumerationStrategy::closure_lattice;
  const LoadedStructure s = load(file, c);
  const bool on_module = is_module_kind(*kind);
  const auto sets = on_module ? enumerate(*s.module, *kind, strategy)
                              : enumerate(*s.ring, *kind, strategy);
  const auto &labels = on_module ? s.module->labels() : s.ring->labels();
  if (c.json) {
    Json doc;
    doc["kind"] = std::string(to_string(*kind));
    doc["carrier"] = on_module ? "module" : "ring";
    doc["count"] = sets.size();
    Json items = Json::array();
    for (const auto &x : sets) {
      Json item;
      item["members"] = set_json(x);
      item["labels"] = format_labels(x, labels);
      items.push_back(std::move(item));
    }
    doc["sets"] = std::move(items);
    print_json(out, doc);
  } else {
    for (const auto &x : sets)
      out << format_labels(x, labels) << "\n";
    out << sets.size() << " " << to_string(*kind) << "\n";
  }
  return kOk;
}

// classify ----------------------------------------------------------------

struct ClassifyArgs {
  std::string ideal;
  bool has_ideal = false;
  std::string variant;
  std::string notion;
  std::string convention = "dauns";
  std::string target = "module";
  std::string range = "submodules";
  std::string n_list;
  std::string check_witness;
};

Variant need_variant(const std::string &text) {
  const auto v = parse_variant(text);
  if (!v)
    throw Error(ErrorCode::unknown_key, "unknown variant '" + text + "'");
  return *v;
}

int cmd_classify(const std::string &file, const ClassifyArgs &a,
                 const Common &c, std::ostream &out) {
  const LoadedStructure s = load(file, c);
  const ModuleContext ctx(s.module);
  const FiniteNearRing &r = *s.ring;
  const FiniteModule &m = *s.module;
  Target target;
  if (a.target == "module")
    target = Target::module_r_ideal;
  else if (a.target == "ring")
    target = Target::ring_ideal;
  else
    throw Error(ErrorCode::unknown_key, "unknown target '" + a.target + "'");
  const auto convention = parse_convention(a.convention);
  if (!convention)
    throw Error(ErrorCode::unknown_key, "unknown convention '" + a.convention + "'");
  const Carrier carrier =
      target == Target::ring_ideal ? Carrier::ring : Carrier::module;
  const std::size_t universe = target == Target::ring_ideal ? r.size() : m.size();

  std::optional<ElementSet> p;
  if (a.has_ideal)
    p = parse_subset(a.ideal, carrier, universe);

  if (!a.check_witness.empty() || (!a.variant.empty() && !a.notion.empty())) {
    if (!p)
      throw Error(ErrorCode::unknown_key,
                  "--variant with --notion needs --ideal");
    const Variant v = need_variant(a.variant);
    const auto notion = parse_notion(a.notion);
    if (!notion)
      throw Error(ErrorCode::unknown_key, "unknown notion '" + a.notion + "'");
    if (!a.check_witness.empty()) {
      const Witness w = parse_witness(a.check_witness, target, *notion, r.size(),
                                      m.size());
      const bool ok = replay_witness(ctx, target, *p, *notion, v, *convention, w);
      if (c.json) {
        Json doc;
        doc["witness"] = witness_json(w, r.labels(), m.labels());
        doc["replays"] = ok;
        print_json(out, doc);
      } else {
        out << (ok ? "replays" : "does not replay") << ": "
            << format_witness(w, r.labels(), m.labels()) << "\n";
      }
      return ok ? kOk : kValidation;
    }
    Verdict verdict;
    if (target == Target::ring_ideal) {
      verdict = *notion == Notion::prime
                    ? is_prime_ring_ideal(ctx.rings(), *p, v)
                    : is_classical_prime_ring_ideal(ctx.rings(), *p, v);
    } else if (*notion == Notion::prime) {
      verdict = is_prime_module_ideal(ctx, *p, v, *convention);
    } else {
      ClassicalOptions opt;
      if (a.range == "r-ideals")
        opt.range = ClassicalOptions::Range::r_ideals;
      else if (a.range == "list") {
        opt.range = ClassicalOptions::Range::explicit_list;
        std::string rest = a.n_list;
        std::size_t pos = 0;
        while (pos <= rest.size()) {
          const std::size_t end = std::min(rest.find(';', pos), rest.size());
          opt.n_list.push_back(
              parse_subset(rest.substr(pos, end - pos), Carrier::module, m.size()));
          pos = end + 1;
        }
      } else if (a.range != "submodules")
        throw Error(ErrorCode::unknown_key, "unknown range '" + a.range + "'");
      verdict = is_classical_prime_module_ideal(ctx, *p, v, opt);
    }
    if (c.json) {
      Json doc;
      doc["subject"] = set_json(*p);
      doc["variant"] = std::string(to_string(v));
      doc["notion"] = std::string(to_string(*notion));
      doc.update(verdict_json(verdict, r.labels(), m.labels()));
      print_json(out, doc);
    } else {
      out << to_string(verdict.outcome) << "\n";
      if (verdict.witness)
        out << "witness: "
            << format_witness(*verdict.witness, r.labels(), m.labels())
            << "  (" << verdict.witness->clause << ")\n"
            << "replay: " << witness_argument(*verdict.witness) << "\n";
      if (!verdict.reason.empty())
        out << "reason: " << verdict.reason << "\n";
    }
    return kOk;
  }

  std::vector<Classification> all;
  if (p)
    all.push_back(target == Target::ring_ideal ? classify_ring(ctx.rings(), *p)
                                               : classify(ctx, *p));
  else
    all = target == Target::ring_ideal ? classify_all_ring(ctx.rings())
                                       : classify_all(ctx);
  std::optional<Variant> only_v;
  if (!a.variant.empty())
    only_v = need_variant(a.variant);
  std::optional<Notion> only_n;
  if (!a.notion.empty()) {
    only_n = parse_notion(a.notion);
    if (!only_n)
      throw Error(ErrorCode::unknown_key, "unknown notion '" + a.notion + "'");
  }
  for (auto &cl : all) {
    std::erase_if(cl.verdicts, [&](const VerdictEntry &e) {
      return (only_v && e.variant != *only_v) || (only_n && e.notion != *only_n);
    });
  }
  if (c.json) {
    Json doc = Json::array();
    for (const auto &cl : all)
      doc.push_back(classification_json(cl, r.labels(), m.labels()));
    print_json(out, doc);
    return kOk;
  }
  const auto &labels = target == Target::ring_ideal ? r.labels() : m.labels();
  for (const auto &cl : all) {
    out << "P=" << format_labels(cl.subject, labels) << "\n";
    for (const auto &e : cl.verdicts) {
      std::string name = std::string(to_string(e.variant)) + "-" +
                         std::string(to_string(e.notion));
      if (e.notion == Notion::prime && e.variant == Variant::v0 &&
          target == Target::module_r_ideal)
        name += " (" + std::string(to_string(e.convention)) + ")";
      out << "  " << std::left << std::setw(24) << name
          << to_string(e.verdict.outcome);
      if (e.verdict.witness)
        out << "  " << format_witness(*e.verdict.witness, r.labels(), m.labels());
      out << "\n";
    }
  }
  return kOk;
}

// msystem / ann -----------------------------------------------------------

int cmd_msystem(const std::string &file, const std::string &set,
                const std::string &variant, const Common &c, std::ostream &out) {
  const LoadedStructure s = load(file, c);
  const ModuleContext ctx(s.module);
  const ElementSet sub = parse_subset(set, Carrier::module, s.module->size());
  std::vector<Variant> vs;
  if (variant.empty())
    vs.assign(kModuleVariants.begin(), kModuleVariants.end());
  else
    vs.push_back(need_variant(variant));
  Json doc = Json::array();
  for (Variant v : vs) {
    const MSystemVerdict mv = is_classical_m_system(ctx, sub, v);
    if (c.json) {
      Json row;
      row["subset"] = set_json(sub);
      row["variant"] = std::string(to_string(v));
      row["holds"] = mv.holds;
      if (mv.witness)
        row["witness"] = witness_json(*mv.witness, s.ring->labels(), s.module->labels());
      doc.push_back(std::move(row));
    } else {
      out << "m_" << to_string(v) << "-system: " << yes_no(mv.holds);
      if (mv.witness)
        out << "  " << format_witness(*mv.witness, s.ring->labels(), s.module->labels());
      out << "\n";
    }
  }
  if (c.json)
    print_json(out, doc);
  return kOk;
}

int report_exit(const std::vector<VerifierReport> &reps) {
  for (const auto &r : reps)
    if (!r.ok())
      return kContradiction;
  return kOk;
}

void print_reports(const std::vector<VerifierReport> &reps, const Common &c,
                   std::ostream &out) {
  if (c.json) {
    Json doc = Json::array();
    for (const auto &r : reps)
      doc.push_back(report_json(r));
    print_json(out, doc);
    return;
  }
  for (const auto &r : reps) {
    out << r.theorem << " on " << r.structure << ": " << to_string(r.outcome)
        << " (" << r.instances_checked << " instances)\n";
    if (!r.ok()) {
      out << "  failures: " << r.failure_count << "\n";
      for (const auto &f : r.failures)
        out << "  - " << f << "\n";
    }
    for (const auto &n : r.notes)
      out << "  note: " << n << "\n";
  }
}

int cmd_ann(const std::string &file, const std::string &set, bool ring_set,
            bool verify, const Common &c, std::ostream &out) {
  const LoadedStructure s = load(file, c);
  const FiniteNearRing &r = *s.ring;
  const FiniteModule &m = *s.module;
  int code = kOk;
  if (!set.empty() || !verify) {
    const ElementSet p = ring_set ? parse_subset(set, Carrier::ring, r.size())
                                  : parse_subset(set, Carrier::module, m.size());
    const AnnihilatorResult res = ring_set ? annihilator(r, p) : annihilator(m, p);
    if (c.json && !verify) {
      Json doc;
      doc["subject"] = set_json(res.subject);
      doc["annihilator"] = set_json(res.annihilator);
      doc["annihilator_labels"] = format_labels(res.annihilator, r.labels());
      Json ok = Json::array(), bad = Json::array();
      for (auto k : res.verified_kinds)
        ok.push_back(std::string(to_string(k)));
      for (auto k : res.failed_kinds)
        bad.push_back(std::string(to_string(k)));
      doc["verified_kinds"] = ok;
      doc["failed_kinds"] = bad;
      print_json(out, doc);
    } else if (!c.json) {
      out << "Ann(" << format_labels(p, ring_set ? r.labels() : m.labels())
          << ") = " << format_labels(res.annihilator, r.labels()) << "\n";
      for (auto k : res.verified_kinds)
        out << "  " << to_string(k) << ": holds\n";
      for (auto k : res.failed_kinds)
        out << "  " << to_string(k) << ": fails\n";
    }
  }
  if (verify) {
    const ModuleContext ctx(s.module);
    const auto reps = verify_annihilator_props(ctx);
    print_reports(reps, c, out);
    code = report_exit(reps);
  }
  return code;
}

// verify / power / nearfield ----------------------------------------------

int cmd_verify(const std::string &file, const std::string &theorem,
               const Common &c, std::ostream &out) {
  const LoadedStructure s = load(file, c);
  const ModuleContext ctx(s.module);
  const auto reps = verify_theorem(ctx, theorem, c.jobs);
  print_reports(reps, c, out);
  return report_exit(reps);
}

int cmd_power(const std::string &file, std::size_t n, bool verify,
              const Common &c, std::ostream &out) {
  const std::size_t bound = max_order_from_env(kDefaultPowerBound);
  const LoadedStructure s = load(file, c);
  const ModulePtr pm = build_power_module(s.ring, n, bound);
  if (!verify) {
    const auto ideals = enumerate(*pm, SubstructureKind::r_ideal);
    const auto subs = enumerate(*pm, SubstructureKind::r_submodule);
    if (c.json) {
      Json doc;
      doc["module"] = pm->name();
      doc["size"] = pm->size();
      doc["r_ideals"] = ideals.size();
      doc["r_submodules"] = subs.size();
      print_json(out, doc);
    } else {
      out << pm->name() << ": " << pm->size() << " elements, " << ideals.size()
          << " R-ideals, " << subs.size() << " R-submodules\n";
      for (const auto &x : ideals)
        out << "  R-ideal " << format_labels(x, pm->labels()) << "\n";
    }
    return kOk;
  }
  const auto reps = verify_rn_theorems(s.ring, n, bound);
  print_reports(reps, c, out);
  return report_exit(reps);
}

int cmd_nearfield(const std::string &which, bool emit_json, const Common &c,
                  std::ostream &out) {
  if (which != "dn32")
    throw Error(ErrorCode::unknown_key,
                "only dn32 is available, not '" + which + "'");
  const RingPtr r = build_dickson_3_2();
  if (emit_json) {
    print_json(out, to_json(to_raw(*r)));
    return kOk;
  }
  const auto &printed = printed_dickson_table();
  std::size_t same = 0;
  for (std::size_t a = 0; a < r->size(); ++a)
    for (std::size_t b = 0; b < r->size(); ++b)
      same += r->label(r->mul(a, b)) == printed[a][b];
  const auto w = find_left_distributivity_failure(*r);
  if (c.json) {
    Json doc;
    doc["name"] = r->name();
    doc["flags"] = ring_flags_json(*r);
    doc["cells_matching_printed_table"] = same;
    if (w)
      doc["left_distributivity_failure"] = *w;
    print_json(out, doc);
    return kOk;
  }
  out << std::left << std::setw(6) << "o";
  for (std::size_t b = 0; b < r->size(); ++b)
    out << std::setw(6) << r->label(b);
  out << "\n";
  for (std::size_t a = 0; a < r->size(); ++a) {
    out << std::setw(6) << r->label(a);
    for (std::size_t b = 0; b < r->size(); ++b)
      out << std::setw(6) << r->label(r->mul(a, b));
    out << "\n";
  }
  out << flags_line(*r) << "\n";
  out << "printed table: " << same << "/" << r->size() * r->size()
      << " cells equal\n";
  if (w)
    out << "left distributivity fails: a=" << r->label((*w)[0])
        << " b=" << r->label((*w)[1]) << " c=" << r->label((*w)[2]) << "\n";
  return kOk;
}

// catalog -----------------------------------------------------------------

int cmd_catalog(const std::string &action, const std::vector<std::string> &args,
                const Common &c, std::ostream &out) {
  if (action == "list") {
    for (const auto &e : catalog_entries()) {
      out << std::left << std::setw(10) << e.key << e.title;
      if (!e.alias_of.empty())
        out << " (alias of " << e.alias_of << ")";
      out << "\n";
    }
    return kOk;
  }
  if (action == "show") {
    if (args.size() != 1)
      throw Error(ErrorCode::unknown_key, "catalog show takes one key");
    const CatalogEntry &e = load_example(args[0]);
    if (c.json) {
      out << fixture_text(e);
      return kOk;
    }
    out << e.key << ": " << e.title << "\nsource: " << e.provenance << "\n";
    const RingPtr r = build_entry_ring(e);
    out << flags_line(*r) << "\n";
    out << "mul:\n";
    for (std::size_t a = 0; a < r->size(); ++a) {
      out << "  ";
      for (std::size_t b = 0; b < r->size(); ++b)
        out << std::setw(6) << r->label(r->mul(a, b));
      out << "\n";
    }
    for (const auto &k : e.known_issues)
      out << "known issue: " << k << "\n";
    for (const auto &cl : e.claims)
      out << "claim " << cl.id << ": " << cl.statement << "\n";
    return kOk;
  }
  if (action == "run") {
    const auto keys = args.empty() ? catalog_keys() : args;
    const CatalogRun run = run_catalog(keys, c.jobs);
    if (c.json)
      print_json(out, catalog_run_json(run));
    else
      out << catalog_run_text(run);
    return run.ok() ? kOk : kContradiction;
  }
  if (action == "export") {
    const std::string dir = args.empty() ? "fixtures" : args[0];
    for (const auto &p : export_fixtures(dir))
      out << p.string() << "\n";
    return kOk;
  }
  throw Error(ErrorCode::unknown_key, "unknown catalog action '" + action + "'");
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Finite near-ring and near-ring module analysis", "nearprime"};
  app.require_subcommand(1);
  Common common;
  std::string file;

  auto *validate = app.add_subcommand("validate", "Validate a ring or module file");
  validate->add_option("file", file, "JSON file or catalog key")->required();
  add_common(validate, common);

  std::string kind, strategy = "auto";
  auto *enumerate_cmd = app.add_subcommand("enumerate", "List substructures of one kind");
  enumerate_cmd->add_option("file", file)->required();
  enumerate_cmd->add_option("--kind", kind,
                            "subgroup|normal-subgroup|left-r-subgroup|"
                            "right-r-subgroup|invariant-r-subgroup|left-ideal|"
                            "right-ideal|ideal|r-submodule|r-ideal")
      ->required();
  enumerate_cmd->add_option("--strategy", strategy, "auto|subgroup-lattice|closure");
  add_common(enumerate_cmd, common);

  ClassifyArgs ca;
  auto *classify_cmd = app.add_subcommand("classify", "Prime and classical prime verdicts");
  classify_cmd->add_option("file", file)->required();
  auto *ideal_opt = classify_cmd->add_option("--ideal", ca.ideal, "Subject P, e.g. 0,3");
  classify_cmd->add_option("--variant", ca.variant, "0|1|2|3|c");
  classify_cmd->add_option("--notion", ca.notion, "prime|classical");
  classify_cmd->add_option("--convention", ca.convention, "dauns|juglal");
  classify_cmd->add_option("--target", ca.target, "module|ring");
  classify_cmd->add_option("--range", ca.range,
                           "N range for classical: submodules|r-ideals|list");
  classify_cmd->add_option("--n-list", ca.n_list, "N sets for --range list: 0,3;0,1,2");
  classify_cmd->add_option("--check-witness", ca.check_witness,
                           "Replay a counterexample, e.g. A=0,2;B=0,2;N=0,1,2,3");
  add_common(classify_cmd, common);

  std::string set, variant;
  auto *msystem_cmd = app.add_subcommand("msystem", "Classical m_v-system test");
  msystem_cmd->add_option("file", file)->required();
  msystem_cmd->add_option("--set", set, "Subset S of M, e.g. 1,2,3")->required();
  msystem_cmd->add_option("--variant", variant, "0|2|3|c (default: all)");
  add_common(msystem_cmd, common);

  bool ring_set = false, ann_verify = false;
  auto *ann_cmd = app.add_subcommand("ann", "Left annihilators");
  ann_cmd->add_option("file", file)->required();
  ann_cmd->add_option("--set", set, "Subset of M (or of R with --ring)");
  ann_cmd->add_flag("--ring", ring_set, "The set is a subset of R");
  ann_cmd->add_flag("--verify", ann_verify, "Check the annihilator statements");
  add_common(ann_cmd, common);

  std::string theorem = "all";
  auto *verify_cmd = app.add_subcommand("verify", "Check theorems exhaustively");
  verify_cmd->add_option("file", file)->required();
  std::string names;
  for (const auto &n : theorem_names())
    names += n + "|";
  verify_cmd->add_option("--theorem", theorem, names + "all");
  add_common(verify_cmd, common);

  std::string which;
  bool emit_json = false;
  auto *nf_cmd = app.add_subcommand("nearfield", "Dickson near-field DN(3,2)");
  nf_cmd->add_option("name", which, "dn32")->required();
  nf_cmd->add_flag("--emit-json", emit_json, "Print the ring as a JSON document");
  add_common(nf_cmd, common);

  std::size_t n = 2;
  bool power_verify = false;
  auto *power_cmd = app.add_subcommand("power", "Power module R^n");
  power_cmd->add_option("file", file)->required();
  power_cmd->add_option("-n", n, "Dimension")->check(CLI::PositiveNumber);
  power_cmd->add_flag("--verify", power_verify, "Check the R^n statements");
  add_common(power_cmd, common);

  std::string action;
  std::vector<std::string> cat_args;
  auto *catalog_cmd = app.add_subcommand("catalog", "Built-in example structures");
  catalog_cmd->add_option("action", action, "list|show|run|export")->required();
  catalog_cmd->add_option("args", cat_args, "Keys (show, run) or directory (export)");
  add_common(catalog_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate)
      return cmd_validate(file, common, out, err);
    if (*enumerate_cmd)
      return cmd_enumerate(file, kind, strategy, common, out);
    if (*classify_cmd) {
      ca.has_ideal = ideal_opt->count() > 0;
      return cmd_classify(file, ca, common, out);
    }
    if (*msystem_cmd)
      return cmd_msystem(file, set, variant, common, out);
    if (*ann_cmd)
      return cmd_ann(file, set, ring_set, ann_verify, common, out);
    if (*verify_cmd)
      return cmd_verify(file, theorem, common, out);
    if (*nf_cmd)
      return cmd_nearfield(which, emit_json, common, out);
    if (*power_cmd)
      return cmd_power(file, n, power_verify, common, out);
    if (*catalog_cmd)
      return cmd_catalog(action, cat_args, common, out);
  } catch (const Error &e) {
    err << "error: " << e.what();
    if (!e.witness().empty()) {
      err << " (witness";
      for (std::size_t w : e.witness())
        err << ' ' << w;
      err << ')';
    }
    err << "\n";
    const bool usage = e.code() == ErrorCode::unknown_key ||
                       e.code() == ErrorCode::v1_not_defined;
    return usage ? kUsage : kValidation;
  }
  return kUsage;
}

} // namespace nearprime::cli
