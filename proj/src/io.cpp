#include "nearprime/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "nearprime/catalog.hpp"

namespace nearprime {

namespace {

std::vector<std::vector<long long>> table_field(const Json &doc,
                                                const char *key) {
  if (!doc.contains(key))
    throw Error(ErrorCode::bad_input, std::string("missing \"") + key + "\"");
  const Json &t = doc.at(key);
  if (!t.is_array())
    throw Error(ErrorCode::bad_input, std::string("\"") + key +
                                          "\" is not an array of rows");
  std::vector<std::vector<long long>> rows;
  for (const Json &row : t) {
    if (!row.is_array())
      throw Error(ErrorCode::bad_input,
                  std::string("\"") + key + "\" has a non-array row");
    std::vector<long long> r;
    for (const Json &cell : row) {
      if (!cell.is_number_integer())
        throw Error(ErrorCode::bad_input,
                    std::string("\"") + key + "\" has a non-integer cell");
      r.push_back(cell.get<long long>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<std::string> element_field(const Json &doc) {
  if (!doc.contains("elements") || !doc.at("elements").is_array())
    throw Error(ErrorCode::bad_input, "missing \"elements\" array");
  std::vector<std::string> out;
  for (const Json &e : doc.at("elements")) {
    if (e.is_string())
      out.push_back(e.get<std::string>());
    else if (e.is_number_integer())
      out.push_back(std::to_string(e.get<long long>()));
    else
      throw Error(ErrorCode::bad_input, "element labels must be strings");
  }
  return out;
}

std::string name_field(const Json &doc, const char *fallback) {
  if (doc.contains("name") && doc.at("name").is_string())
    return doc.at("name").get<std::string>();
  return fallback;
}

void check_order(std::size_t n, std::size_t max_order, const char *what) {
  if (n > max_order)
    throw Error(ErrorCode::bound_exceeded,
                std::string(what) + " has " + std::to_string(n) +
                    " elements, above the limit " + std::to_string(max_order));
}

/// Moves the module element labelled `identity` to index 0.
RawModule normalize_module_identity(RawModule raw, const std::string &identity) {
  const auto it = std::find(raw.elements.begin(), raw.elements.end(), identity);
  if (it == raw.elements.end())
    throw Error(ErrorCode::bad_input,
                "identity '" + identity + "' is not an element");
  const auto k = static_cast<std::size_t>(it - raw.elements.begin());
  if (k == 0)
    return raw;
  const auto kk = static_cast<long long>(k);
  auto swap_idx = [kk](long long v) { return v == 0 ? kk : (v == kk ? 0 : v); };
  std::swap(raw.elements[0], raw.elements[k]);
  if (raw.add.size() > k)
    std::swap(raw.add[0], raw.add[k]);
  for (auto &row : raw.add) {
    if (row.size() > k)
      std::swap(row[0], row[k]);
    for (auto &v : row)
      v = swap_idx(v);
  }
  for (auto &row : raw.action) {
    if (row.size() > k)
      std::swap(row[0], row[k]);
    for (auto &v : row)
      v = swap_idx(v);
  }
  return raw;
}

RawRing ring_with_identity(const Json &doc) {
  RawRing raw = ring_from_json(doc);
  if (doc.contains("identity")) {
    if (!doc.at("identity").is_string())
      throw Error(ErrorCode::bad_input, "\"identity\" must be an element label");
    raw = normalize_identity(std::move(raw), doc.at("identity").get<std::string>());
  }
  return raw;
}

AxiomPolicy policy_of(const Json &doc, AxiomPolicy fallback) {
  if (doc.contains("axiom_policy") && doc.at("axiom_policy") == "record")
    return AxiomPolicy::record;
  return fallback;
}

Json parse_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::bad_input, "cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error &e) {
    throw Error(ErrorCode::bad_input, path.string() + ": " + e.what());
  }
}

Json rows_json(const std::vector<std::vector<long long>> &rows) {
  Json out = Json::array();
  for (const auto &r : rows)
    out.push_back(r);
  return out;
}

} // namespace

std::size_t max_order_from_env(std::size_t fallback) {
  const char *v = std::getenv("NEARPRIME_MAX_ORDER");
  if (!v || !*v)
    return fallback;
  std::size_t out = 0;
  const char *end = v + std::char_traits<char>::length(v);
  const auto [ptr, ec] = std::from_chars(v, end, out);
  if (ec != std::errc() || ptr != end || out == 0)
    return fallback;
  return out;
}

RawRing ring_from_json(const Json &doc) {
  if (!doc.is_object())
    throw Error(ErrorCode::bad_input, "ring document must be an object");
  RawRing raw;
  raw.name = name_field(doc, "ring");
  raw.elements = element_field(doc);
  raw.add = table_field(doc, "add");
  raw.mul = table_field(doc, "mul");
  return raw;
}

RawModule module_from_json(const Json &doc) {
  if (!doc.is_object())
    throw Error(ErrorCode::bad_input, "module document must be an object");
  RawModule raw;
  raw.name = name_field(doc, "module");
  raw.elements = element_field(doc);
  raw.add = table_field(doc, "add");
  raw.action = table_field(doc, "action");
  return raw;
}

LoadedStructure load_structure(const Json &doc, const LoadOptions &options,
                               const std::filesystem::path &base_dir) {
  if (!doc.is_object())
    throw Error(ErrorCode::bad_input, "document must be a JSON object");
  ValidationOptions vo{options.strict, policy_of(doc, options.policy)};
  LoadedStructure out;
  if (!doc.contains("action")) {
    const RawRing raw = ring_with_identity(doc);
    check_order(raw.elements.size(), options.max_order, "ring");
    out.ring = validate_near_ring(raw, vo);
    out.module = regular_module(out.ring);
    return out;
  }
  out.module_file = true;
  if (!doc.contains("ring"))
    throw Error(ErrorCode::bad_input, "module document lacks \"ring\"");
  const Json &rdoc = doc.at("ring");
  RawRing ring_raw;
  ValidationOptions ring_vo = vo;
  if (rdoc.is_object()) {
    ring_raw = ring_with_identity(rdoc);
    ring_vo.policy = policy_of(rdoc, vo.policy);
  } else if (rdoc.is_string()) {
    const std::string name = rdoc.get<std::string>();
    const auto file = base_dir / (name + ".json");
    if (!name.empty() && std::filesystem::is_regular_file(file)) {
      const Json sub = parse_file(file);
      ring_raw = ring_with_identity(sub);
      ring_vo.policy = policy_of(sub, vo.policy);
    } else if (const auto *entry = find_catalog_entry(name)) {
      ring_raw = entry->ring;
      if (entry->policy == AxiomPolicy::record)
        ring_vo.policy = AxiomPolicy::record;
    } else {
      throw Error(ErrorCode::unknown_key, "unknown ring '" + name + "'");
    }
  } else {
    throw Error(ErrorCode::bad_input, "\"ring\" must be a name or an object");
  }
  check_order(ring_raw.elements.size(), options.max_order, "ring");
  out.ring = validate_near_ring(ring_raw, ring_vo);
  RawModule mraw = module_from_json(doc);
  if (doc.contains("identity")) {
    if (!doc.at("identity").is_string())
      throw Error(ErrorCode::bad_input, "\"identity\" must be an element label");
    mraw = normalize_module_identity(std::move(mraw),
                                     doc.at("identity").get<std::string>());
  }
  check_order(mraw.elements.size(), options.max_order, "module");
  out.module = validate_module(out.ring, mraw, vo.policy, &out.module_violations);
  return out;
}

LoadedStructure load_structure_file(const std::filesystem::path &path,
                                    const LoadOptions &options) {
  return load_structure(parse_file(path), options, path.parent_path());
}

Json to_json(const RawRing &raw) {
  Json out;
  out["name"] = raw.name;
  out["elements"] = raw.elements;
  out["add"] = rows_json(raw.add);
  out["mul"] = rows_json(raw.mul);
  return out;
}

Json to_json(const RawModule &raw, const RawRing &ring) {
  Json out;
  out["name"] = raw.name;
  out["ring"] = to_json(ring);
  out["elements"] = raw.elements;
  out["add"] = rows_json(raw.add);
  out["action"] = rows_json(raw.action);
  return out;
}

Json structure_json(const FiniteNearRing &ring, const FiniteModule *module,
                    bool record_policy) {
  const RawRing rr = to_raw(ring);
  Json out = module && !is_regular_module(*module)
                 ? to_json(to_raw(*module), rr)
                 : to_json(rr);
  if (record_policy) {
    out["axiom_policy"] = "record";
    if (out.contains("ring") && out["ring"].is_object())
      out["ring"]["axiom_policy"] = "record";
  }
  return out;
}

ElementSet parse_subset(std::string_view text, Carrier carrier,
                        std::size_t universe) {
  ElementSet out(carrier, universe);
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '{' && c != '}')
      s += c;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t x = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(ErrorCode::bad_input, "bad index '" + tok + "' in subset");
    if (x >= universe)
      throw Error(ErrorCode::carrier_mismatch,
                  "index " + tok + " outside a carrier of size " +
                      std::to_string(universe));
    out.insert(x);
  }
  return out;
}

Json set_json(const ElementSet &s) {
  Json out = Json::array();
  for (std::size_t x : s.members())
    out.push_back(x);
  return out;
}

std::string witness_argument(const Witness &w) {
  std::string out;
  for (const auto &p : w.parts) {
    if (!out.empty())
      out += ';';
    out += p.name + '=';
    if (p.is_set()) {
      std::string items;
      for (std::size_t x : p.set->members())
        items += (items.empty() ? "" : ",") + std::to_string(x);
      out += items;
    } else {
      out += std::to_string(p.element);
    }
  }
  return out;
}

Json witness_json(const Witness &w, const std::vector<std::string> &ring_labels,
                  const std::vector<std::string> &module_labels) {
  Json parts = Json::object();
  for (const auto &p : w.parts)
    parts[p.name] = p.is_set() ? set_json(*p.set) : Json(p.element);
  Json out;
  out["clause"] = w.clause;
  out["parts"] = parts;
  out["text"] = format_witness(w, ring_labels, module_labels);
  out["replay"] = witness_argument(w);
  return out;
}

Json verdict_json(const Verdict &v, const std::vector<std::string> &ring_labels,
                  const std::vector<std::string> &module_labels) {
  Json out;
  out["verdict"] = std::string(to_string(v.outcome));
  if (v.witness)
    out["witness"] = witness_json(*v.witness, ring_labels, module_labels);
  if (!v.reason.empty())
    out["reason"] = v.reason;
  return out;
}

Json classification_json(const Classification &c,
                         const std::vector<std::string> &ring_labels,
                         const std::vector<std::string> &module_labels) {
  Json out;
  out["subject"] = set_json(c.subject);
  out["subject_labels"] = format_labels(
      c.subject,
      c.target == Target::ring_ideal ? ring_labels : module_labels);
  out["target"] = std::string(to_string(c.target));
  Json rows = Json::array();
  for (const auto &e : c.verdicts) {
    Json row;
    row["variant"] = std::string(to_string(e.variant));
    row["notion"] = std::string(to_string(e.notion));
    if (e.notion == Notion::prime && e.variant == Variant::v0 &&
        c.target == Target::module_r_ideal)
      row["convention"] = std::string(to_string(e.convention));
    row.update(verdict_json(e.verdict, ring_labels, module_labels));
    rows.push_back(std::move(row));
  }
  out["verdicts"] = std::move(rows);
  return out;
}

Json report_json(const VerifierReport &r) {
  Json out;
  out["theorem"] = r.theorem;
  out["structure"] = r.structure;
  out["instances_checked"] = r.instances_checked;
  out["outcome"] = std::string(to_string(r.outcome));
  if (r.outcome == ReportOutcome::fails) {
    out["witness"] = r.witness;
    out["failure_count"] = r.failure_count;
    out["failures"] = r.failures;
  }
  out["notes"] = r.notes;
  return out;
}

Json violation_json(const AxiomViolation &v) {
  Json out;
  out["code"] = std::string(to_string(v.code));
  out["message"] = v.message;
  out["witness"] = v.witness;
  return out;
}

} // namespace nearprime
