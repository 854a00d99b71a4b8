#include "nearprime/verify.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "nearprime/annihilators.hpp"
#include "nearprime/characterizations.hpp"
#include "nearprime/msystems.hpp"
#include "nearprime/parallel.hpp"

namespace nearprime {

namespace {

using Runner = std::function<std::vector<VerifierReport>(const ModuleContext &)>;

template <class F> Runner one(F f) {
  return [f](const ModuleContext &ctx) {
    return std::vector<VerifierReport>{f(ctx)};
  };
}

Runner transfer(Transfer t) {
  return one([t](const ModuleContext &ctx) { return verify_transfer(ctx, t); });
}

Runner characterization(Variant v) {
  return one([v](const ModuleContext &ctx) {
    return verify_characterization(ctx, v);
  });
}

const std::vector<std::pair<std::string, Runner>> &registry() {
  static const std::vector<std::pair<std::string, Runner>> table{
      {"chain", one(verify_chain)},
      {"prime-implies-classical", one(verify_prime_implies_classical)},
      {"convention-containment", one(verify_convention_containment)},
      {"char-0", characterization(Variant::v0)},
      {"char-2", characterization(Variant::v2)},
      {"char-3", characterization(Variant::v3)},
      {"char-c", characterization(Variant::vc)},
      {"tilde-ideal", transfer(Transfer::tilde_ideal)},
      {"tilde-prime", transfer(Transfer::tilde_prime)},
      {"tilde-classical", transfer(Transfer::tilde_classical)},
      {"quotient", transfer(Transfer::quotient)},
      {"residual-prime", transfer(Transfer::residual_prime)},
      {"residual-classical", transfer(Transfer::residual_classical)},
      {"identity-2eq3", one(verify_identity_2eq3)},
      {"complement", one(verify_complement_theorem)},
      {"ann", verify_annihilator_props},
  };
  return table;
}

} // namespace

const std::vector<std::string> &theorem_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto &[name, run] : registry())
      out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<VerifierReport> verify_theorem(const ModuleContext &ctx,
                                           std::string_view name,
                                           std::size_t jobs) {
  const auto &reg = registry();
  if (name != "all") {
    const auto it = std::find_if(reg.begin(), reg.end(),
                                 [&](const auto &e) { return e.first == name; });
    if (it == reg.end())
      throw Error(ErrorCode::unknown_key,
                  "unknown theorem '" + std::string(name) + "'");
    return it->second(ctx);
  }
  const auto parts = parallel_map<std::vector<VerifierReport>>(
      reg.size(), jobs, [&](std::size_t i) { return reg[i].second(ctx); });
  std::vector<VerifierReport> out;
  for (const auto &p : parts)
    out.insert(out.end(), p.begin(), p.end());
  return out;
}

} // namespace nearprime
