// frattini: intersection numbers of small permutation groups.
//
//   frattini iota SPEC            exact iota(G) with a witness family
//   frattini iota-hat SPEC        same over pairwise non-conjugate families
//   frattini maximals SPEC        conjugacy classes of maximal subgroups
//   frattini frattini SPEC        the Frattini subgroup
//   frattini verify SPEC FILE     check a witness family from a JSON file
//   frattini table FAMILY         sn | dihedral | dicyclic | frobenius
//
// Exit codes: 0 done, 2 usage or parse error, 3 resource bound, 4 bad witness
// input, 1 anything else.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frattini/catalog.hpp"
#include "frattini/error.hpp"
#include "frattini/invariants.hpp"
#include "frattini/numtheory.hpp"
#include "frattini/subgroups.hpp"
#include "frattini/symmetric.hpp"
#include "frattini/witness.hpp"

namespace {

using nlohmann::ordered_json;
using namespace frattini;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;
constexpr int kExitWitness = 4;
constexpr std::uint64_t kTableIndexBound = 1'000'000;
constexpr std::size_t kPoolAttempts = 200;

struct Config {
  std::optional<std::uint64_t> lattice_bound;
  std::optional<std::uint64_t> index_bound;
  std::optional<std::uint64_t> seed;
  std::optional<double> timeout;
  bool allow_degenerate = false;
  bool json = false;
  bool formula = false;
  bool timing = false;
  bool inconjugate = false;
  std::uint64_t table_min = 0;
  std::uint64_t table_max = 0;

  Limits limits;
  std::uint64_t resolved_seed = kDefaultSeed;
};

void resolve(Config& cfg) {
  // Environment fallbacks are applied by the option parser; flags win.
  if (cfg.lattice_bound) cfg.limits.lattice_bound = *cfg.lattice_bound;
  if (cfg.index_bound) cfg.limits.index_bound = *cfg.index_bound;
  if (cfg.seed) cfg.resolved_seed = *cfg.seed;
  if (cfg.timeout) {
    cfg.limits.deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(*cfg.timeout));
  }
}

ordered_json config_json(const Config& cfg) {
  ordered_json out;
  out["lattice_bound"] = cfg.limits.lattice_bound;
  out["index_bound"] = cfg.limits.index_bound;
  out["enumeration_bound"] = cfg.limits.enumeration_bound;
  out["seed"] = cfg.resolved_seed;
  out["allow_degenerate"] = cfg.allow_degenerate;
  out["timeout_seconds"] = cfg.timeout ? ordered_json(*cfg.timeout) : ordered_json(nullptr);
  return out;
}

ordered_json value_json(const InvariantValue& v) {
  return v.infinite ? ordered_json("infinity") : ordered_json(v.value);
}

ordered_json generators_json(const PermGroup& g) {
  ordered_json out = ordered_json::array();
  for (const auto& p : g.generators()) out.push_back(p.to_string());
  return out;
}

ordered_json checks_json(const WitnessChecks& c) {
  ordered_json out;
  out["each_is_subgroup"] = c.each_is_subgroup;
  out["each_is_maximal"] = c.each_is_maximal;
  out["pairwise_inconjugate"] = c.pairwise_inconjugate ? ordered_json(*c.pairwise_inconjugate) : ordered_json(nullptr);
  out["intersection_equals_frattini"] = c.intersection_equals_frattini;
  out["intersection_order"] = c.intersection_order;
  out["frattini_order"] = c.frattini_order ? ordered_json(*c.frattini_order) : ordered_json(nullptr);
  out["all_pass"] = c.all_pass();
  return out;
}

ordered_json witness_json(const WitnessFamily& w) {
  ordered_json members = ordered_json::array();
  for (const auto& m : w.members) {
    members.push_back({{"order", m.order()}, {"generators", generators_json(m)}});
  }
  return {{"members", members}, {"checks", checks_json(w.checks)}};
}

ordered_json certificate_json(const SearchCertificate& c) {
  return {{"exhausted_sizes", c.exhausted_sizes},
          {"maximal_count", c.maximal_count},
          {"maximal_class_count", c.maximal_class_count},
          {"frattini_order", c.frattini_order},
          {"families_examined", c.families_examined}};
}

std::string witness_text(const WitnessFamily& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.members.size(); ++i) {
    out << "  M" << i + 1 << " (order " << w.members[i].order() << ") = <";
    const auto& gens = w.members[i].generators();
    for (std::size_t j = 0; j < gens.size(); ++j) out << (j ? ", " : "") << gens[j].to_string();
    out << ">\n";
  }
  return out.str();
}

struct Parsed {
  catalog::GroupSpec spec;
  PermGroup group;
};

Parsed parse_group(const std::string& text, const Config& cfg) {
  catalog::GroupSpec spec = catalog::parse_group_spec(text);
  PermGroup g = catalog::build(spec, {cfg.allow_degenerate});
  if (g.is_trivial()) throw DomainError("the trivial group has no maximal subgroups");
  return {std::move(spec), std::move(g)};
}

ordered_json group_json(const Parsed& p) {
  return {{"spec", catalog::to_string(p.spec)}, {"degree", p.group.degree()}, {"order", p.group.order()}};
}

struct Outcome {
  ordered_json group;  // null for table
  ordered_json result;
  std::string text;
};

// Closed-form value, when a theorem covers the group.
std::optional<std::pair<InvariantValue, std::string>> formula_value(const Parsed& p, InvariantKind kind,
                                                                    const Limits& limits) {
  if (p.spec.factors.size() == 1) {
    const auto& atom = p.spec.factors.front();
    try {
      if (atom.family == 'D') {
        const std::uint64_t n = atom.first / 2;
        const std::uint64_t v = kind == InvariantKind::iota ? iota_dihedral_formula(n) : iota_hat_dihedral_formula(n);
        return std::pair{InvariantValue::finite(v), std::string("dihedral")};
      }
      if (atom.family == 'Q' && kind == InvariantKind::iota) {
        return std::pair{InvariantValue::finite(iota_dicyclic_formula(atom.first / 4)), std::string("dicyclic")};
      }
      if (atom.family == 'F') {
        const auto f = frobenius_invariants(atom.first);
        return std::pair{kind == InvariantKind::iota ? InvariantValue::finite(f.iota) : f.iota_hat,
                         std::string("frobenius")};
      }
    } catch (const DomainError&) {
      // degenerate parameters: fall through to the nilpotent theorem
    }
  }
  if (p.group.order() <= limits.enumeration_bound && is_nilpotent(p.group, limits)) {
    return std::pair{InvariantValue::finite(iota_nilpotent_formula(p.group, limits)), std::string("nilpotent")};
  }
  return std::nullopt;
}

Outcome cmd_invariant(const std::string& text, InvariantKind kind, const Config& cfg) {
  const Parsed p = parse_group(text, cfg);
  const char* name = kind == InvariantKind::iota ? "iota" : "iota_hat";
  Outcome out{group_json(p), {}, {}};
  out.result["invariant"] = name;
  if (cfg.formula) {
    if (auto f = formula_value(p, kind, cfg.limits)) {
      out.result["value"] = value_json(f->first);
      out.result["method"] = "formula";
      out.result["formula"] = f->second;
      out.text = std::string(name) + "(" + catalog::to_string(p.spec) + ") = " + f->first.to_string() +
                 "  [" + f->second + " formula]\n";
      return out;
    }
  }
  const InvariantResult r = kind == InvariantKind::iota ? iota_exact(p.group, cfg.limits)
                                                        : iota_hat_exact(p.group, cfg.limits);
  out.result["value"] = value_json(r.value);
  out.result["method"] = "exact";
  out.result["witness"] = r.witness ? witness_json(*r.witness) : ordered_json(nullptr);
  out.result["certificate"] = certificate_json(r.certificate);

  std::ostringstream t;
  t << name << "(" << catalog::to_string(p.spec) << ") = " << r.value.to_string() << "\n";
  t << "  |G| = " << p.group.order() << ", |Phi(G)| = " << r.certificate.frattini_order << ", "
    << r.certificate.maximal_count << " maximal subgroups in " << r.certificate.maximal_class_count
    << " classes\n";
  if (r.witness) t << witness_text(*r.witness);
  t << "  sizes ruled out:";
  if (r.certificate.exhausted_sizes.empty()) t << " none";
  for (auto k : r.certificate.exhausted_sizes) t << " " << k;
  t << " (" << r.certificate.families_examined << " partial families)\n";
  out.text = t.str();
  return out;
}

Outcome cmd_maximals(const std::string& text, const Config& cfg) {
  const Parsed p = parse_group(text, cfg);
  const MaximalSet set = maximal_subgroups(p.group, cfg.limits);
  Outcome out{group_json(p), {}, {}};
  ordered_json classes = ordered_json::array();
  std::ostringstream t;
  t << "maximal subgroups of " << catalog::to_string(p.spec) << " (order " << p.group.order() << ")\n";
  for (const auto& c : set.classes) {
    classes.push_back({{"order", c.order},
                       {"index", p.group.order() / c.order},
                       {"class_size", c.class_size},
                       {"normalizer_order", c.normalizer_order},
                       {"representative", generators_json(c.representative)}});
    t << "  order " << c.order << ", index " << p.group.order() / c.order << ", " << c.class_size
      << (c.class_size == 1 ? " conjugate" : " conjugates") << "\n";
  }
  out.result["classes"] = classes;
  out.result["class_count"] = set.classes.size();
  out.result["maximal_count"] = set.total_count;
  out.result["frattini_order"] = set.frattini_order;
  out.result["prime_divisor_count"] = numtheory::distinct_prime_count(p.group.order());
  t << "  |m(G)| = " << set.total_count << " in " << set.classes.size() << " classes, |Phi(G)| = "
    << set.frattini_order << ", |pi(G)| = " << numtheory::distinct_prime_count(p.group.order()) << "\n";
  out.text = t.str();
  return out;
}

Outcome cmd_frattini(const std::string& text, const Config& cfg) {
  const Parsed p = parse_group(text, cfg);
  const PermGroup phi = frattini::frattini(p.group, cfg.limits);
  Outcome out{group_json(p), {}, {}};
  out.result["order"] = phi.order();
  out.result["generators"] = generators_json(phi);
  std::ostringstream t;
  t << "Phi(" << catalog::to_string(p.spec) << ") has order " << phi.order();
  if (!phi.is_trivial()) {
    t << ", generated by";
    for (const auto& g : phi.generators()) t << " " << g.to_string();
  }
  t << "\n";
  out.text = t.str();
  return out;
}

struct WitnessInput {
  std::optional<std::vector<Permutation>> parent;
  std::vector<std::vector<Permutation>> subgroups;
};

Permutation read_generator(const nlohmann::json& gen, std::size_t degree, const std::string& where) {
  std::vector<std::vector<long long>> cycles;
  try {
    cycles = gen.get<std::vector<std::vector<long long>>>();
  } catch (const nlohmann::json::exception&) {
    throw WitnessInputError(where + ": generator " + gen.dump() + " is not a list of integer cycles");
  }
  try {
    return Permutation::from_cycles(cycles, degree);
  } catch (const DomainError& e) {
    throw WitnessInputError(where + ": generator " + gen.dump() + ": " + e.what());
  }
}

WitnessInput read_witness_file(const std::string& path, std::size_t degree) {
  std::ifstream in(path);
  if (!in) throw WitnessInputError("cannot open witness file " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw WitnessInputError("witness file is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_object() || !doc.contains("degree") || !doc.contains("subgroups") ||
      !doc["degree"].is_number_unsigned() || !doc["subgroups"].is_array()) {
    throw WitnessInputError("witness file needs an unsigned \"degree\" and a \"subgroups\" array");
  }
  const auto file_degree = doc["degree"].get<std::size_t>();
  if (file_degree != degree) {
    throw WitnessInputError("witness degree " + std::to_string(file_degree) + " does not match group degree " +
                            std::to_string(degree));
  }
  WitnessInput input;
  if (doc.contains("parent")) {
    if (!doc["parent"].is_array()) throw WitnessInputError("\"parent\" is not a list of generators");
    std::vector<Permutation> gens;
    for (const auto& gen : doc["parent"]) gens.push_back(read_generator(gen, degree, "parent"));
    input.parent = std::move(gens);
  }
  for (const auto& sub : doc["subgroups"]) {
    const std::string where = "subgroup " + std::to_string(input.subgroups.size() + 1);
    if (!sub.is_array()) throw WitnessInputError(where + " is not a list of generators");
    std::vector<Permutation> gens;
    for (const auto& gen : sub) gens.push_back(read_generator(gen, degree, where));
    input.subgroups.push_back(std::move(gens));
  }
  return input;
}

Outcome cmd_verify(const std::string& text, const std::string& file, const Config& cfg) {
  const Parsed p = parse_group(text, cfg);
  const WitnessInput input = read_witness_file(file, p.group.degree());
  // A file may name its own copy of the group, e.g. another permutation
  // representation; it must at least have the right order.
  PermGroup parent = p.group;
  if (input.parent) {
    parent = PermGroup(p.group.degree(), *input.parent);
    if (parent.order() != p.group.order()) {
      throw WitnessInputError("parent in witness file has order " + std::to_string(parent.order()) + ", expected " +
                              std::to_string(p.group.order()));
    }
  }
  const WitnessFamily w = verify_witness_family(parent, input.subgroups, cfg.inconjugate, cfg.limits);
  Outcome out{group_json(p), {}, {}};
  out.result = witness_json(w);
  const bool bound = w.checks.each_is_subgroup && w.checks.each_is_maximal &&
                     w.checks.intersection_equals_frattini && !w.members.empty();
  out.result["iota_upper_bound"] = bound ? ordered_json(w.members.size()) : ordered_json(nullptr);
  std::ostringstream t;
  t << "witness family for " << catalog::to_string(p.spec) << ": " << w.members.size() << " subgroups\n";
  t << witness_text(w);
  t << "  each maximal: " << (w.checks.each_is_maximal ? "yes" : "no") << "\n";
  if (w.checks.pairwise_inconjugate) {
    t << "  pairwise inconjugate: " << (*w.checks.pairwise_inconjugate ? "yes" : "no") << "\n";
  }
  t << "  intersection order: " << w.checks.intersection_order << "\n";
  t << "  intersection = Phi(G): " << (w.checks.intersection_equals_frattini ? "yes" : "no") << "\n";
  if (bound) t << "  => iota(G) <= " << w.members.size() << "\n";
  out.text = t.str();
  return out;
}

std::string fixed_width(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

Outcome table_sn(const Config& cfg) {
  const std::uint64_t lo = cfg.table_min ? cfg.table_min : 2;
  const std::uint64_t hi = cfg.table_max ? cfg.table_max : 11;
  if (lo < 2 || hi < lo || hi > 16) throw DomainError("table sn needs 2 <= min <= max <= 16");
  Limits wide = cfg.limits;
  if (!cfg.index_bound) wide.index_bound = kTableIndexBound;

  ordered_json rows = ordered_json::array();
  std::ostringstream t;
  t << fixed_width("n", 5) << fixed_width("floor((n+8)/4)", 16) << "iota(S_n)\n";
  for (std::uint64_t n = lo; n <= hi; ++n) {
    const PermGroup sn = catalog::symmetric(n);
    ordered_json row{{"n", n}, {"bound", (n + 8) / 4}};
    std::string shown;
    if (sn.order() <= cfg.limits.lattice_bound) {
      const InvariantResult r = iota_exact(sn, cfg.limits);
      row["iota"] = r.value.value;
      row["relation"] = "=";
      row["certificate"] = "exact";
      shown = std::to_string(r.value.value);
    } else {
      // Phi(S_n) = 1 and no maximal subgroup is trivial, so iota >= 2.
      const auto pool = symmetric_maximal_pool(n, wide);
      std::optional<PoolWitness> found;
      for (std::size_t size = 2; size <= (n + 8) / 4 && !found; ++size) {
        found = symmetric_pool_witness(n, size, pool, cfg.resolved_seed, kPoolAttempts, wide);
      }
      if (!found) throw Error("no witness family found for S" + std::to_string(n));
      row["iota"] = found->family.members.size();
      row["relation"] = "<=";
      row["certificate"] = "witness";
      row["lower_bound"] = 2;
      row["witness_types"] = found->member_types;
      row["witness"] = witness_json(found->family);
      shown = "\xe2\x89\xa4 " + std::to_string(found->family.members.size());
    }
    rows.push_back(row);
    t << fixed_width(std::to_string(n), 5) << fixed_width(std::to_string((n + 8) / 4), 16) << shown << "\n";
  }
  return {nullptr, {{"family", "sn"}, {"rows", rows}}, t.str()};
}

Outcome table_formula(const std::string& family, const Config& cfg) {
  std::uint64_t lo = 0, hi = 0;
  if (family == "dihedral") {
    lo = 3, hi = 30;
  } else if (family == "dicyclic") {
    lo = 2, hi = 12;
  } else {
    lo = 5, hi = 13;
  }
  if (cfg.table_min) lo = cfg.table_min;
  if (cfg.table_max) hi = cfg.table_max;
  if (hi < lo) throw DomainError("table range is empty");

  ordered_json rows = ordered_json::array();
  std::ostringstream t;
  if (family == "frobenius") {
    t << fixed_width("p", 5) << fixed_width("iota", 6) << fixed_width("formula", 9) << fixed_width("iota-hat", 10)
      << fixed_width("formula", 10) << "check\n";
  } else {
    t << fixed_width("n", 5) << fixed_width("k+1", 6) << fixed_width("iota", 6)
      << (family == "dihedral" ? fixed_width("iota-hat", 10) : "") << "check\n";
  }
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (family == "frobenius") {
      if (!numtheory::is_prime(n)) continue;
      const auto f = frobenius_invariants(n);
      const PermGroup g = catalog::frobenius(n);
      const auto iota = iota_exact(g, cfg.limits).value;
      const auto hat = iota_hat_exact(g, cfg.limits).value;
      const bool ok = iota == InvariantValue::finite(f.iota) && hat == f.iota_hat;
      rows.push_back({{"p", n},
                      {"iota", value_json(iota)},
                      {"iota_formula", f.iota},
                      {"iota_hat", value_json(hat)},
                      {"iota_hat_formula", value_json(f.iota_hat)},
                      {"ok", ok}});
      t << fixed_width(std::to_string(n), 5) << fixed_width(iota.to_string(), 6)
        << fixed_width(std::to_string(f.iota), 9) << fixed_width(hat.to_string(), 10)
        << fixed_width(f.iota_hat.to_string(), 10) << (ok ? "ok" : "MISMATCH") << "\n";
      continue;
    }
    const bool dihedral = family == "dihedral";
    const std::uint64_t formula = dihedral ? iota_dihedral_formula(n) : iota_dicyclic_formula(n);
    const PermGroup g = dihedral ? catalog::dihedral(2 * n) : catalog::dicyclic(4 * n);
    const auto iota = iota_exact(g, cfg.limits).value;
    ordered_json row{{"n", n}, {"formula", formula}, {"iota", value_json(iota)}};
    bool ok = iota == InvariantValue::finite(formula);
    std::string hat_text;
    if (dihedral) {
      const auto hat = iota_hat_exact(g, cfg.limits).value;
      row["iota_hat"] = value_json(hat);
      ok = ok && hat == InvariantValue::finite(iota_hat_dihedral_formula(n));
      hat_text = fixed_width(hat.to_string(), 10);
    }
    row["ok"] = ok;
    rows.push_back(row);
    t << fixed_width(std::to_string(n), 5) << fixed_width(std::to_string(formula), 6)
      << fixed_width(iota.to_string(), 6) << hat_text << (ok ? "ok" : "MISMATCH") << "\n";
  }
  return {nullptr, {{"family", family}, {"rows", rows}}, t.str()};
}

void add_common(CLI::App* cmd, Config& cfg) {
  cmd->add_flag("--json", cfg.json, "Print a JSON report");
  cmd->add_option("--lattice-bound", cfg.lattice_bound, "Largest group order for the subgroup lattice")
      ->envname("FRATTINI_LATTICE_BOUND");
  cmd->add_option("--index-bound", cfg.index_bound, "Largest index for coset enumeration");
  cmd->add_option("--seed", cfg.seed, "Seed for randomized witness searches")->envname("FRATTINI_SEED");
  cmd->add_flag("--allow-degenerate", cfg.allow_degenerate, "Accept D2, D4, Q4 and F3");
  cmd->add_option("--timeout", cfg.timeout, "Wall-clock limit in seconds")->check(CLI::PositiveNumber);
  cmd->add_flag("--timing", cfg.timing, "Include elapsed time in the report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intersection numbers of finite permutation groups"};
  app.require_subcommand(1);
  Config cfg;
  std::string spec, file, family;

  auto* iota = app.add_subcommand("iota", "Least number of maximal subgroups meeting in Phi(G)");
  auto* hat = app.add_subcommand("iota-hat", "Same, over pairwise non-conjugate maximal subgroups");
  auto* maximals = app.add_subcommand("maximals", "Conjugacy classes of maximal subgroups");
  auto* phi = app.add_subcommand("frattini", "The Frattini subgroup");
  auto* verify = app.add_subcommand("verify", "Check a witness family read from a JSON file");
  auto* table = app.add_subcommand("table", "Tabulate a family against its closed form");
  for (auto* cmd : {iota, hat, maximals, phi, verify}) {
    cmd->add_option("spec", spec, "Group spec, e.g. S7, A5xA5, D12, E2^3xZ9")->required();
    add_common(cmd, cfg);
  }
  for (auto* cmd : {iota, hat}) cmd->add_flag("--formula", cfg.formula, "Use a closed form when one applies");
  verify->add_option("witness", file, "Witness JSON file")->required();
  verify->add_flag("--inconjugate", cfg.inconjugate, "Also check pairwise non-conjugacy");
  table->add_option("family", family, "sn, dihedral, dicyclic or frobenius")
      ->required()
      ->check(CLI::IsMember({"sn", "dihedral", "dicyclic", "frobenius"}));
  table->add_option("--min", cfg.table_min, "First row");
  table->add_option("--max", cfg.table_max, "Last row");
  add_common(table, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  std::string command;
  ordered_json arguments = ordered_json::array();
  try {
    resolve(cfg);
    Outcome outcome;
    if (iota->parsed()) {
      command = "iota";
      outcome = cmd_invariant(spec, InvariantKind::iota, cfg);
    } else if (hat->parsed()) {
      command = "iota-hat";
      outcome = cmd_invariant(spec, InvariantKind::iota_hat, cfg);
    } else if (maximals->parsed()) {
      command = "maximals";
      outcome = cmd_maximals(spec, cfg);
    } else if (phi->parsed()) {
      command = "frattini";
      outcome = cmd_frattini(spec, cfg);
    } else if (verify->parsed()) {
      command = "verify";
      outcome = cmd_verify(spec, file, cfg);
    } else {
      command = "table";
      outcome = family == "sn" ? table_sn(cfg) : table_formula(family, cfg);
    }
    for (int i = 2; i < argc; ++i) arguments.push_back(argv[i]);

    if (cfg.json) {
      ordered_json report;
      report["command"] = command;
      report["arguments"] = arguments;
      report["group"] = outcome.group;
      report["result"] = outcome.result;
      report["config"] = config_json(cfg);
      if (cfg.timing) {
        report["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
      }
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << outcome.text;
      if (cfg.timing) {
        std::cout << "elapsed " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
                  << " s\n";
      }
    }
    return kExitOk;
  } catch (const WitnessInputError& e) {
    std::cerr << "witness error: " << e.what() << "\n";
    return kExitWitness;
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kExitBound;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
