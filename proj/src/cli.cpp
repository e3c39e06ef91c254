#include "gscope/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <sstream>

#include "CLI11.hpp"

#include "gscope/chartab.hpp"
#include "gscope/errors.hpp"
#include "gscope/gelfand.hpp"
#include "gscope/io.hpp"
#include "gscope/suzuki.hpp"

namespace gscope::cli {

using io::Json;

namespace {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Parent {
  groups::Group group;
  groups::ConjClasses classes;
};

Parent load_group(const RunConfig& c) {
  if (c.group_input.empty()) throw UsageError("--group is required");
  groups::Group g = io::parse_group_input(c.group_input, c.caps.closure);
  groups::ConjClasses cc = groups::conjugacy_classes(g);
  return {std::move(g), std::move(cc)};
}

std::vector<std::size_t> subgroup_positions(const RunConfig& c, const groups::Group& g) {
  if (c.subgroup_gens.empty()) throw UsageError("--subgroup-gens is required");
  const Json doc = io::read_json(c.subgroup_gens);
  const auto gens = io::parse_elements(doc, g.ambient(), "subgroup-gens");
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto found = g.find(gens[i]);
    if (!found) throw UsageError("subgroup-gens[" + std::to_string(i) + "] is not an element of the group");
    pos.push_back(*found);
  }
  return pos;
}

std::optional<chartab::DixonContext> prime_override(const RunConfig& c, const groups::Group& g,
                                                     const groups::ConjClasses& cc) {
  if (!c.prime) return std::nullopt;
  return chartab::make_context(*c.prime, g.order(), chartab::exponent(cc));
}

std::string emit(const RunConfig& c, Json j, const Stopwatch& sw) {
  if (c.timings) j["timings"] = {{"total_ms", sw.ms()}};
  return j.dump(2) + "\n";
}

Json field_json(const ff2m::FieldParams& f) { return {{"m", f.m()}, {"modulus", f.modulus()}}; }

// ---------------------------------------------------------------- commands

std::string cmd_suzuki(const RunConfig& c, const Stopwatch& sw) {
  const suzuki::SuzukiGroup sz(c.m, c.caps.closure);
  const auto& p = sz.params();
  std::optional<suzuki::OvoidAction> action;
  if (c.perm) action.emplace(sz, c.caps.closure);

  if (c.subcommand == "build") {
    Json j = c.perm ? io::group_to_json(action->group()) : io::group_to_json(sz.group());
    Json cert;
    cert["q"] = p.q;
    cert["field"] = field_json(p.field);
    cert["order"] = sz.group().order();
    cert["expected_order"] = p.expected_order;
    cert["class_count"] = sz.classes().count();
    cert["expected_class_count"] = p.q + 3;
    cert["max_element_order"] = sz.max_element_order();
    Json checks;
    checks["order"] = sz.group().order() == p.expected_order;
    checks["class_count"] = sz.classes().count() == p.q + 3;
    checks["element_orders"] = true;
    if (action) {
      const std::size_t pairs = action->pair_orbit_size();
      const std::size_t deg = action->degree();
      checks["ovoid_degree"] = deg;
      checks["faithful"] = action->group().order() == sz.group().order();
      checks["pair_orbit"] = pairs;
      checks["two_transitive"] = pairs == deg * (deg - 1);
      checks["perm_class_count"] = action->classes().count();
    }
    cert["checks"] = checks;
    j["certificate"] = cert;
    return emit(c, j, sw);
  }

  // subgroup
  if (c.which.empty()) throw UsageError("--which is required");
  const suzuki::Maximal which = suzuki::parse_maximal(c.which);
  const groups::SubgroupEmbedding emb =
      action ? suzuki::maximal_subgroup(*action, which) : suzuki::maximal_subgroup(sz, which);
  Json j = io::group_to_json(emb.sub());
  Json cert;
  cert["which"] = suzuki::maximal_name(which);
  cert["q"] = p.q;
  cert["field"] = field_json(p.field);
  cert["order"] = emb.sub().order();
  cert["expected_order"] = suzuki::maximal_expected_order(p, which);
  cert["class_count"] = emb.sub_classes().count();
  cert["parent_order"] = emb.parent().order();
  cert["fusion"] = emb.fusion();
  j["certificate"] = cert;
  return emit(c, j, sw);
}

std::string cmd_table(const RunConfig& c, const Stopwatch& sw) {
  const Parent g = load_group(c);
  const auto t = chartab::character_table(g.group, g.classes, prime_override(c, g.group, g.classes), c.caps);
  if (c.format == Format::Pretty) return io::table_pretty(t);
  if (c.format == Format::Tsv) {
    std::ostringstream os;
    for (std::size_t chi = 0; chi < t.size(); ++chi) {
      os << t.degree(chi);
      for (std::size_t k = 0; k < t.classes().count(); ++k) os << '\t' << t.value(chi, k);
      os << '\n';
    }
    return os.str();
  }
  return emit(c, io::table_to_json(t), sw);
}

std::string cmd_classes(const RunConfig& c, const Stopwatch& sw) {
  const Parent g = load_group(c);
  if (c.format == Format::Tsv || c.format == Format::Pretty) {
    std::ostringstream os;
    os << "class\tsize\torder\tinverse\n";
    for (std::size_t k = 0; k < g.classes.count(); ++k) {
      os << k << '\t' << g.classes.sizes[k] << '\t' << g.classes.element_orders[k] << '\t'
         << g.classes.inverse_class[k] << '\n';
    }
    return os.str();
  }
  return emit(c, io::classes_to_json(g.classes, g.group), sw);
}

struct PairInputs {
  Parent g;
  std::optional<groups::SubgroupEmbedding> emb;
  std::optional<chartab::CharacterTable> tG;
  std::optional<chartab::CharacterTable> tH;
};

void load_pair(const RunConfig& c, PairInputs& in) {
  const auto pos = subgroup_positions(c, in.g.group);
  in.emb.emplace(in.g.group, in.g.classes, pos, c.caps.closure);
  in.tG.emplace(chartab::character_table(in.g.group, in.g.classes, prime_override(c, in.g.group, in.g.classes), c.caps));
  in.tH.emplace(chartab::character_table(in.emb->sub(), in.emb->sub_classes(), in.tG->context(), c.caps));
}

Json pair_header(const PairInputs& in) {
  Json j;
  j["group_order"] = in.g.group.order();
  j["subgroup_order"] = in.emb->sub().order();
  j["p"] = in.tG->context().p;
  return j;
}

std::string cmd_sgp_check(const RunConfig& c, const Stopwatch& sw) {
  PairInputs in{load_group(c), {}, {}, {}};
  load_pair(c, in);
  const auto report = gelfand::is_strong_gelfand(*in.tG, *in.emb, *in.tH, c.force_full);
  Json j = pair_header(in);
  j.update(io::sgp_report_to_json(report));
  return emit(c, j, sw);
}

std::string cmd_sgp_scan(const RunConfig& c, const Stopwatch& sw) {
  gelfand::ScanOptions options;
  options.force_full = c.force_full;
  options.caps = c.caps;
  if (c.suzuki_m) {
    if (*c.suzuki_m < 3) throw DomainError("the maximal-family scan needs q >= 8; use --group for Sz(2)");
    const suzuki::SuzukiGroup sz(*c.suzuki_m, c.caps.closure);
    const suzuki::OvoidAction action(sz, c.caps.closure);
    const auto tG = chartab::character_table(action.group(), action.classes(),
                                             prime_override(c, action.group(), action.classes()), c.caps);
    std::vector<groups::SubgroupEmbedding> embs;
    const suzuki::Maximal families[] = {suzuki::Maximal::Borel, suzuki::Maximal::Dihedral,
                                        suzuki::Maximal::TorusPlus, suzuki::Maximal::TorusMinus};
    for (auto which : families) embs.push_back(suzuki::maximal_subgroup(action, which));
    std::vector<std::pair<std::string, const groups::SubgroupEmbedding*>> subs;
    for (std::size_t i = 0; i < embs.size(); ++i) subs.emplace_back(suzuki::maximal_name(families[i]), &embs[i]);
    const auto scan = gelfand::scan_subgroups(tG, subs, options);
    Json j = io::scan_to_json(scan, action.group());
    j["group"]["q"] = sz.params().q;
    j["group"]["max_degree"] = tG.max_degree();
    j["group"]["total_degree"] = chartab::total_character_degree(tG);
    j["p"] = tG.context().p;
    j["no_maximal_strong_gelfand"] = scan.yes_classes == 0;
    return emit(c, j, sw);
  }
  const Parent g = load_group(c);
  options.context = prime_override(c, g.group, g.classes);
  const auto scan = gelfand::sgp_scan(g.group, g.classes, options);
  return emit(c, io::scan_to_json(scan, g.group), sw);
}

std::string cmd_gelfand_check(const RunConfig& c, const Stopwatch& sw) {
  PairInputs in{load_group(c), {}, {}, {}};
  load_pair(c, in);
  Json j = pair_header(in);
  j.update(io::gelfand_report_to_json(gelfand::is_gelfand(*in.tG, *in.emb, *in.tH)));
  return emit(c, j, sw);
}

std::string cmd_oracle(const RunConfig& c, const Stopwatch& sw) {
  const Parent g = load_group(c);
  const auto pos = subgroup_positions(c, g.group);
  const auto h = groups::generated_subgroup(g.group, pos, c.caps.closure);
  Json j;
  j["group_order"] = g.group.order();
  j["subgroup_order"] = h.size();
  if (c.subcommand == "schur") {
    j["commutes"] = gelfand::schur_ring_commutes(g.group, h, c.caps.oracle);
  } else {
    j["double_cosets"] = gelfand::double_coset_count(g.group, h, c.caps.double_coset);
  }
  return emit(c, j, sw);
}

std::string cmd_formula(const RunConfig& c, const Stopwatch& sw) {
  const std::int64_t value = suzuki::sz_total_degree_formula(c.q0);
  Json j;
  j["q0"] = c.q0;
  j["total_degree"] = value;
  if (c.q) {
    const std::uint64_t q = *c.q;
    if (q == 0 || q > (std::uint64_t{1} << 31)) throw UsageError("--q must be in [1, 2^31]");
    j["q"] = q;
    j["q_squared_plus_one"] = q * q + 1;
    j["inequality_holds"] = q * q + 1 >= static_cast<std::uint64_t>(value);
  }
  return emit(c, j, sw);
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const UsageError*>(&e) || dynamic_cast<const DomainError*>(&e)) return 2;
  if (dynamic_cast<const ResourceError*>(&e)) return 3;
  return 1;
}

}  // namespace

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    const Stopwatch sw;
    const std::string& cmd = config.command;
    if (cmd == "suzuki") result.out = cmd_suzuki(config, sw);
    else if (cmd == "table") result.out = cmd_table(config, sw);
    else if (cmd == "classes") result.out = cmd_classes(config, sw);
    else if (cmd == "sgp" && config.subcommand == "check") result.out = cmd_sgp_check(config, sw);
    else if (cmd == "sgp") result.out = cmd_sgp_scan(config, sw);
    else if (cmd == "gelfand") result.out = cmd_gelfand_check(config, sw);
    else if (cmd == "oracle") result.out = cmd_oracle(config, sw);
    else if (cmd == "formula") result.out = cmd_formula(config, sw);
    else throw UsageError("unknown command '" + cmd + "'");
  } catch (const std::exception& e) {
    result.exit_code = exit_code_for(e);
    result.err = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

RunResult run(const std::vector<std::string>& args) {
  RunConfig config;
  CLI::App app{"gscope: Suzuki groups, character tables and strong Gelfand pairs"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  bool pretty = false;
  bool no_timings = false;
  std::optional<std::size_t> closure_cap, lattice_cap, oracle_cap;
  app.add_option("--format", format, "json | pretty | tsv")->check(CLI::IsMember({"json", "pretty", "tsv"}));
  app.add_flag("--no-timings", no_timings, "omit the timings block");
  app.add_option("--closure-cap", closure_cap, "max elements per closure");
  app.add_option("--lattice-cap", lattice_cap, "max |G| for subgroup enumeration");
  app.add_option("--oracle-cap", oracle_cap, "max |G| for the Schur-ring oracle");
  app.add_option("--prime", config.prime, "Dixon prime override");

  auto add_group = [&](CLI::App* sub) { sub->add_option("--group", config.group_input, "group JSON file or inline JSON"); };
  auto add_pair = [&](CLI::App* sub) {
    add_group(sub);
    sub->add_option("--subgroup-gens", config.subgroup_gens, "JSON array of subgroup generators")->required();
  };

  CLI::App* suz = app.add_subcommand("suzuki", "construct Sz(2^m) and its maximal subgroups");
  suz->require_subcommand(1);
  for (const char* name : {"build", "subgroup"}) {
    CLI::App* sub = suz->add_subcommand(name, name == std::string("build") ? "the group with a certificate"
                                                                            : "a maximal subgroup with a certificate");
    sub->add_option("--m", config.m, "field degree (odd)");
    sub->add_flag("--perm", config.perm, "use the degree q^2+1 permutation form");
    if (name == std::string("subgroup")) {
      sub->add_option("--which", config.which, "borel | dihedral | torus+ | torus-")->required();
    }
  }

  CLI::App* table = app.add_subcommand("table", "character table");
  add_group(table);
  table->add_flag("--pretty", pretty, "aligned text output");

  CLI::App* classes = app.add_subcommand("classes", "conjugacy classes");
  add_group(classes);

  CLI::App* sgp = app.add_subcommand("sgp", "strong Gelfand pairs");
  sgp->require_subcommand(1);
  CLI::App* sgp_check = sgp->add_subcommand("check", "decide one pair");
  add_pair(sgp_check);
  sgp_check->add_flag("--force-full", config.force_full, "skip the total-character filter");
  CLI::App* sgp_scan = sgp->add_subcommand("scan", "scan all subgroup classes, or the Suzuki maximal families");
  add_group(sgp_scan);
  sgp_scan->add_option("--suzuki-m", config.suzuki_m, "scan the maximal families of Sz(2^m) instead");
  sgp_scan->add_flag("--force-full", config.force_full, "also compute every full multiplicity matrix");

  CLI::App* gel = app.add_subcommand("gelfand", "Gelfand pairs");
  gel->require_subcommand(1);
  add_pair(gel->add_subcommand("check", "decide one pair"));

  CLI::App* oracle = app.add_subcommand("oracle", "character-free oracles");
  oracle->require_subcommand(1);
  add_pair(oracle->add_subcommand("schur", "Schur ring of H-classes is commutative"));
  add_pair(oracle->add_subcommand("doublecosets", "number of (H, H) double cosets"));

  CLI::App* formula = app.add_subcommand("formula", "closed-form values");
  formula->require_subcommand(1);
  CLI::App* sz_total = formula->add_subcommand("sz-total", "total character degree of Sz(q0)");
  sz_total->add_option("--q0", config.q0, "odd power of 2, >= 8")->required();
  sz_total->add_option("--q", config.q, "also check q^2+1 >= the total degree");

  RunResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.err = std::string("error: ") + e.what() + "\n";
    return result;
  }

  try {
    if (const char* env = std::getenv(kCapsEnvVar)) config.caps = apply_caps_overrides(config.caps, env);
  } catch (const UsageError& e) {
    result.exit_code = 2;
    result.err = std::string("error: ") + kCapsEnvVar + ": " + e.what() + "\n";
    return result;
  }
  if (closure_cap) config.caps.closure = *closure_cap;
  if (lattice_cap) config.caps.lattice = *lattice_cap;
  if (oracle_cap) config.caps.oracle = *oracle_cap;
  if (config.caps.closure == 0 || config.caps.lattice == 0 || config.caps.oracle == 0) {
    result.exit_code = 2;
    result.err = "error: caps must be positive\n";
    return result;
  }

  config.format = format == "pretty" || pretty ? Format::Pretty : format == "tsv" ? Format::Tsv : Format::Json;
  config.timings = !no_timings;

  for (CLI::App* top : app.get_subcommands()) {
    config.command = top->get_name();
    for (CLI::App* sub : top->get_subcommands()) config.subcommand = sub->get_name();
  }
  return run(config);
}

}  // namespace gscope::cli
