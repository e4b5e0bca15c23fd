#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "projrep/catalog.hpp"
#include "projrep/error.hpp"
#include "projrep/report.hpp"
#include "projrep/verifier.hpp"

namespace projrep {

namespace {

struct Globals {
  double tol = 1e-6;
  std::uint64_t seed = 1;
  int h2_cap = kDefaultH2Cap;
  int order_cap = 60;
  std::string out;
  int jobs = 0;

  VerifyConfig verify() const {
    VerifyConfig v;
    v.seed = seed;
    v.h2_cap = h2_cap;
    v.tol.equality = tol;
    v.tol.integrality = tol;
    v.tol.numeric_cocycle = tol;
    return v;
  }
};

GroupPtr resolve_group(const std::string& name) {
  if (std::filesystem::is_regular_file(name)) return load_group(name, kDefaultOrderCap);
  return catalog_group(name);
}

Coclass select_coclass(const MultiplierPtr& m, long k) {
  if (k < 0 || k >= m->size())
    throw Error(ErrorCode::BadCoclassIndex, "coclass index " + std::to_string(k) + " out of range 0.." +
                                                std::to_string(m->size() - 1) + " for " + m->group()->name());
  return Coclass(m, m->exponents_at(k));
}

std::vector<long> coclass_indices(const MultiplierPtr& m, long k) {
  if (k >= 0) {
    select_coclass(m, k);
    return {k};
  }
  std::vector<long> all(m->size());
  for (long i = 0; i < m->size(); ++i) all[i] = i;
  return all;
}

std::string list(const std::vector<int>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

std::vector<int> parse_primes(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int p = 0;
    try {
      p = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || !is_prime(p)) throw Error(ErrorCode::InvalidArgument, "not a prime: " + item);
    out.push_back(p);
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "empty prime set");
  return out;
}

void write_out(const Globals& g, const std::string& file, const std::string& text) {
  if (g.out.empty()) return;
  std::filesystem::create_directories(g.out);
  write_text((std::filesystem::path(g.out) / file).string(), text);
}

int cmd_catalog(const Globals& g, std::ostream& out) {
  ojson all = ojson::array();
  bool ok = true;
  out << std::left << std::setw(14) << "name" << std::setw(7) << "order" << std::setw(10) << "solvable" << "self-check\n";
  for (const auto& e : catalog()) {
    const GroupPtr grp = catalog_group(e.name);
    const bool solvable = is_solvable(grp);
    const bool match = grp->order() == e.order && solvable == e.solvable;
    ok = ok && match;
    out << std::setw(14) << e.name << std::setw(7) << e.order << std::setw(10) << (e.solvable ? "yes" : "no")
        << (match ? "ok" : "MISMATCH") << '\n';
    all.push_back(ojson{{"name", e.name}, {"order", e.order}, {"solvable", e.solvable}, {"self_check", match}});
  }
  write_out(g, "catalog.json", all.dump(2) + "\n");
  return ok ? 0 : 1;
}

int cmd_multiplier(const Globals& g, const std::string& name, std::ostream& out) {
  const GroupPtr grp = resolve_group(name);
  const MultiplierPtr m = multiplier_for(grp, g.h2_cap);
  out << grp->name() << " (order " << grp->order() << ") multiplier: ";
  if (!m->is_known())
    out << "unknown above the H2 cap " << g.h2_cap << " (only the trivial class is available)\n";
  else if (m->invariants().empty())
    out << "trivial" << (m->is_exact() ? "" : " (declared)") << '\n';
  else
    out << "invariants " << list(m->invariants()) << ", " << m->size() << " classes" << (m->is_exact() ? "" : " (declared)")
        << '\n';
  write_out(g, grp->name() + ".multiplier.json", multiplier_to_json(*m).dump(2) + "\n");
  return 0;
}

int cmd_degrees(const Globals& g, const std::string& name, long k, std::ostream& out) {
  const GroupPtr grp = resolve_group(name);
  const MultiplierPtr m = multiplier_for(grp, g.h2_cap);
  std::string jsonl;
  for (long i : coclass_indices(m, k)) {
    const TwistedContext ctx = TwistedContext::build(select_coclass(m, i), g.verify());
    out << grp->name() << " coclass " << i << ' ' << list(ctx.coclass.exponents()) << " order " << ctx.coclass.order()
        << ": degrees " << list(ctx.degrees()) << '\n';
    jsonl += degrees_to_json(ctx, g.seed).dump() + "\n";
  }
  write_out(g, grp->name() + ".degrees.jsonl", jsonl);
  return 0;
}

int cmd_regular(const Globals& g, const std::string& name, long k, std::ostream& out) {
  const GroupPtr grp = resolve_group(name);
  const MultiplierPtr m = multiplier_for(grp, g.h2_cap);
  const TwistedContext ctx = TwistedContext::build(select_coclass(m, k < 0 ? 0 : k), g.verify());
  out << grp->name() << " coclass " << ctx.coclass.index() << ": " << ctx.regular.regular_count << " of "
      << ctx.regular.classes.size() << " classes are regular\n";
  for (const auto& e : ctx.regular.classes) {
    const auto& cls = grp->classes()[e.class_index];
    out << "  class " << e.class_index << " rep " << e.representative << " size " << cls.members.size() << " order "
        << grp->element_order(e.representative) << (e.regular ? " regular" : "") << '\n';
  }
  write_out(g, grp->name() + ".regular.json", degrees_to_json(ctx, g.seed).dump(2) + "\n");
  return 0;
}

int cmd_verify(const Globals& g, const std::string& target, const std::vector<std::string>& checks,
               const std::string& p_opt, const std::string& pi_opt, std::ostream& out) {
  SuiteConfig cfg;
  cfg.verify = g.verify();
  cfg.jobs = g.jobs;
  bool a5_control = false;
  if (!checks.empty()) {
    cfg.checks.clear();
    for (const auto& c : checks) {
      if (c == "a5_control")
        a5_control = true;
      else
        cfg.checks.push_back(check_kind_from_string(c));
    }
  }
  if (!p_opt.empty()) cfg.primes = parse_primes(p_opt);
  if (!pi_opt.empty()) cfg.pis = {PiSet(parse_primes(pi_opt))};

  std::vector<GroupPtr> groups;
  if (target == "all") {
    for (const auto& e : catalog())
      if (e.order <= g.order_cap) groups.push_back(catalog_group(e.name));
    if (checks.empty()) a5_control = true;
  } else {
    groups.push_back(resolve_group(target));
  }

  std::vector<CheckResult> results = groups.empty() || cfg.checks.empty() ? std::vector<CheckResult>{} : run_suite(groups, cfg);
  if (a5_control) results.push_back(verify_a5_negative_control(cfg.verify));

  const std::string csv = summary_csv(results);
  write_out(g, "results.jsonl", to_jsonl(results, cfg.verify));
  write_out(g, "summary.csv", csv);
  for (const auto& r : results)
    if (r.verdict == Verdict::Fail)
      out << "FAIL " << r.check << ' ' << r.group << " coclass " << r.coclass_index << " primes " << list(r.primes)
          << ": " << r.reason << '\n';
  out << csv;
  const SuiteTotals t = totals(results);
  out << "total: " << t.pass << " pass, " << t.fail << " fail, " << t.inapplicable << " inapplicable\n";
  return t.fail == 0 ? 0 : 1;
}

int cmd_decompose(const Globals& g, const std::string& name, long k, const std::string& pi_opt, std::ostream& out) {
  const GroupPtr grp = resolve_group(name);
  const MultiplierPtr m = multiplier_for(grp, g.h2_cap);
  const VerifyConfig vc = g.verify();
  const TwistedContext ctx = TwistedContext::build(select_coclass(m, k < 0 ? 0 : k), vc);
  const PiSet pi(parse_primes(pi_opt));
  bool ok = true;
  std::string jsonl;
  for (std::size_t i = 0; i < ctx.irreps.size(); ++i) {
    const PiDecomposition d = pi_decompose(ctx, ctx.irreps[i], pi, vc);
    std::vector<int> fdeg;
    for (const auto& y : d.certificate.factors) fdeg.push_back(y.degree());
    out << "irreducible " << i << " degree " << ctx.irreps[i].degree() << ": |J| = " << d.certificate.j.order()
        << ", factors " << list(fdeg) << ", dim V_pi = " << d.v_pi.degree() << ", dim V_pi' = " << d.v_pi_prime.degree()
        << ", intertwiner " << d.certificate.intertwiner << (d.ok ? ", ok" : ", FAILED") << '\n';
    ok = ok && d.ok;
    jsonl += ojson{{"group", grp->name()},
                   {"coclass", ctx.coclass.exponents()},
                   {"pi", pi.primes()},
                   {"irreducible", i},
                   {"degree", ctx.irreps[i].degree()},
                   {"j_order", d.certificate.j.order()},
                   {"factor_degrees", fdeg},
                   {"constituent_degrees", d.certificate.constituent_degrees},
                   {"inertia_orders", d.certificate.inertia_orders},
                   {"intertwiner", d.certificate.intertwiner},
                   {"residual", d.certificate.residual},
                   {"checks", d.checks},
                   {"seed", g.seed}}
                 .dump() +
             "\n";
  }
  write_out(g, grp->name() + ".decompose.jsonl", jsonl);
  return ok ? 0 : 1;
}

int cmd_export(const Globals& g, const std::string& name, bool table, bool reps, long k, std::ostream& out) {
  const GroupPtr grp = resolve_group(name);
  ojson doc = table ? cayley_table_json(*grp) : group_to_json(*grp);
  if (reps) {
    const MultiplierPtr m = multiplier_for(grp, g.h2_cap);
    const TwistedContext ctx = TwistedContext::build(select_coclass(m, k < 0 ? 0 : k), g.verify());
    ojson arr = ojson::array();
    const Cocycle rep = ctx.coclass.representative();
    for (const auto& r : ctx.irreps) arr.push_back(rep_to_json(r, cocycle_hash(rep)));
    doc = ojson{{"group", grp->name()}, {"cocycle", cocycle_to_json(rep)}, {"representations", std::move(arr)}};
  }
  const std::string text = doc.dump(2) + "\n";
  if (g.out.empty())
    out << text;
  else
    write_out(g, grp->name() + (reps ? ".reps.json" : table ? ".table.json" : ".json"), text);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Projective representations of finite groups: multipliers, twisted degrees and Clifford-theory checks"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--tol", g.tol, "Tolerance for numeric equality and integrality")
      ->envname("PROJREP_TOL")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized numeric steps")->envname("PROJREP_SEED");
  app.add_option("--h2-cap", g.h2_cap, "Largest order for exact H2 computation")
      ->envname("PROJREP_H2_CAP")
      ->check(CLI::PositiveNumber);
  app.add_option("--order-cap", g.order_cap, "Largest catalog order for 'verify all'")
      ->envname("PROJREP_ORDER_CAP")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Directory for JSON/CSV reports")->envname("PROJREP_OUT");
  app.add_option("--jobs", g.jobs, "Worker threads (0: OpenMP default)")
      ->envname("PROJREP_JOBS")
      ->check(CLI::NonNegativeNumber);

  std::string group;
  long coclass = -1;
  std::vector<std::string> checks;
  std::string p_opt, pi_opt;
  bool table = false, reps = false;

  auto* catalog_cmd = app.add_subcommand("catalog", "List the built-in groups and self-check them");
  auto* mult_cmd = app.add_subcommand("multiplier", "Schur multiplier of a group");
  mult_cmd->add_option("group", group, "Catalog name or group JSON file")->required();
  auto* deg_cmd = app.add_subcommand("degrees", "Irreducible twisted degrees");
  deg_cmd->add_option("group", group, "Catalog name or group JSON file")->required();
  deg_cmd->add_option("--coclass", coclass, "Coclass index (lexicographic); all when omitted");
  auto* reg_cmd = app.add_subcommand("regular-classes", "c-regular conjugacy classes");
  reg_cmd->add_option("group", group, "Catalog name or group JSON file")->required();
  reg_cmd->add_option("--coclass", coclass, "Coclass index (lexicographic)")->required();
  auto* ver_cmd = app.add_subcommand("verify", "Run the checks on a group or on the whole catalog");
  ver_cmd->add_option("group", group, "Catalog name, group JSON file, or 'all'")->required();
  ver_cmd->add_option("--check", checks,
                      "basic, clifford, ito_michler, regular_sylow, pi_theorem, decomposition, coboundary, a5_control");
  auto* p_flag = ver_cmd->add_option("--p", p_opt, "Restrict to one prime");
  ver_cmd->add_option("--pi", pi_opt, "Restrict to one prime set, comma separated")->excludes(p_flag);
  auto* dec_cmd = app.add_subcommand("decompose", "Recursive Clifford decomposition along the pi-series");
  dec_cmd->add_option("group", group, "Catalog name or group JSON file")->required();
  dec_cmd->add_option("--coclass", coclass, "Coclass index (lexicographic)")->required();
  dec_cmd->add_option("--pi", pi_opt, "Prime set, comma separated")->required();
  auto* exp_cmd = app.add_subcommand("export", "Group JSON, Cayley table, or irreducible representations");
  exp_cmd->add_option("group", group, "Catalog name or group JSON file")->required();
  exp_cmd->add_flag("--table", table, "Export the Cayley table");
  exp_cmd->add_flag("--reps", reps, "Export the irreducible representations of --coclass");
  exp_cmd->add_option("--coclass", coclass, "Coclass index for --reps");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*catalog_cmd) return cmd_catalog(g, out);
    if (*mult_cmd) return cmd_multiplier(g, group, out);
    if (*deg_cmd) return cmd_degrees(g, group, coclass, out);
    if (*reg_cmd) return cmd_regular(g, group, coclass, out);
    if (*ver_cmd) return cmd_verify(g, group, checks, p_opt, pi_opt, out);
    if (*dec_cmd) return cmd_decompose(g, group, coclass, pi_opt, out);
    if (*exp_cmd) return cmd_export(g, group, table, reps, coclass, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace projrep
