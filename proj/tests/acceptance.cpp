// Acceptance sweep: one PASS/FAIL line per criterion.
// Usage: acceptance [criterion ...]   (default: all ten)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "projrep/catalog.hpp"
#include "projrep/verifier.hpp"

using namespace projrep;

namespace {

constexpr double kResidualTol = 1e-6;     // Wedderburn and certificate residuals
constexpr double kIntegralityTol = 1e-6;  // twisted degree rounding
constexpr double kInductionTol = 1e-6;    // character comparisons for induction laws
constexpr int kMaxOrder = 60;             // sweep bound for criteria 1, 2, 8
constexpr int kCoboundaryOrder = 24;
constexpr int kCoboundaryPerturbations = 20;
constexpr int kMinNontrivialItoMichler = 50;
constexpr int kSweepH2Cap = 144;         // exact multipliers for the whole catalog in criteria 5 and 6

struct Outcome {
  bool pass = false;
  std::string detail;
};

VerifyConfig base_config() {
  VerifyConfig cfg;
  cfg.tol.integrality = kIntegralityTol;
  cfg.tol.equality = kInductionTol;
  return cfg;
}

std::vector<GroupPtr> catalog_up_to(int max_order, bool solvable_only = false) {
  std::vector<GroupPtr> out;
  for (const auto& e : catalog())
    if (e.order <= max_order && (!solvable_only || e.solvable)) out.push_back(catalog_group(e.name));
  return out;
}

std::vector<TwistedContext> contexts(const GroupPtr& g, const VerifyConfig& cfg) {
  const MultiplierPtr m = multiplier_for(g, cfg.h2_cap);
  std::vector<TwistedContext> out;
  for (long i = 0; i < m->size(); ++i) out.push_back(TwistedContext::build(Coclass(m, m->exponents_at(i)), cfg));
  return out;
}

struct Tally {
  int pass = 0, fail = 0, inapplicable = 0;
  std::string first_failure;
  void add(const CheckResult& r) {
    if (r.verdict == Verdict::Pass) ++pass;
    else if (r.verdict == Verdict::Inapplicable) ++inapplicable;
    else {
      if (fail++ == 0) first_failure = r.group + " coclass " + std::to_string(r.coclass_index) + ": " + r.reason;
    }
  }
  std::string text() const {
    std::string s = std::to_string(pass) + " pass, " + std::to_string(fail) + " fail, " + std::to_string(inapplicable) +
                    " inapplicable";
    if (fail) s += "; first failure " + first_failure;
    return s;
  }
};

// 1: sum of squared degrees equals |G| and the degree count equals the c-regular class count.
Outcome degree_formula() {
  const VerifyConfig cfg = base_config();
  int instances = 0, bad = 0;
  double worst = 0.0;
  std::string first;
  for (const auto& g : catalog_up_to(kMaxOrder)) {
    for (const auto& ctx : contexts(g, cfg)) {
      ++instances;
      long sum = 0;
      for (int d : ctx.degrees()) sum += static_cast<long>(d) * d;
      worst = std::max(worst, ctx.wedderburn.residual);
      const bool ok = sum == g->order() && static_cast<int>(ctx.degrees().size()) == ctx.regular.regular_count &&
                      ctx.wedderburn.residual < kResidualTol;
      if (!ok && bad++ == 0) first = g->name() + " coclass " + std::to_string(ctx.coclass.index());
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d (group, coclass) instances, %d violations, worst residual %.2e", instances, bad,
                worst);
  return {bad == 0, std::string(buf) + (bad ? "; first " + first : "")};
}

// 2: o(c) | n, n | |G|, o(c)^2 | |G|.
Outcome divisibilities() {
  const VerifyConfig cfg = base_config();
  int instances = 0, bad = 0;
  std::string first;
  for (const auto& g : catalog_up_to(kMaxOrder)) {
    for (const auto& ctx : contexts(g, cfg)) {
      ++instances;
      const int oc = ctx.coclass.order();
      bool ok = g->order() % (oc * oc) == 0;
      for (int d : ctx.degrees()) ok = ok && d % oc == 0 && g->order() % d == 0;
      if (!ok && bad++ == 0) first = g->name() + " coclass " + std::to_string(ctx.coclass.index());
    }
  }
  return {bad == 0, std::to_string(instances) + " instances, " + std::to_string(bad) + " violations" +
                        (bad ? "; first " + first : "")};
}

// 3: every {0,1}-valued table on C2 x C2, classified two independent ways.
Outcome brute_force_klein() {
  const GroupPtr g = catalog_group("C2xC2");
  const FiniteGroup& G = *g;
  const int n = G.order();
  const MultiplierPtr m = multiplier_for(g);
  int valid = 0, disagreements = 0;
  std::set<std::vector<int>> pairings;
  std::set<long> library_classes;
  std::map<std::vector<int>, long> pairing_to_class;
  std::vector<int> nontrivial_table;
  for (int mask = 0; mask < (1 << (n * n)); ++mask) {
    std::vector<int> t(n * n);
    for (int i = 0; i < n * n; ++i) t[i] = (mask >> i) & 1;
    bool normalized = true;
    for (int x = 0; x < n; ++x) normalized = normalized && t[x] == 0 && t[x * n] == 0;
    if (!normalized) continue;
    bool cocycle = true;
    for (int x = 0; x < n && cocycle; ++x)
      for (int y = 0; y < n && cocycle; ++y)
        for (int z = 0; z < n && cocycle; ++z)
          cocycle = (t[x * n + y] + t[G.mul(x, y) * n + z]) % 2 == (t[y * n + z] + t[x * n + G.mul(y, z)]) % 2;
    if (!cocycle) continue;
    ++valid;
    // On an abelian group the class is determined by the commutator pairing a(x,y)/a(y,x).
    std::vector<int> pairing(n * n);
    bool nontrivial = false;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        pairing[x * n + y] = (t[x * n + y] - t[y * n + x] + 2) % 2;
        nontrivial = nontrivial || pairing[x * n + y] != 0;
      }
    pairings.insert(pairing);
    Cocycle c{g, 2, t};
    const long cls = Coclass::of(m, c).index();
    library_classes.insert(cls);
    auto [it, fresh] = pairing_to_class.emplace(pairing, cls);
    if (!fresh && it->second != cls) ++disagreements;
    if (nontrivial && nontrivial_table.empty()) nontrivial_table = t;
  }
  if (nontrivial_table.empty()) return {false, "no nontrivial table found"};
  const VerifyConfig cfg = base_config();
  const TwistedAlgebra a(g, to_unit(Cocycle{g, 2, nontrivial_table}));
  const RegularClassData reg = c_regular_classes(a);
  const auto degrees = sorted_degrees(wedderburn(a, cfg.seed, cfg.tol));
  const bool ok = pairings.size() == 2 && library_classes.size() == 2 && disagreements == 0 &&
                  degrees == std::vector<int>{2} && reg.regular_count == 1;
  std::string deg;
  for (int d : degrees) deg += (deg.empty() ? "" : ",") + std::to_string(d);
  return {ok, std::to_string(valid) + " cocycles, " + std::to_string(pairings.size()) + " pairing classes, " +
                  std::to_string(library_classes.size()) + " library classes, nontrivial degrees {" + deg + "}, " +
                  std::to_string(reg.regular_count) + " regular class"};
}

// 4: A5 twisted by the SL(2,5) extension cocycle against faithful irreducibles of SL(2,5).
Outcome covering_group_a5() {
  const VerifyConfig cfg = base_config();
  const GroupPtr e = catalog_group("SL(2,5)");
  Subgroup z = Subgroup::trivial(e);
  for (const auto& cls : e->classes())
    if (cls.members.size() == 1 && cls.representative != 0) z = Subgroup::generated(e, std::vector<Elem>{cls.representative});
  const ExtensionCocycle ext = cocycle_from_extension(e, z);
  const TwistedAlgebra twisted(ext.quotient.group, to_unit(ext.cocycle));
  const WedderburnData w = wedderburn(twisted, cfg.seed, cfg.tol);
  const std::vector<int> twisted_degrees = sorted_degrees(w);

  const TwistedAlgebra plain(e, trivial_unit(e->order()));
  std::vector<int> faithful;
  for (const auto& r : irreducible_reps(plain, cfg.seed, cfg.tol))
    if ((r.mats[ext.generator] + Eigen::MatrixXcd::Identity(r.degree(), r.degree())).norm() < kIntegralityTol)
      faithful.push_back(r.degree());
  std::sort(faithful.begin(), faithful.end());

  const std::vector<int> expected{2, 2, 4, 6};
  auto show = [](const std::vector<int>& v) {
    std::string s;
    for (int d : v) s += (s.empty() ? "" : ",") + std::to_string(d);
    return "{" + s + "}";
  };
  const bool ok = ext.quotient.group->order() == 60 && twisted_degrees == expected && faithful == expected &&
                  w.residual < kIntegralityTol;
  return {ok, "twisted degrees " + show(twisted_degrees) + ", faithful SL(2,5) degrees " + show(faithful)};
}

// 5: p-solvable equivalence over every catalog group.
Outcome ito_michler() {
  SuiteConfig cfg;
  cfg.verify = base_config();
  cfg.verify.h2_cap = kSweepH2Cap;
  cfg.checks = {CheckKind::ItoMichler};
  Tally t;
  int nontrivial = 0;
  for (const auto& r : run_suite(catalog_up_to(kDefaultOrderCap), cfg)) {
    t.add(r);
    bool trivial_class = true;
    for (int x : r.coclass) trivial_class = trivial_class && x == 0;
    if (r.verdict == Verdict::Pass && !trivial_class) ++nontrivial;
  }
  return {t.fail == 0 && nontrivial >= kMinNontrivialItoMichler,
          t.text() + "; " + std::to_string(nontrivial) + " passing instances with a nontrivial coclass"};
}

// 6: pi-separable equivalence and pi-factor consequences for |pi| <= 2.
Outcome pi_theorem() {
  SuiteConfig cfg;
  cfg.verify = base_config();
  cfg.verify.h2_cap = kSweepH2Cap;
  cfg.checks = {CheckKind::PiTheorem};
  cfg.max_pi = 2;
  Tally t;
  int consequences = 0;
  for (const auto& r : run_suite(catalog_up_to(kDefaultOrderCap), cfg)) {
    t.add(r);
    if (r.verdict == Verdict::Pass && r.lhs == true) ++consequences;
  }
  return {t.fail == 0 && t.pass > 0, t.text() + "; " + std::to_string(consequences) +
                                         " instances with pi'-degrees checked for abelian pi-factors"};
}

// 7: A5 at p = 2 with the trivial class.
Outcome a5_control() {
  const CheckResult r = verify_a5_negative_control(base_config());
  return {r.verdict == Verdict::Pass, "Sylow conditions " + r.rhs.dump() + ", no even degree " + r.lhs.dump() +
                                          (r.reason.empty() ? "" : "; " + r.reason)};
}

// 8: reconstruction certificates for every irreducible of every solvable group up to order 60.
Outcome certificates() {
  SuiteConfig cfg;
  cfg.verify = base_config();
  cfg.checks = {CheckKind::Decomposition};
  Tally t;
  int irreducibles = 0;
  double worst = 0.0;
  for (const auto& r : run_suite(catalog_up_to(kMaxOrder, true), cfg)) {
    t.add(r);
    if (!r.witnesses.contains("certificates")) continue;
    for (const auto& item : r.witnesses["certificates"]) {
      ++irreducibles;
      worst = std::max(worst, item["residual"].get<double>());
      if (item["intertwiner"].get<int>() != 1) ++t.fail;
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "; %d certificates, worst residual %.2e", irreducibles, worst);
  return {t.fail == 0 && worst < kResidualTol && irreducibles > 0, t.text() + buf};
}

// 9: transitivity, projection formula and Mackey over all subgroup pairs.
Outcome induction_laws() {
  const VerifyConfig cfg = base_config();
  Tally t;
  for (const char* name : {"S4", "D6"}) {
    const GroupPtr g = catalog_group(name);
    const auto subs = two_generated_subgroups(g);
    const auto ctxs = contexts(g, cfg);
    const Subgroup whole = Subgroup::whole(g);
    for (std::size_t c = 0; c < ctxs.size(); ++c)
      for (std::size_t i = 0; i < subs.size(); ++i)
        for (std::size_t j = 0; j < subs.size(); ++j) {
          const Subgroup& k = subs[i].is_subset_of(subs[j]) ? subs[j] : whole;
          t.add(verify_induction(ctxs[c], subs[i], k, subs[j], ctxs[(c + i + j) % ctxs.size()], cfg));
        }
  }
  return {t.fail == 0 && t.pass > 0, t.text()};
}

// 10: random coboundary perturbations keep degrees and regular flags.
Outcome coboundary_invariance() {
  SuiteConfig cfg;
  cfg.verify = base_config();
  cfg.checks = {CheckKind::Coboundary};
  cfg.coboundary_perturbations = kCoboundaryPerturbations;
  cfg.coboundary_order_cap = kCoboundaryOrder;
  Tally t;
  for (const auto& r : run_suite(catalog_up_to(kCoboundaryOrder), cfg)) t.add(r);
  return {t.fail == 0 && t.inapplicable == 0 && t.pass > 0,
          t.text() + " (" + std::to_string(kCoboundaryPerturbations) + " perturbations each)"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"degree formula and c-regular count", degree_formula},
      {"divisibilities o(c)|n, n||G|, o(c)^2||G|", divisibilities},
      {"brute-force cocycles on C2xC2", brute_force_klein},
      {"A5 twisted by the SL(2,5) cover", covering_group_a5},
      {"p-solvable degree equivalence", ito_michler},
      {"pi-separable degree equivalence", pi_theorem},
      {"A5 negative control at p = 2", a5_control},
      {"Clifford decomposition certificates", certificates},
      {"induction laws on S4 and D6", induction_laws},
      {"coboundary invariance", coboundary_invariance},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!selected.empty() && !selected.count(id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d %s: %s (%s) [%.1f s]\n", id, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
