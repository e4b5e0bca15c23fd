#include "projrep/verifier.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <set>

#include "projrep/catalog.hpp"
#include "projrep/error.hpp"

namespace projrep {

namespace {

using json = nlohmann::ordered_json;

std::set<int> primes_of(long n) {
  const auto p = prime_factors(n);
  return {p.begin(), p.end()};
}

std::set<int> primes_of(const std::vector<int>& values) {
  std::set<int> out;
  for (int v : values)
    for (int p : prime_factors(v)) out.insert(p);
  return out;
}

bool is_subset(const std::set<int>& a, const std::set<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint(const std::set<int>& a, const std::set<int>& b) {
  for (int x : a)
    if (b.count(x)) return false;
  return true;
}

std::set<int> set_union(std::initializer_list<std::set<int>> parts) {
  std::set<int> out;
  for (const auto& p : parts) out.insert(p.begin(), p.end());
  return out;
}

json to_json(const std::set<int>& s) { return json(std::vector<int>(s.begin(), s.end())); }

bool pi_disjoint(long n, const PiSet& pi) { return pi.pi_part(n) == 1; }

CheckResult make_result(std::string name, const TwistedContext& ctx, std::vector<int> primes) {
  CheckResult r;
  r.check = std::move(name);
  r.group = ctx.group->name();
  r.coclass = ctx.coclass.exponents();
  r.coclass_index = ctx.coclass.index();
  r.cocycle_hash = cocycle_hash(ctx.coclass.representative());
  r.primes = std::move(primes);
  return r;
}

void set_verdict(CheckResult& r, bool ok, const std::string& reason) {
  r.verdict = ok ? Verdict::Pass : Verdict::Fail;
  if (!ok) r.reason = reason;
}

void set_inapplicable(CheckResult& r, const std::string& reason) {
  r.verdict = Verdict::Inapplicable;
  r.reason = reason;
}

bool numerically_trivial(const GroupPtr& h, const UnitCocycle& a, const VerifyConfig& cfg) {
  return is_trivial_coclass_numeric(h, a, cfg.seed, cfg.tol);
}

TwistedAlgebra algebra_on(const Subgroup& h, const UnitCocycle& alpha, const VerifyConfig& cfg) {
  return TwistedAlgebra(h.group(), restrict_unit(alpha, h), cfg.tol.numeric_cocycle, Exec::Serial);
}

double character_distance(const ProjRep& a, const ProjRep& b) {
  if (a.mats.size() != b.mats.size()) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t g = 0; g < a.mats.size(); ++g) d = std::max(d, std::abs(a.mats[g].trace() - b.mats[g].trace()));
  return d;
}

double character_distance(const ProjRep& a, const std::vector<cd>& chi) {
  double d = 0.0;
  for (std::size_t g = 0; g < a.mats.size(); ++g) d = std::max(d, std::abs(a.mats[g].trace() - chi[g]));
  return d;
}

// Conditions on a Sylow p-subgroup relative to O_p'(G).
struct SylowConditions {
  bool abelian = false;
  bool restriction_trivial = false;
  bool normal = false;
  bool invariant_irreducibles = false;  // P inside every inertia group
  bool stabilizes_classes = false;      // P fixes every c-regular class of O_p'
  bool centralizes_center = false;      // P fixes every twisted class sum of O_p'
  bool all_classes_regular = false;
  int sylow_order = 1;
  int o_p_prime_order = 1;
  int o_p_prime_irreducibles = 0;
  int o_p_prime_regular_classes = 0;

  bool second() const { return abelian && restriction_trivial && invariant_irreducibles; }
  bool third() const { return abelian && restriction_trivial && stabilizes_classes; }
  bool central() const { return abelian && restriction_trivial && centralizes_center; }
};

SylowConditions sylow_conditions(const TwistedContext& ctx, int p, const VerifyConfig& cfg) {
  const GroupPtr& g = ctx.group;
  const FiniteGroup& G = *g;
  const TwistedAlgebra& a = ctx.algebra;
  SylowConditions s;
  const Subgroup P = sylow_subgroup(g, p);
  s.sylow_order = P.order();
  s.abelian = P.group()->is_abelian();
  s.normal = P.is_normal();
  s.restriction_trivial = numerically_trivial(P.group(), restrict_unit(a.cocycle(), P), cfg);

  const Subgroup O = o_pi(g, PiSet({p}).complement_in(G.order()));
  s.o_p_prime_order = O.order();
  std::vector<Elem> gens;
  for (Elem x : P.group()->generators()) gens.push_back(P.to_parent(x));

  const TwistedAlgebra ao = algebra_on(O, a.cocycle(), cfg);
  const auto irr = irreducible_reps(ao, cfg.seed, cfg.tol);
  s.o_p_prime_irreducibles = static_cast<int>(irr.size());
  s.invariant_irreducibles = true;
  for (const auto& v : irr)
    for (Elem x : gens)
      if (intertwiner_dimension(v, conjugate_rep(v, O, x, a), cfg.tol.equality) != 1) s.invariant_irreducibles = false;

  const RegularClassData reg = c_regular_classes(ao, cfg.tol.rank, Exec::Serial);
  const FiniteGroup& OG = *O.group();
  s.o_p_prime_regular_classes = reg.regular_count;
  s.all_classes_regular = reg.regular_count == static_cast<int>(reg.classes.size());
  s.stabilizes_classes = true;
  s.centralizes_center = true;
  for (const auto& e : reg.classes) {
    if (!e.regular) continue;
    for (Elem x : gens) {
      const Elem moved = O.to_local(G.conj(O.to_parent(e.representative), x));
      if (OG.class_of(moved) != e.class_index) s.stabilizes_classes = false;
      // (x sigma)^-1 (y sigma) (x sigma) = alpha_tilde(y, x) y^x sigma
      Eigen::VectorXcd img = Eigen::VectorXcd::Zero(e.sum.size());
      for (Elem y = 0; y < OG.order(); ++y) {
        if (e.sum[y] == cd(0.0)) continue;
        const Elem yp = O.to_parent(y);
        img[O.to_local(G.conj(yp, x))] += a.alpha_tilde(yp, x) * e.sum[y];
      }
      if ((img - e.sum).cwiseAbs().maxCoeff() > cfg.tol.equality) s.centralizes_center = false;
    }
  }
  return s;
}

json to_json(const SylowConditions& s) {
  return json{{"sylow_order", s.sylow_order},
              {"abelian", s.abelian},
              {"normal", s.normal},
              {"restriction_trivial", s.restriction_trivial},
              {"o_p_prime_order", s.o_p_prime_order},
              {"o_p_prime_irreducibles", s.o_p_prime_irreducibles},
              {"o_p_prime_regular_classes", s.o_p_prime_regular_classes},
              {"invariant_irreducibles", s.invariant_irreducibles},
              {"stabilizes_classes", s.stabilizes_classes},
              {"centralizes_center", s.centralizes_center}};
}

bool no_degree_divisible(const std::vector<int>& degrees, const PiSet& pi) {
  return std::all_of(degrees.begin(), degrees.end(), [&](int d) { return pi_disjoint(d, pi); });
}

// Quotient N_i / N_{i-1} is abelian iff all commutators of N_i lie in N_{i-1}.
bool factor_abelian(const FiniteGroup& g, const Subgroup& upper, const Subgroup& lower) {
  for (Elem a : upper.elements())
    for (Elem b : upper.elements()) {
      const Elem comm = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (!lower.contains(comm)) return false;
    }
  return true;
}

ProjRep tensor_all(const std::vector<ProjRep>& reps, const GroupPtr& g) {
  ProjRep acc = trivial_rep(g);
  for (const auto& r : reps) acc = tensor_reps(acc, r);
  return acc;
}

// The constituent of res W|_J lying over V (V on m.group(), m <= j inside W's group).
ProjRep clifford_correspondent(const ProjRep& w, const Subgroup& j, const Subgroup& m, const ProjRep& v,
                               const VerifyConfig& cfg) {
  const auto parts = decompose(restrict_rep(w, j), cfg.seed, cfg.tol);
  const ProjRep* found = nullptr;
  for (const auto& c : parts)
    if (intertwiner_dimension(v, restrict_between(c.rep, j, m), cfg.tol.equality) > 0) {
      if (found != nullptr || c.multiplicity != 1)
        throw Error(ErrorCode::ReconstructionFailure, "Clifford correspondent is not unique");
      found = &c.rep;
    }
  if (found == nullptr) throw Error(ErrorCode::ReconstructionFailure, "no constituent lies over V");
  return *found;
}

std::vector<Elem> local_map(const Subgroup& from, const Subgroup& to) {
  std::vector<Elem> m(to.order());
  for (Elem l = 0; l < to.order(); ++l) m[l] = from.to_local(to.to_parent(l));
  return m;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "unknown";
}

std::vector<PiSet> prime_subsets(long n, int max_size) {
  const auto primes = prime_factors(n);
  const int k = static_cast<int>(primes.size());
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) s.push_back(primes[i]);
    if (static_cast<int>(s.size()) <= max_size) subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<PiSet> out;
  for (auto& s : subsets) out.emplace_back(std::move(s));
  return out;
}

MultiplierPtr multiplier_for(const GroupPtr& g, int cap) {
  if (g->order() <= cap) return SchurMultiplier::compute(g, 0, cap);
  if (g == catalog_group("A5")) {
    static const MultiplierPtr a5 = [] {
      const GroupPtr a5g = catalog_group("A5");
      const GroupPtr sl = catalog_group("SL(2,5)");
      std::vector<Elem> center;
      for (Elem x = 0; x < sl->order(); ++x) {
        bool central = true;
        for (Elem s : sl->generators()) central = central && sl->mul(x, s) == sl->mul(s, x);
        if (central) center.push_back(x);
      }
      ExtensionCocycle ext = cocycle_from_extension(sl, Subgroup(sl, center));
      if (ext.quotient.group->table() != a5g->table())
        throw Error(ErrorCode::CrossCheckMismatch, "A5 does not match SL(2,5) modulo its center");
      Cocycle basis = ext.cocycle;
      basis.group = a5g;
      const int modulus = basis.modulus;
      auto resolver = [a5g](const Cocycle& c) {
        return std::vector<int>{is_trivial_coclass_numeric(a5g, to_unit(c)) ? 0 : 1};
      };
      return SchurMultiplier::declared(a5g, modulus, {2}, {basis}, resolver);
    }();
    return a5;
  }
  if (g == catalog_group("SL(2,5)"))
    return SchurMultiplier::declared(g, 1, {}, {}, [](const Cocycle&) { return std::vector<int>{}; });
  return SchurMultiplier::unknown(g);
}

TwistedContext TwistedContext::build(const Coclass& c, const VerifyConfig& cfg) {
  const Cocycle rep = c.representative();
  TwistedAlgebra a(rep.group, to_unit(rep), cfg.tol.cocycle, Exec::Serial);
  RegularClassData reg = c_regular_classes(a, cfg.tol.rank, Exec::Serial);
  WedderburnData w = projrep::wedderburn(a, cfg.seed, cfg.tol);
  auto irr = split_regular(a, w, cfg.seed, cfg.tol);
  return TwistedContext{rep.group, c, std::move(a), std::move(reg), std::move(w), std::move(irr)};
}

CheckResult verify_basic(const TwistedContext& ctx, const VerifyConfig& cfg) {
  CheckResult r = make_result("basic", ctx, {});
  const FiniteGroup& G = *ctx.group;
  const long n = G.order();
  const auto degrees = ctx.degrees();
  const int oc = ctx.coclass.order();

  long sum_sq = 0;
  bool order_divides = true, divides_group = true, chain = true;
  const std::set<int> pc = primes_of(oc);
  for (int d : degrees) {
    sum_sq += static_cast<long>(d) * d;
    order_divides = order_divides && d % oc == 0;
    divides_group = divides_group && n % d == 0;
    chain = chain && is_subset(pc, primes_of(d));
  }
  const std::set<int> pirr = primes_of(degrees);
  chain = chain && is_subset(pirr, primes_of(n));

  json hall = json::array();
  bool hall_ok = true;
  for (const PiSet& pi : prime_subsets(n, 64)) {
    if (pi.primes().size() > 1 && !is_pi_separable(ctx.group, pi)) continue;
    const Subgroup h = pi.primes().size() == 1 ? sylow_subgroup(ctx.group, pi.primes()[0]) : hall_subgroup(ctx.group, pi);
    const bool s1 = pi_disjoint(oc, pi);
    const UnitCocycle res = restrict_unit(ctx.algebra.cocycle(), h);
    bool s2;
    std::string method;
    if (ctx.coclass.multiplier()->is_exact() && h.order() <= cfg.h2_cap) {
      s2 = restrict_coclass(ctx.coclass, h, cfg.h2_cap).is_trivial();
      method = "exact";
    } else {
      s2 = numerically_trivial(h.group(), res, cfg);
      method = "numeric";
    }
    const TwistedAlgebra ah(h.group(), res, cfg.tol.numeric_cocycle, Exec::Serial);
    const auto hdeg = sorted_degrees(wedderburn(ah, cfg.seed, cfg.tol));
    const bool s3 = !hdeg.empty() && hdeg.front() == 1;
    hall_ok = hall_ok && s1 == s2 && s2 == s3;
    hall.push_back(json{{"pi", pi.primes()}, {"order", h.order()}, {"order_pi_prime", s1},
                        {"restriction_trivial", s2}, {"method", method}, {"linear_irreducible", s3}});
  }

  const bool count = static_cast<int>(degrees.size()) == ctx.regular.regular_count;
  const bool formula = sum_sq == n;
  const bool square = n % (static_cast<long>(oc) * oc) == 0;
  r.lhs = json{{"count", count},
               {"degree_formula", formula},
               {"order_divides_degrees", order_divides},
               {"degrees_divide_order", divides_group},
               {"order_squared_divides", square},
               {"prime_chain", chain},
               {"hall_criterion", hall_ok}};
  r.rhs = true;
  r.witnesses = json{{"degrees", degrees},
                     {"coclass_order", oc},
                     {"regular_classes", ctx.regular.regular_count},
                     {"wedderburn_residual", ctx.wedderburn.residual},
                     {"prime_sets", json{{"coclass", to_json(pc)}, {"degrees", to_json(pirr)}, {"group", to_json(primes_of(n))}}},
                     {"hall", hall}};
  const bool ok = count && formula && order_divides && divides_group && square && chain && hall_ok;
  set_verdict(r, ok, "a degree identity or divisibility failed");
  return r;
}

CheckResult verify_clifford(const TwistedContext& ctx, const Subgroup& n, const ProjRep& v, const VerifyConfig& cfg) {
  CheckResult r = make_result("clifford", ctx, {});
  const GroupPtr& g = ctx.group;
  const TwistedAlgebra& a = ctx.algebra;
  const long order = g->order();
  if (!n.is_normal()) throw Error(ErrorCode::NotNormal, "N is not normal");

  const Subgroup j = inertia_group(v, n, a);
  const CliffordExtension ext = clifford_extend(v, n, j, a, cfg.seed, cfg.tol);
  const long index = order / j.order();
  const long jn = j.order() / n.order();
  const std::set<int> pv = primes_of(v.degree()), pindex = primes_of(index);

  bool dims_ok = true, primes_ok = true, induces_ok = true, hall_ok = true;
  std::vector<int> over_degrees, w_degrees;
  UnitCocycle b;
  GroupPtr quotient;
  const auto separable = [&] {
    std::vector<PiSet> out;
    for (const PiSet& pi : prime_subsets(order, 64))
      if (is_pi_separable(g, pi)) out.push_back(pi);
    return out;
  }();
  for (const auto& x : ctx.irreps) {
    if (intertwiner_dimension(v, restrict_rep(x, n), cfg.tol.equality) == 0) continue;
    const ProjRep corr = clifford_correspondent(x, j, n, v, cfg);
    const Factorization f = factor_over_extension(corr, ext, cfg.seed, cfg.tol);
    if (quotient == nullptr) {
      quotient = f.quotient.group;
      b = f.w.alpha;
    }
    const int dw = f.w.degree();
    over_degrees.push_back(x.degree());
    w_degrees.push_back(dw);
    dims_ok = dims_ok && x.degree() == v.degree() * dw * index;
    primes_ok = primes_ok && primes_of(x.degree()) == set_union({pv, primes_of(dw), pindex});
    induces_ok = induces_ok && intertwiner_dimension(induce_rep(corr, j, a), x, cfg.tol.equality) == 1;
    for (const PiSet& pi : separable)
      if (pi_disjoint(x.degree(), pi)) hall_ok = hall_ok && pi.pi_part(index) == 1;
  }
  if (quotient == nullptr) throw Error(ErrorCode::ReconstructionFailure, "V lies under no irreducible of G");

  // ii) against the full set Irr(J/N | b).
  const TwistedAlgebra aq(quotient, b, cfg.tol.numeric_cocycle, Exec::Serial);
  const auto qdeg = sorted_degrees(wedderburn(aq, cfg.seed, cfg.tol));
  const bool bijection = qdeg.size() == over_degrees.size();
  const bool union_ok = primes_of(over_degrees) == set_union({pv, primes_of(qdeg), pindex});

  // iii)
  const TwistedAlgebra an = algebra_on(n, a.cocycle(), cfg);
  const auto ndeg = sorted_degrees(wedderburn(an, cfg.seed, cfg.tol));
  std::set<int> bound;
  const std::set<int> pn = primes_of(n.order()), pg = primes_of(ctx.degrees());
  std::set_intersection(pn.begin(), pn.end(), pg.begin(), pg.end(), std::inserter(bound, bound.begin()));
  const bool normal_ok = is_subset(primes_of(ndeg), bound);

  // iv)
  const bool iv_applies = disjoint(pn, primes_of(jn)) && is_subset(primes_of(ctx.coclass.order()), pn);
  const bool b_trivial = numerically_trivial(quotient, b, cfg);
  const bool iv_ok = !iv_applies || b_trivial;

  r.lhs = json{{"dimension_product", dims_ok},  {"prime_union", primes_ok},   {"induction_bijection", induces_ok},
               {"quotient_count", bijection},   {"prime_union_all", union_ok}, {"normal_primes", normal_ok},
               {"coprime_untwisted", iv_ok},    {"hall_in_inertia", hall_ok}};
  r.rhs = true;
  r.witnesses = json{{"n_order", n.order()},
                     {"v_degree", v.degree()},
                     {"inertia_order", j.order()},
                     {"index", index},
                     {"over_degrees", over_degrees},
                     {"w_degrees", w_degrees},
                     {"quotient_degrees", qdeg},
                     {"normal_degrees", ndeg},
                     {"coprime_applies", iv_applies},
                     {"b_trivial", b_trivial},
                     {"extension_residual", ext.residual}};
  set_verdict(r, dims_ok && primes_ok && induces_ok && bijection && union_ok && normal_ok && iv_ok && hall_ok,
              "a Clifford identity failed");
  return r;
}

CheckResult verify_ito_michler(const TwistedContext& ctx, int p, const VerifyConfig& cfg) {
  CheckResult r = make_result("ito_michler", ctx, {p});
  if (!is_p_solvable(ctx.group, p)) {
    set_inapplicable(r, "group is not p-solvable");
    return r;
  }
  const bool i = no_degree_divisible(ctx.degrees(), PiSet({p}));
  const SylowConditions s = sylow_conditions(ctx, p, cfg);
  r.lhs = i;
  r.rhs = json{{"ii", s.second()}, {"iii", s.third()}, {"center", s.central()}};
  r.witnesses = to_json(s);
  r.witnesses["degrees"] = ctx.degrees();
  const bool ok = i == s.second() && s.second() == s.third() && s.third() == s.central();
  set_verdict(r, ok, "conditions (i), (ii), (iii) disagree");
  return r;
}

CheckResult verify_regular_sylow(const TwistedContext& ctx, int p, const VerifyConfig& cfg) {
  CheckResult r = make_result("regular_sylow", ctx, {p});
  if (!is_p_solvable(ctx.group, p)) {
    set_inapplicable(r, "group is not p-solvable");
    return r;
  }
  const SylowConditions s = sylow_conditions(ctx, p, cfg);
  r.witnesses = to_json(s);
  if (!s.all_classes_regular) {
    set_inapplicable(r, "O_p'(G) has non-regular classes");
    return r;
  }
  const bool lhs = no_degree_divisible(ctx.degrees(), PiSet({p}));
  const bool rhs = s.normal && s.abelian && s.restriction_trivial;
  r.lhs = lhs;
  r.rhs = rhs;
  set_verdict(r, lhs == rhs, "degree condition and normal abelian Sylow condition disagree");
  return r;
}

CheckResult verify_pi_theorem(const TwistedContext& ctx, const PiSet& pi, const VerifyConfig& cfg) {
  CheckResult r = make_result("pi_theorem", ctx, pi.primes());
  const GroupPtr& g = ctx.group;
  const NormalSeries series = pi_series(g, pi);
  if (!series.reaches_group) {
    set_inapplicable(r, "group is not pi-separable");
    return r;
  }
  const bool lhs = no_degree_divisible(ctx.degrees(), pi);
  bool rhs = true;
  json per_prime = json::object();
  for (int p : pi.primes()) {
    if (g->order() % p != 0) continue;
    const bool solvable = is_p_solvable(g, p);
    bool cond = false;
    if (solvable) {
      const SylowConditions s = sylow_conditions(ctx, p, cfg);
      cond = s.second() && s.third();
      per_prime[std::to_string(p)] = to_json(s);
    }
    per_prime[std::to_string(p) + "_solvable"] = solvable;
    rhs = rhs && solvable && cond;
  }
  bool consequences = true;
  json factors = json::array();
  if (lhs) {
    for (std::size_t i = 0; i + 1 < series.terms.size(); ++i) {
      if (!series.factor_is_pi[i]) continue;
      const bool ab = factor_abelian(*g, series.terms[i + 1], series.terms[i]);
      factors.push_back(json{{"order", series.terms[i + 1].order() / series.terms[i].order()}, {"abelian", ab}});
      consequences = consequences && ab;
    }
    const Subgroup h = hall_subgroup(g, pi);
    const bool trivial = numerically_trivial(h.group(), restrict_unit(ctx.algebra.cocycle(), h), cfg);
    consequences = consequences && trivial;
    r.witnesses["hall_order"] = h.order();
    r.witnesses["hall_restriction_trivial"] = trivial;
  }
  r.lhs = lhs;
  r.rhs = rhs;
  r.witnesses["degrees"] = ctx.degrees();
  r.witnesses["primes"] = per_prime;
  r.witnesses["pi_factors"] = factors;
  r.witnesses["consequences"] = consequences;
  set_verdict(r, lhs == rhs && consequences, lhs == rhs ? "pi-factor consequence failed" : "equivalence failed");
  return r;
}

CheckResult verify_a5_negative_control(const VerifyConfig& cfg) {
  const GroupPtr g = catalog_group("A5");
  const TwistedContext ctx = TwistedContext::build(Coclass::trivial(multiplier_for(g, cfg.h2_cap)), cfg);
  CheckResult r = make_result("a5_negative_control", ctx, {2});
  const SylowConditions s = sylow_conditions(ctx, 2, cfg);
  const bool i = no_degree_divisible(ctx.degrees(), PiSet({2}));
  r.lhs = i;
  r.rhs = json{{"ii", s.second()}, {"iii", s.third()}};
  r.witnesses = to_json(s);
  r.witnesses["degrees"] = ctx.degrees();
  r.witnesses["two_solvable"] = is_p_solvable(g, 2);
  json others = json::object();
  for (int p : {3, 5}) {
    const SylowConditions sp = sylow_conditions(ctx, p, cfg);
    others[std::to_string(p)] = json{{"i", no_degree_divisible(ctx.degrees(), PiSet({p}))},
                                     {"ii", sp.second()},
                                     {"p_solvable", is_p_solvable(g, p)}};
  }
  r.witnesses["other_primes"] = others;
  set_verdict(r, s.second() && s.third() && !i, "the Sylow conditions do not hold or no degree is even");
  return r;
}

DecompositionCertificate decompose_along_series(const TwistedContext& ctx, const ProjRep& v,
                                                const NormalSeries& series, const VerifyConfig& cfg) {
  const GroupPtr& g = ctx.group;
  if (!series.reaches_group || series.terms.empty() || !series.terms.front().is_trivial())
    throw Error(ErrorCode::InvalidArgument, "series must run from 1 to G");
  if (v.group != g) throw Error(ErrorCode::InvalidArgument, "representation is not on the context group");
  const int l = static_cast<int>(series.terms.size()) - 1;

  Subgroup j = Subgroup::whole(g);
  std::vector<int> constituent_degrees, inertia_orders;
  ProjRep w = v;
  std::vector<ProjRep> ys;
  double residual = 0.0;
  for (int i = 0; i + 1 < l; ++i) {
    const Subgroup m = intersect(j, series.terms[i + 1]).relative_to(j);
    const TwistedAlgebra aj(j.group(), w.alpha, cfg.tol.numeric_cocycle, Exec::Serial);
    const ProjRep vi = decompose(restrict_rep(w, m), cfg.seed, cfg.tol).front().rep;
    const Subgroup jl = inertia_group(vi, m, aj);
    const CliffordExtension ext = clifford_extend(vi, m, jl, aj, cfg.seed, cfg.tol);
    const ProjRep x = clifford_correspondent(w, jl, m, vi, cfg);
    const Factorization f = factor_over_extension(x, ext, cfg.seed, cfg.tol);
    residual = std::max({residual, ext.residual, f.residual});

    const Subgroup next = j.lift(jl);
    const std::vector<Elem> to_j = local_map(j, next);
    std::vector<Elem> to_jl(next.order());
    for (Elem t = 0; t < next.order(); ++t) to_jl[t] = jl.to_local(to_j[t]);
    for (auto& y : ys) y = reindex_rep(y, next.group(), to_j);
    ys.push_back(reindex_rep(ext.y, next.group(), to_jl));
    w = reindex_rep(f.w_on_j, next.group(), to_jl);
    constituent_degrees.push_back(vi.degree());
    inertia_orders.push_back(next.order());
    j = next;
  }
  ys.push_back(w);
  constituent_degrees.push_back(w.degree());

  const ProjRep u = tensor_all(ys, j.group());
  const UnitCocycle target = restrict_unit(ctx.algebra.cocycle(), j);
  for (std::size_t k = 0; k < target.size(); ++k)
    if (std::abs(u.alpha[k] - target[k]) > cfg.tol.numeric_cocycle)
      throw Error(ErrorCode::ReconstructionFailure, "factor cocycles do not multiply to the restricted cocycle");
  residual = std::max(residual, rep_residual(u));
  const ProjRep ind = induce_rep(u, j, ctx.algebra);

  DecompositionCertificate cert{j};
  cert.constituent_degrees = std::move(constituent_degrees);
  cert.inertia_orders = std::move(inertia_orders);
  cert.index = g->order() / j.order();
  cert.intertwiner = intertwiner_dimension(ind, v, cfg.tol.equality);
  cert.residual = residual;
  cert.restrictions_irreducible = true;
  for (int i = 0; i < l; ++i) {
    const Subgroup mi = intersect(j, series.terms[i + 1]);
    cert.restrictions_irreducible =
        cert.restrictions_irreducible && is_irreducible(restrict_between(ys[i], j, mi), cfg.tol.equality);
  }
  cert.factors = std::move(ys);
  long product = cert.index;
  for (const auto& y : cert.factors) product *= y.degree();
  if (!cert.reconstructs() || !cert.restrictions_irreducible || product != v.degree() ||
      residual > cfg.tol.numeric_cocycle)
    throw Error(ErrorCode::ReconstructionFailure, "decomposition certificate does not verify");
  return cert;
}

PiDecomposition pi_decompose(const TwistedContext& ctx, const ProjRep& v, const PiSet& pi, const VerifyConfig& cfg) {
  const GroupPtr& g = ctx.group;
  const long order = g->order();
  const NormalSeries series = pi_series(g, pi);
  if (!series.reaches_group) throw Error(ErrorCode::NotPiSeparable, g->name() + " is not " + pi.to_string() + "-separable");
  const PiSet pi_c = pi.complement_in(order);

  PiDecomposition out{decompose_along_series(ctx, v, series, cfg)};
  DecompositionCertificate& cert = out.certificate;
  cert.factor_is_pi = series.factor_is_pi;
  const GroupPtr jg = cert.j.group();
  std::vector<ProjRep> odd, even;
  for (std::size_t i = 0; i < cert.factors.size(); ++i) (series.factor_is_pi[i] ? odd : even).push_back(cert.factors[i]);
  out.v_pi = tensor_all(odd, jg);
  out.v_pi_prime = tensor_all(even, jg);

  const auto [c_pi, c_pi_prime] = pi_part(ctx.coclass, pi);
  const auto matches = [&](const ProjRep& r, const Coclass& c) {
    const UnitCocycle res = restrict_unit(to_unit(c.representative()), cert.j);
    return numerically_trivial(jg, pointwise_quotient(r.alpha, res), cfg);
  };
  const Subgroup h = hall_subgroup(jg, pi);
  const Subgroup hp = hall_subgroup(jg, pi_c);
  const ProjRep u = tensor_reps(out.v_pi, out.v_pi_prime);
  const long dim = v.degree();

  const bool lhs = pi_disjoint(dim, pi);
  const bool rhs = pi.pi_part(cert.j.order()) == pi.pi_part(order) && c_pi.is_trivial() && out.v_pi.degree() == 1 &&
                   is_irreducible(restrict_rep(u, hp), cfg.tol.equality);
  out.checks = json{
      {"reconstructs", cert.reconstructs()},
      {"restrictions_irreducible", cert.restrictions_irreducible},
      {"degree_pi", pi.pi_part(dim) == pi.pi_part(cert.index) * out.v_pi.degree()},
      {"degree_pi_prime", pi_c.pi_part(dim) == pi_c.pi_part(cert.index) * out.v_pi_prime.degree()},
      {"coclass_pi", matches(out.v_pi, c_pi)},
      {"coclass_pi_prime", matches(out.v_pi_prime, c_pi_prime)},
      {"pi_on_hall_irreducible", is_irreducible(restrict_rep(out.v_pi, h), cfg.tol.equality)},
      {"pi_prime_on_hall_irreducible", is_irreducible(restrict_rep(out.v_pi_prime, hp), cfg.tol.equality)},
      {"pi_prime_on_hall_ordinary", numerically_trivial(h.group(), restrict_unit(out.v_pi_prime.alpha, h), cfg)},
      {"pi_on_hall_prime_ordinary", numerically_trivial(hp.group(), restrict_unit(out.v_pi.alpha, hp), cfg)},
      {"pi_prime_degree_criterion", lhs == rhs}};
  out.ok = std::all_of(out.checks.begin(), out.checks.end(), [](const json& b) { return b.get<bool>(); });
  return out;
}

CheckResult verify_decomposition(const TwistedContext& ctx, const PiSet& pi, const VerifyConfig& cfg) {
  CheckResult r = make_result("decomposition", ctx, pi.primes());
  if (!is_pi_separable(ctx.group, pi)) {
    set_inapplicable(r, "group is not pi-separable");
    return r;
  }
  bool ok = true;
  json items = json::array();
  for (std::size_t k = 0; k < ctx.irreps.size(); ++k) {
    const PiDecomposition d = pi_decompose(ctx, ctx.irreps[k], pi, cfg);
    ok = ok && d.ok;
    json item{{"degree", ctx.irreps[k].degree()},
              {"j_order", d.certificate.j.order()},
              {"pi_degree", d.v_pi.degree()},
              {"pi_prime_degree", d.v_pi_prime.degree()},
              {"factor_degrees", json::array()},
              {"intertwiner", d.certificate.intertwiner},
              {"residual", d.certificate.residual}};
    for (const auto& y : d.certificate.factors) item["factor_degrees"].push_back(y.degree());
    if (!d.ok) item["checks"] = d.checks;
    items.push_back(std::move(item));
  }
  r.lhs = ok;
  r.rhs = true;
  r.witnesses["certificates"] = std::move(items);
  set_verdict(r, ok, "a decomposition certificate failed");
  return r;
}

CheckResult verify_induction(const TwistedContext& ctx, const Subgroup& h, const Subgroup& k, const Subgroup& l,
                             const TwistedContext& other, const VerifyConfig& cfg) {
  CheckResult r = make_result("induction", ctx, {});
  const GroupPtr& g = ctx.group;
  const FiniteGroup& G = *g;
  const TwistedAlgebra& a = ctx.algebra;
  if (!h.is_subset_of(k)) throw Error(ErrorCode::InvalidArgument, "H is not contained in K");
  const double tol = cfg.tol.equality;

  const auto irr_h = irreducible_reps(algebra_on(h, a.cocycle(), cfg), cfg.seed, cfg.tol);
  const TwistedAlgebra ak = algebra_on(k, a.cocycle(), cfg);
  const TwistedAlgebra al = algebra_on(l, a.cocycle(), cfg);
  const Subgroup hk = h.relative_to(k);
  std::vector<Elem> hk_map(hk.order());
  for (Elem t = 0; t < hk.order(); ++t) hk_map[t] = h.to_local(k.to_parent(hk.to_parent(t)));
  const TwistedAlgebra aprod(g, pointwise_product(other.algebra.cocycle(), a.cocycle()), cfg.tol.numeric_cocycle,
                             Exec::Serial);

  // Double coset representatives of L \ G / H.
  std::vector<Elem> reps;
  std::vector<char> seen(G.order(), 0);
  for (Elem s = 0; s < G.order(); ++s) {
    if (seen[s]) continue;
    reps.push_back(s);
    for (Elem x : l.elements())
      for (Elem y : h.elements()) seen[G.mul(G.mul(x, s), y)] = 1;
  }

  double trans = 0.0, proj = 0.0, mackey = 0.0;
  for (const auto& u : irr_h) {
    const ProjRep ind = induce_rep(u, h, a);
    const ProjRep via_k = induce_rep(induce_rep(reindex_rep(u, hk.group(), hk_map), hk, ak), k, a);
    trans = std::max(trans, character_distance(ind, via_k));

    for (const auto& vb : other.irreps) {
      const ProjRep left = tensor_reps(vb, ind);
      const ProjRep right = induce_rep(tensor_reps(restrict_rep(vb, h), u), h, aprod);
      proj = std::max(proj, character_distance(left, right));
    }

    const ProjRep res = restrict_rep(ind, l);
    std::vector<cd> chi(l.order(), cd(0.0));
    for (Elem s : reps) {
      const Subgroup target = conjugate(h, s);
      const ProjRep us = conjugate_rep(u, h, s, a, target);
      const Subgroup d = intersect(l, target);
      const Subgroup dl = d.relative_to(l);
      std::vector<Elem> dmap(dl.order());
      for (Elem t = 0; t < dl.order(); ++t) dmap[t] = target.to_local(l.to_parent(dl.to_parent(t)));
      const ProjRep piece = induce_rep(reindex_rep(us, dl.group(), dmap), dl, al);
      for (Elem t = 0; t < l.order(); ++t) chi[t] += piece.mats[t].trace();
    }
    mackey = std::max(mackey, character_distance(res, chi));
  }
  r.lhs = json{{"transitivity", trans < tol}, {"projection", proj < tol}, {"mackey", mackey < tol}};
  r.rhs = true;
  r.witnesses = json{{"h_order", h.order()},          {"k_order", k.order()},
                     {"l_order", l.order()},          {"double_cosets", reps.size()},
                     {"h_irreducibles", irr_h.size()}, {"other_coclass", other.coclass.exponents()},
                     {"transitivity_error", trans},   {"projection_error", proj},
                     {"mackey_error", mackey}};
  set_verdict(r, trans < tol && proj < tol && mackey < tol, "an induction identity failed");
  return r;
}

CheckResult verify_coboundary_invariance(const TwistedContext& ctx, int count, const VerifyConfig& cfg) {
  CheckResult r = make_result("coboundary", ctx, {});
  const GroupPtr& g = ctx.group;
  const int n = g->order();
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const auto degrees = ctx.degrees();
  const auto flags = ctx.regular.element_flags(*g);
  int degree_mismatch = 0, flag_mismatch = 0;
  for (int t = 0; t < count; ++t) {
    std::vector<cd> zeta(n, cd(1.0));
    for (int x = 1; x < n; ++x) zeta[x] = std::polar(1.0, angle(rng));
    const TwistedAlgebra ap(g, times_coboundary(ctx.algebra.cocycle(), *g, zeta), cfg.tol.cocycle, Exec::Serial);
    const RegularClassData reg = c_regular_classes(ap, cfg.tol.rank, Exec::Serial);
    if (reg.element_flags(*g) != flags) ++flag_mismatch;
    if (sorted_degrees(wedderburn(ap, cfg.seed + 1 + t, cfg.tol)) != degrees) ++degree_mismatch;
  }
  r.lhs = json{{"degrees", degree_mismatch == 0}, {"regular_flags", flag_mismatch == 0}};
  r.rhs = true;
  r.witnesses = json{{"perturbations", count}, {"degree_mismatches", degree_mismatch}, {"flag_mismatches", flag_mismatch}};
  set_verdict(r, degree_mismatch == 0 && flag_mismatch == 0, "a coboundary perturbation changed the invariants");
  return r;
}

std::string_view to_string(CheckKind k) {
  switch (k) {
    case CheckKind::Basic: return "basic";
    case CheckKind::Clifford: return "clifford";
    case CheckKind::ItoMichler: return "ito_michler";
    case CheckKind::RegularSylow: return "regular_sylow";
    case CheckKind::PiTheorem: return "pi_theorem";
    case CheckKind::Decomposition: return "decomposition";
    case CheckKind::Coboundary: return "coboundary";
  }
  return "unknown";
}

std::vector<CheckKind> all_check_kinds() {
  return {CheckKind::Basic,     CheckKind::Clifford,       CheckKind::ItoMichler, CheckKind::RegularSylow,
          CheckKind::PiTheorem, CheckKind::Decomposition, CheckKind::Coboundary};
}

CheckKind check_kind_from_string(std::string_view name) {
  for (CheckKind k : all_check_kinds())
    if (to_string(k) == name) return k;
  throw Error(ErrorCode::InvalidArgument, "unknown check: " + std::string(name));
}

std::vector<CheckResult> run_suite(const std::vector<GroupPtr>& groups, const SuiteConfig& cfg) {
  struct Task {
    GroupPtr group;
    MultiplierPtr multiplier;
    long index;
  };
  std::vector<Task> tasks;
  for (const auto& g : groups) {
    const MultiplierPtr m = multiplier_for(g, cfg.verify.h2_cap);
    for (long k = 0; k < m->size(); ++k) tasks.push_back({g, m, k});
  }
  const auto wants = [&](CheckKind k) { return std::find(cfg.checks.begin(), cfg.checks.end(), k) != cfg.checks.end(); };

  std::vector<std::vector<CheckResult>> out(tasks.size());
  const int threads = cfg.jobs > 0 ? cfg.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    const Task& task = tasks[t];
    const GroupPtr& g = task.group;
    const Coclass c(task.multiplier, task.multiplier->exponents_at(task.index));
    auto& results = out[t];
    const auto failure = [&](std::string name, std::vector<int> primes, const std::exception& e) {
      CheckResult r;
      r.check = std::move(name);
      r.group = g->name();
      r.coclass = c.exponents();
      r.coclass_index = task.index;
      r.cocycle_hash = cocycle_hash(c.representative());
      r.primes = std::move(primes);
      r.verdict = Verdict::Fail;
      r.reason = e.what();
      results.push_back(std::move(r));
    };
    std::optional<TwistedContext> ctx;
    try {
      ctx.emplace(TwistedContext::build(c, cfg.verify));
    } catch (const std::exception& e) {
      failure("context", {}, e);
      continue;
    }
    const auto guarded = [&](std::string name, std::vector<int> primes, auto&& fn) {
      try {
        results.push_back(fn());
      } catch (const std::exception& e) {
        failure(std::move(name), std::move(primes), e);
      }
    };

    std::vector<int> primes = cfg.primes.empty() ? prime_factors(g->order()) : cfg.primes;
    std::erase_if(primes, [&](int p) { return g->order() % p != 0; });
    std::vector<PiSet> pis = cfg.pis.empty() ? prime_subsets(g->order(), cfg.max_pi) : cfg.pis;

    if (wants(CheckKind::Basic)) guarded("basic", {}, [&] { return verify_basic(*ctx, cfg.verify); });
    if (wants(CheckKind::Clifford)) {
      for (const Subgroup& n : normal_subgroups(g)) {
        std::vector<ProjRep> irr;
        try {
          irr = irreducible_reps(algebra_on(n, ctx->algebra.cocycle(), cfg.verify), cfg.verify.seed, cfg.verify.tol);
        } catch (const std::exception& e) {
          failure("clifford", {}, e);
          continue;
        }
        for (const auto& v : irr) guarded("clifford", {}, [&] { return verify_clifford(*ctx, n, v, cfg.verify); });
      }
    }
    for (int p : primes) {
      if (wants(CheckKind::ItoMichler)) guarded("ito_michler", {p}, [&] { return verify_ito_michler(*ctx, p, cfg.verify); });
      if (wants(CheckKind::RegularSylow)) guarded("regular_sylow", {p}, [&] { return verify_regular_sylow(*ctx, p, cfg.verify); });
    }
    for (const PiSet& pi : pis) {
      if (wants(CheckKind::PiTheorem))
        guarded("pi_theorem", pi.primes(), [&] { return verify_pi_theorem(*ctx, pi, cfg.verify); });
      if (wants(CheckKind::Decomposition))
        guarded("decomposition", pi.primes(), [&] { return verify_decomposition(*ctx, pi, cfg.verify); });
    }
    if (wants(CheckKind::Coboundary) && g->order() <= cfg.coboundary_order_cap)
      guarded("coboundary", {}, [&] { return verify_coboundary_invariance(*ctx, cfg.coboundary_perturbations, cfg.verify); });
  }

  std::vector<CheckResult> flat;
  for (auto& v : out)
    for (auto& r : v) flat.push_back(std::move(r));
  return flat;
}

}  // namespace projrep
