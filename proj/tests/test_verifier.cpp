#include <doctest.h>

#include "projrep/catalog.hpp"
#include "projrep/error.hpp"
#include "projrep/verifier.hpp"

using namespace projrep;

namespace {

int count(const std::vector<CheckResult>& rs, Verdict v) {
  int n = 0;
  for (const auto& r : rs) n += r.verdict == v;
  return n;
}

TwistedContext context(const std::string& name, long k) {
  const MultiplierPtr m = multiplier_for(catalog_group(name));
  return TwistedContext::build(Coclass(m, m->exponents_at(k)), {});
}

}  // namespace

TEST_CASE("full suite on small groups has no failures") {
  std::vector<GroupPtr> groups;
  for (const auto& e : catalog())
    if (e.order <= 24) groups.push_back(catalog_group(e.name));
  const auto results = run_suite(groups, SuiteConfig{});
  CHECK(count(results, Verdict::Fail) == 0);
  CHECK(count(results, Verdict::Pass) > 500);
  for (const auto& r : results) {
    CHECK_FALSE(r.cocycle_hash.empty());
    if (r.verdict != Verdict::Pass) CHECK_FALSE(r.reason.empty());
  }
}

TEST_CASE("suite results are independent of the thread count") {
  std::vector<GroupPtr> groups{catalog_group("D4"), catalog_group("A4"), catalog_group("C3xC3")};
  SuiteConfig one;
  one.jobs = 1;
  SuiteConfig two;
  two.jobs = 2;
  const auto a = run_suite(groups, one), b = run_suite(groups, two);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].check == b[i].check);
    CHECK(a[i].group == b[i].group);
    CHECK(a[i].verdict == b[i].verdict);
    CHECK(a[i].witnesses == b[i].witnesses);
  }
}

TEST_CASE("Ito-Michler examples") {
  // S4, p = 3, trivial class: degree 3 exists and the Sylow 3-subgroup is not normal.
  const CheckResult s4 = verify_ito_michler(context("S4", 0), 3, {});
  CHECK(s4.verdict == Verdict::Pass);
  CHECK(s4.lhs == false);
  // A4, p = 3, trivial class: degrees 1,1,1,3 so 3 divides a degree.
  CHECK(verify_ito_michler(context("A4", 0), 3, {}).lhs == false);
  // A4, p = 3, nontrivial class: degrees 2,2,2 and the Sylow 3 is abelian with invariant irreducibles.
  const CheckResult a4 = verify_ito_michler(context("A4", 1), 3, {});
  CHECK(a4.verdict == Verdict::Pass);
  CHECK(a4.lhs == true);
  // C2xC2, p = 2, nontrivial class: restriction to the Sylow is nontrivial.
  const CheckResult v4 = verify_ito_michler(context("C2xC2", 1), 2, {});
  CHECK(v4.verdict == Verdict::Pass);
  CHECK(v4.lhs == false);
  CHECK(verify_ito_michler(context("A5", 0), 2, {}).verdict == Verdict::Inapplicable);
}

TEST_CASE("A5 negative control") {
  const CheckResult r = verify_a5_negative_control({});
  CHECK(r.verdict == Verdict::Pass);
  CHECK(r.witnesses["degrees"] == nlohmann::ordered_json({1, 3, 3, 4, 5}));
}

TEST_CASE("pi theorem and decomposition examples") {
  const auto ctx = context("S4", 1);
  for (const auto& pi : prime_subsets(24, 2)) {
    CAPTURE(pi.to_string());
    CHECK(verify_pi_theorem(ctx, pi, {}).verdict == Verdict::Pass);
    CHECK(verify_decomposition(ctx, pi, {}).verdict == Verdict::Pass);
  }
  for (const auto& v : ctx.irreps) {
    const PiDecomposition d = pi_decompose(ctx, v, PiSet({2}), {});
    CHECK(d.ok);
    CHECK(d.certificate.reconstructs());
    CHECK(d.v_pi.degree() * d.v_pi_prime.degree() * d.certificate.index == v.degree());
  }
  CHECK(verify_pi_theorem(context("A5", 0), PiSet({2}), {}).verdict == Verdict::Inapplicable);
}

TEST_CASE("decomposition along an explicit series") {
  const auto ctx = context("SL(2,3)", 0);
  const NormalSeries s = pi_series(ctx.group, PiSet({3}));
  for (const auto& v : ctx.irreps) {
    const DecompositionCertificate c = decompose_along_series(ctx, v, s, {});
    CHECK(c.reconstructs());
    CHECK(c.residual < 1e-6);
    CHECK(c.index * c.j.order() == ctx.group->order());
    int product = c.index;
    for (const auto& y : c.factors) product *= y.degree();
    CHECK(product == v.degree());
  }
}

TEST_CASE("Clifford checks over every normal subgroup") {
  const auto ctx = context("D4xS3", 3);
  for (const auto& n : normal_subgroups(ctx.group)) {
    const TwistedAlgebra an(n.group(), restrict_unit(ctx.algebra.cocycle(), n));
    for (const auto& v : irreducible_reps(an, 1)) CHECK(verify_clifford(ctx, n, v, {}).verdict == Verdict::Pass);
  }
}

TEST_CASE("induction laws on D4") {
  const GroupPtr g = catalog_group("D4");
  const auto subs = two_generated_subgroups(g);
  const auto c0 = context("D4", 0), c1 = context("D4", 1);
  for (const auto& h : subs)
    for (const auto& k : subs)
      if (h.is_subset_of(k)) {
        CHECK(verify_induction(c1, h, k, k, c0, {}).verdict == Verdict::Pass);
        CHECK(verify_induction(c0, h, k, h, c1, {}).verdict == Verdict::Pass);
      }
  CHECK_THROWS_AS(verify_induction(c0, subs.back(), subs.front(), subs.front(), c0, {}), Error);
}

TEST_CASE("check names round trip") {
  for (CheckKind k : all_check_kinds()) CHECK(check_kind_from_string(to_string(k)) == k);
  CHECK_THROWS_AS(check_kind_from_string("nonsense"), Error);
  CHECK(to_string(Verdict::Inapplicable) == "inapplicable");
}

TEST_CASE("prime subsets") {
  const auto s = prime_subsets(60, 2);
  CHECK(s.size() == 6);
  CHECK(prime_subsets(1, 2).empty());
  CHECK(prime_subsets(8, 2).size() == 1);
}
