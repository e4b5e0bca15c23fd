#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "projrep/catalog.hpp"
#include "projrep/cohomology.hpp"
#include "projrep/error.hpp"
#include "projrep/twisted_algebra.hpp"
#include "projrep/verifier.hpp"

using namespace projrep;

namespace {

// Multipliers of the catalog groups up to order 48. Products follow the
// Kunneth rule M(AxB) = M(A) x M(B) x (A_ab (x) B_ab); the rest are standard.
const std::map<std::string, std::vector<int>>& known_multipliers() {
  static const std::map<std::string, std::vector<int>> m{
      {"C1", {}},          {"C2", {}},         {"C6", {}},          {"C24", {}},        {"C2xC2", {2}},
      {"C2xC4", {2}},      {"C2xC2xC2", {2, 2, 2}}, {"C3xC3", {3}}, {"C4xC4", {4}},     {"S3", {}},
      {"D3", {}},          {"D4", {2}},        {"D5", {}},          {"D6", {2}},        {"D7", {}},
      {"D8", {2}},         {"D9", {}},         {"D10", {2}},        {"D11", {}},        {"D12", {2}},
      {"Q8", {}},          {"Q16", {}},        {"A4", {2}},         {"S4", {2}},        {"SL(2,3)", {}},
      {"C9:C3", {}},       {"Heis27", {3, 3}}, {"C5:C4", {}},       {"C7:C3", {}},      {"C2xD4", {2, 2, 2}},
      {"C2xQ8", {2, 2}},   {"C3xS3", {}},      {"C2xA4", {2}},      {"C3xA4", {6}},     {"S3xS3", {2}},
      {"C2xS4", {2, 2}},   {"C2xSL(2,3)", {}}, {"D4xS3", {2, 2, 2}},
  };
  return m;
}

Cochain1 random_cochain(const GroupPtr& g, int modulus, std::mt19937& rng) {
  Cochain1 z{g, modulus, std::vector<int>(g->order(), 0)};
  for (int x = 1; x < g->order(); ++x) z.values[x] = static_cast<int>(rng() % modulus);
  return z;
}

}  // namespace

TEST_CASE("exact multipliers match known values") {
  for (const auto& [name, inv] : known_multipliers()) {
    CAPTURE(name);
    const MultiplierPtr m = SchurMultiplier::compute(catalog_group(name));
    CHECK(m->is_exact());
    CHECK(m->invariants() == inv);
    long size = 1;
    for (int d : inv) size *= d;
    CHECK(m->size() == size);
  }
}

TEST_CASE("multiplier examples and caps") {
  CHECK(multiplier_for(catalog_group("C6"))->invariants().empty());
  CHECK(multiplier_for(catalog_group("C2xC2"))->invariants() == std::vector<int>{2});
  const MultiplierPtr a5 = multiplier_for(catalog_group("A5"));
  CHECK_FALSE(a5->is_exact());
  CHECK(a5->invariants() == std::vector<int>{2});
  CHECK(multiplier_for(catalog_group("SL(2,5)"))->invariants().empty());
  const MultiplierPtr big = multiplier_for(catalog_group("S4xS3"));
  CHECK_FALSE(big->is_known());
  CHECK(big->size() == 1);
  CHECK_THROWS_AS(SchurMultiplier::compute(catalog_group("S4xS3")), Error);
}

TEST_CASE("exact A5 multiplier agrees with the declared one") {
  const GroupPtr a5 = catalog_group("A5");
  const MultiplierPtr exact = SchurMultiplier::compute(a5, 0, 60);
  const MultiplierPtr declared = multiplier_for(a5);
  CHECK(exact->invariants() == std::vector<int>{2});
  CHECK(declared->resolve(exact->basis()[0]) == std::vector<int>{1});
  CHECK(exact->resolve(declared->basis()[0]) == std::vector<int>{1});
  CHECK(declared->resolve(Cocycle::trivial(a5, 2)) == std::vector<int>{0});
}

TEST_CASE("representatives are normalized cocycles and resolve to their exponents") {
  std::mt19937 rng(3);
  for (const auto& [name, inv] : known_multipliers()) {
    CAPTURE(name);
    const MultiplierPtr m = SchurMultiplier::compute(catalog_group(name));
    for (long i = 0; i < m->size(); ++i) {
      const auto e = m->exponents_at(i);
      CHECK(m->index_of(e) == i);
      const Cocycle c = m->representative(e);
      CHECK(is_normalized(c));
      CHECK(is_cocycle(c));
      CHECK(m->resolve(c) == e);
      // Perturbing by a coboundary keeps the class.
      const Cocycle d = add_cocycles(c, coboundary(random_cochain(c.group, c.modulus, rng)));
      CHECK(m->resolve(d) == e);
    }
  }
}

TEST_CASE("coclass group law") {
  for (const char* name : {"C2xC2xC2", "Heis27", "C3xA4", "C4xC4", "D4xS3"}) {
    CAPTURE(name);
    const MultiplierPtr m = SchurMultiplier::compute(catalog_group(name));
    for (long i = 0; i < m->size(); ++i)
      for (long j = 0; j < m->size(); ++j) {
        const Coclass a(m, m->exponents_at(i)), b(m, m->exponents_at(j));
        const Cocycle sum = add_cocycles(a.representative(), b.representative());
        CHECK(Coclass::of(m, sum) == a * b);
      }
    for (long i = 0; i < m->size(); ++i) {
      const Coclass a(m, m->exponents_at(i));
      CHECK(a.pow(a.order()).is_trivial());
      CHECK(m->exponent() % a.order() == 0);
      for (int p : prime_factors(catalog_group(name)->order())) {
        const auto [cp, cq] = pi_part(a, PiSet({p}));
        CHECK(cp * cq == a);
        CHECK(cp.order() == PiSet({p}).pi_part(a.order()));
        CHECK(std::gcd(cq.order(), p) == 1);
      }
    }
  }
}

TEST_CASE("central extensions give the expected classes") {
  // Covers of A4, C2xC2 and A5 against a split extension.
  for (auto [name, nontrivial] :
       {std::pair{"SL(2,3)", true}, {"Q8", true}, {"D4", true}, {"SL(2,5)", true}, {"C2xC2xC2", false}}) {
    CAPTURE(name);
    const GroupPtr e = catalog_group(name);
    Subgroup z = Subgroup::trivial(e);
    for (const auto& cls : e->classes())
      if (cls.members.size() == 1 && e->element_order(cls.representative) == 2)
        z = Subgroup::generated(e, std::vector<Elem>{cls.representative});
    REQUIRE(z.order() == 2);
    const ExtensionCocycle ext = cocycle_from_extension(e, z);
    CHECK(is_cocycle(ext.cocycle));
    const MultiplierPtr m = SchurMultiplier::compute(ext.quotient.group, 0, 60);
    CHECK(Coclass::of(m, ext.cocycle).is_trivial() != nontrivial);
  }
}

TEST_CASE("restriction and inflation") {
  const GroupPtr d4 = catalog_group("D4");
  const MultiplierPtr m = SchurMultiplier::compute(d4);
  const Coclass c(m, {1});
  CHECK(restrict_coclass(c, Subgroup::whole(d4)) == c);
  for (const auto& h : two_generated_subgroups(d4)) {
    bool cyclic = false;
    for (Elem x : h.elements()) cyclic = cyclic || d4->element_order(x) == h.order();
    // Cyclic groups have trivial multiplier.
    if (cyclic) CHECK(restrict_coclass(c, h).is_trivial());
  }
  const auto central_involution = [](const GroupPtr& g) {
    for (const auto& cls : g->classes())
      if (cls.members.size() == 1 && cls.representative != 0)
        return Subgroup::generated(g, std::vector<Elem>{cls.representative});
    return Subgroup::trivial(g);
  };
  // Z(D4) lies in the derived subgroup, so inflation from D4/Z kills the nontrivial class.
  {
    const Quotient q = quotient_group(d4, central_involution(d4));
    const MultiplierPtr mq = SchurMultiplier::compute(q.group);
    REQUIRE(mq->size() == 2);
    CHECK(inflate_coclass(Coclass(mq, {1}), m, q).is_trivial());
  }
  // A direct factor meets the derived subgroup trivially, so inflation is injective.
  {
    const GroupPtr e = catalog_group("C2xC2xC2");
    const MultiplierPtr me = SchurMultiplier::compute(e);
    const Subgroup n = Subgroup::generated(e, std::vector<Elem>{1});
    const Quotient q = quotient_group(e, n);
    const MultiplierPtr mq = SchurMultiplier::compute(q.group);
    REQUIRE(mq->size() == 2);
    const Coclass inflated = inflate_coclass(Coclass(mq, {1}), me, q);
    CHECK_FALSE(inflated.is_trivial());
    CHECK(restrict_coclass(inflated, n).is_trivial());
  }
}

TEST_CASE("cocycle hashes are stable and discriminating") {
  const MultiplierPtr m = SchurMultiplier::compute(catalog_group("C2xC2xC2"));
  std::set<std::string> hashes;
  for (long i = 0; i < m->size(); ++i) {
    const Cocycle c = m->representative(m->exponents_at(i));
    const std::string h = cocycle_hash(c);
    CHECK(h.size() == 16);
    CHECK(h == cocycle_hash(m->representative(m->exponents_at(i))));
    hashes.insert(h);
  }
  CHECK(hashes.size() == static_cast<std::size_t>(m->size()));
}

TEST_CASE("malformed cocycles are rejected") {
  const GroupPtr g = catalog_group("C2xC2");
  Cocycle bad{g, 2, std::vector<int>(3, 0)};
  CHECK_THROWS_AS(is_cocycle(bad), Error);
  Cocycle not_cocycle = Cocycle::trivial(g, 2);
  not_cocycle.at(1, 1) = 1;
  not_cocycle.at(1, 2) = 1;
  CHECK(is_normalized(not_cocycle));
  CHECK_FALSE(is_cocycle(not_cocycle));
}
