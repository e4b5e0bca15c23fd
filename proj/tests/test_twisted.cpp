#include <doctest.h>

#include <random>

#include "projrep/catalog.hpp"
#include "projrep/error.hpp"
#include "projrep/kernels.hpp"
#include "projrep/twisted_algebra.hpp"
#include "projrep/verifier.hpp"

using namespace projrep;

namespace {

Eigen::VectorXcd random_element(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v[i] = cd(nd(rng), nd(rng));
  return v;
}

std::vector<TwistedAlgebra> algebras(const std::string& name) {
  const MultiplierPtr m = multiplier_for(catalog_group(name));
  std::vector<TwistedAlgebra> out;
  for (long i = 0; i < m->size(); ++i) out.push_back(TwistedAlgebra::from_cocycle(m->representative(m->exponents_at(i))));
  return out;
}

// Independent oracle: x is c-regular iff a(x,g) = a(g,x) for every g commuting with x.
int regular_by_centralizer(const TwistedAlgebra& a) {
  const FiniteGroup& G = *a.group();
  int count = 0;
  for (const auto& cls : G.classes()) {
    const Elem x = cls.representative;
    bool ok = true;
    for (Elem g = 0; g < G.order() && ok; ++g)
      if (G.mul(x, g) == G.mul(g, x)) ok = std::abs(a.alpha(x, g) - a.alpha(g, x)) < 1e-9;
    count += ok;
  }
  return count;
}

}  // namespace

TEST_CASE("twisted algebra is associative with unit and star") {
  std::mt19937_64 rng(5);
  for (const char* name : {"C2xC2", "D4", "Q8", "A4", "C3xC3", "Heis27"}) {
    for (const auto& a : algebras(name)) {
      CAPTURE(name);
      const int n = a.order();
      const auto x = random_element(n, rng), y = random_element(n, rng), z = random_element(n, rng);
      CHECK((a.multiply(a.multiply(x, y), z) - a.multiply(x, a.multiply(y, z))).norm() < 1e-9);
      CHECK((a.multiply(a.unit(), x) - x).norm() < 1e-12);
      CHECK((a.multiply(x, a.unit()) - x).norm() < 1e-12);
      CHECK((a.star(a.multiply(x, y)) - a.multiply(a.star(y), a.star(x))).norm() < 1e-9);
      CHECK((a.left(x) * y - a.multiply(x, y)).norm() < 1e-9);
      CHECK((a.right(y) * x - a.multiply(x, y)).norm() < 1e-9);
      CHECK(a.defect() < 1e-12);
    }
  }
}

TEST_CASE("degree formula and regular classes across the catalog") {
  for (const auto& e : catalog()) {
    if (e.order > 48) continue;
    CAPTURE(e.name);
    for (const auto& a : algebras(e.name)) {
      const RegularClassData reg = c_regular_classes(a);
      CHECK(reg.regular_count == regular_by_centralizer(a));
      CHECK(center_dimension_by_commutation(a) == reg.regular_count);
      CHECK(static_cast<int>(center_basis(a, reg).size()) == reg.regular_count);
      const WedderburnData w = wedderburn(a, 1);
      long sum = 0;
      for (int d : w.degrees) sum += static_cast<long>(d) * d;
      CHECK(sum == a.order());
      CHECK(static_cast<int>(w.degrees.size()) == reg.regular_count);
      CHECK(w.residual < 1e-8);
      // Central primitive idempotents are orthogonal and sum to 1.
      Eigen::VectorXcd total = Eigen::VectorXcd::Zero(a.order());
      for (std::size_t i = 0; i < w.idempotents.size(); ++i) {
        total += w.idempotents[i];
        for (std::size_t j = 0; j < w.idempotents.size(); ++j) {
          const Eigen::VectorXcd p = a.multiply(w.idempotents[i], w.idempotents[j]);
          CHECK((p - (i == j ? w.idempotents[i] : Eigen::VectorXcd::Zero(a.order()))).norm() < 1e-8);
        }
      }
      CHECK((total - a.unit()).norm() < 1e-8);
    }
  }
}

TEST_CASE("twisted degrees of selected groups") {
  const auto degrees = [](const std::string& name, long k) {
    const MultiplierPtr m = multiplier_for(catalog_group(name));
    return sorted_degrees(wedderburn(TwistedAlgebra::from_cocycle(m->representative(m->exponents_at(k))), 1));
  };
  CHECK(degrees("C2xC2", 1) == std::vector<int>{2});
  CHECK(degrees("D4", 1) == std::vector<int>{2, 2});
  CHECK(degrees("A4", 1) == std::vector<int>{2, 2, 2});
  CHECK(degrees("S4", 1) == std::vector<int>{2, 2, 4});
  CHECK(degrees("C3xC3", 1) == std::vector<int>{3});
  CHECK(degrees("C3xC3", 2) == std::vector<int>{3});
  CHECK(degrees("A5", 0) == std::vector<int>{1, 3, 3, 4, 5});
  CHECK(degrees("A5", 1) == std::vector<int>{2, 2, 4, 6});
  CHECK(degrees("SL(2,3)", 0) == std::vector<int>{1, 1, 1, 2, 2, 2, 3});
}

TEST_CASE("trivial coclass detection") {
  const MultiplierPtr m = multiplier_for(catalog_group("D4"));
  CHECK(is_trivial_coclass_numeric(m->group(), to_unit(m->representative({0}))));
  CHECK_FALSE(is_trivial_coclass_numeric(m->group(), to_unit(m->representative({1}))));
}

TEST_CASE("invalid unit cocycles are rejected") {
  const GroupPtr g = catalog_group("C2xC2");
  UnitCocycle a = trivial_unit(4);
  a[5] = cd(0.0, 1.0);
  CHECK_THROWS_AS(TwistedAlgebra(g, a), Error);
  UnitCocycle b = trivial_unit(4);
  b[5] = cd(2.0, 0.0);
  CHECK_THROWS_AS(TwistedAlgebra(g, b), Error);
}

TEST_CASE("serial and parallel kernels agree exactly") {
  std::mt19937_64 rng(11);
  for (const auto& e : catalog()) {
    if (e.order > 60) continue;
    CAPTURE(e.name);
    for (const auto& a : algebras(e.name)) {
      const FiniteGroup& G = *a.group();
      CHECK(cocycle_defect(G, a.cocycle(), Exec::Serial) == cocycle_defect(G, a.cocycle(), Exec::Parallel));
      const auto s = twisted_class_sums(G, a.cocycle(), Exec::Serial);
      const auto p = twisted_class_sums(G, a.cocycle(), Exec::Parallel);
      REQUIRE(s.size() == p.size());
      for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == p[i]);
      const auto x = random_element(G.order(), rng);
      CHECK(left_action(G, a.cocycle(), x, Exec::Serial) == left_action(G, a.cocycle(), x, Exec::Parallel));
      CHECK(right_action(G, a.cocycle(), x, Exec::Serial) == right_action(G, a.cocycle(), x, Exec::Parallel));
    }
  }
  CHECK(kernel_threads() >= 1);
}

TEST_CASE("coboundary perturbations leave the structure unchanged") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  for (const char* name : {"D4", "A4", "C3xC3", "Q8"}) {
    for (const auto& a : algebras(name)) {
      const FiniteGroup& G = *a.group();
      std::vector<cd> zeta(G.order(), cd(1.0));
      for (int x = 1; x < G.order(); ++x) zeta[x] = std::polar(1.0, angle(rng));
      const TwistedAlgebra b(a.group(), times_coboundary(a.cocycle(), G, zeta));
      CHECK(c_regular_classes(b).element_flags(G) == c_regular_classes(a).element_flags(G));
      CHECK(sorted_degrees(wedderburn(b, 3)) == sorted_degrees(wedderburn(a, 1)));
    }
  }
}
