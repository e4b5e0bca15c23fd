#include <doctest.h>

#include "projrep/catalog.hpp"
#include "projrep/error.hpp"
#include "projrep/projective_rep.hpp"
#include "projrep/verifier.hpp"

using namespace projrep;

namespace {

std::vector<TwistedContext> contexts(const std::string& name) {
  const MultiplierPtr m = multiplier_for(catalog_group(name));
  std::vector<TwistedContext> out;
  for (long i = 0; i < m->size(); ++i) out.push_back(TwistedContext::build(Coclass(m, m->exponents_at(i)), {}));
  return out;
}

// Independent oracle: <chi, psi> = |G|^-1 sum_g chi(g) conj(psi(g)).
cd inner(const std::vector<cd>& a, const std::vector<cd>& b) {
  cd s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
  return s / static_cast<double>(a.size());
}

}  // namespace

TEST_CASE("irreducible representations are orthonormal and unitary") {
  for (const char* name : {"C2xC2", "D4", "Q8", "A4", "S4", "SL(2,3)", "C3xC3", "Heis27", "C5:C4", "D6"}) {
    for (const auto& ctx : contexts(name)) {
      CAPTURE(name);
      CAPTURE(ctx.coclass.index());
      REQUIRE(ctx.irreps.size() == ctx.wedderburn.degrees.size());
      for (std::size_t i = 0; i < ctx.irreps.size(); ++i) {
        const ProjRep& r = ctx.irreps[i];
        CHECK(rep_residual(r) < 1e-8);
        CHECK(r.degree() == ctx.wedderburn.degrees[i]);
        CHECK(is_irreducible(r));
        const auto ci = character(r);
        for (std::size_t j = 0; j < ctx.irreps.size(); ++j) {
          const cd ip = inner(ci, character(ctx.irreps[j]));
          CHECK(std::abs(ip - cd(i == j ? 1.0 : 0.0)) < 1e-8);
          CHECK(intertwiner_dimension(r, ctx.irreps[j]) == (i == j ? 1 : 0));
        }
        // Characters vanish off the c-regular classes.
        const auto flags = ctx.regular.element_flags(*ctx.group);
        for (Elem g = 0; g < ctx.group->order(); ++g)
          if (!flags[g]) CHECK(std::abs(ci[g]) < 1e-8);
      }
    }
  }
}

TEST_CASE("decompose recovers multiplicities of direct sums") {
  const auto ctxs = contexts("S4");
  const auto& irr = ctxs[1].irreps;
  const ProjRep sum = direct_sum(direct_sum(irr[0], irr[0]), irr[2]);
  const auto parts = decompose(sum);
  REQUIRE(parts.size() == 2);
  int total = 0;
  for (const auto& c : parts) {
    total += c.multiplicity * c.rep.degree();
    CHECK(is_irreducible(c.rep));
    CHECK((c.projector * c.projector - c.projector).norm() < 1e-8);
  }
  CHECK(total == sum.degree());
  CHECK(parts[0].rep.degree() <= parts[1].rep.degree());
}

TEST_CASE("intertwiner spaces") {
  const auto ctxs = contexts("D4");
  const auto& irr = ctxs[0].irreps;
  const ProjRep two = direct_sum(irr.back(), irr.back());
  const IntertwinerSpace s = intertwiner_space(irr.back(), two);
  CHECK(s.dimension == 2);
  CHECK_THROWS_AS(intertwiner_dimension(ctxs[0].irreps[0], ctxs[1].irreps[0]), Error);
  CHECK(is_isomorphic(irr.back(), irr.back()));
}

TEST_CASE("tensor products multiply cocycles and characters") {
  const auto ctxs = contexts("A4");
  const ProjRep& a = ctxs[1].irreps[0];
  const ProjRep& b = ctxs[1].irreps[1];
  const ProjRep t = tensor_reps(a, b);
  CHECK(rep_residual(t) < 1e-8);
  const auto ca = character(a), cb = character(b), ct = character(t);
  for (std::size_t g = 0; g < ct.size(); ++g) CHECK(std::abs(ct[g] - ca[g] * cb[g]) < 1e-8);
  // The product of the nontrivial class with itself is trivial, so a linear constituent appears.
  bool linear = false;
  for (const auto& c : decompose(t)) linear = linear || c.rep.degree() == 1;
  CHECK(linear);
}

TEST_CASE("induction and restriction satisfy Frobenius reciprocity") {
  for (const char* name : {"S4", "D6", "C2xA4"}) {
    const auto ctxs = contexts(name);
    for (const auto& ctx : ctxs) {
      for (const auto& h : two_generated_subgroups(ctx.group)) {
        if (h.is_trivial() || h.is_whole()) continue;
        CAPTURE(name);
        CAPTURE(h.order());
        const TwistedAlgebra ah(h.group(), restrict_unit(ctx.algebra.cocycle(), h));
        for (const auto& u : irreducible_reps(ah, 1)) {
          const ProjRep ind = induce_rep(u, h, ctx.algebra);
          CHECK(ind.degree() == u.degree() * ctx.group->order() / h.order());
          CHECK(rep_residual(ind) < 1e-8);
          for (const auto& v : ctx.irreps)
            CHECK(intertwiner_dimension(ind, v) == intertwiner_dimension(u, restrict_rep(v, h)));
        }
      }
    }
  }
}

TEST_CASE("Clifford extension and factorization round trip") {
  for (const char* name : {"S4", "D4", "SL(2,3)", "C2xA4", "S3xS3"}) {
    for (const auto& ctx : contexts(name)) {
      for (const auto& n : normal_subgroups(ctx.group)) {
        if (n.is_trivial()) continue;
        CAPTURE(name);
        CAPTURE(n.order());
        CAPTURE(ctx.coclass.index());
        const TwistedAlgebra an(n.group(), restrict_unit(ctx.algebra.cocycle(), n));
        for (const auto& v : irreducible_reps(an, 1)) {
          const Subgroup j = inertia_group(v, n, ctx.algebra);
          CHECK(n.is_subset_of(j));
          for (Elem g : j.elements()) CHECK(is_isomorphic(conjugate_rep(v, n, g, ctx.algebra), v));
          const CliffordExtension ext = clifford_extend(v, n, j, ctx.algebra);
          CHECK(ext.residual < 1e-6);
          CHECK(ext.y.degree() == v.degree());
          CHECK(is_isomorphic(restrict_between(ext.y, j, n), v));
          // Every irreducible of G over V is induced from J: degrees |G:J| * dim X.
          const TwistedAlgebra aj(j.group(), restrict_unit(ctx.algebra.cocycle(), j));
          for (const auto& x : irreducible_reps(aj, 1)) {
            const ProjRep res = restrict_between(x, j, n);
            if (intertwiner_dimension(res, v) == 0) continue;
            const Factorization f = factor_over_extension(x, ext);
            CHECK(f.residual < 1e-6);
            CHECK(f.w.degree() * v.degree() == x.degree());
            CHECK(is_irreducible(induce_rep(x, j, ctx.algebra)));
          }
        }
      }
    }
  }
}
