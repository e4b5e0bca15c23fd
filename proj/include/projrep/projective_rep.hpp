#pragma once

// Explicit unitary projective representations and the Clifford toolkit.
// Representations are left modules: phi(x) phi(y) = alpha(x,y) phi(xy).

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "projrep/twisted_algebra.hpp"

namespace projrep {

struct ProjRep {
  GroupPtr group;
  UnitCocycle alpha;
  std::vector<Eigen::MatrixXcd> mats;  // one per element

  int degree() const { return mats.empty() ? 0 : static_cast<int>(mats[0].rows()); }
  const Eigen::MatrixXcd& operator()(Elem g) const { return mats[g]; }
};

/// max of the multiplication, unitarity and identity defects.
double rep_residual(const ProjRep& r);
/// Traces at every element.
std::vector<cd> character(const ProjRep& r);
/// Traces at class representatives; throws CrossCheckMismatch if nonzero on a non-regular class.
std::vector<cd> class_character(const ProjRep& r, const RegularClassData& reg, double tol = 1e-6);

ProjRep trivial_rep(const GroupPtr& g);
ProjRep direct_sum(const ProjRep& a, const ProjRep& b);

/// One irreducible per Wedderburn block, in block order.
std::vector<ProjRep> split_regular(const TwistedAlgebra& a, const WedderburnData& w, std::uint64_t seed,
                                   const Tolerances& tol = {});
/// wedderburn + split_regular.
std::vector<ProjRep> irreducible_reps(const TwistedAlgebra& a, std::uint64_t seed, const Tolerances& tol = {});

/// dim Hom(r1, r2) from the character inner product; throws CocycleMismatch.
int intertwiner_dimension(const ProjRep& r1, const ProjRep& r2, double tol = 1e-6);

struct IntertwinerSpace {
  int dimension = 0;
  std::vector<Eigen::MatrixXcd> basis;  // T with T r1(g) = r2(g) T, Frobenius-orthonormal
};
IntertwinerSpace intertwiner_space(const ProjRep& r1, const ProjRep& r2, std::uint64_t seed = 1,
                                   double tol = 1e-6);
bool is_irreducible(const ProjRep& r, double tol = 1e-6);
bool is_isomorphic(const ProjRep& r1, const ProjRep& r2, double tol = 1e-6);

ProjRep restrict_rep(const ProjRep& r, const Subgroup& h);
/// The same matrices on another labelling: element l of `target` is element source_of[l] of r.group.
ProjRep reindex_rep(const ProjRep& r, const GroupPtr& target, const std::vector<Elem>& source_of);
/// Restriction from from.group() to to.group() for subgroups to <= from of a common parent.
ProjRep restrict_between(const ProjRep& r, const Subgroup& from, const Subgroup& to);
ProjRep tensor_reps(const ProjRep& a, const ProjRep& b);

struct Constituent {
  ProjRep rep;
  int multiplicity = 0;
  Eigen::MatrixXcd projector;  // orthogonal projector onto the isotypic component
};
/// Pairwise non-isomorphic irreducible constituents, ordered by degree then character.
std::vector<Constituent> decompose(const ProjRep& r, std::uint64_t seed = 1, const Tolerances& tol = {});

/// y -> alpha_tilde(y, g) r(y^g) on target = g H g^-1; r lives on h.group() and `a` on h.parent().
ProjRep conjugate_rep(const ProjRep& r, const Subgroup& h, Elem g, const TwistedAlgebra& a, const Subgroup& target);
/// Normal case: target = h.
ProjRep conjugate_rep(const ProjRep& r, const Subgroup& n, Elem g, const TwistedAlgebra& a);

/// Elements g of G whose twisted conjugate of r (on normal n) is isomorphic to r.
Subgroup inertia_group(const ProjRep& r, const Subgroup& n, const TwistedAlgebra& a);

struct CliffordExtension {
  Subgroup n, j;
  ProjRep base;           // V on n.group()
  ProjRep y;              // Y on j.group(), with cocycle beta
  UnitCocycle delta;      // res(alpha)|_J / beta, on j.group()
  std::vector<Elem> transversal;  // coset representatives of N in J (parent indices)
  double residual = 0.0;
};
/// Extends V from N to its inertia group J. Throws InertiaMismatch or PhaseInstability.
CliffordExtension clifford_extend(const ProjRep& v, const Subgroup& n, const Subgroup& j, const TwistedAlgebra& a,
                                  std::uint64_t seed = 1, const Tolerances& tol = {});

struct Factorization {
  ProjRep w_on_j;      // W as a projective representation of J (constant on N-cosets)
  Quotient quotient;   // J/N
  ProjRep w;           // W on J/N
  double residual = 0.0;
};
/// X ~ Y (x) W for X over res(alpha)|_J with V a constituent of res X|_N.
Factorization factor_over_extension(const ProjRep& x, const CliffordExtension& ext, std::uint64_t seed = 1,
                                    const Tolerances& tol = {});

/// Induction along a left transversal of minimal coset elements.
ProjRep induce_rep(const ProjRep& r, const Subgroup& h, const TwistedAlgebra& a);

}  // namespace projrep
