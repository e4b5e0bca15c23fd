#pragma once

// The twisted group algebra C^a G over a unit-modulus cocycle table: regular
// actions, c-regular classes, center, and the Wedderburn block structure.

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "projrep/cohomology.hpp"
#include "projrep/kernels.hpp"

namespace projrep {

/// Row-major order x order table of unit complex numbers.
using UnitCocycle = std::vector<cd>;

struct Tolerances {
  double cocycle = 1e-12;      // multiplicative cocycle identity for exact tables
  double numeric_cocycle = 1e-6;  // tables read back from representations
  double cluster_gap = 1e-8;   // relative eigenvalue gap
  double rank = 1e-8;
  double integrality = 1e-6;
  double idempotent = 1e-8;
  double rep = 1e-8;           // representation identities
  double equality = 1e-6;      // character and reconstruction comparisons
};

/// exp(2 pi i a(x,y) / m)
UnitCocycle to_unit(const Cocycle& c);
UnitCocycle restrict_unit(const UnitCocycle& a, const Subgroup& h);
UnitCocycle inflate_unit(const UnitCocycle& b, const GroupPtr& g, const Quotient& q);
/// a * delta(zeta) with delta(zeta)(x,y) = zeta(x) zeta(y) / zeta(xy); zeta(1) must be 1.
UnitCocycle times_coboundary(const UnitCocycle& a, const FiniteGroup& g, const std::vector<cd>& zeta);
UnitCocycle pointwise_product(const UnitCocycle& a, const UnitCocycle& b);
UnitCocycle pointwise_quotient(const UnitCocycle& a, const UnitCocycle& b);
UnitCocycle trivial_unit(int order);

class TwistedAlgebra {
 public:
  /// Validates unit modulus, normalization and the cocycle identity within `tol`.
  TwistedAlgebra(GroupPtr g, UnitCocycle alpha, double tol = Tolerances{}.cocycle, Exec exec = Exec::Parallel);
  static TwistedAlgebra from_cocycle(const Cocycle& c) { return TwistedAlgebra(c.group, to_unit(c)); }

  const GroupPtr& group() const { return g_; }
  int order() const { return g_->order(); }
  const UnitCocycle& cocycle() const { return alpha_; }
  cd alpha(Elem x, Elem y) const { return alpha_[static_cast<std::size_t>(x) * g_->order() + y]; }
  /// a(x,g) / a(g, x^g): x sigma conjugated by g sigma is alpha_tilde(x,g) x^g sigma.
  cd alpha_tilde(Elem x, Elem g) const { return alpha(x, g) * std::conj(alpha(g, g_->conj(x, g))); }
  double defect() const { return defect_; }

  Eigen::VectorXcd unit() const;
  Eigen::VectorXcd basis_vector(Elem g) const;
  Eigen::VectorXcd multiply(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) const;
  /// (g sigma)* = conj(a(g, g^-1)) g^-1 sigma, extended antilinearly.
  Eigen::VectorXcd star(const Eigen::VectorXcd& a) const;
  Eigen::MatrixXcd left(const Eigen::VectorXcd& a, Exec exec = Exec::Parallel) const;
  Eigen::MatrixXcd right(const Eigen::VectorXcd& a, Exec exec = Exec::Parallel) const;

 private:
  GroupPtr g_;
  UnitCocycle alpha_;
  double defect_ = 0.0;
};

struct RegularClassData {
  struct Entry {
    int class_index = 0;
    Elem representative = 0;
    bool regular = false;
    Eigen::VectorXcd sum;  // averaged twisted class sum
  };
  std::vector<Entry> classes;
  int regular_count = 0;

  std::vector<Elem> regular_representatives() const;
  /// Per-element flag, constant on classes.
  std::vector<char> element_flags(const FiniteGroup& g) const;
};

/// Class-sum test cross-checked against the centralizer criterion.
RegularClassData c_regular_classes(const TwistedAlgebra& a, double tol = 1e-8, Exec exec = Exec::Parallel);
/// The nonzero class sums; their number is cross-checked against the null
/// space of [z, g sigma] = 0 over the generators.
std::vector<Eigen::VectorXcd> center_basis(const TwistedAlgebra& a, const RegularClassData& r);
/// Dimension of the centralizer of the generators, from a Hermitian eigen-solve.
int center_dimension_by_commutation(const TwistedAlgebra& a, double tol = 1e-8);

struct WedderburnData {
  std::vector<Eigen::VectorXcd> idempotents;  // central primitive idempotents, canonical order
  std::vector<int> degrees;                   // parallel to idempotents
  std::vector<Eigen::MatrixXcd> block_bases;  // orthonormal basis of the image of each idempotent
  double residual = 0.0;
  std::uint64_t seed = 0;  // seed of the successful attempt
  int attempts = 0;
};

WedderburnData wedderburn(const TwistedAlgebra& a, std::uint64_t seed, const Tolerances& tol = {});
/// Sorted degree multiset.
std::vector<int> sorted_degrees(const WedderburnData& w);

/// True iff the twisted algebra over `alpha` has an irreducible of degree 1.
bool is_trivial_coclass_numeric(const GroupPtr& g, const UnitCocycle& alpha, std::uint64_t seed = 1,
                                const Tolerances& tol = {});

}  // namespace projrep
