#pragma once

// Hot loops of the twisted-algebra engine, each in a serial reference form and
// an OpenMP form. Both produce identical results (same summation order per
// output entry).

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "projrep/group.hpp"

namespace projrep {

using cd = std::complex<double>;

enum class Exec { Serial, Parallel };

/// max |a(x,y) a(xy,z) - a(y,z) a(x,yz)| over all triples.
double cocycle_defect(const FiniteGroup& g, const std::vector<cd>& alpha, Exec exec);

/// Averaged twisted class sums |G_x|^-1 sum_g at(x,g) e_{x^g}, one per class.
std::vector<Eigen::VectorXcd> twisted_class_sums(const FiniteGroup& g, const std::vector<cd>& alpha, Exec exec);

/// Matrix of left multiplication by the algebra element with coefficients `a`.
Eigen::MatrixXcd left_action(const FiniteGroup& g, const std::vector<cd>& alpha, const Eigen::VectorXcd& a,
                             Exec exec);
/// Matrix of right multiplication by `a`.
Eigen::MatrixXcd right_action(const FiniteGroup& g, const std::vector<cd>& alpha, const Eigen::VectorXcd& a,
                              Exec exec);

/// Number of OpenMP threads available to the parallel kernels.
int kernel_threads();

}  // namespace projrep
