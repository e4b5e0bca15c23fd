#include "projrep/kernels.hpp"

#include <omp.h>

#include <algorithm>

namespace projrep {

namespace {

inline cd at(const std::vector<cd>& a, int n, Elem x, Elem y) { return a[static_cast<std::size_t>(x) * n + y]; }

double defect_row(const FiniteGroup& g, const std::vector<cd>& a, Elem x) {
  const int n = g.order();
  double worst = 0.0;
  for (Elem y = 0; y < n; ++y) {
    const Elem xy = g.mul(x, y);
    const cd axy = at(a, n, x, y);
    for (Elem z = 0; z < n; ++z) {
      const cd d = axy * at(a, n, xy, z) - at(a, n, y, z) * at(a, n, x, g.mul(y, z));
      worst = std::max(worst, std::abs(d));
    }
  }
  return worst;
}

Eigen::VectorXcd class_sum(const FiniteGroup& g, const std::vector<cd>& a, const ConjClass& c) {
  const int n = g.order();
  const Elem x = c.representative;
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
  for (Elem h = 0; h < n; ++h) {
    const Elem xh = g.conj(x, h);
    v[xh] += at(a, n, x, h) * std::conj(at(a, n, h, xh));
  }
  return v / static_cast<double>(c.centralizer_order);
}

}  // namespace

int kernel_threads() { return omp_get_max_threads(); }

double cocycle_defect(const FiniteGroup& g, const std::vector<cd>& alpha, Exec exec) {
  const int n = g.order();
  std::vector<double> rows(n, 0.0);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int x = 0; x < n; ++x) rows[x] = defect_row(g, alpha, x);
  } else {
    for (int x = 0; x < n; ++x) rows[x] = defect_row(g, alpha, x);
  }
  return rows.empty() ? 0.0 : *std::max_element(rows.begin(), rows.end());
}

std::vector<Eigen::VectorXcd> twisted_class_sums(const FiniteGroup& g, const std::vector<cd>& alpha, Exec exec) {
  const auto& classes = g.classes();
  const int k = static_cast<int>(classes.size());
  std::vector<Eigen::VectorXcd> out(k);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < k; ++i) out[i] = class_sum(g, alpha, classes[i]);
  } else {
    for (int i = 0; i < k; ++i) out[i] = class_sum(g, alpha, classes[i]);
  }
  return out;
}

// Column k of the left action is a * (k sigma) = sum_g a_g alpha(g,k) (gk)sigma.
Eigen::MatrixXcd left_action(const FiniteGroup& g, const std::vector<cd>& alpha, const Eigen::VectorXcd& a,
                             Exec exec) {
  const int n = g.order();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  auto column = [&](int k) {
    for (Elem h = 0; h < n; ++h)
      if (a[h] != cd(0.0)) m(g.mul(h, k), k) += a[h] * at(alpha, n, h, k);
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (int k = 0; k < n; ++k) column(k);
  } else {
    for (int k = 0; k < n; ++k) column(k);
  }
  return m;
}

// Column k of the right action is (k sigma) * a = sum_g a_g alpha(k,g) (kg)sigma.
Eigen::MatrixXcd right_action(const FiniteGroup& g, const std::vector<cd>& alpha, const Eigen::VectorXcd& a,
                              Exec exec) {
  const int n = g.order();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  auto column = [&](int k) {
    for (Elem h = 0; h < n; ++h)
      if (a[h] != cd(0.0)) m(g.mul(k, h), k) += a[h] * at(alpha, n, k, h);
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (int k = 0; k < n; ++k) column(k);
  } else {
    for (int k = 0; k < n; ++k) column(k);
  }
  return m;
}

}  // namespace projrep
