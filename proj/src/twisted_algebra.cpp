#include "projrep/twisted_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "projrep/error.hpp"

namespace projrep {

UnitCocycle to_unit(const Cocycle& c) {
  UnitCocycle u(c.table.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (c.table[i] == 0) {
      u[i] = 1.0;
      continue;
    }
    const double t = 2.0 * std::numbers::pi * c.table[i] / c.modulus;
    u[i] = cd(std::cos(t), std::sin(t));
  }
  return u;
}

UnitCocycle restrict_unit(const UnitCocycle& a, const Subgroup& h) {
  const int n = h.parent()->order(), m = h.order();
  UnitCocycle out(static_cast<std::size_t>(m) * m);
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y)
      out[static_cast<std::size_t>(x) * m + y] = a[static_cast<std::size_t>(h.to_parent(x)) * n + h.to_parent(y)];
  return out;
}

UnitCocycle inflate_unit(const UnitCocycle& b, const GroupPtr& g, const Quotient& q) {
  const int n = g->order(), m = q.group->order();
  UnitCocycle out(static_cast<std::size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      out[static_cast<std::size_t>(x) * n + y] = b[static_cast<std::size_t>(q.projection[x]) * m + q.projection[y]];
  return out;
}

UnitCocycle times_coboundary(const UnitCocycle& a, const FiniteGroup& g, const std::vector<cd>& zeta) {
  const int n = g.order();
  UnitCocycle out(a.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const std::size_t i = static_cast<std::size_t>(x) * n + y;
      out[i] = a[i] * zeta[x] * zeta[y] / zeta[g.mul(x, y)];
    }
  return out;
}

UnitCocycle pointwise_product(const UnitCocycle& a, const UnitCocycle& b) {
  UnitCocycle out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

UnitCocycle pointwise_quotient(const UnitCocycle& a, const UnitCocycle& b) {
  UnitCocycle out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] / b[i];
  return out;
}

UnitCocycle trivial_unit(int order) { return UnitCocycle(static_cast<std::size_t>(order) * order, cd(1.0)); }

// ---------------------------------------------------------------------------

TwistedAlgebra::TwistedAlgebra(GroupPtr g, UnitCocycle table, double tol, Exec exec)
    : g_(std::move(g)), alpha_(std::move(table)) {
  const int n = g_->order();
  if (alpha_.size() != static_cast<std::size_t>(n) * n)
    throw Error(ErrorCode::ModulusMismatch, "cocycle table shape does not match the group");
  for (Elem x = 0; x < n; ++x) {
    if (std::abs(alpha(0, x) - 1.0) > tol || std::abs(alpha(x, 0) - 1.0) > tol)
      throw Error(ErrorCode::InvalidArgument, "cocycle is not normalized");
    for (Elem y = 0; y < n; ++y)
      if (std::abs(std::abs(alpha(x, y)) - 1.0) > tol)
        throw Error(ErrorCode::InvalidArgument, "cocycle value is not of unit modulus");
  }
  defect_ = cocycle_defect(*g_, alpha_, exec);
  if (defect_ > tol)
    throw Error(ErrorCode::InvalidArgument, "cocycle identity fails (defect " + std::to_string(defect_) + ")");
}

Eigen::VectorXcd TwistedAlgebra::unit() const { return basis_vector(0); }

Eigen::VectorXcd TwistedAlgebra::basis_vector(Elem g) const {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(order());
  v[g] = 1.0;
  return v;
}

Eigen::VectorXcd TwistedAlgebra::multiply(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) const {
  const int n = order();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
  for (Elem x = 0; x < n; ++x) {
    if (a[x] == cd(0.0)) continue;
    for (Elem y = 0; y < n; ++y)
      if (b[y] != cd(0.0)) out[g_->mul(x, y)] += a[x] * b[y] * alpha(x, y);
  }
  return out;
}

Eigen::VectorXcd TwistedAlgebra::star(const Eigen::VectorXcd& a) const {
  const int n = order();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
  for (Elem x = 0; x < n; ++x) {
    const Elem xi = g_->inv(x);
    out[xi] += std::conj(a[x]) * std::conj(alpha(x, xi));
  }
  return out;
}

Eigen::MatrixXcd TwistedAlgebra::left(const Eigen::VectorXcd& a, Exec exec) const {
  return left_action(*g_, alpha_, a, exec);
}

Eigen::MatrixXcd TwistedAlgebra::right(const Eigen::VectorXcd& a, Exec exec) const {
  return right_action(*g_, alpha_, a, exec);
}

// ---------------------------------------------------------------------------

std::vector<Elem> RegularClassData::regular_representatives() const {
  std::vector<Elem> out;
  for (const auto& e : classes)
    if (e.regular) out.push_back(e.representative);
  return out;
}

std::vector<char> RegularClassData::element_flags(const FiniteGroup& g) const {
  std::vector<char> f(g.order(), 0);
  for (const auto& e : classes)
    for (Elem x : g.classes()[e.class_index].members) f[x] = e.regular;
  return f;
}

RegularClassData c_regular_classes(const TwistedAlgebra& a, double tol, Exec exec) {
  const FiniteGroup& g = *a.group();
  const std::vector<Eigen::VectorXcd> sums = twisted_class_sums(g, a.cocycle(), exec);
  RegularClassData out;
  for (int i = 0; i < static_cast<int>(g.classes().size()); ++i) {
    const ConjClass& c = g.classes()[i];
    RegularClassData::Entry e;
    e.class_index = i;
    e.representative = c.representative;
    e.sum = sums[i];
    e.regular = e.sum.cwiseAbs().maxCoeff() > tol;
    // Centralizer criterion: alpha_tilde(x, h) = 1 for all h commuting with x.
    bool fixed = true;
    for (Elem h = 0; h < g.order() && fixed; ++h)
      if (g.mul(c.representative, h) == g.mul(h, c.representative))
        fixed = std::abs(a.alpha_tilde(c.representative, h) - 1.0) < 1e-6;
    if (fixed != e.regular)
      throw Error(ErrorCode::CrossCheckMismatch, "class-sum and centralizer regularity tests disagree");
    out.regular_count += e.regular;
    out.classes.push_back(std::move(e));
  }
  if (!out.classes.front().regular) throw Error(ErrorCode::CrossCheckMismatch, "identity class is not regular");
  return out;
}

int center_dimension_by_commutation(const TwistedAlgebra& a, double tol) {
  const int n = a.order();
  if (n == 1) return 1;
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(n, n);
  for (Elem s : a.group()->generators()) {
    const Eigen::VectorXcd e = a.basis_vector(s);
    const Eigen::MatrixXcd d = a.left(e) - a.right(e);
    gram.noalias() += d.adjoint() * d;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  int dim = 0;
  for (int i = 0; i < n; ++i) dim += es.eigenvalues()[i] < tol * scale;
  return dim;
}

std::vector<Eigen::VectorXcd> center_basis(const TwistedAlgebra& a, const RegularClassData& r) {
  std::vector<Eigen::VectorXcd> out;
  for (const auto& e : r.classes)
    if (e.regular) out.push_back(e.sum);
  const int dim = center_dimension_by_commutation(a);
  if (dim != static_cast<int>(out.size()))
    throw Error(ErrorCode::CrossCheckMismatch, "center dimension " + std::to_string(dim) + " but " +
                                                   std::to_string(out.size()) + " regular classes");
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Lexicographic order on rounded complex coordinates.
bool rounded_less(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b, const std::vector<Elem>& at) {
  for (Elem x : at) {
    const long ar = std::lround(a[x].real() * 1e6), br = std::lround(b[x].real() * 1e6);
    if (ar != br) return ar < br;
    const long ai = std::lround(a[x].imag() * 1e6), bi = std::lround(b[x].imag() * 1e6);
    if (ai != bi) return ai < bi;
  }
  return false;
}

}  // namespace

WedderburnData wedderburn(const TwistedAlgebra& a, std::uint64_t seed, const Tolerances& tol) {
  const int n = a.order();
  const RegularClassData reg = c_regular_classes(a);
  const std::vector<Eigen::VectorXcd> center = center_basis(a, reg);
  const int r = static_cast<int>(center.size());
  std::vector<Elem> reps;
  for (const auto& c : a.group()->classes()) reps.push_back(c.representative);

  constexpr int kAttempts = 5;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt) * 0x9E3779B97F4A7C15ULL;
    std::mt19937_64 rng(s);
    std::normal_distribution<double> nd;
    Eigen::VectorXcd z = Eigen::VectorXcd::Zero(n);
    for (const auto& b : center) z += cd(nd(rng), nd(rng)) * b;
    z += a.star(z);
    const Eigen::MatrixXcd lz = a.left(z);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(lz);
    if (es.info() != Eigen::Success) continue;
    const Eigen::VectorXd& ev = es.eigenvalues();
    const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());

    std::vector<std::pair<int, int>> clusters;  // [begin, end)
    int begin = 0;
    for (int i = 1; i <= n; ++i)
      if (i == n || ev[i] - ev[i - 1] > tol.cluster_gap * scale) {
        clusters.emplace_back(begin, i);
        begin = i;
      }
    if (static_cast<int>(clusters.size()) != r) continue;

    WedderburnData w;
    w.seed = s;
    w.attempts = attempt + 1;
    std::vector<int> order(r);
    for (int i = 0; i < r; ++i) {
      const auto [b, e] = clusters[i];
      const Eigen::MatrixXcd V = es.eigenvectors().middleCols(b, e - b);
      w.block_bases.push_back(V);
      w.idempotents.push_back(V * V.row(0).adjoint());
      const double root = std::sqrt(static_cast<double>(e - b));
      const int d = static_cast<int>(std::lround(root));
      if (std::abs(root - d) > tol.integrality)
        throw Error(ErrorCode::DegreeNotIntegral, "block of dimension " + std::to_string(e - b));
      w.degrees.push_back(d);
      order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      if (w.degrees[x] != w.degrees[y]) return w.degrees[x] < w.degrees[y];
      return rounded_less(w.idempotents[x], w.idempotents[y], reps);
    });
    WedderburnData sorted;
    sorted.seed = w.seed;
    sorted.attempts = w.attempts;
    for (int i : order) {
      sorted.idempotents.push_back(w.idempotents[i]);
      sorted.degrees.push_back(w.degrees[i]);
      sorted.block_bases.push_back(std::move(w.block_bases[i]));
    }

    long sq = 0;
    for (int d : sorted.degrees) sq += static_cast<long>(d) * d;
    if (sq != n) throw Error(ErrorCode::DegreeNotIntegral, "degree squares do not sum to the order");

    Eigen::VectorXcd total = -a.unit();
    double res = 0.0;
    for (int i = 0; i < r; ++i) {
      const Eigen::VectorXcd& ei = sorted.idempotents[i];
      total += ei;
      res = std::max(res, (a.multiply(ei, ei) - ei).cwiseAbs().maxCoeff());
      for (int j = i + 1; j < r; ++j)
        res = std::max(res, a.multiply(ei, sorted.idempotents[j]).cwiseAbs().maxCoeff());
    }
    res = std::max(res, total.cwiseAbs().maxCoeff());
    sorted.residual = res;
    if (res > tol.idempotent) continue;
    return sorted;
  }
  throw Error(ErrorCode::NumericDegeneracy, "no separating central element after retries");
}

std::vector<int> sorted_degrees(const WedderburnData& w) {
  std::vector<int> d = w.degrees;
  std::sort(d.begin(), d.end());
  return d;
}

bool is_trivial_coclass_numeric(const GroupPtr& g, const UnitCocycle& alpha, std::uint64_t seed,
                                const Tolerances& tol) {
  const TwistedAlgebra a(g, alpha, tol.numeric_cocycle);
  const WedderburnData w = wedderburn(a, seed, tol);
  return std::find(w.degrees.begin(), w.degrees.end(), 1) != w.degrees.end();
}

}  // namespace projrep
