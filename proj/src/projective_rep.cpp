#include "projrep/projective_rep.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "projrep/error.hpp"

namespace projrep {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

MatrixXcd random_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  MatrixXcd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = cd(nd(rng), nd(rng));
  return m;
}

// (1/|G|) sum_g r2(g)^* X r1(g): projects onto Hom(r1, r2).
MatrixXcd reynolds(const ProjRep& r1, const ProjRep& r2, const MatrixXcd& x) {
  MatrixXcd acc = MatrixXcd::Zero(x.rows(), x.cols());
  for (std::size_t g = 0; g < r1.mats.size(); ++g) acc.noalias() += r2.mats[g].adjoint() * x * r1.mats[g];
  return acc / static_cast<double>(r1.mats.size());
}

void require_same_cocycle(const ProjRep& a, const ProjRep& b, double tol) {
  if (a.group != b.group) throw Error(ErrorCode::CocycleMismatch, "representations of different groups");
  for (std::size_t i = 0; i < a.alpha.size(); ++i)
    if (std::abs(a.alpha[i] - b.alpha[i]) > tol) throw Error(ErrorCode::CocycleMismatch, "cocycles differ");
}

// Eigenvalue clusters [begin, end) of an ascending spectrum.
std::vector<std::pair<int, int>> clusters(const Eigen::VectorXd& ev, double gap) {
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(ev.size());
  if (n == 0) return out;
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  int begin = 0;
  for (int i = 1; i <= n; ++i)
    if (i == n || ev[i] - ev[i - 1] > gap * scale) {
      out.emplace_back(begin, i);
      begin = i;
    }
  return out;
}

// U^* r(g) U for an invariant subspace with orthonormal columns U.
ProjRep subrep(const ProjRep& r, const MatrixXcd& u) {
  ProjRep s;
  s.group = r.group;
  s.alpha = r.alpha;
  s.mats.reserve(r.mats.size());
  for (const auto& m : r.mats) s.mats.push_back(u.adjoint() * m * u);
  return s;
}

// Scale a one-dimensional intertwiner between irreducible unitary
// representations to a unitary matrix with the fixed phase convention.
MatrixXcd normalize_unitary(MatrixXcd t) {
  const double d = static_cast<double>(t.cols());
  t *= std::sqrt(d) / t.norm();
  cd phase = t.trace();
  if (std::abs(phase) <= 1e-6) {
    phase = 0.0;
    for (int j = 0; j < t.cols() && phase == cd(0.0); ++j)
      for (int i = 0; i < t.rows(); ++i)
        if (std::abs(t(i, j)) > 1e-6) {
          phase = t(i, j);
          break;
        }
  }
  return t * (std::abs(phase) / phase);
}

std::vector<Elem> class_reps(const FiniteGroup& g) {
  std::vector<Elem> reps;
  for (const auto& c : g.classes()) reps.push_back(c.representative);
  return reps;
}

bool character_less(const ProjRep& a, const ProjRep& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (Elem x : class_reps(*a.group)) {
    const cd ca = a.mats[x].trace(), cb = b.mats[x].trace();
    const long ar = std::lround(ca.real() * 1e6), br = std::lround(cb.real() * 1e6);
    if (ar != br) return ar < br;
    const long ai = std::lround(ca.imag() * 1e6), bi = std::lround(cb.imag() * 1e6);
    if (ai != bi) return ai < bi;
  }
  return false;
}

}  // namespace

double rep_residual(const ProjRep& r) {
  const FiniteGroup& g = *r.group;
  const int n = g.order(), d = r.degree();
  const MatrixXcd id = MatrixXcd::Identity(d, d);
  double res = (r.mats[0] - id).cwiseAbs().maxCoeff();
  for (Elem x = 0; x < n; ++x) {
    res = std::max(res, (r.mats[x] * r.mats[x].adjoint() - id).cwiseAbs().maxCoeff());
    for (Elem y = 0; y < n; ++y) {
      const MatrixXcd diff = r.mats[x] * r.mats[y] - r.alpha[static_cast<std::size_t>(x) * n + y] * r.mats[g.mul(x, y)];
      res = std::max(res, diff.cwiseAbs().maxCoeff());
    }
  }
  return res;
}

std::vector<cd> character(const ProjRep& r) {
  std::vector<cd> chi(r.mats.size());
  for (std::size_t g = 0; g < r.mats.size(); ++g) chi[g] = r.mats[g].trace();
  return chi;
}

std::vector<cd> class_character(const ProjRep& r, const RegularClassData& reg, double tol) {
  std::vector<cd> out;
  for (const auto& e : reg.classes) {
    const cd v = r.mats[e.representative].trace();
    if (!e.regular && std::abs(v) > tol)
      throw Error(ErrorCode::CrossCheckMismatch, "character is nonzero on a non-regular class");
    out.push_back(v);
  }
  return out;
}

ProjRep trivial_rep(const GroupPtr& g) {
  ProjRep r;
  r.group = g;
  r.alpha = trivial_unit(g->order());
  r.mats.assign(g->order(), MatrixXcd::Identity(1, 1));
  return r;
}

ProjRep direct_sum(const ProjRep& a, const ProjRep& b) {
  require_same_cocycle(a, b, 1e-9);
  ProjRep s;
  s.group = a.group;
  s.alpha = a.alpha;
  const int da = a.degree(), db = b.degree();
  for (std::size_t g = 0; g < a.mats.size(); ++g) {
    MatrixXcd m = MatrixXcd::Zero(da + db, da + db);
    m.topLeftCorner(da, da) = a.mats[g];
    m.bottomRightCorner(db, db) = b.mats[g];
    s.mats.push_back(std::move(m));
  }
  return s;
}

std::vector<ProjRep> split_regular(const TwistedAlgebra& a, const WedderburnData& w, std::uint64_t seed,
                                   const Tolerances& tol) {
  const FiniteGroup& g = *a.group();
  const int n = g.order();
  std::vector<ProjRep> out;
  for (std::size_t bi = 0; bi < w.block_bases.size(); ++bi) {
    const MatrixXcd& basis = w.block_bases[bi];
    const int d = w.degrees[bi];
    MatrixXcd u;
    // A generic Hermitian element of the right action (the commutant of the
    // left regular action) cuts the block into d irreducible left modules.
    for (int attempt = 0; attempt < 5 && u.size() == 0; ++attempt) {
      std::mt19937_64 rng(seed + 7919 * bi + 104729 * static_cast<std::uint64_t>(attempt));
      VectorXcd b = random_matrix(n, 1, rng);
      b += a.star(b);
      const MatrixXcd m = basis.adjoint() * a.right(b) * basis;
      Eigen::SelfAdjointEigenSolver<MatrixXcd> es(0.5 * (m + m.adjoint()));
      const auto cl = clusters(es.eigenvalues(), tol.cluster_gap);
      if (cl.empty() || cl[0].second - cl[0].first != d) continue;
      u = basis * es.eigenvectors().leftCols(d);
    }
    if (u.size() == 0) throw Error(ErrorCode::NumericDegeneracy, "could not split a Wedderburn block");
    // Orthonormalize against drift.
    Eigen::HouseholderQR<MatrixXcd> qr(u);
    MatrixXcd q = qr.householderQ() * MatrixXcd::Identity(n, d);

    ProjRep r;
    r.group = a.group();
    r.alpha = a.cocycle();
    r.mats.resize(n);
    for (Elem x = 0; x < n; ++x) {
      // (L_x q)[xk, :] = alpha(x,k) q[k, :]
      MatrixXcd lq(n, d);
      for (Elem k = 0; k < n; ++k) lq.row(g.mul(x, k)) = a.alpha(x, k) * q.row(k);
      r.mats[x] = q.adjoint() * lq;
    }
    // Fix the basis so that phi(1) is exactly the identity.
    r.mats[0] = MatrixXcd::Identity(d, d);
    const double res = rep_residual(r);
    if (res > tol.rep) throw Error(ErrorCode::NumericDegeneracy, "split representation residual " + std::to_string(res));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ProjRep> irreducible_reps(const TwistedAlgebra& a, std::uint64_t seed, const Tolerances& tol) {
  return split_regular(a, wedderburn(a, seed, tol), seed, tol);
}

int intertwiner_dimension(const ProjRep& r1, const ProjRep& r2, double tol) {
  require_same_cocycle(r1, r2, tol);
  cd s = 0.0;
  for (std::size_t g = 0; g < r1.mats.size(); ++g) s += std::conj(r1.mats[g].trace()) * r2.mats[g].trace();
  s /= static_cast<double>(r1.mats.size());
  const long k = std::lround(s.real());
  if (std::abs(s.imag()) > tol || std::abs(s.real() - static_cast<double>(k)) > tol)
    throw Error(ErrorCode::NumericDegeneracy, "character inner product is not an integer");
  return static_cast<int>(k);
}

IntertwinerSpace intertwiner_space(const ProjRep& r1, const ProjRep& r2, std::uint64_t seed, double tol) {
  IntertwinerSpace out;
  out.dimension = intertwiner_dimension(r1, r2, tol);
  if (out.dimension == 0) return out;
  const int d1 = r1.degree(), d2 = r2.degree();
  std::mt19937_64 rng(seed);
  const int samples = out.dimension + 2;
  MatrixXcd cols(static_cast<Eigen::Index>(d1) * d2, samples);
  for (int s = 0; s < samples; ++s) {
    const MatrixXcd p = reynolds(r1, r2, random_matrix(d2, d1, rng));
    cols.col(s) = Eigen::Map<const VectorXcd>(p.data(), p.size());
  }
  Eigen::JacobiSVD<MatrixXcd> svd(cols, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  if (sv[out.dimension - 1] <= tol * sv[0] || (out.dimension < sv.size() && sv[out.dimension] > tol * sv[0]))
    throw Error(ErrorCode::NumericDegeneracy, "intertwiner samples have the wrong rank");
  for (int k = 0; k < out.dimension; ++k) {
    VectorXcd v = svd.matrixU().col(k);
    out.basis.push_back(Eigen::Map<MatrixXcd>(v.data(), d2, d1));
  }
  return out;
}

bool is_irreducible(const ProjRep& r, double tol) { return intertwiner_dimension(r, r, tol) == 1; }

bool is_isomorphic(const ProjRep& r1, const ProjRep& r2, double tol) {
  return r1.degree() == r2.degree() && is_irreducible(r1, tol) && intertwiner_dimension(r1, r2, tol) == 1;
}

ProjRep restrict_rep(const ProjRep& r, const Subgroup& h) {
  if (r.group != h.parent()) throw Error(ErrorCode::InvalidArgument, "subgroup of another group");
  ProjRep s;
  s.group = h.group();
  s.alpha = restrict_unit(r.alpha, h);
  for (Elem x = 0; x < h.order(); ++x) s.mats.push_back(r.mats[h.to_parent(x)]);
  return s;
}

ProjRep reindex_rep(const ProjRep& r, const GroupPtr& target, const std::vector<Elem>& source_of) {
  const int n = target->order(), src = r.group->order();
  if (static_cast<int>(source_of.size()) != n) throw Error(ErrorCode::InvalidArgument, "reindex map has the wrong size");
  ProjRep s;
  s.group = target;
  s.alpha.resize(static_cast<std::size_t>(n) * n);
  for (Elem x = 0; x < n; ++x) {
    s.mats.push_back(r.mats[source_of[x]]);
    for (Elem y = 0; y < n; ++y)
      s.alpha[static_cast<std::size_t>(x) * n + y] = r.alpha[static_cast<std::size_t>(source_of[x]) * src + source_of[y]];
  }
  return s;
}

ProjRep restrict_between(const ProjRep& r, const Subgroup& from, const Subgroup& to) {
  if (r.group != from.group()) throw Error(ErrorCode::InvalidArgument, "representation is not on the source subgroup");
  if (from.parent() != to.parent() || !to.is_subset_of(from))
    throw Error(ErrorCode::InvalidArgument, "target is not a subgroup of the source");
  std::vector<Elem> source_of(to.order());
  for (Elem l = 0; l < to.order(); ++l) source_of[l] = from.to_local(to.to_parent(l));
  return reindex_rep(r, to.group(), source_of);
}

ProjRep tensor_reps(const ProjRep& a, const ProjRep& b) {
  if (a.group != b.group) throw Error(ErrorCode::InvalidArgument, "tensor of representations of different groups");
  ProjRep t;
  t.group = a.group;
  t.alpha = pointwise_product(a.alpha, b.alpha);
  const int da = a.degree(), db = b.degree();
  for (std::size_t g = 0; g < a.mats.size(); ++g) {
    MatrixXcd k(da * db, da * db);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j) k.block(i * db, j * db, db, db) = a.mats[g](i, j) * b.mats[g];
    t.mats.push_back(std::move(k));
  }
  return t;
}

std::vector<Constituent> decompose(const ProjRep& r, std::uint64_t seed, const Tolerances& tol) {
  const int d = r.degree();
  for (int attempt = 0; attempt < 5; ++attempt) {
    std::mt19937_64 rng(seed + 31337 * static_cast<std::uint64_t>(attempt));
    const MatrixXcd h = random_matrix(d, d, rng);
    MatrixXcd c = reynolds(r, r, h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(0.5 * (c + c.adjoint()));
    std::vector<std::pair<ProjRep, MatrixXcd>> pieces;
    bool ok = true;
    for (const auto& [b, e] : clusters(es.eigenvalues(), tol.cluster_gap)) {
      const MatrixXcd u = es.eigenvectors().middleCols(b, e - b);
      ProjRep p = subrep(r, u);
      if (!is_irreducible(p, tol.equality)) {
        ok = false;
        break;
      }
      pieces.emplace_back(std::move(p), u);
    }
    if (!ok) continue;

    std::vector<Constituent> out;
    for (auto& [p, u] : pieces) {
      auto it = std::find_if(out.begin(), out.end(), [&](const Constituent& c) {
        return c.rep.degree() == p.degree() && intertwiner_dimension(c.rep, p, tol.equality) == 1;
      });
      if (it == out.end()) {
        out.push_back({std::move(p), 1, u * u.adjoint()});
      } else {
        it->multiplicity += 1;
        it->projector += u * u.adjoint();
      }
    }
    std::sort(out.begin(), out.end(),
              [](const Constituent& x, const Constituent& y) { return character_less(x.rep, y.rep); });
    return out;
  }
  throw Error(ErrorCode::NumericDegeneracy, "commutant element did not separate the constituents");
}

ProjRep conjugate_rep(const ProjRep& r, const Subgroup& h, Elem g, const TwistedAlgebra& a, const Subgroup& target) {
  if (r.group != h.group()) throw Error(ErrorCode::InvalidArgument, "representation is not on the subgroup");
  const FiniteGroup& G = *a.group();
  ProjRep s;
  s.group = target.group();
  s.alpha = restrict_unit(a.cocycle(), target);
  for (Elem y = 0; y < target.order(); ++y) {
    const Elem yp = target.to_parent(y);
    const Elem x = h.to_local(G.conj(yp, g));
    if (x < 0) throw Error(ErrorCode::InvalidArgument, "target is not the conjugate subgroup");
    s.mats.push_back(a.alpha_tilde(yp, g) * r.mats[x]);
  }
  return s;
}

ProjRep conjugate_rep(const ProjRep& r, const Subgroup& n, Elem g, const TwistedAlgebra& a) {
  if (!n.is_normal()) throw Error(ErrorCode::NotNormal, "conjugation of a representation of a non-normal subgroup");
  return conjugate_rep(r, n, g, a, n);
}

Subgroup inertia_group(const ProjRep& r, const Subgroup& n, const TwistedAlgebra& a) {
  if (!n.is_normal()) throw Error(ErrorCode::NotNormal, "inertia group of a non-normal subgroup");
  std::vector<Elem> j;
  for (Elem g = 0; g < a.order(); ++g)
    if (intertwiner_dimension(r, conjugate_rep(r, n, g, a, n)) == 1) j.push_back(g);
  Subgroup out(a.group(), std::move(j));
  if (!n.is_subset_of(out)) throw Error(ErrorCode::CrossCheckMismatch, "inertia group does not contain N");
  return out;
}

CliffordExtension clifford_extend(const ProjRep& v, const Subgroup& n, const Subgroup& j, const TwistedAlgebra& a,
                                  std::uint64_t seed, const Tolerances& tol) {
  if (!n.is_subset_of(j)) throw Error(ErrorCode::InertiaMismatch, "N is not contained in J");
  if (v.group != n.group()) throw Error(ErrorCode::InvalidArgument, "representation is not on N");
  const FiniteGroup& G = *a.group();
  CliffordExtension ext{n, j, v, {}, {}, {}, 0.0};
  const int d = v.degree();

  // Right cosets N t with minimal representatives; Y(t) in Hom(conjugate of V by t, V).
  std::vector<Elem> coset_rep(G.order(), -1);
  std::vector<MatrixXcd> yt(G.order());
  for (Elem t : j.elements()) {
    if (coset_rep[t] >= 0) continue;
    for (Elem x : n.elements()) coset_rep[G.mul(x, t)] = t;
    ext.transversal.push_back(t);
    if (t == 0) {
      yt[t] = MatrixXcd::Identity(d, d);
      continue;
    }
    const ProjRep conj = conjugate_rep(v, n, t, a, n);
    const IntertwinerSpace sp = intertwiner_space(conj, v, seed + t, tol.equality);
    if (sp.dimension != 1) throw Error(ErrorCode::InertiaMismatch, "element of J does not fix V");
    yt[t] = normalize_unitary(sp.basis[0]);
  }

  // Y(x t) = alpha(x,t)^-1 V(x) Y(t).
  ProjRep y;
  y.group = j.group();
  const int m = j.order();
  y.mats.resize(m);
  for (Elem jl = 0; jl < m; ++jl) {
    const Elem g = j.to_parent(jl);
    const Elem t = coset_rep[g];
    const Elem x = G.mul(g, G.inv(t));
    y.mats[jl] = v.mats[n.to_local(x)] * yt[t] / a.alpha(x, t);
  }

  // beta(g,h) = Y(g) Y(h) Y(gh)^-1, read as a scalar.
  const FiniteGroup& J = *j.group();
  y.alpha.resize(static_cast<std::size_t>(m) * m);
  double res = 0.0;
  for (Elem g = 0; g < m; ++g)
    for (Elem h = 0; h < m; ++h) {
      const MatrixXcd prod = y.mats[g] * y.mats[h];
      const MatrixXcd& gh = y.mats[J.mul(g, h)];
      const cd beta = (prod * gh.adjoint()).trace() / static_cast<double>(d);
      res = std::max(res, (prod - beta * gh).cwiseAbs().maxCoeff());
      res = std::max(res, std::abs(std::abs(beta) - 1.0));
      y.alpha[static_cast<std::size_t>(g) * m + h] = beta / std::abs(beta);
    }
  if (res > tol.numeric_cocycle) throw Error(ErrorCode::PhaseInstability, "extension is not projective: " + std::to_string(res));
  const double defect = cocycle_defect(J, y.alpha, Exec::Serial);
  if (defect > tol.numeric_cocycle) throw Error(ErrorCode::PhaseInstability, "beta fails the cocycle identity");

  ext.delta = pointwise_quotient(restrict_unit(a.cocycle(), j), y.alpha);
  for (Elem x : n.elements())
    for (Elem h = 0; h < m; ++h)
      if (std::abs(ext.delta[static_cast<std::size_t>(j.to_local(x)) * m + h] - 1.0) > tol.numeric_cocycle)
        throw Error(ErrorCode::PhaseInstability, "obstruction cocycle is not trivial on N");
  ext.y = std::move(y);
  ext.residual = std::max(res, defect);
  return ext;
}

Factorization factor_over_extension(const ProjRep& x, const CliffordExtension& ext, std::uint64_t seed,
                                    const Tolerances& tol) {
  const Subgroup& j = ext.j;
  const Subgroup nj = ext.n.relative_to(j);
  if (x.group != j.group()) throw Error(ErrorCode::FactorizationFailure, "X is not a representation of J");
  const UnitCocycle alpha_j = pointwise_product(ext.y.alpha, ext.delta);
  for (std::size_t i = 0; i < alpha_j.size(); ++i)
    if (std::abs(alpha_j[i] - x.alpha[i]) > tol.numeric_cocycle)
      throw Error(ErrorCode::FactorizationFailure, "X is not over the restricted cocycle");

  // W = Hom_N(V, res X), orthonormal so that w_i^* w_j = delta_ij I.
  const ProjRep resx = restrict_rep(x, nj);
  std::vector<Elem> source_of(nj.order());
  for (Elem l = 0; l < nj.order(); ++l) source_of[l] = ext.n.to_local(j.to_parent(nj.to_parent(l)));
  const ProjRep base = reindex_rep(ext.base, nj.group(), source_of);
  const IntertwinerSpace sp = intertwiner_space(base, resx, seed, tol.equality);
  if (sp.dimension == 0) throw Error(ErrorCode::FactorizationFailure, "V is not a constituent of res X");
  const int k = sp.dimension;
  const int dv = ext.base.degree();
  std::vector<MatrixXcd> w;
  for (const auto& b : sp.basis) w.push_back(b * std::sqrt(static_cast<double>(dv)));

  const FiniteGroup& J = *j.group();
  const int m = J.order();
  Factorization f;
  f.w_on_j.group = j.group();
  f.w_on_j.alpha = ext.delta;
  f.w_on_j.mats.resize(m);
  for (Elem g = 0; g < m; ++g) {
    MatrixXcd rho(k, k);
    const MatrixXcd yinv = ext.y.mats[g].adjoint();
    for (int c = 0; c < k; ++c) {
      const MatrixXcd img = x.mats[g] * w[c] * yinv;
      for (int r = 0; r < k; ++r) rho(r, c) = (w[r].adjoint() * img).trace() / static_cast<double>(dv);
    }
    f.w_on_j.mats[g] = std::move(rho);
  }
  double res = rep_residual(f.w_on_j);

  // Constant on N-cosets, then read off on J/N through the section.
  f.quotient = quotient_group(j.group(), nj);
  for (Elem g = 0; g < m; ++g)
    res = std::max(res, (f.w_on_j.mats[g] - f.w_on_j.mats[f.quotient.section[f.quotient.projection[g]]])
                            .cwiseAbs()
                            .maxCoeff());
  const FiniteGroup& Q = *f.quotient.group;
  const int qn = Q.order();
  f.w.group = f.quotient.group;
  f.w.alpha.resize(static_cast<std::size_t>(qn) * qn);
  for (Elem a = 0; a < qn; ++a) {
    f.w.mats.push_back(f.w_on_j.mats[f.quotient.section[a]]);
    for (Elem b = 0; b < qn; ++b)
      f.w.alpha[static_cast<std::size_t>(a) * qn + b] =
          ext.delta[static_cast<std::size_t>(f.quotient.section[a]) * m + f.quotient.section[b]];
  }
  res = std::max(res, rep_residual(f.w));
  f.residual = res;
  if (res > tol.numeric_cocycle) throw Error(ErrorCode::FactorizationFailure, "W residual " + std::to_string(res));
  if (intertwiner_dimension(tensor_reps(ext.y, f.w_on_j), x, tol.equality) != 1 && is_irreducible(x))
    throw Error(ErrorCode::FactorizationFailure, "X is not Y tensor W");
  return f;
}

ProjRep induce_rep(const ProjRep& r, const Subgroup& h, const TwistedAlgebra& a) {
  if (r.group != h.group()) throw Error(ErrorCode::InvalidArgument, "representation is not on the subgroup");
  const FiniteGroup& G = *a.group();
  const UnitCocycle ah = restrict_unit(a.cocycle(), h);
  for (std::size_t i = 0; i < ah.size(); ++i)
    if (std::abs(ah[i] - r.alpha[i]) > 1e-6) throw Error(ErrorCode::CocycleMismatch, "representation is not over res(alpha)");

  // Left cosets t H with minimal representatives.
  std::vector<int> coset(G.order(), -1);
  std::vector<Elem> t;
  for (Elem g = 0; g < G.order(); ++g) {
    if (coset[g] >= 0) continue;
    for (Elem x : h.elements()) coset[G.mul(g, x)] = static_cast<int>(t.size());
    t.push_back(g);
  }
  const int k = static_cast<int>(t.size()), d = r.degree();
  ProjRep out;
  out.group = a.group();
  out.alpha = a.cocycle();
  for (Elem g = 0; g < G.order(); ++g) {
    MatrixXcd m = MatrixXcd::Zero(k * d, k * d);
    for (int i = 0; i < k; ++i) {
      const Elem gt = G.mul(g, t[i]);
      const int jx = coset[gt];
      const Elem hp = G.mul(G.inv(t[jx]), gt);  // g t_i = t_j h
      m.block(jx * d, i * d, d, d) = (a.alpha(g, t[i]) / a.alpha(t[jx], hp)) * r.mats[h.to_local(hp)];
    }
    out.mats.push_back(std::move(m));
  }
  return out;
}

}  // namespace projrep
