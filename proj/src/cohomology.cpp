#include "projrep/cohomology.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <numeric>

#include "projrep/error.hpp"
#include "projrep/smith.hpp"

namespace projrep {

namespace {

int mod(long a, int m) {
  long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

// Inverse of a modulo m (gcd must be 1).
int inverse_mod(int a, int m) {
  if (m == 1) return 0;
  long r0 = m, r1 = mod(a, m), s0 = 0, s1 = 1;
  while (r1 != 0) {
    long t = r0 / r1;
    std::swap(r0, r1);
    r1 -= t * r0;
    std::swap(s0, s1);
    s1 -= t * s0;
  }
  if (r0 != 1) throw Error(ErrorCode::InvalidArgument, "no inverse modulo " + std::to_string(m));
  return mod(s0, m);
}

// Breadth-first spanning tree of the Cayley graph: y = parent[y] * s_{gen[y]}.
struct CayleyTree {
  std::vector<Elem> order;   // discovery order, starts with identity
  std::vector<Elem> parent;  // -1 for identity
  std::vector<int> gen;
};

CayleyTree cayley_tree(const FiniteGroup& g) {
  const int n = g.order();
  CayleyTree t;
  t.parent.assign(n, -1);
  t.gen.assign(n, -1);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  t.order.push_back(0);
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    const Elem u = t.order[head];
    const auto& gens = g.generators();
    for (int j = 0; j < static_cast<int>(gens.size()); ++j) {
      const Elem v = g.mul(u, gens[j]);
      if (seen[v]) continue;
      seen[v] = 1;
      t.parent[v] = u;
      t.gen[v] = j;
      t.order.push_back(v);
    }
  }
  return t;
}

bool is_tree_edge(const CayleyTree& t, Elem y, int j, Elem ys) { return ys != 0 && t.parent[ys] == y && t.gen[ys] == j; }

// Kernel of A over Z/p^k: x = Q y with y_i a multiple of p^(k - v_i).
struct KernelCoords {
  SmithForm snf;
  std::vector<int> cols;  // coordinates with v_i > 0
};

KernelCoords kernel_coords(const RingMatrix& a, const PrimePowerRing& ring) {
  KernelCoords kc;
  kc.snf = smith_normal_form(a, ring, false, true);
  for (int i = 0; i < a.cols; ++i)
    if (kc.snf.col_valuation[i] > 0) kc.cols.push_back(i);
  return kc;
}

}  // namespace

// ---------------------------------------------------------------------------
// Cochains

Cocycle Cocycle::trivial(GroupPtr g, int modulus) {
  Cocycle c;
  const int n = g->order();
  c.group = std::move(g);
  c.modulus = modulus;
  c.table.assign(static_cast<std::size_t>(n) * n, 0);
  return c;
}

std::string cocycle_hash(const Cocycle& a) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  const auto mix = [&h](std::uint32_t v) {
    for (int b = 0; b < 4; ++b) {
      h ^= (v >> (8 * b)) & 0xffu;
      h *= 0x100000001b3ull;
    }
  };
  mix(static_cast<std::uint32_t>(a.modulus));
  for (int v : a.table) mix(static_cast<std::uint32_t>(v));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Cocycle Cocycle::rescaled(int new_modulus) const {
  if (new_modulus % modulus != 0) throw Error(ErrorCode::ModulusMismatch, "target modulus is not a multiple");
  Cocycle c = *this;
  const int f = new_modulus / modulus;
  c.modulus = new_modulus;
  for (int& v : c.table) v *= f;
  return c;
}

Cocycle coboundary(const Cochain1& z) {
  const auto& g = *z.group;
  Cocycle c = Cocycle::trivial(z.group, z.modulus);
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      c.at(x, y) = mod(static_cast<long>(z.values[x]) + z.values[y] - z.values[g.mul(x, y)], z.modulus);
  return c;
}

Cocycle add_cocycles(const Cocycle& a, const Cocycle& b) {
  if (a.group != b.group) throw Error(ErrorCode::ModulusMismatch, "cocycles on different groups");
  const int m = std::lcm(a.modulus, b.modulus);
  Cocycle x = a.rescaled(m), y = b.rescaled(m);
  for (std::size_t i = 0; i < x.table.size(); ++i) x.table[i] = (x.table[i] + y.table[i]) % m;
  return x;
}

bool is_normalized(const Cocycle& a) {
  for (Elem g = 0; g < a.group->order(); ++g)
    if (a.at(0, g) != 0 || a.at(g, 0) != 0) return false;
  return true;
}

bool is_cocycle(const Cocycle& a) {
  const int n = a.group->order();
  if (a.modulus < 1 || a.table.size() != static_cast<std::size_t>(n) * n)
    throw Error(ErrorCode::ModulusMismatch, "cocycle table shape does not match the group");
  for (int v : a.table)
    if (v < 0 || v >= a.modulus) throw Error(ErrorCode::ModulusMismatch, "residue out of range");
  const auto& g = *a.group;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = g.mul(x, y);
      const int axy = a.at(x, y);
      for (Elem z = 0; z < n; ++z)
        if ((axy + a.at(xy, z) - a.at(y, z) - a.at(x, g.mul(y, z))) % a.modulus != 0) return false;
    }
  return true;
}

Cocycle restrict_cocycle(const Cocycle& a, const Subgroup& h) {
  const GroupPtr& hg = h.group();
  Cocycle c = Cocycle::trivial(hg, a.modulus);
  for (Elem x = 0; x < hg->order(); ++x)
    for (Elem y = 0; y < hg->order(); ++y) c.at(x, y) = a.at(h.to_parent(x), h.to_parent(y));
  return c;
}

Cocycle inflate_cocycle(const Cocycle& b, const GroupPtr& g, const Quotient& q) {
  if (b.group != q.group) throw Error(ErrorCode::InvalidArgument, "cocycle is not on the quotient");
  Cocycle c = Cocycle::trivial(g, b.modulus);
  for (Elem x = 0; x < g->order(); ++x)
    for (Elem y = 0; y < g->order(); ++y) c.at(x, y) = b.at(q.projection[x], q.projection[y]);
  return c;
}

// ---------------------------------------------------------------------------
// Exact multiplier, one prime at a time.
//
// A normalized cocycle is determined by its values a(x, s) on generators s
// (x != 1): the spanning tree of the Cayley graph gives
// a(x, us) = a(x, u) + a(xu, s) - a(u, s). Requiring the cocycle identity at
// every non-tree edge (y, s) makes the extended table a cocycle. The p-part of
// H^2(G, C^x) is Z^2(G, Z/q) modulo the coboundaries and the images of
// Hom(G, Z/q) under the connecting map, with q the p-part of the modulus.

struct SchurMultiplier::PrimeSolver {
  int p = 0, k = 0, q = 0;
  int to_local = 0;  // (M/q)^-1 mod q: maps a residue mod M to its q-component
  int gens = 0;      // number of generators
  SmithForm cocycle_snf;
  std::vector<int> zcols;
  SmithForm relation_snf;
  std::vector<int> summands;  // rows of the relation form with w > 0, ascending in w
  std::vector<int> w;         // valuation of each summand (parallel to summands)
  std::vector<std::vector<int>> basis;  // cocycle tables mod q

  std::vector<int> resolve(const Cocycle& a) const;
};

std::vector<int> SchurMultiplier::PrimeSolver::resolve(const Cocycle& a) const {
  const PrimePowerRing ring(p, k);
  const auto& g = *a.group;
  const int n = g.order();
  const int N = (n - 1) * gens;
  std::vector<int> x(N);
  for (Elem e = 1; e < n; ++e)
    for (int j = 0; j < gens; ++j)
      x[(e - 1) * gens + j] = ring.reduce(static_cast<long>(a.at(e, g.generators()[j])) * to_local);
  const std::vector<int> y = ring_apply(cocycle_snf.Qinv, x, ring);
  std::vector<char> in_z(N, 0);
  std::vector<int> t(zcols.size());
  for (std::size_t i = 0; i < zcols.size(); ++i) {
    const int c = zcols[i];
    in_z[c] = 1;
    const int scale = ring.pow_p(k - cocycle_snf.col_valuation[c]);
    if (y[c] % scale != 0) throw Error(ErrorCode::InvalidArgument, "table is not a cocycle");
    t[i] = y[c] / scale;
  }
  for (int c = 0; c < N; ++c)
    if (!in_z[c] && y[c] != 0) throw Error(ErrorCode::InvalidArgument, "table is not a cocycle");
  const std::vector<int> u = ring_apply(relation_snf.P, t, ring);
  std::vector<int> out(summands.size());
  for (std::size_t j = 0; j < summands.size(); ++j) out[j] = u[summands[j]] % ring.pow_p(w[j]);
  return out;
}

MultiplierPtr SchurMultiplier::compute(const GroupPtr& gp, int modulus, int cap) {
  const FiniteGroup& g = *gp;
  const int n = g.order();
  if (n > cap) throw Error(ErrorCode::GroupTooLargeForH2, g.name() + " has order " + std::to_string(n));
  if (modulus == 0) modulus = n;
  if (modulus % n != 0) throw Error(ErrorCode::ModulusMismatch, "modulus must be a multiple of |G|");

  auto out = std::shared_ptr<SchurMultiplier>(new SchurMultiplier());
  out->group_ = gp;
  out->modulus_ = modulus;
  out->exact_ = true;
  if (n == 1) return out;

  const auto& S = g.generators();
  const int ns = static_cast<int>(S.size());
  const int N = (n - 1) * ns;
  const CayleyTree tree = cayley_tree(g);
  auto unknown = [&](Elem e, int j) { return e == 0 ? -1 : (e - 1) * ns + j; };

  // T[x][y] as an integer combination of the unknowns, kept modulo M.
  std::vector<int> T(static_cast<std::size_t>(n) * n * N, 0);
  auto T_at = [&](Elem x, Elem y) { return T.data() + (static_cast<std::size_t>(x) * n + y) * N; };
  for (std::size_t oi = 1; oi < tree.order.size(); ++oi) {
    const Elem y = tree.order[oi], u = tree.parent[y];
    const int j = tree.gen[y];
    for (Elem x = 1; x < n; ++x) {
      int* dst = T_at(x, y);
      const int* src = T_at(x, u);
      std::copy(src, src + N, dst);
      const int a = unknown(g.mul(x, u), j), b = unknown(u, j);
      if (a >= 0) dst[a] = mod(dst[a] + 1, modulus);
      if (b >= 0) dst[b] = mod(dst[b] - 1, modulus);
    }
  }

  // Cocycle identity at non-tree edges, as rows over Z (mod M).
  std::vector<std::vector<int>> rows;
  for (Elem y = 0; y < n; ++y)
    for (int j = 0; j < ns; ++j) {
      const Elem ys = g.mul(y, S[j]);
      if (is_tree_edge(tree, y, j, ys)) continue;
      for (Elem x = 1; x < n; ++x) {
        std::vector<int> row(N, 0);
        const int* a = T_at(x, ys);
        const int* b = T_at(x, y);
        for (int c = 0; c < N; ++c) row[c] = mod(static_cast<long>(a[c]) - b[c], modulus);
        const int uy = unknown(y, j), uxy = unknown(g.mul(x, y), j);
        if (uy >= 0) row[uy] = mod(row[uy] + 1, modulus);
        if (uxy >= 0) row[uxy] = mod(row[uxy] - 1, modulus);
        if (std::any_of(row.begin(), row.end(), [](int v) { return v != 0; })) rows.push_back(std::move(row));
      }
    }

  // Homomorphism constraints: lam(y) + lam(s) - lam(ys) = 0 along non-tree edges.
  std::vector<std::vector<int>> lam_tree(n, std::vector<int>(ns, 0));
  for (std::size_t oi = 1; oi < tree.order.size(); ++oi) {
    const Elem y = tree.order[oi];
    lam_tree[y] = lam_tree[tree.parent[y]];
    lam_tree[y][tree.gen[y]] += 1;
  }
  std::vector<std::vector<int>> hom_rows;
  for (Elem y = 0; y < n; ++y)
    for (int j = 0; j < ns; ++j) {
      const Elem ys = g.mul(y, S[j]);
      if (is_tree_edge(tree, y, j, ys)) continue;
      std::vector<int> row(ns);
      for (int c = 0; c < ns; ++c) row[c] = lam_tree[y][c] - lam_tree[ys][c] + (c == j ? 1 : 0);
      hom_rows.push_back(std::move(row));
    }

  for (int p : prime_factors(n)) {
    auto solver = std::make_shared<PrimeSolver>();
    PrimeSolver& ps = *solver;
    ps.p = p;
    ps.q = 1;
    int rest = modulus;
    while (rest % p == 0) {
      rest /= p;
      ps.q *= p;
      ++ps.k;
    }
    ps.gens = ns;
    ps.to_local = inverse_mod(rest, ps.q);
    const PrimePowerRing ring(p, ps.k);

    // Z^2 as a direct sum of Z/p^{v_i}.
    RingMatrix C(static_cast<int>(rows.size()), N);
    for (int r = 0; r < C.rows; ++r)
      for (int c = 0; c < N; ++c) C(r, c) = ring.reduce(rows[r][c]);
    KernelCoords kc = kernel_coords(C, ring);
    ps.cocycle_snf = std::move(kc.snf);
    ps.zcols = std::move(kc.cols);
    const int nz = static_cast<int>(ps.zcols.size());

    // Kernel coordinates of a cocycle given by its unknown vector.
    auto coords = [&](const std::vector<int>& x) {
      const std::vector<int> y = ring_apply(ps.cocycle_snf.Qinv, x, ring);
      std::vector<int> t(nz);
      for (int i = 0; i < nz; ++i) {
        const int c = ps.zcols[i];
        const int scale = ring.pow_p(ps.k - ps.cocycle_snf.col_valuation[c]);
        if (y[c] % scale != 0) throw Error(ErrorCode::CrossCheckMismatch, "coboundary outside the cocycle lattice");
        t[i] = y[c] / scale;
      }
      return t;
    };

    std::vector<std::vector<int>> relations;
    // Coboundaries of the indicator cochains.
    for (Elem e = 1; e < n; ++e) {
      std::vector<int> x(N, 0);
      for (Elem a = 1; a < n; ++a)
        for (int j = 0; j < ns; ++j) {
          const int v = (a == e) + (S[j] == e) - (g.mul(a, S[j]) == e);
          x[unknown(a, j)] = ring.reduce(v);
        }
      relations.push_back(coords(x));
    }
    // Connecting-map images of Hom(G, Z/q).
    RingMatrix H(static_cast<int>(hom_rows.size()), ns);
    for (int r = 0; r < H.rows; ++r)
      for (int c = 0; c < ns; ++c) H(r, c) = ring.reduce(hom_rows[r][c]);
    KernelCoords hk = kernel_coords(H, ring);
    for (int col : hk.cols) {
      std::vector<int> ycoord(ns, 0);
      ycoord[col] = ring.pow_p(ps.k - hk.snf.col_valuation[col]);
      const std::vector<int> lam_gen = ring_apply(hk.snf.Q, ycoord, ring);
      std::vector<int> lam(n);
      for (Elem e = 0; e < n; ++e) {
        long s = 0;
        for (int c = 0; c < ns; ++c) s += static_cast<long>(lam_tree[e][c]) * lam_gen[c];
        lam[e] = ring.reduce(s);
      }
      std::vector<int> x(N, 0);
      for (Elem a = 1; a < n; ++a)
        for (int j = 0; j < ns; ++j) x[unknown(a, j)] = (lam[a] + lam[S[j]] - lam[g.mul(a, S[j])]) / ps.q;
      relations.push_back(coords(x));
    }

    RingMatrix R(nz, nz + static_cast<int>(relations.size()));
    for (int i = 0; i < nz; ++i) {
      R(i, i) = ring.reduce(ring.pow_p(ps.cocycle_snf.col_valuation[ps.zcols[i]]));
      for (std::size_t c = 0; c < relations.size(); ++c) R(i, nz + static_cast<int>(c)) = relations[c][i];
    }
    ps.relation_snf = smith_normal_form(R, ring, true, false);
    for (int r = 0; r < nz; ++r)
      if (ps.relation_snf.row_valuation[r] > 0) ps.summands.push_back(r);
    std::stable_sort(ps.summands.begin(), ps.summands.end(), [&](int a, int b) {
      return ps.relation_snf.row_valuation[a] < ps.relation_snf.row_valuation[b];
    });
    for (int r : ps.summands) {
      ps.w.push_back(ps.relation_snf.row_valuation[r]);
      // Basis cocycle: t = Pinv e_r, back through the kernel parametrisation.
      std::vector<int> y(N, 0);
      for (int i = 0; i < nz; ++i) {
        const int c = ps.zcols[i];
        y[c] = ring.reduce(static_cast<long>(ps.relation_snf.Pinv(i, r)) *
                           ring.pow_p(ps.k - ps.cocycle_snf.col_valuation[c]));
      }
      const std::vector<int> x = ring_apply(ps.cocycle_snf.Q, y, ring);
      std::vector<int> table(static_cast<std::size_t>(n) * n, 0);
      for (Elem a = 1; a < n; ++a)
        for (Elem b = 1; b < n; ++b) {
          const int* coeff = T_at(a, b);
          long s = 0;
          for (int c = 0; c < N; ++c)
            if (coeff[c]) s += static_cast<long>(coeff[c]) * x[c];
          table[static_cast<std::size_t>(a) * n + b] = ring.reduce(s);
        }
      ps.basis.push_back(std::move(table));
    }
    out->solvers_.push_back(std::move(solver));
  }

  // Right-align the per-prime summands into invariant factors d_1 | d_2 | ...
  std::size_t slots = 0;
  for (const auto& s : out->solvers_) slots = std::max(slots, s->summands.size());
  out->slot_summand_.assign(slots, std::vector<int>(out->solvers_.size(), -1));
  out->invariants_.assign(slots, 1);
  for (std::size_t si = 0; si < out->solvers_.size(); ++si) {
    const PrimeSolver& ps = *out->solvers_[si];
    const std::size_t offset = slots - ps.summands.size();
    for (std::size_t j = 0; j < ps.summands.size(); ++j) {
      out->slot_summand_[offset + j][si] = static_cast<int>(j);
      int d = 1;
      for (int e = 0; e < ps.w[j]; ++e) d *= ps.p;
      out->invariants_[offset + j] *= d;
    }
  }
  for (std::size_t i = 0; i < slots; ++i) {
    Cocycle b = Cocycle::trivial(gp, modulus);
    for (std::size_t si = 0; si < out->solvers_.size(); ++si) {
      const int j = out->slot_summand_[i][si];
      if (j < 0) continue;
      const PrimeSolver& ps = *out->solvers_[si];
      const int lift = modulus / ps.q;
      for (std::size_t e = 0; e < b.table.size(); ++e)
        b.table[e] = mod(b.table[e] + static_cast<long>(ps.basis[j][e]) * lift, modulus);
    }
    out->basis_.push_back(std::move(b));
  }

  for (std::size_t i = 0; i < slots; ++i) {
    std::vector<int> expect(slots, 0);
    expect[i] = 1;
    if (!is_cocycle(out->basis_[i]) || out->resolve(out->basis_[i]) != expect)
      throw Error(ErrorCode::CrossCheckMismatch, "multiplier basis does not resolve to itself");
  }
  return out;
}

MultiplierPtr SchurMultiplier::declared(const GroupPtr& g, int modulus, std::vector<int> invariants,
                                        std::vector<Cocycle> basis, Resolver resolver) {
  if (invariants.size() != basis.size()) throw Error(ErrorCode::InvalidArgument, "one basis cocycle per invariant");
  auto out = std::shared_ptr<SchurMultiplier>(new SchurMultiplier());
  out->group_ = g;
  out->modulus_ = modulus;
  out->invariants_ = std::move(invariants);
  for (auto& b : basis) out->basis_.push_back(b.rescaled(modulus));
  out->resolver_ = std::move(resolver);
  return out;
}

MultiplierPtr SchurMultiplier::unknown(const GroupPtr& g) {
  auto out = std::shared_ptr<SchurMultiplier>(new SchurMultiplier());
  out->group_ = g;
  out->modulus_ = g->order();
  out->known_ = false;
  return out;
}

long SchurMultiplier::size() const {
  long s = 1;
  for (int d : invariants_) s *= d;
  return s;
}

int SchurMultiplier::exponent() const { return invariants_.empty() ? 1 : invariants_.back(); }

std::vector<int> SchurMultiplier::resolve(const Cocycle& a) const {
  if (a.group != group_) throw Error(ErrorCode::InvalidArgument, "cocycle is on another group");
  if (!known_) throw Error(ErrorCode::GroupTooLargeForH2, "multiplier of " + group_->name() + " is not available");
  if (!exact_) {
    std::vector<int> e = resolver_(a);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = mod(e[i], invariants_[i]);
    return e;
  }
  if (modulus_ % a.modulus != 0) throw Error(ErrorCode::ModulusMismatch, "cocycle modulus does not divide the multiplier modulus");
  const Cocycle full = a.rescaled(modulus_);
  std::vector<std::vector<int>> per_prime;
  for (const auto& s : solvers_) per_prime.push_back(s->resolve(full));
  std::vector<int> out(invariants_.size(), 0);
  for (std::size_t i = 0; i < invariants_.size(); ++i) {
    // Chinese remaindering across the prime components of slot i.
    long x = 0, m = 1;
    for (std::size_t si = 0; si < solvers_.size(); ++si) {
      const int j = slot_summand_[i][si];
      if (j < 0) continue;
      int pm = 1;
      for (int e = 0; e < solvers_[si]->w[j]; ++e) pm *= solvers_[si]->p;
      const long r = per_prime[si][j];
      // x + m*t = r (mod pm)
      const long t = mod((r - x) % pm * inverse_mod(static_cast<int>(m % pm), pm), pm);
      x += m * t;
      m *= pm;
    }
    out[i] = static_cast<int>(x);
  }
  return out;
}

Cocycle SchurMultiplier::representative(const std::vector<int>& exponents) const {
  if (exponents.size() != invariants_.size()) throw Error(ErrorCode::BadCoclassIndex, "exponent vector length");
  Cocycle c = Cocycle::trivial(group_, modulus_);
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const int e = mod(exponents[i], invariants_[i]);
    if (e == 0) continue;
    for (std::size_t k = 0; k < c.table.size(); ++k)
      c.table[k] = mod(c.table[k] + static_cast<long>(e) * basis_[i].table[k], modulus_);
  }
  return c;
}

std::vector<int> SchurMultiplier::exponents_at(long index) const {
  if (index < 0 || index >= size()) throw Error(ErrorCode::BadCoclassIndex, "coclass index " + std::to_string(index));
  std::vector<int> e(invariants_.size(), 0);
  for (std::size_t i = invariants_.size(); i-- > 0;) {
    e[i] = static_cast<int>(index % invariants_[i]);
    index /= invariants_[i];
  }
  return e;
}

long SchurMultiplier::index_of(const std::vector<int>& exponents) const {
  if (exponents.size() != invariants_.size()) throw Error(ErrorCode::BadCoclassIndex, "exponent vector length");
  long idx = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) idx = idx * invariants_[i] + mod(exponents[i], invariants_[i]);
  return idx;
}

// ---------------------------------------------------------------------------
// Coclasses

Coclass::Coclass(MultiplierPtr m, std::vector<int> exponents) : mult_(std::move(m)), exps_(std::move(exponents)) {
  const auto& inv = mult_->invariants();
  if (exps_.size() != inv.size()) throw Error(ErrorCode::BadCoclassIndex, "exponent vector length");
  for (std::size_t i = 0; i < inv.size(); ++i) exps_[i] = mod(exps_[i], inv[i]);
}

Coclass Coclass::trivial(MultiplierPtr m) {
  std::vector<int> e(m->invariants().size(), 0);
  return Coclass(std::move(m), std::move(e));
}

int Coclass::order() const {
  long o = 1;
  const auto& inv = mult_->invariants();
  for (std::size_t i = 0; i < inv.size(); ++i) o = std::lcm(o, static_cast<long>(inv[i] / std::gcd(inv[i], exps_[i])));
  return static_cast<int>(o);
}

bool Coclass::is_trivial() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

Coclass Coclass::operator*(const Coclass& o) const {
  if (mult_ != o.mult_) throw Error(ErrorCode::InvalidArgument, "coclasses of different multipliers");
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + o.exps_[i];
  return Coclass(mult_, std::move(e));
}

Coclass Coclass::pow(long k) const {
  std::vector<int> e(exps_.size());
  const auto& inv = mult_->invariants();
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = mod(mod(k, inv[i]) * static_cast<long>(exps_[i]), inv[i]);
  return Coclass(mult_, std::move(e));
}

std::pair<Coclass, Coclass> pi_part(const Coclass& c, const PiSet& pi) {
  const int o = c.order();
  const int u = static_cast<int>(pi.pi_part(o));
  const int v = o / u;
  const long e = static_cast<long>(v) * inverse_mod(v % u, u);
  Coclass cpi = c.pow(e);
  Coclass cpc = c.pow(1 - e);
  return {cpi, cpc};
}

Coclass restrict_coclass(const Coclass& c, const Subgroup& h, int cap) {
  if (h.is_whole() && h.group() == c.multiplier()->group()) return c;
  const MultiplierPtr mh = SchurMultiplier::compute(h.group(), c.multiplier()->modulus(), cap);
  return Coclass::of(mh, restrict_cocycle(c.representative(), h));
}

Coclass inflate_coclass(const Coclass& b, const MultiplierPtr& target, const Quotient& q) {
  return Coclass::of(target, inflate_cocycle(b.representative(), target->group(), q));
}

ExtensionCocycle cocycle_from_extension(const GroupPtr& e, const Subgroup& z) {
  for (Elem x : z.elements())
    for (Elem s : e->generators())
      if (e->mul(x, s) != e->mul(s, x)) throw Error(ErrorCode::NotCentral, "subgroup is not central");
  Elem gen = -1;
  for (Elem x : z.elements())
    if (e->element_order(x) == z.order()) {
      gen = x;
      break;
    }
  if (gen < 0) throw Error(ErrorCode::NotCyclic, "central subgroup is not cyclic");
  std::vector<int> log(e->order(), -1);
  Elem cur = 0;
  for (int i = 0; i < z.order(); ++i) {
    log[cur] = i;
    cur = e->mul(cur, gen);
  }

  ExtensionCocycle out;
  out.generator = gen;
  out.quotient = quotient_group(e, z);
  const GroupPtr& q = out.quotient.group;
  const auto& s = out.quotient.section;
  out.cocycle = Cocycle::trivial(q, z.order());
  for (Elem x = 0; x < q->order(); ++x)
    for (Elem y = 0; y < q->order(); ++y) {
      const Elem d = e->mul(e->mul(s[x], s[y]), e->inv(s[q->mul(x, y)]));
      if (log[d] < 0) throw Error(ErrorCode::InvalidArgument, "section defect left the central subgroup");
      out.cocycle.at(x, y) = log[d];
    }
  return out;
}

}  // namespace projrep
