#include "projrep/smith.hpp"

#include <algorithm>
#include <utility>

#include "projrep/error.hpp"

namespace projrep {

PrimePowerRing::PrimePowerRing(int p, int k) : p_(p), k_(k), q_(1) {
  if (p < 2 || k < 1) throw Error(ErrorCode::InvalidArgument, "bad prime power");
  pows_.push_back(1);
  for (int i = 0; i < k; ++i) {
    q_ *= p;
    pows_.push_back(q_);
  }
}

int PrimePowerRing::valuation(int a) const {
  a = reduce(a);
  if (a == 0) return k_;
  int v = 0;
  while (a % p_ == 0) {
    a /= p_;
    ++v;
  }
  return v;
}

int PrimePowerRing::inverse_unit(int a) const {
  // Extended Euclid on (a, q).
  long r0 = q_, r1 = reduce(a), s0 = 0, s1 = 1;
  while (r1 != 0) {
    long t = r0 / r1;
    std::swap(r0, r1);
    r1 -= t * r0;
    std::swap(s0, s1);
    s1 -= t * s0;
  }
  if (r0 != 1) throw Error(ErrorCode::InvalidArgument, "not a unit");
  return reduce(s0);
}

RingMatrix RingMatrix::identity(int n) {
  RingMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<int> ring_apply(const RingMatrix& m, const std::vector<int>& x, const PrimePowerRing& ring) {
  std::vector<int> y(m.rows, 0);
  for (int i = 0; i < m.rows; ++i) {
    long s = 0;
    for (int j = 0; j < m.cols; ++j) s += static_cast<long>(m(i, j)) * x[j];
    y[i] = ring.reduce(s);
  }
  return y;
}

namespace {

void swap_rows(RingMatrix& m, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < m.cols; ++c) std::swap(m(i, c), m(j, c));
}
void swap_cols(RingMatrix& m, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < m.rows; ++r) std::swap(m(r, i), m(r, j));
}
void scale_row(RingMatrix& m, int i, int u, const PrimePowerRing& R) {
  for (int c = 0; c < m.cols; ++c) m(i, c) = R.reduce(static_cast<long>(m(i, c)) * u);
}
void scale_col(RingMatrix& m, int i, int u, const PrimePowerRing& R) {
  for (int r = 0; r < m.rows; ++r) m(r, i) = R.reduce(static_cast<long>(m(r, i)) * u);
}
// row_dst += f * row_src
void add_row(RingMatrix& m, int dst, int src, int f, const PrimePowerRing& R) {
  if (f == 0) return;
  for (int c = 0; c < m.cols; ++c)
    if (m(src, c)) m(dst, c) = R.reduce(m(dst, c) + static_cast<long>(f) * m(src, c));
}
void add_col(RingMatrix& m, int dst, int src, int f, const PrimePowerRing& R) {
  if (f == 0) return;
  for (int r = 0; r < m.rows; ++r)
    if (m(r, src)) m(r, dst) = R.reduce(m(r, dst) + static_cast<long>(f) * m(r, src));
}

}  // namespace

SmithForm smith_normal_form(RingMatrix a, const PrimePowerRing& R, bool track_rows, bool track_cols) {
  const int rows = a.rows, cols = a.cols;
  SmithForm out;
  if (track_rows) {
    out.P = RingMatrix::identity(rows);
    out.Pinv = RingMatrix::identity(rows);
  }
  if (track_cols) {
    out.Q = RingMatrix::identity(cols);
    out.Qinv = RingMatrix::identity(cols);
  }
  out.row_valuation.assign(rows, R.k());
  out.col_valuation.assign(cols, R.k());

  const int steps = std::min(rows, cols);
  for (int t = 0; t < steps; ++t) {
    // Pivot of minimal valuation in the trailing block.
    int best_v = R.k(), bi = -1, bj = -1;
    for (int i = t; i < rows && best_v > 0; ++i)
      for (int j = t; j < cols; ++j) {
        const int e = a(i, j);
        if (e == 0) continue;
        const int v = R.valuation(e);
        if (v < best_v) {
          best_v = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    if (bi < 0) break;

    swap_rows(a, t, bi);
    if (track_rows) {
      swap_rows(out.P, t, bi);
      swap_cols(out.Pinv, t, bi);
    }
    swap_cols(a, t, bj);
    if (track_cols) {
      swap_cols(out.Q, t, bj);
      swap_rows(out.Qinv, t, bj);
    }

    const int pv = R.pow_p(best_v);
    const int unit = a(t, t) / pv;  // exact: representative is divisible by p^v
    const int uinv = R.inverse_unit(unit);
    scale_row(a, t, uinv, R);
    if (track_rows) {
      scale_row(out.P, t, uinv, R);
      scale_col(out.Pinv, t, unit, R);
    }

    for (int i = t + 1; i < rows; ++i) {
      const int e = a(i, t);
      if (e == 0) continue;
      const int f = R.reduce(-static_cast<long>(e / pv));
      add_row(a, i, t, f, R);
      if (track_rows) {
        add_row(out.P, i, t, f, R);
        add_col(out.Pinv, t, i, R.reduce(-static_cast<long>(f)), R);
      }
    }
    for (int j = t + 1; j < cols; ++j) {
      const int e = a(t, j);
      if (e == 0) continue;
      const int f = R.reduce(-static_cast<long>(e / pv));
      add_col(a, j, t, f, R);
      if (track_cols) {
        add_col(out.Q, j, t, f, R);
        add_row(out.Qinv, t, j, R.reduce(-static_cast<long>(f)), R);
      }
    }
    out.row_valuation[t] = best_v;
    out.col_valuation[t] = best_v;
  }
  return out;
}

}  // namespace projrep
