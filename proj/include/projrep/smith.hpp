#pragma once

// Smith normal form over the chain ring Z/p^k. Every nonzero element is p^v
// times a unit, so pivoting on an entry of minimal valuation keeps every
// elimination step an exact division.

#include <cstdint>
#include <vector>

namespace projrep {

class PrimePowerRing {
 public:
  PrimePowerRing(int p, int k);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  int pow_p(int e) const { return pows_[e]; }

  int reduce(long a) const {
    long r = a % q_;
    return static_cast<int>(r < 0 ? r + q_ : r);
  }
  /// p-adic valuation of a residue; k for zero.
  int valuation(int a) const;
  /// Inverse of a unit residue.
  int inverse_unit(int a) const;

 private:
  int p_, k_, q_;
  std::vector<int> pows_;
};

struct RingMatrix {
  int rows = 0, cols = 0;
  std::vector<int> a;

  RingMatrix() = default;
  RingMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  static RingMatrix identity(int n);

  int& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  int operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

/// P * A * Q = D with D diagonal and diag(i) = p^valuation[i]. Transforms are
/// only tracked when requested.
struct SmithForm {
  /// Length rows + cols is not needed; `row_valuation` has one entry per row
  /// and `col_valuation` one per column. Positions past the diagonal, and zero
  /// pivots, carry valuation k.
  std::vector<int> row_valuation;
  std::vector<int> col_valuation;
  RingMatrix P, Pinv, Q, Qinv;
};

SmithForm smith_normal_form(RingMatrix a, const PrimePowerRing& ring, bool track_rows, bool track_cols);

/// y = M x over the ring.
std::vector<int> ring_apply(const RingMatrix& m, const std::vector<int>& x, const PrimePowerRing& ring);

}  // namespace projrep
