#pragma once

// Normalized 2-cocycles with values in Z/m (read as exponents of exp(2 pi i/m)),
// the Schur multiplier computed exactly prime by prime, and coclass arithmetic.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "projrep/group.hpp"

namespace projrep {

inline constexpr int kDefaultH2Cap = 48;

struct Cocycle {
  GroupPtr group;
  int modulus = 1;
  std::vector<int> table;  // row-major, order x order

  static Cocycle trivial(GroupPtr g, int modulus = 1);
  int at(Elem x, Elem y) const { return table[static_cast<std::size_t>(x) * group->order() + y]; }
  int& at(Elem x, Elem y) { return table[static_cast<std::size_t>(x) * group->order() + y]; }
  /// Same class, values re-expressed modulo a multiple of the current modulus.
  Cocycle rescaled(int new_modulus) const;
};

struct Cochain1 {
  GroupPtr group;
  int modulus = 1;
  std::vector<int> values;  // values[0] == 0
};

Cocycle coboundary(const Cochain1& z);
/// Pointwise sum (product of the multiplicative cocycles); moduli are lifted to their lcm.
Cocycle add_cocycles(const Cocycle& a, const Cocycle& b);
bool is_normalized(const Cocycle& a);
/// Full check over all triples. Throws ModulusMismatch on malformed tables.
bool is_cocycle(const Cocycle& a);

/// 16 hex digits of the 64-bit FNV-1a hash of the modulus and the table.
std::string cocycle_hash(const Cocycle& a);

Cocycle restrict_cocycle(const Cocycle& a, const Subgroup& h);
/// Pull back a cocycle of G/N along the projection.
Cocycle inflate_cocycle(const Cocycle& b, const GroupPtr& g, const Quotient& q);

class SchurMultiplier;
using MultiplierPtr = std::shared_ptr<const SchurMultiplier>;

/// H^2(G, C^x) as an abstract finite abelian group with cocycle representatives.
class SchurMultiplier {
 public:
  using Resolver = std::function<std::vector<int>(const Cocycle&)>;

  /// Exact computation; `modulus` defaults to |G| and must be a multiple of it.
  static MultiplierPtr compute(const GroupPtr& g, int modulus = 0, int cap = kDefaultH2Cap);
  /// Multiplier known by other means, with a supplied class resolver.
  static MultiplierPtr declared(const GroupPtr& g, int modulus, std::vector<int> invariants,
                                std::vector<Cocycle> basis, Resolver resolver);
  /// Placeholder for groups above the cap: only the trivial class is addressable.
  static MultiplierPtr unknown(const GroupPtr& g);

  const GroupPtr& group() const { return group_; }
  int modulus() const { return modulus_; }
  /// d_1 | d_2 | ... (all > 1)
  const std::vector<int>& invariants() const { return invariants_; }
  const std::vector<Cocycle>& basis() const { return basis_; }
  bool is_exact() const { return exact_; }
  bool is_known() const { return known_; }
  long size() const;
  int exponent() const;

  /// Exponent vector of the class of `a` over the basis. For exact multipliers `a`'s modulus must divide
  /// modulus(); declared ones defer to their resolver.
  std::vector<int> resolve(const Cocycle& a) const;
  /// Sum of exponent multiples of the basis cocycles.
  Cocycle representative(const std::vector<int>& exponents) const;

  /// Exponent vectors in lexicographic order (first coordinate most significant).
  std::vector<int> exponents_at(long index) const;
  long index_of(const std::vector<int>& exponents) const;

 private:
  struct PrimeSolver;
  SchurMultiplier() = default;

  GroupPtr group_;
  int modulus_ = 1;
  std::vector<int> invariants_;
  std::vector<Cocycle> basis_;
  bool exact_ = false;
  bool known_ = true;
  Resolver resolver_;
  std::vector<std::shared_ptr<const PrimeSolver>> solvers_;
  // For each invariant slot, per solver: summand index or -1.
  std::vector<std::vector<int>> slot_summand_;
};

class Coclass {
 public:
  Coclass() = default;
  Coclass(MultiplierPtr m, std::vector<int> exponents);
  static Coclass trivial(MultiplierPtr m);
  static Coclass of(MultiplierPtr m, const Cocycle& a) { return Coclass(m, m->resolve(a)); }

  const MultiplierPtr& multiplier() const { return mult_; }
  const std::vector<int>& exponents() const { return exps_; }
  long index() const { return mult_->index_of(exps_); }
  int order() const;
  bool is_trivial() const;
  Cocycle representative() const { return mult_->representative(exps_); }

  Coclass operator*(const Coclass& o) const;
  Coclass pow(long k) const;
  bool operator==(const Coclass& o) const { return exps_ == o.exps_ && mult_ == o.mult_; }

 private:
  MultiplierPtr mult_;
  std::vector<int> exps_;
};

/// c = c_pi * c_pi' with o(c_pi) the pi-part of o(c).
std::pair<Coclass, Coclass> pi_part(const Coclass& c, const PiSet& pi);

/// Restricts the representative and resolves it in H's multiplier (computed with the same modulus).
Coclass restrict_coclass(const Coclass& c, const Subgroup& h, int cap = kDefaultH2Cap);
Coclass inflate_coclass(const Coclass& b, const MultiplierPtr& target, const Quotient& q);

struct ExtensionCocycle {
  Quotient quotient;  // E/Z
  Cocycle cocycle;    // on quotient.group, modulus |Z|
  Elem generator = 0; // chosen generator of Z
};

/// s(x)s(y)s(xy)^-1 for the minimal-element section of a central cyclic Z.
ExtensionCocycle cocycle_from_extension(const GroupPtr& e, const Subgroup& z);

}  // namespace projrep
